#include "canon/syntax/parser.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "canon/syntax/print.hpp"

namespace canon::syntax {

ParseError::ParseError(Kind kind, std::size_t position, const std::string& message)
    : std::runtime_error("at " + std::to_string(position) + ": " + message), kind_(kind), position_(position) {}

bool split_henkin_name(std::string_view name, std::size_t& index, std::string_view& body) noexcept {
  if (name.size() < 4 || name.front() != '$' || name.back() != '}') return false;
  auto brace = name.find('{');
  if (brace == std::string_view::npos || brace < 2) return false;
  auto digits = name.substr(1, brace - 1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return false;
  body = name.substr(brace + 1, name.size() - brace - 2);
  return true;
}

namespace {

enum class Tok { Ident, Henkin, LParen, RParen, Comma, Dot, Tilde, Amp, Bar, Arrow, Eq, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto single = [&](Tok k) {
    out.push_back({k, s.substr(i, 1), i});
    ++i;
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (c == '$') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i + 1 || j >= s.size() || s[j] != '{')
        throw ParseError(ParseError::Kind::Syntax, i, "malformed Henkin constant");
      int level = 0;
      for (; j < s.size(); ++j) {
        if (s[j] == '{') ++level;
        if (s[j] == '}' && --level == 0) break;
      }
      if (j >= s.size()) throw ParseError(ParseError::Kind::Syntax, i, "unterminated Henkin constant");
      out.push_back({Tok::Henkin, s.substr(i, j + 1 - i), i});
      i = j + 1;
      continue;
    }
    switch (c) {
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case ',': single(Tok::Comma); continue;
      case '.': single(Tok::Dot); continue;
      case '~': single(Tok::Tilde); continue;
      case '&': single(Tok::Amp); continue;
      case '|': single(Tok::Bar); continue;
      case '=': single(Tok::Eq); continue;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          out.push_back({Tok::Arrow, s.substr(i, 2), i});
          i += 2;
          continue;
        }
        break;
      default:
        break;
    }
    throw ParseError(ParseError::Kind::Syntax, i, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, {}, s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig, const ParseOptions& opts)
      : tokens_(lex(text)), sig_(sig), opts_(opts) {}

  Formula formula_to_end() {
    Formula f = implication();
    expect(Tok::End, "end of input");
    return f;
  }

  Term term_to_end() {
    Term t = term();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k)
      throw ParseError(ParseError::Kind::Syntax, peek().pos, std::string("expected ") + what);
    return take();
  }

  bool is_bound(std::string_view name) const {
    for (const auto& b : bound_)
      if (b == name) return true;
    return false;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept(Tok::Arrow)) return Formula::implication(std::move(lhs), implication());
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (accept(Tok::Bar)) lhs = Formula::disjunction(std::move(lhs), conjunction());
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (accept(Tok::Amp)) lhs = Formula::conjunction(std::move(lhs), unary());
    return lhs;
  }

  Formula unary() {
    const Token& t = peek();
    if (t.kind == Tok::Tilde) {
      take();
      return Formula::negation(unary());
    }
    if (t.kind == Tok::LParen) {
      take();
      Formula inner = implication();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind == Tok::Ident && (t.text == "forall" || t.text == "exists")) {
      bool universal = t.text == "forall";
      take();
      const Token& v = expect(Tok::Ident, "bound variable");
      if (v.text == "forall" || v.text == "exists")
        throw ParseError(ParseError::Kind::Syntax, v.pos, "keyword used as variable");
      expect(Tok::Dot, "'.'");
      bound_.emplace_back(v.text);
      Formula body = unary();
      bound_.pop_back();
      return universal ? Formula::forall(std::string(v.text), std::move(body))
                       : Formula::exists(std::string(v.text), std::move(body));
    }
    return atom_or_equation();
  }

  Formula atom_or_equation() {
    const Token& t = peek();
    if (t.kind == Tok::Ident && !is_bound(t.text)) {
      if (auto arity = sig_.relation_arity(t.text)) {
        take();
        std::vector<Term> args;
        if (peek().kind == Tok::LParen) {
          if (*arity == 0)
            throw ParseError(ParseError::Kind::ArityMismatch, t.pos, "relation '" + std::string(t.text) + "' is 0-ary");
          args = arguments();
        }
        if (args.size() != *arity)
          throw ParseError(ParseError::Kind::ArityMismatch, t.pos,
                           "relation '" + std::string(t.text) + "' expects " + std::to_string(*arity) +
                               " arguments, got " + std::to_string(args.size()));
        return Formula::atom(std::string(t.text), std::move(args));
      }
      if (!sig_.contains(t.text) && peek(1).kind != Tok::Eq)
        throw ParseError(ParseError::Kind::UnknownSymbol, t.pos, "unknown symbol '" + std::string(t.text) + "'");
    }
    if (t.kind != Tok::Ident && t.kind != Tok::Henkin)
      throw ParseError(ParseError::Kind::Syntax, t.pos, "expected formula");
    Term lhs = term();
    expect(Tok::Eq, "'='");
    Term rhs = term();
    return Formula::equal(std::move(lhs), std::move(rhs));
  }

  std::vector<Term> arguments() {
    expect(Tok::LParen, "'('");
    std::vector<Term> args;
    args.push_back(term());
    while (accept(Tok::Comma)) args.push_back(term());
    expect(Tok::RParen, "')'");
    return args;
  }

  Term henkin(const Token& t) {
    if (!opts_.allow_henkin && !sig_.has_constant(t.text))
      throw ParseError(ParseError::Kind::UnknownSymbol, t.pos, "Henkin constants not allowed here");
    std::size_t index = 0;
    std::string_view body;
    if (!split_henkin_name(t.text, index, body))
      throw ParseError(ParseError::Kind::InvalidHenkin, t.pos, "malformed Henkin constant");
    // The body must itself be a canonical existential sentence.
    ParseOptions inner = opts_;
    inner.allow_free_variables = false;
    Formula base = [&] {
      try {
        return Parser(body, sig_, inner).formula_to_end();
      } catch (const ParseError& e) {
        throw ParseError(ParseError::Kind::InvalidHenkin, t.pos + 3 + e.position(),
                         std::string("inside Henkin constant: ") + e.what());
      }
    }();
    if (base.kind() != Formula::Kind::Exists || !base.is_sentence() || canonical(base) != body)
      throw ParseError(ParseError::Kind::InvalidHenkin, t.pos,
                       "Henkin constant must index a canonical existential sentence");
    return Term::constant(std::string(t.text));
  }

  Term term() {
    const Token& t = take();
    if (t.kind == Tok::Henkin) return henkin(t);
    if (t.kind != Tok::Ident) throw ParseError(ParseError::Kind::Syntax, t.pos, "expected term");
    if (t.text == "forall" || t.text == "exists")
      throw ParseError(ParseError::Kind::Syntax, t.pos, "keyword used as term");
    std::string name(t.text);
    if (is_bound(t.text)) {
      if (peek().kind == Tok::LParen)
        throw ParseError(ParseError::Kind::Syntax, peek().pos, "variable applied to arguments");
      return Term::variable(std::move(name));
    }
    if (sig_.has_constant(t.text)) {
      if (peek().kind == Tok::LParen)
        throw ParseError(ParseError::Kind::ArityMismatch, t.pos, "constant '" + name + "' takes no arguments");
      return Term::constant(std::move(name));
    }
    if (auto arity = sig_.function_arity(t.text)) {
      if (peek().kind != Tok::LParen)
        throw ParseError(ParseError::Kind::ArityMismatch, t.pos, "function '" + name + "' needs arguments");
      auto args = arguments();
      if (args.size() != *arity)
        throw ParseError(ParseError::Kind::ArityMismatch, t.pos,
                         "function '" + name + "' expects " + std::to_string(*arity) + " arguments, got " +
                             std::to_string(args.size()));
      return Term::apply(std::move(name), std::move(args));
    }
    if (sig_.relation_arity(t.text))
      throw ParseError(ParseError::Kind::Syntax, t.pos, "relation '" + name + "' used as a term");
    if (peek().kind == Tok::LParen || !opts_.allow_free_variables)
      throw ParseError(ParseError::Kind::UnknownSymbol, t.pos, "unknown symbol '" + name + "'");
    return Term::variable(std::move(name));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Signature& sig_;
  ParseOptions opts_;
  std::vector<std::string_view> bound_;
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& signature, const ParseOptions& options) {
  return Parser(text, signature, options).formula_to_end();
}

Term parse_term(std::string_view text, const Signature& signature, const ParseOptions& options) {
  return Parser(text, signature, options).term_to_end();
}

}  // namespace canon::syntax
