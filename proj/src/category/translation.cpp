#include "canon/category/translation.hpp"

#include <sstream>

#include "canon/henkin/front.hpp"
#include "canon/syntax/enumerate.hpp"
#include "canon/syntax/parser.hpp"
#include "canon/syntax/print.hpp"

namespace canon::category {

namespace {

std::string kind_name(syntax::SymbolKind k) {
  switch (k) {
    case syntax::SymbolKind::Constant: return "constant";
    case syntax::SymbolKind::Function: return "function";
    case syntax::SymbolKind::Relation: return "relation";
  }
  return "symbol";
}

std::optional<std::size_t> arity_of(const Signature& s, const std::string& name) {
  switch (*s.kind_of(name)) {
    case syntax::SymbolKind::Constant: return 0;
    case syntax::SymbolKind::Function: return s.function_arity(name);
    case syntax::SymbolKind::Relation: return s.relation_arity(name);
  }
  return std::nullopt;
}

std::vector<std::string> all_symbols(const Signature& s) {
  std::vector<std::string> out = s.constants();
  for (const auto& f : s.functions()) out.push_back(f.name);
  for (const auto& r : s.relations()) out.push_back(r.name);
  return out;
}

}  // namespace

Translation::Translation(std::string name, Signature source, Signature target,
                         const std::map<std::string, std::string>& symbols)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)) {
  for (const auto& [from, to] : symbols)
    if (!source_.contains(from)) throw TranslationError("'" + from + "' is not a source symbol");
  for (const auto& s : all_symbols(source_)) {
    auto it = symbols.find(s);
    const std::string& image = it == symbols.end() ? s : it->second;
    if (!target_.contains(image))
      throw TranslationError("image '" + image + "' of '" + s + "' is not a target symbol");
    auto k1 = *source_.kind_of(s), k2 = *target_.kind_of(image);
    if (k1 != k2) throw TranslationError("'" + s + "' is a " + kind_name(k1) + " but '" + image + "' is a " + kind_name(k2));
    if (arity_of(source_, s) != arity_of(target_, image))
      throw TranslationError("arity of '" + s + "' differs from arity of '" + image + "'");
    symbols_.emplace(s, image);
  }
}

std::map<std::string, std::string> Translation::renamings() const {
  std::map<std::string, std::string> out;
  for (const auto& [a, b] : symbols_)
    if (a != b) out.emplace(a, b);
  return out;
}

const std::string& Translation::symbol(const std::string& name) const {
  auto it = symbols_.find(name);
  if (it == symbols_.end()) throw TranslationError("'" + name + "' is not a source symbol");
  return it->second;
}

std::string Translation::constant_name(const std::string& name) const {
  if (auto h = henkin::parse_henkin_name(name)) {
    std::optional<Formula> body;
    try {
      body = syntax::parse_formula(h->base, source_);
    } catch (const syntax::ParseError& e) {
      throw TranslationError("Henkin constant " + name + " is not over the source language: " + e.what());
    }
    return henkin::henkin_constant(apply(*body), h->index).name();
  }
  return symbol(name);
}

Term Translation::apply(const Term& term) const {
  if (term.is_variable()) return term;
  if (term.is_constant()) return Term::constant(constant_name(term.name()));
  std::vector<Term> args;
  for (const auto& a : term.args()) args.push_back(apply(a));
  return Term::apply(symbol(term.name()), std::move(args));
}

Formula Translation::apply(const Formula& f) const {
  using K = Formula::Kind;
  auto terms = [&] {
    std::vector<Term> out;
    for (const auto& t : f.terms()) out.push_back(apply(t));
    return out;
  };
  switch (f.kind()) {
    case K::Atom: return Formula::atom(symbol(f.symbol()), terms());
    case K::Equal: {
      auto t = terms();
      return Formula::equal(t[0], t[1]);
    }
    case K::Not: return Formula::negation(apply(f.left()));
    case K::And:
    case K::Or:
    case K::Implies: return Formula::binary(f.kind(), apply(f.left()), apply(f.right()));
    case K::Forall:
    case K::Exists: return Formula::quantifier(f.kind(), f.symbol(), apply(f.body()));
  }
  return f;
}

Translation identity(const Signature& signature, const std::string& name) { return Translation(name, signature, signature, {}); }

Translation compose(const Translation& g, const Translation& f) {
  if (!(f.target() == g.source()))
    throw SignatureMismatch("cannot compose " + g.name() + " after " + f.name() + ": signatures differ");
  std::map<std::string, std::string> symbols;
  for (const auto& [s, image] : f.symbols()) symbols.emplace(s, g.symbol(image));
  return Translation(g.name() + " o " + f.name(), f.source(), g.target(), symbols);
}

TranslationFileError::TranslationFileError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Translation parse_translation(std::string_view text, const Signature& source, const Signature& target) {
  std::string name = "translation";
  std::map<std::string, std::string> symbols;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword) || keyword.front() == '#') continue;
    std::vector<std::string> rest;
    for (std::string w; words >> w;) rest.push_back(w);
    if (keyword == "name" && rest.size() == 1) {
      name = rest[0];
    } else if (keyword == "map" && rest.size() == 2) {
      if (!symbols.emplace(rest[0], rest[1]).second)
        throw TranslationFileError(line_no, "'" + rest[0] + "' is mapped twice");
    } else {
      throw TranslationFileError(line_no, "expected 'name <label>' or 'map <source> <target>'");
    }
  }
  try {
    return Translation(name, source, target, symbols);
  } catch (const TranslationError& e) {
    throw TranslationFileError(line_no, e.what());
  }
}

Translation load_translation(const std::filesystem::path& path, const Signature& source, const Signature& target) {
  return parse_translation(syntax::read_file(path), source, target);
}

std::string serialize_translation(const Translation& f) {
  std::string out = "name " + f.name() + "\n";
  for (const auto& [a, b] : f.renamings()) out += "map " + a + " " + b + "\n";
  return out;
}

std::string to_string(TranslationCheck::Status s) {
  switch (s) {
    case TranslationCheck::Status::Preserved: return "preserved";
    case TranslationCheck::Status::Violated: return "violated";
    case TranslationCheck::Status::Unknown: return "unknown";
    case TranslationCheck::Status::NotProvedInSource: return "not-proved-in-source";
  }
  return "unknown";
}

std::size_t TranslationReport::count(TranslationCheck::Status s) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == s;
  return n;
}

bool TranslationReport::pass() const {
  return count(TranslationCheck::Status::Violated) == 0 && count(TranslationCheck::Status::Unknown) == 0;
}

TranslationReport check_translation(const Translation& f, const syntax::Theory& t1, const syntax::Theory& t2,
                                    const std::vector<Formula>& samples, const proof::Budget& budget) {
  using V = proof::Verdict::Kind;
  TranslationReport report;
  report.translation = f.name();
  report.budget = budget;
  for (const auto& s : samples) {
    TranslationCheck c;
    c.sentence = syntax::print(s);
    auto image = f.apply(s);
    c.translated = syntax::print(image);
    c.source = proof::prove(t1.axioms, s, budget, t1.signature).kind;
    if (c.source != V::Proved) {
      c.status = TranslationCheck::Status::NotProvedInSource;
    } else {
      c.target = proof::prove(t2.axioms, image, budget, t2.signature).kind;
      c.status = *c.target == V::Proved    ? TranslationCheck::Status::Preserved
                 : *c.target == V::Refuted ? TranslationCheck::Status::Violated
                                           : TranslationCheck::Status::Unknown;
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

std::vector<Formula> default_samples(const syntax::Theory& t1, std::size_t enumerated) {
  auto out = t1.axioms;
  for (auto& s : syntax::enumerate_sentences(t1.signature, enumerated)) out.push_back(std::move(s));
  return out;
}

}  // namespace canon::category
