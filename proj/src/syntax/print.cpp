#include "canon/syntax/print.hpp"

#include <array>
#include <utility>
#include <vector>

namespace canon::syntax {

namespace {

using Scope = std::vector<std::pair<std::string, std::string>>;

void emit_term(const Term& t, const Scope& scope, std::string& out) {
  if (t.is_variable()) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
      if (it->first == t.name()) {
        out += it->second;
        return;
      }
    }
    out += t.name();
    return;
  }
  out += t.name();
  if (t.args().empty()) return;
  out += '(';
  bool first = true;
  for (const auto& a : t.args()) {
    if (!first) out += ", ";
    first = false;
    emit_term(a, scope, out);
  }
  out += ')';
}

struct Emitter {
  bool canonical = false;
  std::set<std::string> free;
  std::string out;
  Scope scope;
  std::size_t depth = 0;

  std::string binder_name(const std::string& original) {
    if (!canonical) return original;
    // Depth indexes the candidate list; free names are skipped deterministically.
    std::size_t skipped = 0;
    for (std::size_t i = 0;; ++i) {
      std::string name = bound_name(i);
      if (free.contains(name)) continue;
      if (skipped == depth) return name;
      ++skipped;
    }
  }

  void emit(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::Atom:
        out += f.symbol();
        if (!f.terms().empty()) {
          out += '(';
          bool first = true;
          for (const auto& t : f.terms()) {
            if (!first) out += ", ";
            first = false;
            emit_term(t, scope, out);
          }
          out += ')';
        }
        return;
      case K::Equal:
        emit_term(f.terms()[0], scope, out);
        out += " = ";
        emit_term(f.terms()[1], scope, out);
        return;
      case K::Not:
        out += '~';
        emit(f.left());
        return;
      case K::And:
      case K::Or:
      case K::Implies:
        out += '(';
        emit(f.left());
        out += f.kind() == K::And ? " & " : f.kind() == K::Or ? " | " : " -> ";
        emit(f.right());
        out += ')';
        return;
      case K::Forall:
      case K::Exists: {
        std::string name = binder_name(f.symbol());
        out += f.kind() == K::Forall ? "forall " : "exists ";
        out += name;
        out += ". ";
        scope.emplace_back(f.symbol(), name);
        ++depth;
        emit(f.body());
        --depth;
        scope.pop_back();
        return;
      }
    }
  }
};

Term rename_term(const Term& t, const Scope& scope) {
  if (t.is_variable()) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == t.name()) return Term::variable(it->second);
    return t;
  }
  if (t.args().empty()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(rename_term(a, scope));
  return Term::apply(t.name(), std::move(args));
}

Formula rename(const Formula& f, Emitter& names) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom: {
      std::vector<Term> ts;
      for (const auto& t : f.terms()) ts.push_back(rename_term(t, names.scope));
      return Formula::atom(f.symbol(), std::move(ts));
    }
    case K::Equal:
      return Formula::equal(rename_term(f.terms()[0], names.scope), rename_term(f.terms()[1], names.scope));
    case K::Not:
      return Formula::negation(rename(f.left(), names));
    case K::And:
    case K::Or:
    case K::Implies:
      return Formula::binary(f.kind(), rename(f.left(), names), rename(f.right(), names));
    case K::Forall:
    case K::Exists: {
      std::string name = names.binder_name(f.symbol());
      names.scope.emplace_back(f.symbol(), name);
      ++names.depth;
      Formula body = rename(f.body(), names);
      --names.depth;
      names.scope.pop_back();
      return Formula::quantifier(f.kind(), name, std::move(body));
    }
  }
  return f;
}

}  // namespace

std::string bound_name(std::size_t depth) {
  static const std::array<const char*, 6> names = {"x", "y", "z", "w", "v", "u"};
  if (depth < names.size()) return names[depth];
  return "x" + std::to_string(depth);
}

std::string print(const Term& term) {
  std::string out;
  emit_term(term, {}, out);
  return out;
}

std::string print(const Formula& formula) {
  Emitter e;
  e.emit(formula);
  return std::move(e.out);
}

std::string canonical(const Formula& formula) {
  Emitter e;
  e.canonical = true;
  e.free = formula.free_variables();
  e.emit(formula);
  return std::move(e.out);
}

Formula canonical_form(const Formula& formula) {
  Emitter e;
  e.canonical = true;
  e.free = formula.free_variables();
  return rename(formula, e);
}

bool enumeration_less(const std::string& a, const std::string& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace canon::syntax
