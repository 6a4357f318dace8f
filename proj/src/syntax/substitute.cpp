#include "canon/syntax/substitute.hpp"

#include <set>
#include <string>
#include <vector>

namespace canon::syntax {

Term substitute(const Term& term, std::string_view var, const Term& replacement) {
  if (term.is_variable()) return term.name() == var ? replacement : term;
  if (term.args().empty()) return term;
  std::vector<Term> args;
  args.reserve(term.args().size());
  for (const auto& a : term.args()) args.push_back(substitute(a, var, replacement));
  return Term::apply(term.name(), std::move(args));
}

namespace {

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  for (std::size_t i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!avoid.contains(candidate)) return candidate;
  }
}

}  // namespace

Formula substitute(const Formula& formula, std::string_view var, const Term& replacement) {
  using K = Formula::Kind;
  switch (formula.kind()) {
    case K::Atom:
    case K::Equal: {
      std::vector<Term> ts;
      ts.reserve(formula.terms().size());
      for (const auto& t : formula.terms()) ts.push_back(substitute(t, var, replacement));
      if (formula.kind() == K::Equal) return Formula::equal(ts[0], ts[1]);
      return Formula::atom(formula.symbol(), std::move(ts));
    }
    case K::Not:
      return Formula::negation(substitute(formula.left(), var, replacement));
    case K::And:
    case K::Or:
    case K::Implies:
      return Formula::binary(formula.kind(), substitute(formula.left(), var, replacement),
                             substitute(formula.right(), var, replacement));
    case K::Forall:
    case K::Exists: {
      if (formula.symbol() == var) return formula;
      auto body_free = formula.body().free_variables();
      if (!body_free.contains(std::string(var))) return formula;
      std::set<std::string> repl_vars;
      replacement.collect_variables(repl_vars);
      if (!repl_vars.contains(formula.symbol()))
        return Formula::quantifier(formula.kind(), formula.symbol(), substitute(formula.body(), var, replacement));
      std::set<std::string> avoid = body_free;
      avoid.insert(repl_vars.begin(), repl_vars.end());
      avoid.insert(std::string(var));
      std::string renamed = fresh_name(formula.symbol(), avoid);
      Formula body = substitute(formula.body(), formula.symbol(), Term::variable(renamed));
      return Formula::quantifier(formula.kind(), renamed, substitute(body, var, replacement));
    }
  }
  return formula;
}

namespace {

Term replace_in_term(const Term& t, std::string_view name, const Term& replacement) {
  if (t.is_variable()) return t;
  if (t.is_constant()) return t.name() == name ? replacement : t;
  std::vector<Term> args;
  for (const auto& a : t.args()) args.push_back(replace_in_term(a, name, replacement));
  return Term::apply(t.name(), std::move(args));
}

}  // namespace

Formula replace_constant(const Formula& formula, std::string_view name, const Term& replacement) {
  using K = Formula::Kind;
  switch (formula.kind()) {
    case K::Atom:
    case K::Equal: {
      std::vector<Term> ts;
      for (const auto& t : formula.terms()) ts.push_back(replace_in_term(t, name, replacement));
      if (formula.kind() == K::Equal) return Formula::equal(ts[0], ts[1]);
      return Formula::atom(formula.symbol(), std::move(ts));
    }
    case K::Not:
      return Formula::negation(replace_constant(formula.left(), name, replacement));
    case K::And:
    case K::Or:
    case K::Implies:
      return Formula::binary(formula.kind(), replace_constant(formula.left(), name, replacement),
                             replace_constant(formula.right(), name, replacement));
    case K::Forall:
    case K::Exists:
      return Formula::quantifier(formula.kind(), formula.symbol(),
                                 replace_constant(formula.body(), name, replacement));
  }
  return formula;
}

}  // namespace canon::syntax
