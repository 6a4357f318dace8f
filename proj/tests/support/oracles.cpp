#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "canon/syntax/parser.hpp"
#include "canon/syntax/print.hpp"

namespace oracle {

using canon::syntax::canonical;
using canon::syntax::parse_formula;
using canon::syntax::ParseOptions;

std::vector<std::string> brute_force_sentences(const Signature& sig, const std::string& alphabet,
                                               std::size_t max_len) {
  std::vector<std::string> out;
  ParseOptions opts;
  opts.allow_free_variables = false;
  opts.allow_henkin = false;
  std::vector<std::string> layer{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& p : layer)
      for (char c : alphabet) next.push_back(p + c);
    for (const auto& s : next) {
      try {
        auto f = parse_formula(s, sig, opts);
        if (canonical(f) == s) out.push_back(s);
      } catch (...) {
      }
    }
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

static Term naive_sub_term(const Term& t, const std::string& var, const Term& closed) {
  if (t.is_variable()) return t.name() == var ? closed : t;
  std::vector<Term> args;
  for (const auto& a : t.args()) args.push_back(naive_sub_term(a, var, closed));
  return t.args().empty() ? t : Term::apply(t.name(), args);
}

Formula naive_substitute(const Formula& f, const std::string& var, const Term& closed) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom: {
      std::vector<Term> ts;
      for (const auto& t : f.terms()) ts.push_back(naive_sub_term(t, var, closed));
      return Formula::atom(f.symbol(), ts);
    }
    case K::Equal:
      return Formula::equal(naive_sub_term(f.terms()[0], var, closed), naive_sub_term(f.terms()[1], var, closed));
    case K::Not:
      return Formula::negation(naive_substitute(f.left(), var, closed));
    case K::And:
    case K::Or:
    case K::Implies:
      return Formula::binary(f.kind(), naive_substitute(f.left(), var, closed),
                             naive_substitute(f.right(), var, closed));
    case K::Forall:
    case K::Exists:
      if (f.symbol() == var) return f;
      return Formula::quantifier(f.kind(), f.symbol(), naive_substitute(f.body(), var, closed));
  }
  return f;
}

Term random_term(std::mt19937& rng, const Signature& sig, const std::vector<std::string>& vars, int depth) {
  std::vector<int> choices;
  if (!vars.empty()) choices.push_back(0);
  if (!sig.constants().empty()) choices.push_back(1);
  if (depth > 0 && !sig.functions().empty()) choices.push_back(2);
  if (choices.empty()) return Term::variable("x");
  int pick = choices[rng() % choices.size()];
  if (pick == 0) return Term::variable(vars[rng() % vars.size()]);
  if (pick == 1) return Term::constant(sig.constants()[rng() % sig.constants().size()]);
  const auto& f = sig.functions()[rng() % sig.functions().size()];
  std::vector<Term> args;
  for (std::size_t i = 0; i < f.arity; ++i) args.push_back(random_term(rng, sig, vars, depth - 1));
  return Term::apply(f.name, args);
}

Formula random_formula(std::mt19937& rng, const Signature& sig, const std::vector<std::string>& vars,
                       int depth) {
  int pick = depth <= 0 ? static_cast<int>(rng() % 2) : static_cast<int>(rng() % 8);
  if (pick == 0 && !sig.relations().empty()) {
    const auto& r = sig.relations()[rng() % sig.relations().size()];
    std::vector<Term> args;
    for (std::size_t i = 0; i < r.arity; ++i) args.push_back(random_term(rng, sig, vars, 1));
    return Formula::atom(r.name, args);
  }
  if (pick <= 1) return Formula::equal(random_term(rng, sig, vars, 1), random_term(rng, sig, vars, 1));
  switch (pick) {
    case 2:
      return Formula::negation(random_formula(rng, sig, vars, depth - 1));
    case 3:
      return Formula::conjunction(random_formula(rng, sig, vars, depth - 1), random_formula(rng, sig, vars, depth - 1));
    case 4:
      return Formula::disjunction(random_formula(rng, sig, vars, depth - 1), random_formula(rng, sig, vars, depth - 1));
    case 5:
      return Formula::implication(random_formula(rng, sig, vars, depth - 1), random_formula(rng, sig, vars, depth - 1));
    default: {
      static const char* names[] = {"x", "y", "z"};
      std::string v = names[rng() % 3];
      auto inner = vars;
      inner.push_back(v);
      auto body = random_formula(rng, sig, inner, depth - 1);
      return pick == 6 ? Formula::forall(v, body) : Formula::exists(v, body);
    }
  }
}

std::vector<std::size_t> naive_closure(const std::vector<Term>& universe,
                                       const std::vector<std::pair<Term, Term>>& equations) {
  std::size_t n = universe.size();
  auto index_of = [&](const Term& t) -> std::size_t {
    for (std::size_t i = 0; i < n; ++i)
      if (universe[i] == t) return i;
    return n;
  };
  // rel[i][j]: i and j are known equal.
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
  for (const auto& [a, b] : equations) {
    auto i = index_of(a), j = index_of(b);
    if (i < n && j < n) rel[i][j] = rel[j][i] = true;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (rel[i][j]) continue;
        bool add = false;
        for (std::size_t k = 0; k < n && !add; ++k) add = rel[i][k] && rel[k][j];
        const Term& s = universe[i];
        const Term& t = universe[j];
        if (!add && !s.is_variable() && !t.is_variable() && s.name() == t.name() && !s.args().empty() &&
            s.args().size() == t.args().size()) {
          bool all = true;
          for (std::size_t a = 0; a < s.args().size() && all; ++a) {
            auto x = index_of(s.args()[a]), y = index_of(t.args()[a]);
            all = x < n && y < n && rel[x][y];
          }
          add = all;
        }
        if (add) {
          rel[i][j] = rel[j][i] = true;
          changed = true;
        }
      }
  }
  std::vector<std::size_t> cls(n);
  for (std::size_t i = 0; i < n; ++i) {
    cls[i] = i;
    for (std::size_t j = 0; j < i; ++j)
      if (rel[i][j]) {
        cls[i] = cls[j];
        break;
      }
  }
  return cls;
}

namespace {

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

std::size_t eval_term(const Table& m, const Term& t, const std::map<std::string, std::size_t>& env) {
  if (t.is_variable()) return env.at(t.name());
  if (t.args().empty()) {
    for (const auto& [n, v] : m.constants)
      if (n == t.name()) return v;
    throw std::runtime_error("oracle: no constant " + t.name());
  }
  std::size_t idx = 0;
  for (const auto& a : t.args()) idx = idx * m.size + eval_term(m, a, env);
  for (const auto& [n, table] : m.functions)
    if (n == t.name()) return table[idx];
  throw std::runtime_error("oracle: no function " + t.name());
}

bool eval(const Table& m, const Formula& f, std::map<std::string, std::size_t>& env) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom: {
      std::size_t idx = 0;
      for (const auto& a : f.terms()) idx = idx * m.size + eval_term(m, a, env);
      for (const auto& [n, table] : m.relations)
        if (n == f.symbol()) return table[idx];
      throw std::runtime_error("oracle: no relation " + f.symbol());
    }
    case K::Equal:
      return eval_term(m, f.terms()[0], env) == eval_term(m, f.terms()[1], env);
    case K::Not:
      return !eval(m, f.left(), env);
    case K::And:
      return eval(m, f.left(), env) && eval(m, f.right(), env);
    case K::Or:
      return eval(m, f.left(), env) || eval(m, f.right(), env);
    case K::Implies:
      return !eval(m, f.left(), env) || eval(m, f.right(), env);
    case K::Forall:
    case K::Exists: {
      auto saved = env.find(f.symbol()) == env.end() ? std::optional<std::size_t>{} : env[f.symbol()];
      bool want = f.kind() == K::Exists;
      bool result = !want;
      for (std::size_t e = 0; e < m.size; ++e) {
        env[f.symbol()] = e;
        if (eval(m, f.body(), env) == want) {
          result = want;
          break;
        }
      }
      if (saved) env[f.symbol()] = *saved;
      else env.erase(f.symbol());
      return result;
    }
  }
  return false;
}

}  // namespace

bool evaluate(const Table& m, const Formula& f) {
  std::map<std::string, std::size_t> env;
  return eval(m, f, env);
}

std::vector<Table> all_structures(const Signature& sig, std::size_t n) {
  // One odometer digit per cell: constants, function entries, relation entries.
  std::vector<std::size_t> radix;
  for (std::size_t i = 0; i < sig.constants().size(); ++i) radix.push_back(n);
  for (const auto& f : sig.functions())
    for (std::size_t i = 0; i < power(n, f.arity); ++i) radix.push_back(n);
  for (const auto& r : sig.relations())
    for (std::size_t i = 0; i < power(n, r.arity); ++i) radix.push_back(2);
  std::vector<std::size_t> digit(radix.size(), 0);
  std::vector<Table> out;
  while (true) {
    Table m;
    m.size = n;
    std::size_t k = 0;
    for (const auto& c : sig.constants()) m.constants.emplace_back(c, digit[k++]);
    for (const auto& f : sig.functions()) {
      std::vector<std::size_t> table;
      for (std::size_t i = 0; i < power(n, f.arity); ++i) table.push_back(digit[k++]);
      m.functions.emplace_back(f.name, table);
    }
    for (const auto& r : sig.relations()) {
      std::vector<bool> table;
      for (std::size_t i = 0; i < power(n, r.arity); ++i) table.push_back(digit[k++] == 1);
      m.relations.emplace_back(r.name, table);
    }
    out.push_back(std::move(m));
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == radix[i]) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  return out;
}

bool satisfiable_up_to(const Signature& sig, const std::vector<Formula>& sentences, std::size_t max_size) {
  for (std::size_t n = 1; n <= max_size; ++n)
    for (const auto& m : all_structures(sig, n))
      if (std::all_of(sentences.begin(), sentences.end(), [&](const Formula& f) { return evaluate(m, f); }))
        return true;
  return false;
}

}  // namespace oracle

namespace oracle {

Table to_table(const canon::proof::FiniteStructure& m) {
  Table t;
  t.size = m.size();
  const auto& sig = m.signature();
  for (const auto& c : sig.constants()) t.constants.emplace_back(c, static_cast<std::size_t>(*m.constant(c)));
  for (const auto& f : sig.functions()) {
    std::vector<std::size_t> table;
    for (const auto& v : m.function_table(f.name)) table.push_back(static_cast<std::size_t>(v.value()));
    t.functions.emplace_back(f.name, table);
  }
  for (const auto& r : sig.relations()) {
    std::vector<bool> table;
    for (const auto& v : m.relation_table(r.name)) table.push_back(v.value());
    t.relations.emplace_back(r.name, table);
  }
  return t;
}

}  // namespace oracle
