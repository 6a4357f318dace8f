#include "canon/proof/structure.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace canon::proof {

using syntax::Formula;
using syntax::Term;

std::vector<Element> Structure::quantifier_range(std::span<const Element> params, std::size_t eval_range) const {
  if (auto n = finite_size()) return elements(*n);
  auto out = elements(eval_range);
  for (auto p : params)
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  return out;
}

std::optional<Element> evaluate(const Structure& m, const Term& term, const Assignment& env) {
  if (term.is_variable()) {
    auto it = env.find(term.name());
    if (it == env.end()) return std::nullopt;
    return it->second;
  }
  if (term.args().empty()) return m.constant(term.name());
  std::vector<Element> args;
  args.reserve(term.args().size());
  for (const auto& a : term.args()) {
    auto v = evaluate(m, a, env);
    if (!v) return std::nullopt;
    args.push_back(*v);
  }
  return m.apply(term.name(), args);
}

namespace {

void closed_terms(const Formula& f, std::vector<Term>& out) {
  if (f.is_atomic()) {
    std::function<void(const Term&)> walk = [&](const Term& t) {
      if (t.is_closed()) {
        out.push_back(t);
        return;
      }
      for (const auto& a : t.args()) walk(a);
    };
    for (const auto& t : f.terms()) walk(t);
    return;
  }
  if (f.kind() == Formula::Kind::Not || f.is_quantifier()) {
    closed_terms(f.left(), out);
    return;
  }
  closed_terms(f.left(), out);
  closed_terms(f.right(), out);
}

struct Evaluator {
  const Structure& m;
  std::size_t eval_range;
  std::vector<Element> fixed_params;
  Assignment env;

  std::optional<bool> run(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::Atom: {
        std::vector<Element> args;
        for (const auto& t : f.terms()) {
          auto v = evaluate(m, t, env);
          if (!v) return std::nullopt;
          args.push_back(*v);
        }
        return m.holds(f.symbol(), args);
      }
      case K::Equal: {
        auto a = evaluate(m, f.terms()[0], env);
        auto b = evaluate(m, f.terms()[1], env);
        if (!a || !b) return std::nullopt;
        return *a == *b;
      }
      case K::Not: {
        auto v = run(f.left());
        if (!v) return std::nullopt;
        return !*v;
      }
      case K::And: {
        auto a = run(f.left());
        if (a == false) return false;
        auto b = run(f.right());
        if (b == false) return false;
        if (!a || !b) return std::nullopt;
        return true;
      }
      case K::Or: {
        auto a = run(f.left());
        if (a == true) return true;
        auto b = run(f.right());
        if (b == true) return true;
        if (!a || !b) return std::nullopt;
        return false;
      }
      case K::Implies: {
        auto a = run(f.left());
        if (a == false) return true;
        auto b = run(f.right());
        if (b == true) return true;
        if (!a || !b) return std::nullopt;
        return false;
      }
      case K::Forall:
      case K::Exists: {
        std::vector<Element> params = fixed_params;
        for (const auto& [_, v] : env) params.push_back(v);
        std::sort(params.begin(), params.end());
        params.erase(std::unique(params.begin(), params.end()), params.end());
        auto range = m.quantifier_range(params, eval_range);
        const std::string& var = f.symbol();
        auto found = env.find(var);
        bool had = found != env.end();
        Element saved = had ? found->second : 0;
        bool want = f.kind() == K::Exists;
        bool unknown = false;
        std::optional<bool> result;
        for (auto e : range) {
          env[var] = e;
          auto v = run(f.body());
          if (!v) {
            unknown = true;
          } else if (*v == want) {
            result = want;
            break;
          }
        }
        if (had) env[var] = saved;
        else env.erase(var);
        if (result) return result;
        if (unknown) return std::nullopt;
        return !want;
      }
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<bool> evaluate(const Structure& m, const Formula& formula, const Assignment& env, std::size_t eval_range) {
  Evaluator ev{m, eval_range, {}, env};
  if (!m.finite_size()) {
    std::vector<Term> terms;
    closed_terms(formula, terms);
    for (const auto& t : terms)
      if (auto v = evaluate(m, t)) ev.fixed_params.push_back(*v);
  }
  return ev.run(formula);
}

FiniteStructure::FiniteStructure(syntax::Signature signature, std::size_t size) : sig_(std::move(signature)), n_(size) {
  if (n_ == 0) throw std::invalid_argument("structures are non-empty");
  for (const auto& c : sig_.constants()) constants_[c] = std::nullopt;
  for (const auto& f : sig_.functions()) functions_[f.name].assign(table_size(f.arity), std::nullopt);
  for (const auto& r : sig_.relations()) relations_[r.name].assign(table_size(r.arity), std::nullopt);
}

std::size_t FiniteStructure::table_size(std::size_t arity) const {
  std::size_t s = 1;
  for (std::size_t i = 0; i < arity; ++i) s *= n_;
  return s;
}

std::size_t FiniteStructure::cell_index(std::span<const Element> args) const {
  std::size_t idx = 0;
  for (auto a : args) {
    if (a >= n_) throw std::out_of_range("element outside finite structure");
    idx = idx * n_ + a;
  }
  return idx;
}

std::vector<Element> FiniteStructure::elements(std::size_t limit) const {
  std::vector<Element> out;
  for (Element e = 0; e < n_ && e < limit; ++e) out.push_back(e);
  return out;
}

std::optional<Element> FiniteStructure::constant(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) return std::nullopt;
  return it->second;
}

std::optional<Element> FiniteStructure::apply(const std::string& function, std::span<const Element> args) const {
  auto it = functions_.find(function);
  if (it == functions_.end()) return std::nullopt;
  return it->second[cell_index(args)];
}

std::optional<bool> FiniteStructure::holds(const std::string& relation, std::span<const Element> args) const {
  auto it = relations_.find(relation);
  if (it == relations_.end()) return std::nullopt;
  return it->second[cell_index(args)];
}

std::vector<Element> FiniteStructure::quantifier_range(std::span<const Element>, std::size_t) const {
  return elements(n_);
}

void FiniteStructure::set_constant(const std::string& name, std::optional<Element> value) { constants_.at(name) = value; }
void FiniteStructure::set_function(const std::string& name, std::size_t cell, std::optional<Element> value) {
  functions_.at(name).at(cell) = value;
}
void FiniteStructure::set_relation(const std::string& name, std::size_t cell, std::optional<bool> value) {
  relations_.at(name).at(cell) = value;
}

void FiniteStructure::complete_defaults() {
  for (auto& [_, v] : constants_)
    if (!v) v = 0;
  for (auto& [_, t] : functions_)
    for (auto& v : t)
      if (!v) v = 0;
  for (auto& [_, t] : relations_)
    for (auto& v : t)
      if (!v) v = false;
}

bool FiniteStructure::is_complete() const {
  for (const auto& [_, v] : constants_)
    if (!v) return false;
  for (const auto& [_, t] : functions_)
    for (const auto& v : t)
      if (!v) return false;
  for (const auto& [_, t] : relations_)
    for (const auto& v : t)
      if (!v) return false;
  return true;
}

const std::vector<std::optional<Element>>& FiniteStructure::function_table(const std::string& name) const {
  return functions_.at(name);
}
const std::vector<std::optional<bool>>& FiniteStructure::relation_table(const std::string& name) const {
  return relations_.at(name);
}

namespace {

void collect_symbols(const Term& t, syntax::Signature& sig) {
  if (t.is_variable()) return;
  if (t.args().empty()) {
    if (!sig.contains(t.name())) sig.add_constant(t.name());
    return;
  }
  if (!sig.contains(t.name())) sig.add_function(t.name(), t.args().size());
  for (const auto& a : t.args()) collect_symbols(a, sig);
}

void collect_symbols(const Formula& f, syntax::Signature& sig) {
  if (f.kind() == Formula::Kind::Atom && !sig.contains(f.symbol())) sig.add_relation(f.symbol(), f.terms().size());
  if (f.is_atomic()) {
    for (const auto& t : f.terms()) collect_symbols(t, sig);
    return;
  }
  collect_symbols(f.left(), sig);
  if (f.is_binary()) collect_symbols(f.right(), sig);
}

}  // namespace

syntax::Signature signature_of(const std::vector<Formula>& sentences, const syntax::Signature& base) {
  syntax::Signature sig = base;
  for (const auto& f : sentences) collect_symbols(f, sig);
  return sig;
}

}  // namespace canon::proof
