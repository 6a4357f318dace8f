#include "canon/proof/tableau.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "canon/proof/partition.hpp"
#include "canon/syntax/print.hpp"
#include "canon/syntax/substitute.hpp"

namespace canon::proof {

using syntax::Term;
using K = Formula::Kind;

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::Alpha: return "alpha";
    case Rule::Beta: return "beta";
    case Rule::Gamma: return "gamma";
    case Rule::Delta: return "delta";
  }
  return "?";
}

namespace {

enum class Class { Literal, Alpha, Beta, Gamma, Delta };

Class classify(const Formula& f) {
  switch (f.kind()) {
    case K::Atom:
    case K::Equal: return Class::Literal;
    case K::And: return Class::Alpha;
    case K::Or:
    case K::Implies: return Class::Beta;
    case K::Forall: return Class::Gamma;
    case K::Exists: return Class::Delta;
    case K::Not:
      switch (f.left().kind()) {
        case K::Atom:
        case K::Equal: return Class::Literal;
        case K::Not:
        case K::Or:
        case K::Implies: return Class::Alpha;
        case K::And: return Class::Beta;
        case K::Forall: return Class::Delta;
        case K::Exists: return Class::Gamma;
      }
  }
  return Class::Literal;
}

std::vector<Formula> alpha_parts(const Formula& f) {
  if (f.kind() == K::And) return {f.left(), f.right()};
  const Formula& g = f.left();
  switch (g.kind()) {
    case K::Not: return {g.left()};
    case K::Or: return {Formula::negation(g.left()), Formula::negation(g.right())};
    case K::Implies: return {g.left(), Formula::negation(g.right())};
    default: return {};
  }
}

std::pair<Formula, Formula> beta_parts(const Formula& f) {
  if (f.kind() == K::Or) return {f.left(), f.right()};
  if (f.kind() == K::Implies) return {Formula::negation(f.left()), f.right()};
  return {Formula::negation(f.left().left()), Formula::negation(f.left().right())};
}

// Instance of a gamma or delta formula at a closed term.
Formula instantiate(const Formula& f, const Term& t) {
  if (f.is_quantifier()) return syntax::substitute(f.body(), f.symbol(), t);
  const Formula& q = f.left();
  return Formula::negation(syntax::substitute(q.body(), q.symbol(), t));
}

bool is_literal(const Formula& f) { return classify(f) == Class::Literal; }

void closed_subterms(const Term& t, std::vector<Term>& out) {
  if (t.is_closed()) out.push_back(t);
  for (const auto& a : t.args()) closed_subterms(a, out);
}

void closed_terms(const Formula& f, std::vector<Term>& out) {
  if (f.is_atomic()) {
    for (const auto& t : f.terms()) closed_subterms(t, out);
    return;
  }
  closed_terms(f.left(), out);
  if (f.is_binary()) closed_terms(f.right(), out);
}

void functions_of(const Term& t, std::map<std::string, std::size_t>& out) {
  if (!t.is_variable() && !t.args().empty()) out.emplace(t.name(), t.args().size());
  for (const auto& a : t.args()) functions_of(a, out);
}

void functions_of(const Formula& f, std::map<std::string, std::size_t>& out) {
  if (f.is_atomic()) {
    for (const auto& t : f.terms()) functions_of(t, out);
    return;
  }
  functions_of(f.left(), out);
  if (f.is_binary()) functions_of(f.right(), out);
}

bool mentions_constant(const Formula& f, const std::string& name) { return f.constants().contains(name); }

std::optional<std::vector<Formula>> find_clash(const std::vector<Formula>& formulas) {
  CongruenceClosure cc;
  std::vector<const Formula*> lits;
  for (const auto& f : formulas)
    if (is_literal(f)) lits.push_back(&f);
  for (const auto* f : lits) {
    const Formula& a = f->kind() == K::Not ? f->left() : *f;
    for (const auto& t : a.terms()) cc.add(t);
  }
  for (const auto* f : lits)
    if (f->kind() == K::Equal) cc.merge(f->terms()[0], f->terms()[1]);
  for (const auto* f : lits)
    if (f->kind() == K::Not && f->left().kind() == K::Equal && cc.equal(f->left().terms()[0], f->left().terms()[1]))
      return std::vector<Formula>{*f};
  for (const auto* pos : lits) {
    if (pos->kind() != K::Atom) continue;
    for (const auto* neg : lits) {
      if (neg->kind() != K::Not || neg->left().kind() != K::Atom) continue;
      const Formula& a = neg->left();
      if (a.symbol() != pos->symbol() || a.terms().size() != pos->terms().size()) continue;
      bool same = true;
      for (std::size_t i = 0; i < a.terms().size() && same; ++i) same = cc.equal(a.terms()[i], pos->terms()[i]);
      if (same) return std::vector<Formula>{*pos, *neg};
    }
  }
  return std::nullopt;
}

struct BudgetOut {};

// The branch under expansion. Splits take a mark and undo back to it, so
// only the congruence closure is copied per split.
class Branch {
 public:
  explicit Branch(std::set<std::string> reserved) : reserved_(std::move(reserved)) {}

  const std::vector<Formula>& formulas() const noexcept { return formulas_; }
  bool done(std::size_t i) const { return done_[i]; }
  const std::optional<std::vector<Formula>>& clash() const noexcept { return clash_; }

  bool add(const Formula& f) {
    auto key = syntax::print(f);
    if (!keys_.insert(key).second) return false;
    trail_.push_back({Entry::Key, 0, std::move(key)});
    formulas_.push_back(f);
    done_.push_back(false);
    arg_ids_.emplace_back();
    if (is_literal(f)) note_literal(formulas_.size() - 1);
    return true;
  }

  void set_done(std::size_t i) {
    if (done_[i]) return;
    done_[i] = true;
    trail_.push_back({Entry::Done, i, {}});
  }

  // Records the instance; false if it was used before on this branch.
  bool use_gamma(std::size_t i, const std::string& term) {
    if (!gamma_used_.emplace(i, term).second) return false;
    trail_.push_back({Entry::Gamma, i, term});
    return true;
  }

  Term fresh_param() {
    for (;;) {
      std::string name = "_p" + std::to_string(params_++);
      if (!reserved_.contains(name)) return Term::constant(name);
    }
  }

  struct Mark {
    std::size_t trail, formulas, params;
    CongruenceClosure cc;
  };
  Mark mark() const { return {trail_.size(), formulas_.size(), params_, cc_}; }

  void undo(Mark m) {
    while (trail_.size() > m.trail) {
      auto& e = trail_.back();
      switch (e.kind) {
        case Entry::Key: keys_.erase(e.text); break;
        case Entry::Done: done_[e.index] = false; break;
        case Entry::Gamma: gamma_used_.erase({e.index, e.text}); break;
        case Entry::Positive: positive_[e.text].pop_back(); break;
        case Entry::Negative: negative_[e.text].pop_back(); break;
        case Entry::Disequation: disequations_.pop_back(); break;
      }
      trail_.pop_back();
    }
    formulas_.resize(m.formulas, formulas_.front());
    done_.resize(m.formulas);
    arg_ids_.resize(m.formulas);
    params_ = m.params;
    cc_ = std::move(m.cc);
    clash_.reset();
  }

 private:
  struct Entry {
    enum Kind { Key, Done, Gamma, Positive, Negative, Disequation } kind;
    std::size_t index;
    std::string text;
  };

  bool same_args(std::size_t a, std::size_t b) {
    const auto& x = arg_ids_[a];
    const auto& y = arg_ids_[b];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (cc_.find(x[i]) != cc_.find(y[i])) return false;
    return true;
  }

  void check_pair(std::size_t pos, std::size_t neg) {
    if (!clash_ && same_args(pos, neg)) clash_ = std::vector<Formula>{formulas_[pos], formulas_[neg]};
  }

  void check_disequation(std::size_t i) {
    const auto& ids = arg_ids_[i];
    if (!clash_ && cc_.find(ids[0]) == cc_.find(ids[1])) clash_ = std::vector<Formula>{formulas_[i]};
  }

  // Adding terms never merges two existing classes, so only the new literal
  // needs checking unless it is an equation.
  void note_literal(std::size_t i) {
    const Formula& f = formulas_[i];
    const Formula& a = f.kind() == K::Not ? f.left() : f;
    for (const auto& t : a.terms()) arg_ids_[i].push_back(cc_.add(t));
    if (f.kind() == K::Equal) {
      cc_.merge(f.terms()[0], f.terms()[1]);
      for (auto d : disequations_) check_disequation(d);
      for (const auto& [rel, ps] : positive_) {
        auto it = negative_.find(rel);
        if (it == negative_.end()) continue;
        for (auto p : ps)
          for (auto n : it->second) check_pair(p, n);
      }
      return;
    }
    cc_.propagate();
    if (f.kind() == K::Atom) {
      positive_[f.symbol()].push_back(i);
      trail_.push_back({Entry::Positive, i, f.symbol()});
      for (auto n : negative_[f.symbol()]) check_pair(i, n);
    } else if (a.kind() == K::Equal) {
      disequations_.push_back(i);
      trail_.push_back({Entry::Disequation, i, {}});
      check_disequation(i);
    } else {
      negative_[a.symbol()].push_back(i);
      trail_.push_back({Entry::Negative, i, a.symbol()});
      for (auto p : positive_[a.symbol()]) check_pair(p, i);
    }
  }

  std::set<std::string> reserved_;
  std::vector<Formula> formulas_;
  std::vector<bool> done_;
  std::vector<std::vector<std::size_t>> arg_ids_;  // literal argument term ids
  std::set<std::string> keys_;
  std::set<std::pair<std::size_t, std::string>> gamma_used_;
  std::size_t params_ = 0;
  CongruenceClosure cc_;
  std::map<std::string, std::vector<std::size_t>> positive_, negative_;  // by relation
  std::vector<std::size_t> disequations_;
  std::optional<std::vector<Formula>> clash_;
  std::vector<Entry> trail_;
};

class Prover {
 public:
  explicit Prover(const Budget& budget) : budget_(budget) {}
  std::size_t steps() const { return steps_; }

  bool expand(Branch& b, TableauNode& node) {
    for (;;) {
      if (b.clash()) {
        node.clash = *b.clash();
        return true;
      }
      if (apply_linear(b, node)) continue;
      // Beta split on the earliest pending disjunctive formula.
      for (std::size_t i = 0; i < b.formulas().size(); ++i) {
        if (b.done(i) || classify(b.formulas()[i]) != Class::Beta) continue;
        tick();
        b.set_done(i);
        auto [l, r] = beta_parts(b.formulas()[i]);
        node.split = b.formulas()[i];
        node.children.resize(2);
        auto mark = b.mark();
        b.add(l);
        if (!expand(b, node.children[0])) return false;
        b.undo(std::move(mark));
        b.add(r);
        return expand(b, node.children[1]);
      }
      if (!gamma_round(b, node)) return false;
    }
  }

 private:
  void tick() {
    if (++steps_ > budget_.max_steps) throw BudgetOut{};
  }

  bool apply_linear(Branch& b, TableauNode& node) {
    for (std::size_t i = 0; i < b.formulas().size(); ++i) {
      if (b.done(i)) continue;
      auto cls = classify(b.formulas()[i]);
      if (cls == Class::Alpha) {
        tick();
        b.set_done(i);
        Formula premise = b.formulas()[i];
        auto parts = alpha_parts(premise);
        for (const auto& p : parts) b.add(p);
        node.steps.push_back({Rule::Alpha, premise, parts, std::nullopt});
        return true;
      }
      if (cls == Class::Delta) {
        tick();
        b.set_done(i);
        Formula premise = b.formulas()[i];
        Term p = b.fresh_param();
        Formula inst = instantiate(premise, p);
        b.add(inst);
        node.steps.push_back({Rule::Delta, premise, {inst}, p});
        return true;
      }
    }
    return false;
  }

  std::vector<Term> herbrand(Branch& b) {
    std::vector<Term> found;
    std::map<std::string, std::size_t> functions;
    for (const auto& f : b.formulas()) {
      closed_terms(f, found);
      functions_of(f, functions);
    }
    std::map<std::string, Term> terms;
    for (const auto& t : found) terms.emplace(syntax::print(t), t);
    if (terms.empty()) {
      Term p = b.fresh_param();
      terms.emplace(syntax::print(p), p);
    }
    // Close the depth-0 terms under the branch's function symbols.
    std::vector<Term> layer;
    for (const auto& [_, t] : terms)
      if (t.args().empty()) layer.push_back(t);
    std::vector<Term> all = layer;
    for (std::size_t d = 1; d <= budget_.max_term_depth && !functions.empty(); ++d) {
      std::vector<Term> next;
      for (const auto& [name, arity] : functions) {
        std::vector<std::size_t> idx(arity, 0);
        for (;;) {
          std::vector<Term> args;
          bool fresh = false;
          for (auto k : idx) args.push_back(all[k]);
          for (const auto& a : args) fresh = fresh || a.depth() + 1 == d;
          if (fresh) next.push_back(Term::apply(name, args));
          std::size_t k = 0;
          while (k < arity && ++idx[k] == all.size()) idx[k++] = 0;
          if (k == arity) break;
        }
      }
      for (auto& t : next) all.push_back(std::move(t));
    }
    for (const auto& t : all) terms.emplace(syntax::print(t), t);
    std::vector<Term> out;
    for (const auto& [_, t] : terms) out.push_back(t);
    std::sort(out.begin(), out.end(), term_enumeration_less);
    return out;
  }

  bool gamma_round(Branch& b, TableauNode& node) {
    auto universe = herbrand(b);
    bool added = false;
    std::size_t count = b.formulas().size();
    for (std::size_t i = 0; i < count; ++i) {
      if (classify(b.formulas()[i]) != Class::Gamma) continue;
      for (const auto& t : universe) {
        if (!b.use_gamma(i, syntax::print(t))) continue;
        Formula premise = b.formulas()[i];
        Formula inst = instantiate(premise, t);
        tick();
        if (b.add(inst)) {
          node.steps.push_back({Rule::Gamma, premise, {inst}, t});
          added = true;
        }
      }
    }
    return added;
  }

  Budget budget_;
  std::size_t steps_ = 0;
};

struct Checker {
  std::string error;

  bool fail(std::string message) {
    error = std::move(message);
    return false;
  }

  bool check(const TableauNode& node, std::vector<Formula> branch) {
    auto on_branch = [&](const Formula& f) { return std::find(branch.begin(), branch.end(), f) != branch.end(); };
    for (const auto& step : node.steps) {
      if (!on_branch(step.premise)) return fail("premise not on branch: " + syntax::print(step.premise));
      auto cls = classify(step.premise);
      switch (step.rule) {
        case Rule::Alpha:
          if (cls != Class::Alpha || step.conclusions != alpha_parts(step.premise))
            return fail("bad alpha step on " + syntax::print(step.premise));
          break;
        case Rule::Gamma:
          if (cls != Class::Gamma || !step.instance || !step.instance->is_closed() || step.conclusions.size() != 1 ||
              !(step.conclusions[0] == instantiate(step.premise, *step.instance)))
            return fail("bad gamma step on " + syntax::print(step.premise));
          break;
        case Rule::Delta: {
          if (cls != Class::Delta || !step.instance || !step.instance->is_constant() || step.conclusions.size() != 1 ||
              !(step.conclusions[0] == instantiate(step.premise, *step.instance)))
            return fail("bad delta step on " + syntax::print(step.premise));
          const auto& name = step.instance->name();
          for (const auto& f : branch)
            if (mentions_constant(f, name)) return fail("delta parameter not fresh: " + name);
          break;
        }
        case Rule::Beta:
          return fail("beta step outside a split");
      }
      for (const auto& c : step.conclusions) branch.push_back(c);
    }
    if (node.split) {
      if (!on_branch(*node.split) || classify(*node.split) != Class::Beta || node.children.size() != 2)
        return fail("bad beta split");
      auto [l, r] = beta_parts(*node.split);
      auto left = branch;
      left.push_back(l);
      branch.push_back(r);
      return check(node.children[0], std::move(left)) && check(node.children[1], std::move(branch));
    }
    if (node.clash.empty()) return fail("open leaf");
    for (const auto& c : node.clash)
      if (!on_branch(c)) return fail("clash literal not on branch");
    auto clash = find_clash(branch);
    if (!clash) return fail("leaf does not clash");
    return true;
  }
};

}  // namespace

TableauResult run_tableau(const std::vector<Formula>& roots, const Budget& budget) {
  TableauResult result;
  Prover prover(budget);
  std::set<std::string> reserved;
  for (const auto& r : roots) r.collect_constants(reserved);
  Branch b(std::move(reserved));
  for (const auto& r : roots) b.add(r);
  Certificate cert;
  cert.roots = roots;
  try {
    result.closed = prover.expand(b, cert.tree);
  } catch (const BudgetOut&) {
    result.budget_spent = true;
  }
  result.steps = prover.steps();
  if (result.closed) result.certificate = std::move(cert);
  return result;
}

bool check_certificate(const Certificate& certificate, std::string* error) {
  Checker checker;
  bool ok = checker.check(certificate.tree, certificate.roots);
  if (!ok && error) *error = checker.error;
  return ok;
}

}  // namespace canon::proof
