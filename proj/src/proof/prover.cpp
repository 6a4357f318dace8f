#include "canon/proof/prover.hpp"

#include <algorithm>

#include "canon/proof/model_finder.hpp"

namespace canon::proof {

std::string to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::Proved: return "Proved";
    case Verdict::Kind::Refuted: return "Refuted";
    case Verdict::Kind::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(Consistency::Status status) {
  switch (status) {
    case Consistency::Status::Consistent: return "Consistent";
    case Consistency::Status::Inconsistent: return "Inconsistent";
    case Consistency::Status::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::True: return "True";
    case Decision::False: return "False";
    case Decision::Unknown: return "Unknown";
  }
  return "?";
}

Verdict prove(const std::vector<Formula>& axioms, const Formula& goal, const Budget& budget,
              const syntax::Signature& signature) {
  budget.validate();
  Verdict v;
  auto roots = axioms;
  roots.push_back(Formula::negation(goal));
  auto tableau = run_tableau(roots, budget);
  v.steps = tableau.steps;
  if (tableau.closed) {
    v.kind = Verdict::Kind::Proved;
    v.certificate = std::move(tableau.certificate);
    return v;
  }
  auto search = find_model(signature, roots, 1, budget.max_model_size, budget.max_steps);
  v.steps += search.steps;
  if (search.status == ModelSearch::Status::Found) {
    v.kind = Verdict::Kind::Refuted;
    v.counter_model = std::move(search.model);
  }
  return v;
}

Consistency GenericOracle::check(const syntax::Signature& signature, const std::vector<Formula>& sentences,
                                 const Budget& budget) const {
  budget.validate();
  Consistency c;
  auto search = find_model(signature, sentences, 1, budget.max_model_size, budget.max_steps);
  c.steps = search.steps;
  if (search.status == ModelSearch::Status::Found) {
    c.status = Consistency::Status::Consistent;
    c.model = std::move(search.model);
    c.evidence = "finite-model";
    return c;
  }
  auto tableau = run_tableau(sentences, budget);
  c.steps += tableau.steps;
  if (tableau.closed) {
    c.status = Consistency::Status::Inconsistent;
    c.refutation = std::move(tableau.certificate);
    c.evidence = "tableau";
  }
  return c;
}

namespace {

bool constants_and_propositions_only(const syntax::Signature& sig) {
  if (!sig.functions().empty()) return false;
  return std::all_of(sig.relations().begin(), sig.relations().end(), [](const auto& r) { return r.arity == 0; });
}

}  // namespace

Consistency EqualityOracle::check(const syntax::Signature& signature, const std::vector<Formula>& sentences,
                                  const Budget& budget) const {
  auto sig = signature_of(sentences, signature);
  if (!constants_and_propositions_only(sig)) return GenericOracle{}.check(signature, sentences, budget);
  std::set<std::string> constants;
  std::size_t rank = 0;
  for (const auto& s : sentences) {
    s.collect_constants(constants);
    rank = std::max(rank, s.quantifier_rank());
  }
  std::size_t bound = std::max<std::size_t>(1, constants.size() + rank);
  Consistency c;
  // The size bound comes from the logic; max_model_size is not consulted.
  auto search = find_model(signature, sentences, 1, bound, budget.max_steps);
  c.steps = search.steps;
  if (search.status == ModelSearch::Status::Found) {
    c.status = Consistency::Status::Consistent;
    c.model = std::move(search.model);
    c.evidence = "finite-model";
  } else if (search.status == ModelSearch::Status::Exhausted) {
    c.status = Consistency::Status::Inconsistent;
    c.evidence = "exhaustive-search<=" + std::to_string(bound);
  }
  return c;
}

Consistency consistent(const std::vector<Formula>& sentences, const Budget& budget, const syntax::Signature& signature) {
  return GenericOracle{}.check(signature, sentences, budget);
}

Decision decide(const std::vector<Formula>& axioms, const Formula& sentence, const Budget& budget,
                const ConsistencyOracle& oracle, const syntax::Signature& signature) {
  auto with = axioms;
  with.push_back(sentence);
  auto pos = oracle.check(signature, with, budget);
  if (pos.status == Consistency::Status::Consistent) return Decision::True;
  if (pos.status == Consistency::Status::Unknown) return Decision::Unknown;
  auto without = axioms;
  without.push_back(Formula::negation(sentence));
  auto neg = oracle.check(signature, without, budget);
  return neg.status == Consistency::Status::Consistent ? Decision::False : Decision::Unknown;
}

Decision decide(const std::vector<Formula>& axioms, const Formula& sentence, const Budget& budget) {
  return decide(axioms, sentence, budget, GenericOracle{});
}

}  // namespace canon::proof
