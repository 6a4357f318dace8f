#include "canon/compactness/satisfiability.hpp"

#include <algorithm>
#include <stdexcept>

#include "canon/proof/model_finder.hpp"
#include "canon/proof/tableau.hpp"

namespace canon::compactness {

std::string to_string(SubsetResult::Status s) {
  switch (s) {
    case SubsetResult::Status::ModelFound: return "model-found";
    case SubsetResult::Status::Exhausted: return "exhausted";
    case SubsetResult::Status::BudgetSpent: return "budget-spent";
  }
  return "?";
}

bool SatReport::all_satisfiable() const {
  return std::all_of(results.begin(), results.end(),
                     [](const SubsetResult& r) { return r.status == SubsetResult::Status::ModelFound; });
}

namespace {

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

SatReport check_finite_satisfiability(const syntax::Theory& theory, std::size_t horizon, const proof::Budget& budget) {
  if (horizon == 0) throw std::invalid_argument("horizon must be at least 1");
  SatReport report;
  report.theory = theory.name;
  report.horizon = horizon;
  report.budget = budget;
  std::size_t n = std::min(horizon, theory.axioms.size());

  std::vector<std::vector<std::size_t>> subsets;
  if (horizon <= 12) {
    report.policy = "all-subsets";
    for (std::size_t k = 1; k <= n; ++k)
      for (auto& s : subsets_of_size(n, k)) subsets.push_back(std::move(s));
  } else {
    report.policy = "singletons-pairs-prefix";
    for (std::size_t k = 1; k <= std::min<std::size_t>(2, n); ++k)
      for (auto& s : subsets_of_size(n, k)) subsets.push_back(std::move(s));
    if (n > 2) {
      std::vector<std::size_t> all(n);
      for (std::size_t i = 0; i < n; ++i) all[i] = i;
      subsets.push_back(std::move(all));
    }
  }

  for (auto& subset : subsets) {
    SubsetResult r;
    r.subset = subset;
    std::vector<syntax::Formula> sentences;
    for (auto i : subset) sentences.push_back(theory.axioms[i]);
    auto search = proof::find_model(theory.signature, sentences, 1, budget.max_model_size, budget.max_steps);
    r.steps = search.steps;
    r.exhausted_up_to = search.exhausted_up_to;
    switch (search.status) {
      case proof::ModelSearch::Status::Found: {
        r.status = SubsetResult::Status::ModelFound;
        r.model = std::move(search.model);
        r.verified = std::all_of(sentences.begin(), sentences.end(),
                                 [&](const auto& s) { return proof::evaluate(*r.model, s) == true; });
        break;
      }
      case proof::ModelSearch::Status::Exhausted: r.status = SubsetResult::Status::Exhausted; break;
      case proof::ModelSearch::Status::BudgetSpent: r.status = SubsetResult::Status::BudgetSpent; break;
    }
    if (r.status != SubsetResult::Status::ModelFound) r.prover_inconsistent = proof::run_tableau(sentences, budget).closed;
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace canon::compactness
