#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "canon/proof/budget.hpp"
#include "canon/proof/structure.hpp"
#include "canon/syntax/theory.hpp"

namespace canon::compactness {

struct SubsetResult {
  enum class Status { ModelFound, Exhausted, BudgetSpent };
  std::vector<std::size_t> subset;  // axiom indices, ascending
  Status status = Status::Exhausted;
  std::optional<proof::FiniteStructure> model;
  // Largest size searched completely without finding a model.
  std::size_t exhausted_up_to = 0;
  // Set when the search did not find a model: whether the tableau refuted the subset.
  std::optional<bool> prover_inconsistent;
  // The reported model re-evaluates every sentence of the subset to true.
  bool verified = false;
  std::size_t steps = 0;
};
std::string to_string(SubsetResult::Status s);

struct SatReport {
  std::string theory;
  std::size_t horizon = 0;
  proof::Budget budget;
  // "all-subsets" when the horizon is at most 12, else "singletons-pairs-prefix".
  std::string policy;
  std::vector<SubsetResult> results;

  bool all_satisfiable() const;
};

/// Finite model search for subsets of the first `horizon` axioms (clamped to
/// the axiom count), sizes 1..budget.max_model_size. Subsets are listed by
/// size, then lexicographically.
SatReport check_finite_satisfiability(const syntax::Theory& theory, std::size_t horizon, const proof::Budget& budget);

}  // namespace canon::compactness
