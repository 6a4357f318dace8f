#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "canon/proof/structure.hpp"

namespace canon::proof {

struct ModelSearch {
  enum class Status { Found, Exhausted, BudgetSpent };
  Status status = Status::Exhausted;
  std::optional<FiniteStructure> model;
  std::size_t steps = 0;
  // Largest size whose search space was fully explored without a model.
  std::size_t exhausted_up_to = 0;
};

/// Backtracking search for a finite model of `sentences` with sizes
/// min_size..max_size in increasing order. Cells are filled constants first
/// (least-number heuristic for symmetry breaking), then function and relation
/// tables; partial structures are pruned by three-valued evaluation. Symbols of
/// `signature` that do not occur in the sentences get default values.
ModelSearch find_model(const syntax::Signature& signature, const std::vector<syntax::Formula>& sentences,
                       std::size_t min_size, std::size_t max_size, std::size_t max_steps);

}  // namespace canon::proof
