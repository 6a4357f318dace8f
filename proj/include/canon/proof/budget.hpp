#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace canon::proof {

/// Desk-scale bound on a search for derivations and counter-models.
struct Budget {
  std::size_t max_steps = 100000;
  std::size_t max_term_depth = 2;
  std::size_t max_model_size = 4;

  void validate() const {
    if (max_steps < 1 || max_term_depth < 1 || max_model_size < 1)
      throw std::invalid_argument("budget fields must be >= 1");
  }
  friend bool operator==(const Budget&, const Budget&) = default;
};

/// Parses "steps,depth,size" (the format of the CANON_BUDGET variable).
Budget parse_budget(const std::string& text);

}  // namespace canon::proof
