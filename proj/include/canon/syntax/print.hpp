#pragma once

#include <string>

#include "canon/syntax/ast.hpp"

namespace canon::syntax {

/// Surface syntax with the formula's own variable names. Binary connectives
/// are always parenthesised, so the output re-parses to the same tree.
std::string print(const Term& term);
std::string print(const Formula& formula);

/// Canonical bytes: bound variables are renamed by binder depth
/// (x, y, z, w, v, u, x6, x7, ...), skipping names that occur free in the
/// formula. Identical exactly for alpha-equivalent formulas.
std::string canonical(const Formula& formula);

/// The formula whose printed form is `canonical(formula)`.
Formula canonical_form(const Formula& formula);

/// Canonical bound-variable name for binder depth `depth` (no skipping).
std::string bound_name(std::size_t depth);

/// Length-then-lexicographic comparison of byte strings: the enumeration order.
bool enumeration_less(const std::string& a, const std::string& b) noexcept;

}  // namespace canon::syntax
