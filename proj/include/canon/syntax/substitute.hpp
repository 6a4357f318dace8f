#pragma once

#include <string_view>

#include "canon/syntax/ast.hpp"

namespace canon::syntax {

Term substitute(const Term& term, std::string_view var, const Term& replacement);

/// Capture-avoiding substitution of `replacement` for the free occurrences of
/// `var`. Binders that would capture a variable of `replacement` are renamed
/// to the first unused name of the form `<var>N`.
Formula substitute(const Formula& formula, std::string_view var, const Term& replacement);

/// Replaces constant `name` everywhere by `replacement`.
Formula replace_constant(const Formula& formula, std::string_view name, const Term& replacement);

}  // namespace canon::syntax
