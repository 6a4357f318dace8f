#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "canon/syntax/ast.hpp"
#include "canon/syntax/signature.hpp"

namespace canon::syntax {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownSymbol, ArityMismatch, InvalidHenkin };
  ParseError(Kind kind, std::size_t position, const std::string& message);
  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

struct ParseOptions {
  // `$k{...}` constants are members of the Henkin expansion even when the
  // signature does not list them.
  bool allow_henkin = true;
  bool allow_free_variables = true;
};

/// Grammar (ASCII):
///   term    := var | name | name "(" term {"," term} ")" | henkin
///   henkin  := "$" digits "{" canonical-existential-sentence "}"
///   atom    := name ["(" term {"," term} ")"] | term "=" term
///   formula := "~" formula | "(" formula ("&"|"|"|"->") formula ")"
///            | ("forall"|"exists") var "." formula | atom
/// Unparenthesised binaries are accepted too: "->" (right associative)
/// binds loosest, then "|", then "&". Quantifiers and "~" bind tightest.
Formula parse_formula(std::string_view text, const Signature& signature, const ParseOptions& options = {});
Term parse_term(std::string_view text, const Signature& signature, const ParseOptions& options = {});

/// Splits a Henkin constant name `$k{body}` into (k, body). Returns false on
/// malformed names.
bool split_henkin_name(std::string_view name, std::size_t& index, std::string_view& body) noexcept;

}  // namespace canon::syntax
