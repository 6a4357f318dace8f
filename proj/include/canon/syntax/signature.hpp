#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace canon::syntax {

struct Symbol {
  std::string name;
  std::size_t arity = 0;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SymbolKind { Constant, Function, Relation };

/// Finite first-order signature. Equality is implicit. Declaration order is
/// kept and is the "signature order" used wherever symbols are iterated.
class Signature {
 public:
  void add_constant(std::string name);
  void add_function(std::string name, std::size_t arity);
  void add_relation(std::string name, std::size_t arity);

  bool has_constant(std::string_view name) const;
  std::optional<std::size_t> function_arity(std::string_view name) const;
  std::optional<std::size_t> relation_arity(std::string_view name) const;
  std::optional<SymbolKind> kind_of(std::string_view name) const;
  bool contains(std::string_view name) const { return kind_of(name).has_value(); }

  const std::vector<std::string>& constants() const noexcept { return constants_; }
  const std::vector<Symbol>& functions() const noexcept { return functions_; }
  const std::vector<Symbol>& relations() const noexcept { return relations_; }

  /// Copy with extra constants appended (already-present names are skipped).
  Signature with_constants(const std::vector<std::string>& extra) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  void check_fresh(std::string_view name) const;

  std::vector<std::string> constants_;
  std::vector<Symbol> functions_;
  std::vector<Symbol> relations_;
};

/// Identifier rule for declared symbols: [A-Za-z][A-Za-z0-9_]*, not a keyword.
bool is_identifier(std::string_view name) noexcept;

/// Names used for canonical bound variables (x, y, z, w, v, u, x<digits>);
/// they cannot be declared as symbols.
bool is_reserved_variable(std::string_view name) noexcept;

}  // namespace canon::syntax
