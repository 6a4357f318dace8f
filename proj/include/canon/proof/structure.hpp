#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "canon/syntax/ast.hpp"
#include "canon/syntax/signature.hpp"

namespace canon::proof {

using Element = std::uint64_t;
using Assignment = std::map<std::string, Element>;

/// Read interface shared by every structure the toolkit evaluates formulas
/// in: finite models, term models, plugin models and their substructures.
/// Partial answers (nullopt) mean "outside the represented fragment".
class Structure {
 public:
  virtual ~Structure() = default;

  virtual const syntax::Signature& signature() const = 0;
  /// Number of elements, or nullopt for an infinite enumeration.
  virtual std::optional<std::size_t> finite_size() const = 0;
  /// The first `limit` elements in enumeration order.
  virtual std::vector<Element> elements(std::size_t limit) const = 0;
  virtual std::optional<Element> constant(const std::string& name) const = 0;
  virtual std::optional<Element> apply(const std::string& function, std::span<const Element> args) const = 0;
  virtual std::optional<bool> holds(const std::string& relation, std::span<const Element> args) const = 0;
  /// Elements a quantifier ranges over given the parameters in scope. Finite
  /// structures return everything; the default for infinite ones is the first
  /// `eval_range` elements plus the parameters.
  virtual std::vector<Element> quantifier_range(std::span<const Element> params, std::size_t eval_range) const;
  virtual std::string describe(Element e) const { return std::to_string(e); }
};

std::optional<Element> evaluate(const Structure& m, const syntax::Term& term, const Assignment& env = {});

/// Kleene three-valued evaluation. Quantifiers range over
/// `quantifier_range(params, eval_range)` where params are the values of the
/// assignment and of the closed terms of the formula.
std::optional<bool> evaluate(const Structure& m, const syntax::Formula& formula, const Assignment& env = {},
                             std::size_t eval_range = 64);

/// Finite structure over {0, ..., n-1} whose tables may be partially filled.
/// Function tables are indexed in mixed radix with the first argument most
/// significant.
class FiniteStructure : public Structure {
 public:
  FiniteStructure(syntax::Signature signature, std::size_t size);

  const syntax::Signature& signature() const override { return sig_; }
  std::optional<std::size_t> finite_size() const override { return n_; }
  std::size_t size() const noexcept { return n_; }
  std::vector<Element> elements(std::size_t limit) const override;
  std::optional<Element> constant(const std::string& name) const override;
  std::optional<Element> apply(const std::string& function, std::span<const Element> args) const override;
  std::optional<bool> holds(const std::string& relation, std::span<const Element> args) const override;
  std::vector<Element> quantifier_range(std::span<const Element> params, std::size_t eval_range) const override;

  void set_constant(const std::string& name, std::optional<Element> value);
  void set_function(const std::string& name, std::size_t cell, std::optional<Element> value);
  void set_relation(const std::string& name, std::size_t cell, std::optional<bool> value);
  std::size_t table_size(std::size_t arity) const;
  /// Fills every unset cell with element 0 / false.
  void complete_defaults();
  bool is_complete() const;

  const std::vector<std::optional<Element>>& function_table(const std::string& name) const;
  const std::vector<std::optional<bool>>& relation_table(const std::string& name) const;

  friend bool operator==(const FiniteStructure&, const FiniteStructure&) = default;

 private:
  std::size_t cell_index(std::span<const Element> args) const;

  syntax::Signature sig_;
  std::size_t n_;
  std::map<std::string, std::optional<Element>> constants_;
  std::map<std::string, std::vector<std::optional<Element>>> functions_;
  std::map<std::string, std::vector<std::optional<bool>>> relations_;
};

/// Signature containing exactly the symbols occurring in `sentences`, plus
/// those of `base`.
syntax::Signature signature_of(const std::vector<syntax::Formula>& sentences, const syntax::Signature& base = {});

}  // namespace canon::proof
