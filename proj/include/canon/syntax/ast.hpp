#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace canon::syntax {

/// Immutable first-order term. Constants are 0-ary applications; Henkin
/// constants are constants whose name carries the `$k{...}` lexical form.
class Term {
 public:
  enum class Kind : std::uint8_t { Variable, Application };

  static Term variable(std::string name);
  static Term constant(std::string name);
  static Term apply(std::string function, std::vector<Term> args);

  Kind kind() const noexcept;
  bool is_variable() const noexcept { return kind() == Kind::Variable; }
  bool is_constant() const noexcept { return !is_variable() && args().empty(); }
  bool is_henkin() const noexcept;
  const std::string& name() const noexcept;
  std::span<const Term> args() const noexcept;

  bool is_closed() const noexcept;
  // Constants and variables have depth 0.
  std::size_t depth() const noexcept;
  void collect_variables(std::set<std::string>& out) const;

  friend bool operator==(const Term& a, const Term& b) noexcept;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class Formula {
 public:
  enum class Kind : std::uint8_t { Atom, Equal, Not, And, Or, Implies, Forall, Exists };

  static Formula atom(std::string relation, std::vector<Term> args = {});
  static Formula equal(Term lhs, Term rhs);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula binary(Kind kind, Formula lhs, Formula rhs);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);
  static Formula quantifier(Kind kind, std::string var, Formula body);

  Kind kind() const noexcept;
  bool is_atomic() const noexcept { return kind() == Kind::Atom || kind() == Kind::Equal; }
  bool is_binary() const noexcept;
  bool is_quantifier() const noexcept;

  /// Relation name for atoms, bound variable for quantifiers, empty otherwise.
  const std::string& symbol() const noexcept;
  /// Atom arguments, or the two sides of an equation.
  std::span<const Term> terms() const noexcept;
  /// Operand of a negation, body of a quantifier, left side of a binary.
  const Formula& left() const;
  const Formula& right() const;
  const Formula& body() const { return left(); }

  bool is_quantifier_free() const noexcept;
  std::size_t quantifier_rank() const noexcept;
  std::set<std::string> free_variables() const;
  bool is_sentence() const { return free_variables().empty(); }
  /// Every constant name occurring anywhere in the formula (Henkin constants included).
  void collect_constants(std::set<std::string>& out) const;
  std::set<std::string> constants() const;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node;
  static std::shared_ptr<Node> make_node(Kind kind);
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::string_view to_string(Formula::Kind kind) noexcept;

}  // namespace canon::syntax
