#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canon/syntax/ast.hpp"

namespace canon::proof {

using syntax::Term;

/// Incremental congruence closure over closed terms. Every subterm of an
/// added term is registered; merges propagate to applications whose
/// arguments become equal.
class CongruenceClosure {
 public:
  std::size_t add(const Term& term);
  std::optional<std::size_t> id(const Term& term) const;
  void merge(const Term& a, const Term& b);
  bool equal(const Term& a, const Term& b);
  std::size_t find(std::size_t id);
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& term(std::size_t id) const { return terms_[id]; }
  /// Merges applications made congruent by earlier merges or additions.
  void propagate();

 private:
  void merge_ids(std::size_t a, std::size_t b);

  std::vector<Term> terms_;
  std::map<std::string, std::size_t> index_;  // printed term -> id
  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::size_t>> args_;
  std::vector<std::size_t> applications_;
  bool dirty_ = false;
};

/// Equivalence classes over a finite set of closed terms.
class Partition {
 public:
  Partition() = default;
  Partition(std::vector<Term> terms, std::vector<std::size_t> class_of);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t class_count() const noexcept { return members_.size(); }
  /// Class index of a universe term, nullopt if the term is not in the universe.
  std::optional<std::size_t> class_of(const Term& term) const;
  std::size_t class_of_index(std::size_t term_index) const { return class_of_[term_index]; }
  /// Members of each class in universe order; classes are numbered by the
  /// enumeration order of their representatives.
  const std::vector<std::size_t>& members(std::size_t cls) const { return members_[cls]; }
  /// Least member in term enumeration order.
  const Term& representative(std::size_t cls) const { return terms_[members_[cls].front()]; }
  bool same(const Term& a, const Term& b) const;

 private:
  std::vector<Term> terms_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> members_;
  std::map<std::string, std::size_t> index_;
};

/// Smallest equivalence on `universe` containing `equations` and closed under
/// congruence between applications whose arguments are themselves members.
/// Equation sides outside the universe take part but are not reported.
Partition congruence_close(const std::vector<std::pair<Term, Term>>& equations, const std::vector<Term>& universe);

/// Length-then-lex order on printed terms.
bool term_enumeration_less(const Term& a, const Term& b);

}  // namespace canon::proof
