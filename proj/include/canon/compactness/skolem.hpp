#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "canon/compactness/model.hpp"

namespace canon::compactness {

struct Generator {
  syntax::Term term;  // closed term naming the generator
  Element value;
  std::size_t level = 0;  // function applications already behind the term
};

/// The substructure of a plugin model generated by a set of elements, closed
/// under the function symbols up to a depth. Elements keep parent ids.
/// Function applications leaving the closure (from frontier elements) are
/// undefined.
class SkolemSubstructure : public proof::Structure {
 public:
  SkolemSubstructure(std::shared_ptr<const ComputableModel> parent, std::vector<Generator> generators,
                     std::size_t depth);

  const ComputableModel& parent() const noexcept { return *parent_; }
  std::shared_ptr<const ComputableModel> parent_ptr() const noexcept { return parent_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  std::size_t depth() const noexcept { return depth_; }

  /// Elements in breadth-first order.
  const std::vector<Element>& members() const noexcept { return members_; }
  bool contains(Element e) const { return info_.count(e) > 0; }
  /// The first term found generating `e`.
  const syntax::Term& provenance(Element e) const { return info_.at(e).term; }
  /// Further generating terms met during the closure.
  const std::vector<syntax::Term>& alternatives(Element e) const { return info_.at(e).alternatives; }
  std::size_t level(Element e) const { return info_.at(e).level; }
  /// Elements at the depth bound whose images were not explored.
  bool is_frontier(Element e) const;
  /// Members as generators at their own levels, for re-closing.
  std::vector<Generator> as_generators() const;

  const syntax::Signature& signature() const override { return parent_->signature(); }
  std::optional<std::size_t> finite_size() const override { return members_.size(); }
  std::vector<Element> elements(std::size_t limit) const override;
  std::optional<Element> constant(const std::string& name) const override;
  std::optional<Element> apply(const std::string& function, std::span<const Element> args) const override;
  std::optional<bool> holds(const std::string& relation, std::span<const Element> args) const override;
  std::vector<Element> quantifier_range(std::span<const Element>, std::size_t) const override { return members_; }
  std::string describe(Element e) const override { return parent_->describe(e); }

 private:
  struct Info {
    syntax::Term term;
    std::size_t level;
    std::vector<syntax::Term> alternatives;
  };
  void add(const syntax::Term& term, Element value, std::size_t level);

  std::shared_ptr<const ComputableModel> parent_;
  std::vector<Generator> generators_;
  std::size_t depth_;
  std::vector<Element> members_;
  std::map<Element, Info> info_;
};

/// G(t): closure of the interpretations of the ledger constants (and the L
/// constants) of the front. Generators follow ledger order, then L order;
/// function symbols are applied in signature order.
SkolemSubstructure skolem_closure(std::shared_ptr<const ComputableModel> model, const henkin::CompleteFront& front,
                                  std::size_t depth);

}  // namespace canon::compactness
