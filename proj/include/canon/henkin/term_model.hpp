#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "canon/henkin/front.hpp"
#include "canon/proof/partition.hpp"
#include "canon/proof/structure.hpp"

namespace canon::henkin {

using proof::Element;

/// Closed terms of depth <= depth over `constants` and the function symbols
/// of `signature`, in term enumeration order.
std::vector<Term> term_universe(const syntax::Signature& signature, const std::vector<std::string>& constants,
                                std::size_t depth);

/// F(t) truncated to terms of depth <= d: classes of provably equal closed
/// terms; function symbols act on representatives and are partial where the
/// result leaves the truncation.
class TermModel : public proof::Structure {
 public:
  TermModel(CompleteFront front, std::size_t depth, proof::Partition partition,
            std::map<std::string, std::map<std::vector<Element>, bool>> relations);

  const CompleteFront& front() const noexcept { return front_; }
  std::size_t depth() const noexcept { return depth_; }
  const proof::Partition& partition() const noexcept { return partition_; }
  const std::vector<Term>& universe() const noexcept { return partition_.terms(); }
  std::size_t class_count() const noexcept { return partition_.class_count(); }
  const Term& representative(Element e) const { return partition_.representative(static_cast<std::size_t>(e)); }
  std::optional<Element> class_of(const Term& t) const;
  const std::map<std::string, std::map<std::vector<Element>, bool>>& relation_table() const noexcept {
    return relations_;
  }

  const syntax::Signature& signature() const override { return signature_; }
  std::optional<std::size_t> finite_size() const override { return class_count(); }
  std::vector<Element> elements(std::size_t limit) const override;
  std::optional<Element> constant(const std::string& name) const override;
  std::optional<Element> apply(const std::string& function, std::span<const Element> args) const override;
  std::optional<bool> holds(const std::string& relation, std::span<const Element> args) const override;
  std::string describe(Element e) const override;

  /// Applications in the universe whose class differs from the class of the
  /// application to representatives (empty when the quotient is well defined).
  std::vector<std::string> congruence_violations() const;

 private:
  CompleteFront front_;
  std::size_t depth_;
  proof::Partition partition_;
  std::map<std::string, std::map<std::vector<Element>, bool>> relations_;
  syntax::Signature signature_;
};

/// Builds F(t) at depth d. The front is first extended by the stage rule on
/// the equations between universe terms and on the relation atoms over class
/// representatives, so that every atom the model answers is decided in the
/// front it carries. Propagates StageUndecidable.
TermModel build_term_model(const CompleteFront& front, std::size_t depth);

struct TruthLemmaReport {
  std::size_t checked = 0;
  std::size_t out_of_scope = 0;
  std::vector<std::string> mismatches;
  bool pass() const { return mismatches.empty(); }
};

/// Quantifier-free sentences among the first `first_n` decided: model truth
/// versus front polarity.
TruthLemmaReport check_truth_lemma(const TermModel& model, std::size_t first_n);

/// Ledger entries with quantifier-free bodies: the body holds at the witness.
TruthLemmaReport check_witnesses(const TermModel& model);

}  // namespace canon::henkin
