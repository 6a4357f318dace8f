#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "canon/compactness/dyadic.hpp"
#include "canon/henkin/front.hpp"
#include "canon/proof/structure.hpp"

namespace canon::compactness {

using proof::Element;

class UnsupportedTheory : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WitnessUnassignable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A countable structure presented by a plugin: elements are natural-number
/// ids enumerated in id order, and every constant of L_H in use has an entry
/// in the constant table.
class ComputableModel : public proof::Structure {
 public:
  ComputableModel(std::string plugin, syntax::Signature signature);

  const std::string& plugin() const noexcept { return plugin_; }
  const syntax::Signature& signature() const override { return sig_; }
  std::optional<Element> constant(const std::string& name) const override;
  /// Constants in assignment order.
  const std::vector<std::pair<std::string, Element>>& constant_table() const noexcept { return table_; }
  void assign(const std::string& name, Element value);

 private:
  std::string plugin_;
  syntax::Signature sig_;
  std::vector<std::pair<std::string, Element>> table_;
  std::map<std::string, std::size_t> index_;
};

/// (Q_2, <): dyadic rationals under the dyadic enumeration, relation `lt`.
class DloModel : public ComputableModel {
 public:
  explicit DloModel(syntax::Signature signature);

  std::optional<std::size_t> finite_size() const override { return std::nullopt; }
  std::vector<Element> elements(std::size_t limit) const override;
  std::optional<Element> apply(const std::string&, std::span<const Element>) const override { return std::nullopt; }
  std::optional<bool> holds(const std::string& relation, std::span<const Element> args) const override;
  /// The first `eval_range` ids plus the test points of the parameters.
  std::vector<Element> quantifier_range(std::span<const Element> params, std::size_t eval_range) const override;
  std::string describe(Element e) const override { return decode(e).to_string(); }
};

/// The naturals with identity as the element encoding. With a successor
/// symbol this is the `successor` plugin, without it the `equality` plugin.
/// 0-ary relations take their truth values from a table.
class NaturalsModel : public ComputableModel {
 public:
  NaturalsModel(std::string plugin, syntax::Signature signature, std::optional<std::string> successor,
                std::map<std::string, bool> propositions);

  std::optional<std::size_t> finite_size() const override { return std::nullopt; }
  std::vector<Element> elements(std::size_t limit) const override;
  std::optional<Element> apply(const std::string& function, std::span<const Element> args) const override;
  std::optional<bool> holds(const std::string& relation, std::span<const Element> args) const override;
  const std::optional<std::string>& successor() const noexcept { return successor_; }

 private:
  std::optional<std::string> successor_;
  std::map<std::string, bool> propositions_;
};

/// A finite model found by the model finder, presented as a plugin model.
class FiniteModel : public ComputableModel {
 public:
  explicit FiniteModel(proof::FiniteStructure structure);

  std::optional<std::size_t> finite_size() const override { return structure_.size(); }
  std::vector<Element> elements(std::size_t limit) const override { return structure_.elements(limit); }
  std::optional<Element> apply(const std::string& function, std::span<const Element> args) const override;
  std::optional<bool> holds(const std::string& relation, std::span<const Element> args) const override;
  const proof::FiniteStructure& structure() const noexcept { return structure_; }

 private:
  proof::FiniteStructure structure_;
};

/// Ids of the DLO test points of a parameter set: the parameters, the
/// midpoints of neighbouring parameters, and one point beyond each end
/// (just 0 without parameters). Every order position relative to the
/// parameters is represented, so quantifiers over them are exact.
std::vector<Element> dlo_test_points(std::span<const Element> params);

/// Plugin ids shipped with the toolkit: dlo, equality, successor, finite.
const std::vector<std::string>& plugin_ids();

/// The consistency oracle matching a plugin id (generic for unknown ids).
std::shared_ptr<const proof::ConsistencyOracle> oracle_for(const std::string& plugin);

/// G's ambient model: the plugin's fixed structure with every constant of the
/// front's language interpreted by the plugin's witness-selection rule.
/// Generators are processed in order (ledger constants, then L constants);
/// constants the front proves equal share a value.
///  - dlo: first value 0; otherwise the midpoint of the interval left by the
///    recorded order constraints, or an endpoint +-1 on an unbounded side.
///  - equality: values 0, 1, 2, ... per equality class.
///  - successor: least natural consistent with the decided ground sentences.
///  - finite: a model of the front found within the budget.
/// Throws UnsupportedTheory when the plugin does not cover the signature or
/// the theory declares another plugin, and WitnessUnassignable when a decided
/// ground sentence or witness axiom fails under the assignment.
std::shared_ptr<const ComputableModel> canonical_model(const std::string& plugin, const henkin::CompleteFront& front);

struct ModelCheckReport {
  std::size_t eval_range = 0;
  std::size_t checked = 0;
  std::vector<std::string> failures;  // sentences evaluating false
  std::vector<std::string> unknown;   // sentences outside the evaluable fragment
  bool pass() const { return failures.empty(); }
};

/// Bounded model checking: every sentence evaluated with quantifiers over the
/// model's range for `eval_range`.
ModelCheckReport check_sentences(const proof::Structure& model, const std::vector<syntax::Formula>& sentences,
                                 std::size_t eval_range = 64);

}  // namespace canon::compactness
