#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "canon/backforth/model_map.hpp"
#include "canon/syntax/ast.hpp"

namespace canon::backforth {

class TypeUnrealizable : public std::runtime_error {
 public:
  TypeUnrealizable(const std::string& message, std::optional<std::size_t> round = std::nullopt);
  std::optional<std::size_t> round() const noexcept { return round_; }

 private:
  std::optional<std::size_t> round_;
};

/// Precondition violation: the element is already paired.
class AlreadyPaired : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Quantifier-free type of an element over parameters p0, p1, ...: the truth
/// value of every relation atom and equation over {x, p0, ...} that mentions
/// x. For the order signature {lt/2} it reduces to an interval, kept in
/// `position` for reports.
struct TypeDescription {
  std::vector<std::string> literals;
  std::optional<std::string> position;
  friend bool operator==(const TypeDescription& a, const TypeDescription& b) { return a.literals == b.literals; }
};

TypeDescription describe_type(const Structure& m, Element e, const std::vector<Element>& params);

struct IsoStep {
  std::string side;  // "forth" or "back"
  std::size_t round;
  Element left, right;
  TypeDescription type;
};

/// A finite partial isomorphism between two structures over one signature.
class PartialIso {
 public:
  PartialIso(std::shared_ptr<const Structure> left, std::shared_ptr<const Structure> right);

  const Structure& left() const noexcept { return *left_; }
  const Structure& right() const noexcept { return *right_; }
  std::shared_ptr<const Structure> left_ptr() const noexcept { return left_; }
  std::shared_ptr<const Structure> right_ptr() const noexcept { return right_; }
  const std::vector<std::pair<Element, Element>>& pairs() const noexcept { return pairs_; }
  const std::vector<IsoStep>& log() const noexcept { return log_; }

  std::optional<Element> image(Element left) const;
  std::optional<Element> preimage(Element right) const;

  /// Adds a pair without any check (seeding from a known map).
  void seed(Element left, Element right);
  void record(IsoStep step);

  /// Relation atoms and equations over paired tuples whose truth differs
  /// between the sides; empty for a genuine partial isomorphism.
  std::vector<std::string> violations() const;
  ModelMap as_map(const std::string& provenance = "back-and-forth") const;

 private:
  std::shared_ptr<const Structure> left_, right_;
  std::vector<std::pair<Element, Element>> pairs_;
  std::vector<IsoStep> log_;
};

/// Realizer search bound on structures without a finite size.
inline constexpr std::size_t kRealizerSearch = 4096;

/// Pairs `left` with the least enumerated right element realizing its type
/// over the current pairs. Throws AlreadyPaired or TypeUnrealizable.
PartialIso extend_forth(const PartialIso& iso, Element left, std::size_t search = kRealizerSearch);
PartialIso extend_back(const PartialIso& iso, Element right, std::size_t search = kRealizerSearch);

/// Rounds alternate: even rounds extend forth on the least unpaired left
/// element, odd rounds back on the least unpaired right element. Rounds with
/// nothing left to pair on their side are skipped. Starts from `start`.
PartialIso run_back_and_forth(PartialIso start, std::size_t rounds, std::size_t search = kRealizerSearch);
PartialIso run_back_and_forth(std::shared_ptr<const Structure> left, std::shared_ptr<const Structure> right,
                              std::size_t rounds, std::size_t search = kRealizerSearch);

struct ElementaryRecord {
  std::string formula;
  std::vector<std::string> tuple;  // source elements, described
  std::optional<bool> left, right;
  bool agree() const { return left.has_value() && left == right; }
};

struct ElementaryReport {
  std::size_t eval_range = 64;
  std::vector<ElementaryRecord> records;
  bool pass() const;
  std::size_t disagreements() const;
};

/// Evaluates each formula on each tuple in the source and on the image tuple
/// in the target. A tuple binds the formula's free variables in sorted order.
ElementaryReport check_elementary(const ModelMap& map, const std::vector<syntax::Formula>& formulas,
                                  const std::vector<std::vector<Element>>& tuples, std::size_t eval_range = 64);
/// Same with every tuple of mapped source elements of the right arity.
ElementaryReport check_elementary(const ModelMap& map, const std::vector<syntax::Formula>& formulas,
                                  std::size_t eval_range = 64);

/// Atoms over x, y and the formulas with one quantifier over such atoms and
/// their negations, for the relations and functions of the signature.
std::vector<syntax::Formula> formula_battery(const syntax::Signature& signature);

}  // namespace canon::backforth
