#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "canon/backforth/model_map.hpp"
#include "canon/category/translation.hpp"
#include "canon/compactness/model.hpp"
#include "canon/compactness/skolem.hpp"
#include "canon/henkin/term_model.hpp"

namespace canon::category {

using backforth::ModelMap;
using proof::Element;

/// A translation that fails to carry provable equalities (or Henkin
/// witnesses) of the source over to the target.
class TranslationUnsound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An evaluation landed outside the recorded elements of a substructure.
class EvaluationOutOfRange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotBijective : public std::runtime_error {
 public:
  enum class Kind { Missed, DoublyHit };
  NotBijective(Kind kind, Element witness, const std::string& message);
  Kind kind() const noexcept { return kind_; }
  Element witness() const noexcept { return witness_; }

 private:
  Kind kind_;
  Element witness_;
};

/// eta_t together with its surjectivity and injectivity evidence.
struct EtaComponent {
  ModelMap map;
  // Target elements of the compared domain that no class reaches.
  std::vector<Element> missed;
  // Target elements reached by more than one class.
  std::vector<Element> doubly_hit;
  std::size_t domain_size = 0;

  bool injective() const { return doubly_hit.empty(); }
  bool surjective() const { return missed.empty(); }
  bool bijective() const { return injective() && surjective(); }
};

/// eta_t([s]) = s evaluated in the parent model; every image must be a member
/// of the closure (EvaluationOutOfRange otherwise). Surjectivity is measured
/// against the closure members.
EtaComponent eta_component(std::shared_ptr<const henkin::TermModel> term,
                           std::shared_ptr<const compactness::SkolemSubstructure> closure);
/// The same map with the whole parent model as target, compared against its
/// first `eval_range` elements (all of them when the parent is finite).
EtaComponent eta_against_parent(std::shared_ptr<const henkin::TermModel> term,
                                std::shared_ptr<const compactness::ComputableModel> parent, std::size_t eval_range);

/// Inverse of a bijection onto `target_domain`; both composites are verified
/// to be identities. Throws NotBijective with a missed or doubly hit element.
ModelMap invert_component(const ModelMap& map, const std::vector<Element>& target_domain);

/// g after f, defined where both are.
ModelMap compose_maps(const ModelMap& g, const ModelMap& f);
/// True iff `map` sends every element of `domain` to itself.
bool is_identity(const ModelMap& map, const std::vector<Element>& domain);

struct BundleParams {
  std::size_t horizon = 30;
  std::size_t depth = 3;
  std::size_t closure_depth = 3;
  proof::Budget budget;
  // Empty: the theory's declared plugin, or "finite" when it declares none.
  std::string plugin;
  std::size_t window = 2;
};

/// Henkin constant c_<existential, index> to be added to a target front.
struct Import {
  Formula existential;
  std::size_t index = 0;
};

/// Everything built from one theory: front, F(t), the plugin model, G(t) and
/// eta_t.
struct Bundle {
  syntax::Theory theory;
  BundleParams params;
  std::string plugin;
  std::shared_ptr<const henkin::TermModel> term;
  std::shared_ptr<const compactness::ComputableModel> parent;
  std::shared_ptr<const compactness::SkolemSubstructure> closure;
  EtaComponent eta;

  const henkin::CompleteFront& front() const { return term->front(); }
};

std::string resolve_plugin(const syntax::Theory& theory, const std::string& requested);

/// Imports are added to the front after the Lindenbaum stages and before the
/// term model is built. An import whose existential the front refutes throws
/// TranslationUnsound.
Bundle build_bundle(const syntax::Theory& theory, const BundleParams& params, const std::vector<Import>& imports = {});

/// The images under f of the source ledger: what a target front must contain
/// for F(f) and G(f) to be defined on Henkin constants.
std::vector<Import> translated_imports(const Translation& f, const henkin::CompleteFront& source);

/// Target bundle for f: builds `target` with the imports of `source`'s ledger.
Bundle build_target_bundle(const Translation& f, const Bundle& source, const syntax::Theory& target,
                           const BundleParams& params);

/// F(f)([s]) = [f(s)]. Throws TranslationUnsound when members of one source
/// class land in different target classes, or outside the target term model.
ModelMap F_on_morphism(const Translation& f, std::shared_ptr<const henkin::TermModel> source,
                       std::shared_ptr<const henkin::TermModel> target);

/// G(f)(s^{G(t1)}) = f(s)^{G(t2)} for every recorded generating term s.
/// Throws TranslationUnsound when two generating terms disagree in the target
/// and EvaluationOutOfRange when an image leaves the target closure.
ModelMap G_on_morphism(const Translation& f, std::shared_ptr<const compactness::SkolemSubstructure> source,
                       std::shared_ptr<const compactness::SkolemSubstructure> target);

/// Copy of `map` with the images of the first two source elements that have
/// distinct images exchanged. Negative control for naturality checks.
ModelMap swap_first_images(const ModelMap& map);

}  // namespace canon::category
