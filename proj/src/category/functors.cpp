#include "canon/category/functors.hpp"

#include <map>
#include <set>

#include "canon/syntax/print.hpp"

namespace canon::category {

namespace {

std::string describe(const proof::Structure& m, Element e) { return m.describe(e); }

}  // namespace

NotBijective::NotBijective(Kind kind, Element witness, const std::string& message)
    : std::runtime_error(message), kind_(kind), witness_(witness) {}

namespace {

EtaComponent eta_into(std::shared_ptr<const henkin::TermModel> term, std::shared_ptr<const proof::Structure> target,
                      const proof::Structure& evaluator, const std::vector<Element>& domain,
                      const compactness::SkolemSubstructure* closure) {
  std::vector<std::pair<Element, Element>> assignment;
  std::map<Element, std::size_t> hits;
  for (auto e : term->elements(term->class_count())) {
    const auto& rep = term->representative(e);
    auto v = proof::evaluate(evaluator, rep);
    if (!v) throw EvaluationOutOfRange("eta: " + syntax::print(rep) + " has no value in the plugin model");
    if (closure && !closure->contains(*v))
      throw EvaluationOutOfRange("eta: " + syntax::print(rep) + " evaluates to " + evaluator.describe(*v) +
                                 ", outside the closure");
    assignment.emplace_back(e, *v);
    ++hits[*v];
  }
  EtaComponent out{ModelMap("eta", term, std::move(target), std::move(assignment)), {}, {}, domain.size()};
  for (auto d : domain)
    if (!hits.contains(d)) out.missed.push_back(d);
  for (const auto& [v, n] : hits)
    if (n > 1) out.doubly_hit.push_back(v);
  return out;
}

}  // namespace

EtaComponent eta_component(std::shared_ptr<const henkin::TermModel> term,
                           std::shared_ptr<const compactness::SkolemSubstructure> closure) {
  const auto& parent = closure->parent();
  auto members = closure->members();
  return eta_into(std::move(term), closure, parent, members, closure.get());
}

EtaComponent eta_against_parent(std::shared_ptr<const henkin::TermModel> term,
                                std::shared_ptr<const compactness::ComputableModel> parent, std::size_t eval_range) {
  auto domain = parent->elements(parent->finite_size() ? *parent->finite_size() : eval_range);
  const auto& evaluator = *parent;
  return eta_into(std::move(term), parent, evaluator, domain, nullptr);
}

ModelMap compose_maps(const ModelMap& g, const ModelMap& f) {
  std::vector<std::pair<Element, Element>> assignment;
  for (const auto& [a, b] : f.assignment())
    if (auto c = g(b)) assignment.emplace_back(a, *c);
  return ModelMap(g.provenance() + " o " + f.provenance(), f.source_ptr(), g.target_ptr(), std::move(assignment));
}

bool is_identity(const ModelMap& map, const std::vector<Element>& domain) {
  for (auto e : domain)
    if (map(e) != e) return false;
  return true;
}

ModelMap invert_component(const ModelMap& map, const std::vector<Element>& target_domain) {
  std::set<Element> domain(target_domain.begin(), target_domain.end());
  std::map<Element, Element> preimage;
  for (const auto& [s, t] : map.assignment()) {
    if (!domain.contains(t))
      throw NotBijective(NotBijective::Kind::Missed, t,
                         "image " + describe(map.target(), t) + " lies outside the compared domain");
    if (!preimage.emplace(t, s).second)
      throw NotBijective(NotBijective::Kind::DoublyHit, t,
                         describe(map.target(), t) + " is the image of " + describe(map.source(), preimage.at(t)) +
                             " and of " + describe(map.source(), s));
  }
  std::vector<std::pair<Element, Element>> assignment;
  for (auto t : target_domain) {
    auto it = preimage.find(t);
    if (it == preimage.end())
      throw NotBijective(NotBijective::Kind::Missed, t, describe(map.target(), t) + " is not in the image");
    assignment.emplace_back(t, it->second);
  }
  ModelMap inverse(map.provenance() + "^-1", map.target_ptr(), map.source_ptr(), std::move(assignment));
  std::vector<Element> source_domain;
  for (const auto& [s, _] : map.assignment()) source_domain.push_back(s);
  if (!is_identity(compose_maps(inverse, map), source_domain) || !is_identity(compose_maps(map, inverse), target_domain))
    throw std::logic_error("inverse composites are not identities");
  return inverse;
}

std::string resolve_plugin(const syntax::Theory& theory, const std::string& requested) {
  if (!requested.empty()) return requested;
  if (!theory.plugin.empty()) return theory.plugin;
  return "finite";
}

Bundle build_bundle(const syntax::Theory& theory, const BundleParams& params, const std::vector<Import>& imports) {
  auto plugin = resolve_plugin(theory, params.plugin);
  auto front =
      henkin::lindenbaum_extend(theory, params.horizon, params.budget, compactness::oracle_for(plugin), params.window);
  for (const auto& imp : imports) {
    auto text = syntax::canonical(imp.existential);
    if (front.polarity_of(text) == henkin::Polarity::Negated)
      throw TranslationUnsound("the target front refutes the translated existential " + text);
    front.import_constant(imp.existential, imp.index);
  }
  auto term = std::make_shared<const henkin::TermModel>(henkin::build_term_model(front, params.depth));
  auto parent = compactness::canonical_model(plugin, term->front());
  auto closure = std::make_shared<const compactness::SkolemSubstructure>(
      compactness::skolem_closure(parent, term->front(), params.closure_depth));
  auto eta = eta_component(term, closure);
  return Bundle{theory, params, plugin, term, parent, closure, std::move(eta)};
}

std::vector<Import> translated_imports(const Translation& f, const henkin::CompleteFront& source) {
  std::vector<Import> out;
  for (const auto& entry : source.ledger()) out.push_back({f.apply(entry.existential), entry.constant.index});
  return out;
}

Bundle build_target_bundle(const Translation& f, const Bundle& source, const syntax::Theory& target,
                           const BundleParams& params) {
  if (!(f.source() == source.theory.signature) || !(f.target() == target.signature))
    throw SignatureMismatch("translation " + f.name() + " does not go from " + source.theory.name + " to " +
                            target.name);
  return build_bundle(target, params, translated_imports(f, source.front()));
}

ModelMap F_on_morphism(const Translation& f, std::shared_ptr<const henkin::TermModel> source,
                       std::shared_ptr<const henkin::TermModel> target) {
  std::vector<std::pair<Element, Element>> assignment;
  const auto& partition = source->partition();
  for (auto e : source->elements(source->class_count())) {
    std::optional<Element> image;
    const Term* first = nullptr;
    for (auto idx : partition.members(static_cast<std::size_t>(e))) {
      const Term& s = partition.terms()[idx];
      auto fs = f.apply(s);
      auto c = target->class_of(fs);
      if (!c) throw TranslationUnsound("F(f): " + syntax::print(fs) + " is outside the target term model");
      if (image && *image != *c)
        throw TranslationUnsound("F(f): " + syntax::print(*first) + " = " + syntax::print(s) +
                                 " holds in the source but its translation fails in the target");
      image = c;
      first = &s;
    }
    assignment.emplace_back(e, *image);
  }
  return ModelMap("F(" + f.name() + ")", source, target, std::move(assignment));
}

ModelMap G_on_morphism(const Translation& f, std::shared_ptr<const compactness::SkolemSubstructure> source,
                       std::shared_ptr<const compactness::SkolemSubstructure> target) {
  std::vector<std::pair<Element, Element>> assignment;
  const auto& parent = target->parent();
  for (auto e : source->members()) {
    std::vector<Term> generating{source->provenance(e)};
    for (const auto& alt : source->alternatives(e)) generating.push_back(alt);
    std::optional<Element> image;
    for (const auto& s : generating) {
      auto fs = f.apply(s);
      auto v = proof::evaluate(parent, fs);
      if (!v || !target->contains(*v))
        throw EvaluationOutOfRange("G(f): " + syntax::print(fs) + " does not evaluate inside the target closure");
      if (image && *image != *v)
        throw TranslationUnsound("G(f): generating terms of " + source->describe(e) +
                                 " have different images in the target");
      image = v;
    }
    assignment.emplace_back(e, *image);
  }
  return ModelMap("G(" + f.name() + ")", source, target, std::move(assignment));
}

ModelMap swap_first_images(const ModelMap& map) {
  auto assignment = map.assignment();
  for (std::size_t i = 0; i < assignment.size(); ++i)
    for (std::size_t j = i + 1; j < assignment.size(); ++j)
      if (assignment[i].second != assignment[j].second) {
        std::swap(assignment[i].second, assignment[j].second);
        return ModelMap(map.provenance() + " (swapped)", map.source_ptr(), map.target_ptr(), std::move(assignment));
      }
  throw std::invalid_argument("no two elements with distinct images to swap");
}

}  // namespace canon::category
