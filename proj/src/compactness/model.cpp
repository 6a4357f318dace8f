#include "canon/compactness/model.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "canon/compactness/dlo_oracle.hpp"
#include "canon/proof/model_finder.hpp"
#include "canon/syntax/print.hpp"

namespace canon::compactness {

using henkin::CompleteFront;
using syntax::Formula;
using syntax::Term;

ComputableModel::ComputableModel(std::string plugin, syntax::Signature signature)
    : plugin_(std::move(plugin)), sig_(std::move(signature)) {}

std::optional<Element> ComputableModel::constant(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return table_[it->second].second;
}

void ComputableModel::assign(const std::string& name, Element value) {
  if (auto it = index_.find(name); it != index_.end()) {
    table_[it->second].second = value;
    return;
  }
  index_[name] = table_.size();
  table_.emplace_back(name, value);
}

DloModel::DloModel(syntax::Signature signature) : ComputableModel("dlo", std::move(signature)) {}

std::vector<Element> DloModel::elements(std::size_t limit) const {
  std::vector<Element> out(limit);
  std::iota(out.begin(), out.end(), Element{0});
  return out;
}

std::optional<bool> DloModel::holds(const std::string& relation, std::span<const Element> args) const {
  if (relation != "lt" || args.size() != 2) return std::nullopt;
  return decode(args[0]) < decode(args[1]);
}

std::vector<Element> DloModel::quantifier_range(std::span<const Element> params, std::size_t eval_range) const {
  auto out = elements(eval_range);
  for (auto p : dlo_test_points(params))
    if (p >= eval_range) out.push_back(p);
  std::sort(out.begin() + static_cast<std::ptrdiff_t>(eval_range), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Element> dlo_test_points(std::span<const Element> params) {
  if (params.empty()) return {0};
  std::vector<Dyadic> vals;
  for (auto p : params) vals.push_back(decode(p));
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<Element> out;
  out.push_back(encode(vals.front().minus_one()));
  for (std::size_t i = 0; i < vals.size(); ++i) {
    out.push_back(encode(vals[i]));
    if (i + 1 < vals.size()) out.push_back(encode(Dyadic::midpoint(vals[i], vals[i + 1])));
  }
  out.push_back(encode(vals.back().plus_one()));
  return out;
}

NaturalsModel::NaturalsModel(std::string plugin, syntax::Signature signature, std::optional<std::string> successor,
                             std::map<std::string, bool> propositions)
    : ComputableModel(std::move(plugin), std::move(signature)),
      successor_(std::move(successor)),
      propositions_(std::move(propositions)) {}

std::vector<Element> NaturalsModel::elements(std::size_t limit) const {
  std::vector<Element> out(limit);
  std::iota(out.begin(), out.end(), Element{0});
  return out;
}

std::optional<Element> NaturalsModel::apply(const std::string& function, std::span<const Element> args) const {
  if (!successor_ || function != *successor_ || args.size() != 1) return std::nullopt;
  return args[0] + 1;
}

std::optional<bool> NaturalsModel::holds(const std::string& relation, std::span<const Element> args) const {
  auto it = propositions_.find(relation);
  if (it == propositions_.end() || !args.empty()) return std::nullopt;
  return it->second;
}

FiniteModel::FiniteModel(proof::FiniteStructure structure)
    : ComputableModel("finite", structure.signature()), structure_(std::move(structure)) {
  for (const auto& c : structure_.signature().constants())
    if (auto v = structure_.constant(c)) assign(c, *v);
}

std::optional<Element> FiniteModel::apply(const std::string& function, std::span<const Element> args) const {
  return structure_.apply(function, args);
}

std::optional<bool> FiniteModel::holds(const std::string& relation, std::span<const Element> args) const {
  return structure_.holds(relation, args);
}

const std::vector<std::string>& plugin_ids() {
  static const std::vector<std::string> ids{"dlo", "equality", "successor", "finite"};
  return ids;
}

std::shared_ptr<const proof::ConsistencyOracle> oracle_for(const std::string& plugin) {
  if (plugin == "dlo") return std::make_shared<DloOracle>();
  if (plugin == "equality") return std::make_shared<proof::EqualityOracle>();
  return std::make_shared<proof::GenericOracle>();
}

ModelCheckReport check_sentences(const proof::Structure& model, const std::vector<Formula>& sentences,
                                 std::size_t eval_range) {
  ModelCheckReport r;
  r.eval_range = eval_range;
  for (const auto& s : sentences) {
    ++r.checked;
    auto v = proof::evaluate(model, s, {}, eval_range);
    if (!v) r.unknown.push_back(syntax::print(s));
    else if (!*v) r.failures.push_back(syntax::print(s));
  }
  return r;
}

namespace {

bool propositions_only(const syntax::Signature& sig) {
  return std::all_of(sig.relations().begin(), sig.relations().end(), [](const auto& r) { return r.arity == 0; });
}

void check_supported(const std::string& plugin, const CompleteFront& front, const syntax::Signature& sig) {
  const auto& declared = front.base().plugin;
  if (!declared.empty() && declared != plugin)
    throw UnsupportedTheory("theory '" + front.base().name + "' declares plugin '" + declared + "', not '" + plugin + "'");
  bool ok = false;
  if (plugin == "dlo") {
    ok = sig.functions().empty() && std::all_of(sig.relations().begin(), sig.relations().end(), [](const auto& r) {
           return r.name == "lt" && r.arity == 2;
         });
  } else if (plugin == "equality") {
    ok = sig.functions().empty() && propositions_only(sig);
  } else if (plugin == "successor") {
    ok = sig.functions().size() == 1 && sig.functions()[0].arity == 1 && propositions_only(sig);
  } else if (plugin == "finite") {
    ok = true;
  } else {
    throw UnsupportedTheory("unknown plugin '" + plugin + "'");
  }
  if (!ok) throw UnsupportedTheory("plugin '" + plugin + "' does not cover the signature of '" + front.base().name + "'");
}

// Generators in processing order: ledger constants, then L constants.
std::vector<std::string> generator_order(const CompleteFront& front) {
  auto out = front.ledger_constants();
  for (const auto& c : front.base().signature.constants()) out.push_back(c);
  return out;
}

const Formula& strip_negation(const Formula& f, bool& positive) {
  positive = true;
  const Formula* g = &f;
  while (g->kind() == Formula::Kind::Not) {
    positive = !positive;
    g = &g->left();
  }
  return *g;
}

// Ground literals over constants recorded in the front.
struct Facts {
  std::map<std::string, std::string> parent;  // equality classes
  std::set<std::pair<std::string, std::string>> distinct;
  std::set<std::pair<std::string, std::string>> less, not_less;

  std::string find(const std::string& c) {
    auto it = parent.find(c);
    if (it == parent.end()) return c;
    if (it->second == c) return c;
    auto r = find(it->second);
    parent[c] = r;
    return r;
  }
};

Facts collect_facts(const CompleteFront& front, const std::vector<std::string>& generators) {
  Facts facts;
  for (const auto& g : generators) facts.parent[g] = g;
  std::vector<std::pair<std::string, std::string>> equal;
  for (const auto& fs : front.sentences()) {
    bool positive;
    const auto& lit = strip_negation(fs.sentence, positive);
    if (!lit.is_atomic() || lit.terms().size() != 2) continue;
    const auto& a = lit.terms()[0];
    const auto& b = lit.terms()[1];
    if (!a.is_constant() || !b.is_constant()) continue;
    if (lit.kind() == Formula::Kind::Equal) {
      if (positive) equal.emplace_back(a.name(), b.name());
      else facts.distinct.emplace(a.name(), b.name());
    } else if (lit.symbol() == "lt") {
      (positive ? facts.less : facts.not_less).emplace(a.name(), b.name());
    }
  }
  // Union towards the earlier generator so classes are named by their first member.
  std::map<std::string, std::size_t> rank;
  for (std::size_t i = 0; i < generators.size(); ++i) rank[generators[i]] = i;
  for (const auto& [a, b] : equal) {
    if (!rank.count(a) || !rank.count(b)) continue;
    auto ra = facts.find(a), rb = facts.find(b);
    if (ra == rb) continue;
    if (rank[ra] < rank[rb]) facts.parent[rb] = ra;
    else facts.parent[ra] = rb;
  }
  return facts;
}

// Relative position of class x with respect to class y: -1 below, +1 above,
// 0 unknown, from the order facts lifted to classes.
int relative(Facts& facts, const std::string& x, const std::string& y) {
  auto cls = [&](const std::string& c) { return facts.find(c); };
  bool known_distinct = false;
  for (const auto& [a, b] : facts.distinct)
    if ((cls(a) == x && cls(b) == y) || (cls(a) == y && cls(b) == x)) known_distinct = true;
  for (const auto& [a, b] : facts.less) {
    if (cls(a) == x && cls(b) == y) return -1;
    if (cls(a) == y && cls(b) == x) return 1;
  }
  for (const auto& [a, b] : facts.not_less) {
    // not x < y with x != y gives y < x
    if (cls(a) == x && cls(b) == y && known_distinct) return 1;
    if (cls(a) == y && cls(b) == x && known_distinct) return -1;
  }
  return 0;
}

void assign_dlo(ComputableModel& model, const CompleteFront& front, const std::vector<std::string>& generators) {
  auto facts = collect_facts(front, generators);
  std::map<std::string, Dyadic> class_value;
  std::vector<std::string> classes;
  for (const auto& g : generators) {
    auto c = facts.find(g);
    if (!class_value.count(c)) {
      std::optional<Dyadic> lo, hi;
      for (const auto& d : classes) {
        int pos = relative(facts, c, d);
        const auto& v = class_value.at(d);
        if (pos > 0 && (!lo || *lo < v)) lo = v;
        if (pos < 0 && (!hi || v < *hi)) hi = v;
      }
      Dyadic value;
      if (lo && hi) {
        if (!(*lo < *hi))
          throw WitnessUnassignable("no room for " + g + " between " + lo->to_string() + " and " + hi->to_string());
        value = Dyadic::midpoint(*lo, *hi);
      } else if (lo) {
        value = lo->plus_one();
      } else if (hi) {
        value = hi->minus_one();
      } else if (!classes.empty()) {
        // Unconstrained: above everything assigned so far.
        value = std::max_element(class_value.begin(), class_value.end(), [](const auto& a, const auto& b) {
                  return a.second < b.second;
                })->second.plus_one();
      }
      class_value[c] = value;
      classes.push_back(c);
    }
    model.assign(g, encode(class_value.at(c)));
  }
}

void assign_equality(ComputableModel& model, const CompleteFront& front, const std::vector<std::string>& generators) {
  auto facts = collect_facts(front, generators);
  std::map<std::string, Element> class_value;
  for (const auto& g : generators) {
    auto c = facts.find(g);
    auto [it, fresh] = class_value.emplace(c, class_value.size());
    model.assign(g, it->second);
  }
}

// Ground sentences of the front whose constants are all in `known`.
std::vector<const Formula*> ground_sentences(const CompleteFront& front) {
  std::vector<const Formula*> out;
  for (const auto& fs : front.sentences())
    if (fs.sentence.is_quantifier_free()) out.push_back(&fs.sentence);
  return out;
}

void assign_successor(ComputableModel& model, const CompleteFront& front, const std::vector<std::string>& generators) {
  constexpr Element search_limit = 4096;
  auto ground = ground_sentences(front);
  for (const auto& g : generators) {
    bool placed = false;
    for (Element n = 0; n < search_limit && !placed; ++n) {
      model.assign(g, n);
      placed = std::none_of(ground.begin(), ground.end(), [&](const Formula* s) {
        return proof::evaluate(model, *s) == false;
      });
    }
    if (!placed) throw WitnessUnassignable("no natural below " + std::to_string(search_limit) + " fits " + g);
  }
}

std::map<std::string, bool> proposition_table(const CompleteFront& front, const syntax::Signature& sig) {
  std::map<std::string, bool> out;
  for (const auto& r : sig.relations())
    out[r.name] = front.polarity_of(syntax::canonical(Formula::atom(r.name))) == henkin::Polarity::Asserted;
  return out;
}

void verify(const ComputableModel& model, const CompleteFront& front) {
  for (const auto& fs : front.sentences()) {
    bool ground = fs.sentence.is_quantifier_free();
    bool witness = fs.provenance.rfind("witness", 0) == 0 || fs.provenance.rfind("import", 0) == 0;
    if (!ground && !witness) continue;
    if (proof::evaluate(model, fs.sentence) == false)
      throw WitnessUnassignable("plugin '" + model.plugin() + "' falsifies " + syntax::print(fs.sentence) + " (" +
                                fs.provenance + ")");
  }
}

}  // namespace

std::shared_ptr<const ComputableModel> canonical_model(const std::string& plugin, const CompleteFront& front) {
  auto sig = front.language();
  check_supported(plugin, front, sig);
  auto generators = generator_order(front);
  std::shared_ptr<ComputableModel> model;
  if (plugin == "dlo") {
    model = std::make_shared<DloModel>(sig);
    assign_dlo(*model, front, generators);
  } else if (plugin == "equality") {
    model = std::make_shared<NaturalsModel>(plugin, sig, std::nullopt, proposition_table(front, sig));
    assign_equality(*model, front, generators);
  } else if (plugin == "successor") {
    model = std::make_shared<NaturalsModel>(plugin, sig, sig.functions()[0].name, proposition_table(front, sig));
    assign_successor(*model, front, generators);
  } else {
    const auto& budget = front.budget();
    auto search = proof::find_model(sig, front.accumulated(), 1, budget.max_model_size, budget.max_steps);
    if (search.status != proof::ModelSearch::Status::Found)
      throw WitnessUnassignable("no finite model of the front up to size " + std::to_string(budget.max_model_size));
    search.model->complete_defaults();
    model = std::make_shared<FiniteModel>(std::move(*search.model));
  }
  verify(*model, front);
  return model;
}

}  // namespace canon::compactness
