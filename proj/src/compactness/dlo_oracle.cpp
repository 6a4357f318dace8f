#include "canon/compactness/dlo_oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "canon/compactness/model.hpp"

namespace canon::compactness {

using proof::Consistency;
using syntax::Formula;

namespace {

bool dlo_signature(const syntax::Signature& sig) {
  if (!sig.functions().empty()) return false;
  for (const auto& r : sig.relations())
    if (r.name != "lt" || r.arity != 2) return false;
  return true;
}

// Constants interpreted in (Q, <) by a partial table.
class Valuation : public proof::Structure {
 public:
  explicit Valuation(const syntax::Signature& sig) : sig_(sig) {}
  const syntax::Signature& signature() const override { return sig_; }
  std::optional<std::size_t> finite_size() const override { return std::nullopt; }
  std::vector<Element> elements(std::size_t limit) const override {
    std::vector<Element> out(limit);
    std::iota(out.begin(), out.end(), Element{0});
    return out;
  }
  std::optional<Element> constant(const std::string& name) const override {
    auto it = values_.find(name);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<Element> apply(const std::string&, std::span<const Element>) const override { return std::nullopt; }
  std::optional<bool> holds(const std::string& relation, std::span<const Element> args) const override {
    if (relation != "lt" || args.size() != 2) return std::nullopt;
    return decode(args[0]) < decode(args[1]);
  }
  std::vector<Element> quantifier_range(std::span<const Element> params, std::size_t) const override {
    return dlo_test_points(params);
  }

  std::map<std::string, Element> values_;

 private:
  const syntax::Signature& sig_;
};

struct Component {
  std::vector<std::string> constants;  // search order
  std::vector<const Formula*> sentences;
};

class Search {
 public:
  Search(const Component& comp, const syntax::Signature& sig, std::size_t& steps, std::size_t max_steps)
      : comp_(comp), val_(sig), steps_(steps), max_steps_(max_steps) {}

  // true: satisfiable, false: exhausted; throws Spent when over budget.
  struct Spent {};
  bool run() { return extend(0); }

 private:
  void refresh() {
    val_.values_.clear();
    for (std::size_t b = 0; b < blocks_.size(); ++b)
      for (const auto& c : blocks_[b]) val_.values_[c] = encode(Dyadic(static_cast<std::int64_t>(b)));
  }

  bool viable(bool complete) {
    if (++steps_ > max_steps_) throw Spent{};
    refresh();
    for (const auto* s : comp_.sentences) {
      auto v = proof::evaluate(val_, *s);
      if (v == false) return false;
      if (!v && complete) return false;
    }
    return true;
  }

  bool extend(std::size_t i) {
    if (i == comp_.constants.size()) return viable(true);
    const auto& c = comp_.constants[i];
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      blocks_[b].push_back(c);
      if (viable(false) && extend(i + 1)) return true;
      blocks_[b].pop_back();
    }
    for (std::size_t g = 0; g <= blocks_.size(); ++g) {
      blocks_.insert(blocks_.begin() + static_cast<std::ptrdiff_t>(g), std::vector<std::string>{c});
      if (viable(false) && extend(i + 1)) return true;
      blocks_.erase(blocks_.begin() + static_cast<std::ptrdiff_t>(g));
    }
    return false;
  }

  const Component& comp_;
  Valuation val_;
  std::vector<std::vector<std::string>> blocks_;
  std::size_t& steps_;
  std::size_t max_steps_;
};

// Groups constants that share a sentence. The component of the last sentence
// comes first and its constants are ordered breadth-first from that sentence,
// so a conflict introduced by the newest sentence is met early.
std::vector<Component> components(const std::vector<Formula>& sentences) {
  std::vector<std::set<std::string>> consts;
  consts.reserve(sentences.size());
  for (const auto& s : sentences) consts.push_back(s.constants());

  std::map<std::string, std::string> parent;
  std::function<std::string(const std::string&)> find = [&](const std::string& c) {
    auto& p = parent.at(c);
    if (p != c) p = find(p);
    return p;
  };
  for (const auto& cs : consts)
    for (const auto& c : cs) parent.emplace(c, c);
  for (const auto& cs : consts)
    for (auto it = cs.begin(); it != cs.end() && std::next(it) != cs.end(); ++it) {
      auto a = find(*it), b = find(*std::next(it));
      if (a != b) parent[a] = b;
    }

  std::vector<std::size_t> order(sentences.size());
  std::iota(order.begin(), order.end(), 0);
  std::reverse(order.begin(), order.end());

  std::vector<Component> out;
  std::map<std::string, std::size_t> comp_of_root;
  for (auto i : order) {
    if (consts[i].empty()) continue;
    auto root = find(*consts[i].begin());
    if (!comp_of_root.count(root)) {
      comp_of_root[root] = out.size();
      out.emplace_back();
    }
  }
  for (std::size_t i = 0; i < sentences.size(); ++i)
    if (!consts[i].empty()) out[comp_of_root.at(find(*consts[i].begin()))].sentences.push_back(&sentences[i]);

  // Breadth-first constant order, seeded by the latest sentence of each component.
  for (auto& comp : out) {
    std::set<std::string> seen;
    for (auto it = comp.sentences.rbegin(); it != comp.sentences.rend(); ++it)
      for (const auto& c : (*it)->constants())
        if (seen.insert(c).second) comp.constants.push_back(c);
  }
  return out;
}

}  // namespace

Consistency DloOracle::check(const syntax::Signature& signature, const std::vector<Formula>& sentences,
                             const proof::Budget& budget) const {
  auto sig = proof::signature_of(sentences, signature);
  if (!dlo_signature(sig)) return proof::GenericOracle{}.check(signature, sentences, budget);

  Consistency result;
  result.evidence = "dlo-decision";
  Valuation empty(sig);
  for (const auto& s : sentences) {
    if (!s.constants().empty()) continue;
    ++result.steps;
    if (proof::evaluate(empty, s) != true) {
      result.status = Consistency::Status::Inconsistent;
      return result;
    }
  }
  std::size_t steps = result.steps;
  try {
    for (const auto& comp : components(sentences)) {
      Search search(comp, sig, steps, budget.max_steps);
      if (!search.run()) {
        result.status = Consistency::Status::Inconsistent;
        result.steps = steps;
        return result;
      }
    }
  } catch (const Search::Spent&) {
    result.status = Consistency::Status::Unknown;
    result.steps = steps;
    return result;
  }
  result.status = Consistency::Status::Consistent;
  result.steps = steps;
  return result;
}

}  // namespace canon::compactness
