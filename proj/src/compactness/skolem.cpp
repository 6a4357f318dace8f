#include "canon/compactness/skolem.hpp"

#include <algorithm>
#include <stdexcept>

namespace canon::compactness {

using syntax::Term;

SkolemSubstructure::SkolemSubstructure(std::shared_ptr<const ComputableModel> parent, std::vector<Generator> generators,
                                       std::size_t depth)
    : parent_(std::move(parent)), generators_(std::move(generators)), depth_(depth) {
  for (const auto& g : generators_) add(g.term, g.value, g.level);

  for (std::size_t level = 1; level <= depth_; ++level) {
    // Snapshot: tuples range over elements below `level` and use at least one
    // element of level - 1, so each tuple is visited once overall.
    std::vector<Element> pool;
    for (auto e : members_)
      if (info_.at(e).level < level) pool.push_back(e);
    for (const auto& f : signature().functions()) {
      std::vector<std::size_t> idx(f.arity, 0);
      if (pool.empty()) break;
      while (true) {
        std::vector<Element> args;
        bool fresh = false;
        for (auto i : idx) {
          args.push_back(pool[i]);
          if (info_.at(pool[i]).level == level - 1) fresh = true;
        }
        if (fresh) {
          if (auto v = parent_->apply(f.name, args)) {
            std::vector<Term> terms;
            for (auto a : args) terms.push_back(info_.at(a).term);
            add(Term::apply(f.name, std::move(terms)), *v, level);
          }
        }
        std::size_t k = f.arity;
        while (k > 0 && ++idx[k - 1] == pool.size()) idx[--k] = 0;
        if (k == 0) break;
      }
    }
  }
}

void SkolemSubstructure::add(const Term& term, Element value, std::size_t level) {
  auto it = info_.find(value);
  if (it == info_.end()) {
    info_.emplace(value, Info{term, level, {}});
    members_.push_back(value);
    return;
  }
  if (it->second.term == term) return;
  auto& alts = it->second.alternatives;
  if (std::find(alts.begin(), alts.end(), term) == alts.end()) alts.push_back(term);
}

bool SkolemSubstructure::is_frontier(Element e) const {
  return !signature().functions().empty() && info_.at(e).level >= depth_;
}

std::vector<Generator> SkolemSubstructure::as_generators() const {
  std::vector<Generator> out;
  for (auto e : members_) out.push_back({info_.at(e).term, e, info_.at(e).level});
  return out;
}

std::vector<Element> SkolemSubstructure::elements(std::size_t limit) const {
  return {members_.begin(), members_.begin() + static_cast<std::ptrdiff_t>(std::min(limit, members_.size()))};
}

std::optional<Element> SkolemSubstructure::constant(const std::string& name) const {
  auto v = parent_->constant(name);
  if (!v || !contains(*v)) return std::nullopt;
  return v;
}

std::optional<Element> SkolemSubstructure::apply(const std::string& function, std::span<const Element> args) const {
  for (auto a : args)
    if (!contains(a)) return std::nullopt;
  auto v = parent_->apply(function, args);
  if (!v || !contains(*v)) return std::nullopt;
  return v;
}

std::optional<bool> SkolemSubstructure::holds(const std::string& relation, std::span<const Element> args) const {
  for (auto a : args)
    if (!contains(a)) return std::nullopt;
  return parent_->holds(relation, args);
}

SkolemSubstructure skolem_closure(std::shared_ptr<const ComputableModel> model, const henkin::CompleteFront& front,
                                  std::size_t depth) {
  std::vector<Generator> gens;
  auto names = front.ledger_constants();
  for (const auto& c : front.base().signature.constants()) names.push_back(c);
  for (const auto& name : names) {
    auto v = model->constant(name);
    if (!v) throw std::invalid_argument("model does not interpret generator " + name);
    gens.push_back({Term::constant(name), *v, 0});
  }
  return SkolemSubstructure(std::move(model), std::move(gens), depth);
}

}  // namespace canon::compactness
