#include "canon/proof/partition.hpp"

#include <algorithm>
#include <numeric>

#include "canon/syntax/print.hpp"

namespace canon::proof {

bool term_enumeration_less(const Term& a, const Term& b) {
  return syntax::enumeration_less(syntax::print(a), syntax::print(b));
}

std::size_t CongruenceClosure::add(const Term& term) {
  auto key = syntax::print(term);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  std::vector<std::size_t> arg_ids;
  for (const auto& a : term.args()) arg_ids.push_back(add(a));
  std::size_t id = terms_.size();
  terms_.push_back(term);
  index_.emplace(std::move(key), id);
  parent_.push_back(id);
  if (!arg_ids.empty()) {
    applications_.push_back(id);
    dirty_ = true;
  }
  args_.push_back(std::move(arg_ids));
  return id;
}

std::optional<std::size_t> CongruenceClosure::id(const Term& term) const {
  auto it = index_.find(syntax::print(term));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t CongruenceClosure::find(std::size_t id) {
  while (parent_[id] != id) {
    parent_[id] = parent_[parent_[id]];
    id = parent_[id];
  }
  return id;
}

void CongruenceClosure::merge_ids(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  // The smaller id becomes the root, which keeps results order-independent.
  if (b < a) std::swap(a, b);
  parent_[b] = a;
  dirty_ = true;
}

void CongruenceClosure::merge(const Term& a, const Term& b) {
  merge_ids(add(a), add(b));
  propagate();
}

bool CongruenceClosure::equal(const Term& a, const Term& b) {
  auto x = add(a);
  auto y = add(b);
  propagate();
  return find(x) == find(y);
}

void CongruenceClosure::propagate() {
  while (dirty_) {
    dirty_ = false;
    std::map<std::pair<std::string, std::vector<std::size_t>>, std::size_t> signatures;
    for (auto app : applications_) {
      std::vector<std::size_t> key;
      key.reserve(args_[app].size());
      for (auto a : args_[app]) key.push_back(find(a));
      auto [it, inserted] = signatures.emplace(std::make_pair(terms_[app].name(), std::move(key)), app);
      if (!inserted) merge_ids(it->second, app);
    }
  }
}

Partition::Partition(std::vector<Term> terms, std::vector<std::size_t> class_of) : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) index_.emplace(syntax::print(terms_[i]), i);
  // Renumber classes by the enumeration order of their least member.
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < terms_.size(); ++i) groups[class_of[i]].push_back(i);
  std::vector<std::string> printed(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) printed[i] = syntax::print(terms_[i]);
  auto less = [&](std::size_t a, std::size_t b) { return syntax::enumeration_less(printed[a], printed[b]); };
  for (auto& [_, members] : groups) {
    std::sort(members.begin(), members.end(), less);
    members_.push_back(std::move(members));
  }
  std::sort(members_.begin(), members_.end(), [&](const auto& a, const auto& b) { return less(a.front(), b.front()); });
  class_of_.assign(terms_.size(), 0);
  for (std::size_t c = 0; c < members_.size(); ++c)
    for (auto m : members_[c]) class_of_[m] = c;
}

std::optional<std::size_t> Partition::class_of(const Term& term) const {
  auto it = index_.find(syntax::print(term));
  if (it == index_.end()) return std::nullopt;
  return class_of_[it->second];
}

bool Partition::same(const Term& a, const Term& b) const {
  auto x = class_of(a);
  auto y = class_of(b);
  return x && y && *x == *y;
}

Partition congruence_close(const std::vector<std::pair<Term, Term>>& equations, const std::vector<Term>& universe) {
  // Working set: the universe plus equation sides. Subterms are not added, so
  // congruence only fires between applications whose arguments are members.
  std::vector<Term> work;
  std::map<std::string, std::size_t> index;
  auto intern = [&](const Term& t) {
    auto [it, inserted] = index.emplace(syntax::print(t), work.size());
    if (inserted) work.push_back(t);
    return it->second;
  };
  for (const auto& t : universe) intern(t);
  std::size_t reported = work.size();
  std::vector<std::pair<std::size_t, std::size_t>> eq_ids;
  for (const auto& [a, b] : equations) eq_ids.emplace_back(intern(a), intern(b));

  std::vector<std::size_t> parent(work.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  };
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> apps;
  for (std::size_t i = 0; i < work.size(); ++i) {
    const Term& t = work[i];
    if (t.args().empty()) continue;
    std::vector<std::size_t> args;
    for (const auto& a : t.args()) {
      auto it = index.find(syntax::print(a));
      if (it == index.end()) break;
      args.push_back(it->second);
    }
    if (args.size() == t.args().size()) apps.emplace_back(i, std::move(args));
  }
  for (const auto& [a, b] : eq_ids) unite(a, b);
  for (bool changed = true; changed;) {
    changed = false;
    std::map<std::pair<std::string, std::vector<std::size_t>>, std::size_t> signatures;
    for (const auto& [app, args] : apps) {
      std::vector<std::size_t> key;
      for (auto a : args) key.push_back(find(a));
      auto [it, inserted] = signatures.emplace(std::make_pair(work[app].name(), std::move(key)), app);
      if (!inserted && unite(it->second, app)) changed = true;
    }
  }
  work.erase(work.begin() + static_cast<std::ptrdiff_t>(reported), work.end());
  std::vector<std::size_t> cls;
  for (std::size_t i = 0; i < reported; ++i) cls.push_back(find(i));
  return Partition(std::move(work), std::move(cls));
}

}  // namespace canon::proof
