#include "canon/backforth/model_map.hpp"

#include <set>
#include <stdexcept>

namespace canon::backforth {

ModelMap::ModelMap(std::string provenance, std::shared_ptr<const Structure> source,
                   std::shared_ptr<const Structure> target, std::vector<std::pair<Element, Element>> assignment)
    : provenance_(std::move(provenance)),
      source_(std::move(source)),
      target_(std::move(target)),
      assignment_(std::move(assignment)) {
  for (const auto& [s, t] : assignment_)
    if (!index_.emplace(s, t).second) throw std::invalid_argument("model map assigns an element twice");
}

std::optional<Element> ModelMap::operator()(Element e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool ModelMap::injective() const {
  std::set<Element> seen;
  for (const auto& [_, t] : assignment_)
    if (!seen.insert(t).second) return false;
  return true;
}

std::vector<Element> ModelMap::missed(const std::vector<Element>& elements) const {
  std::set<Element> image;
  for (const auto& [_, t] : assignment_) image.insert(t);
  std::vector<Element> out;
  for (auto e : elements)
    if (!image.contains(e)) out.push_back(e);
  return out;
}

std::vector<std::string> ModelMap::function_violations() const {
  std::vector<std::string> out;
  std::vector<Element> dom;
  for (const auto& [s, _] : assignment_) dom.push_back(s);
  for (const auto& f : source_->signature().functions()) {
    if (dom.empty()) break;
    std::vector<std::size_t> idx(f.arity, 0);
    while (true) {
      std::vector<Element> args, images;
      for (auto i : idx) {
        args.push_back(dom[i]);
        images.push_back(*(*this)(dom[i]));
      }
      auto v = source_->apply(f.name, args);
      auto w = target_->apply(f.name, images);
      if (v && w) {
        auto hv = (*this)(*v);
        if (hv && *hv != *w) {
          std::string text = f.name + "(";
          for (std::size_t i = 0; i < args.size(); ++i) text += (i ? ", " : "") + source_->describe(args[i]);
          out.push_back(text + ")");
        }
      }
      std::size_t k = f.arity;
      while (k > 0 && ++idx[k - 1] == dom.size()) idx[--k] = 0;
      if (k == 0) break;
    }
  }
  return out;
}

}  // namespace canon::backforth
