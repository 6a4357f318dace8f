#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canon/proof/structure.hpp"

namespace canon::backforth {

using proof::Element;
using proof::Structure;

/// A map between the elements of two structures, listed in source order.
class ModelMap {
 public:
  ModelMap(std::string provenance, std::shared_ptr<const Structure> source, std::shared_ptr<const Structure> target,
           std::vector<std::pair<Element, Element>> assignment);

  /// Which construction produced the map: "eta", "F(f)", "G(f)", ...
  const std::string& provenance() const noexcept { return provenance_; }
  const Structure& source() const noexcept { return *source_; }
  const Structure& target() const noexcept { return *target_; }
  std::shared_ptr<const Structure> source_ptr() const noexcept { return source_; }
  std::shared_ptr<const Structure> target_ptr() const noexcept { return target_; }
  const std::vector<std::pair<Element, Element>>& assignment() const noexcept { return assignment_; }

  std::optional<Element> operator()(Element e) const;
  bool injective() const;
  /// Target elements among `elements` that no source element reaches.
  std::vector<Element> missed(const std::vector<Element>& elements) const;

  /// Function applications on source elements whose image disagrees with the
  /// application on the images (only where both sides are defined).
  std::vector<std::string> function_violations() const;

 private:
  std::string provenance_;
  std::shared_ptr<const Structure> source_;
  std::shared_ptr<const Structure> target_;
  std::vector<std::pair<Element, Element>> assignment_;
  std::map<Element, Element> index_;
};

}  // namespace canon::backforth
