#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "canon/category/functors.hpp"

namespace canon::category {

/// One source class x: eta_t2(F(f)(x)) against G(f)(eta_t1(x)).
struct SquareEntry {
  Element element;
  std::string term;
  std::optional<Element> via_f;  // eta_t2 . F(f)
  std::optional<Element> via_g;  // G(f) . eta_t1
  bool agree() const { return via_f.has_value() && via_f == via_g; }
};

struct NaturalityReport {
  std::string translation;
  ModelMap F, G, eta1, eta2;
  std::vector<SquareEntry> entries;

  std::vector<Element> mismatches() const;
  bool pass() const { return mismatches().empty(); }
};

/// Compares the two paths around the square on every class of F(t1).
NaturalityReport check_naturality(const std::string& translation, const ModelMap& F, const ModelMap& G,
                                  const ModelMap& eta1, const ModelMap& eta2);
NaturalityReport check_naturality(const Translation& f, const Bundle& b1, const Bundle& b2);

/// Graphviz rendering of the square, each edge annotated with its status.
std::string to_dot(const NaturalityReport& report);

struct LawRecord {
  std::string law;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

struct FunctorLawReport {
  std::vector<LawRecord> records;
  bool pass() const;
};

/// Identity laws on every bundle and composition laws on every consecutive
/// pair of steps. `steps[i]` goes from `chain[i]` to `chain[i + 1]`, and each
/// bundle must already contain the imports of its predecessor.
FunctorLawReport check_functor_laws(const std::vector<Bundle>& chain, const std::vector<Translation>& steps);

}  // namespace canon::category
