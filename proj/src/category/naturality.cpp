#include "canon/category/naturality.hpp"

#include <algorithm>

namespace canon::category {

std::vector<Element> NaturalityReport::mismatches() const {
  std::vector<Element> out;
  for (const auto& e : entries)
    if (!e.agree()) out.push_back(e.element);
  return out;
}

NaturalityReport check_naturality(const std::string& translation, const ModelMap& F, const ModelMap& G,
                                  const ModelMap& eta1, const ModelMap& eta2) {
  NaturalityReport report{translation, F, G, eta1, eta2, {}};
  for (const auto& [x, _] : eta1.assignment()) {
    SquareEntry entry{x, eta1.source().describe(x), std::nullopt, std::nullopt};
    if (auto fx = F(x)) entry.via_f = eta2(*fx);
    if (auto ex = eta1(x)) entry.via_g = G(*ex);
    report.entries.push_back(std::move(entry));
  }
  return report;
}

NaturalityReport check_naturality(const Translation& f, const Bundle& b1, const Bundle& b2) {
  return check_naturality(f.name(), F_on_morphism(f, b1.term, b2.term), G_on_morphism(f, b1.closure, b2.closure),
                          b1.eta.map, b2.eta.map);
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Defined on every element of its source domain.
bool total(const ModelMap& m, const std::vector<Element>& domain) {
  return std::all_of(domain.begin(), domain.end(), [&](Element e) { return m(e).has_value(); });
}

}  // namespace

std::string to_dot(const NaturalityReport& r) {
  std::vector<Element> classes, g_domain;
  for (const auto& [x, y] : r.eta1.assignment()) {
    classes.push_back(x);
    g_domain.push_back(y);
  }
  std::vector<Element> f_image;
  for (const auto& [x, y] : r.F.assignment()) f_image.push_back(y);
  auto bad = r.mismatches();
  auto edge = [&](const std::string& from, const std::string& to, const ModelMap& m, const std::vector<Element>& domain) {
    bool ok = total(m, domain) && bad.empty();
    return "  " + quote(from) + " -> " + quote(to) + " [label=" + quote(m.provenance() + (ok ? ": pass" : ": fail")) +
           ", color=" + (ok ? "darkgreen" : "red") + "];\n";
  };
  std::string label = "naturality of " + r.translation + ": " + (bad.empty() ? "pass" : "fail");
  if (!bad.empty()) {
    label += " at";
    for (auto x : bad) label += " " + r.eta1.source().describe(x);
  }
  std::string out = "digraph naturality {\n  label=" + quote(label) + ";\n  rankdir=LR;\n";
  out += edge("F(t1)", "F(t2)", r.F, classes);
  out += edge("F(t1)", "G(t1)", r.eta1, classes);
  out += edge("F(t2)", "G(t2)", r.eta2, f_image);
  out += edge("G(t1)", "G(t2)", r.G, g_domain);
  return out + "}\n";
}

bool FunctorLawReport::pass() const {
  return std::all_of(records.begin(), records.end(), [](const LawRecord& r) { return r.pass(); });
}

namespace {

template <typename Check>
LawRecord run_law(const std::string& law, Check&& check) {
  LawRecord rec;
  rec.law = law;
  try {
    check(rec);
  } catch (const std::exception& e) {
    rec.failures.push_back(e.what());
  }
  return rec;
}

void compare_maps(LawRecord& rec, const ModelMap& expected, const ModelMap& actual, const std::vector<Element>& domain) {
  for (auto e : domain) {
    ++rec.checked;
    if (expected(e) != actual(e) || !expected(e))
      rec.failures.push_back(expected.source().describe(e) + ": " + expected.provenance() + " and " +
                             actual.provenance() + " differ");
  }
}

std::vector<Element> classes_of(const Bundle& b) { return b.term->elements(b.term->class_count()); }

}  // namespace

FunctorLawReport check_functor_laws(const std::vector<Bundle>& chain, const std::vector<Translation>& steps) {
  if (steps.size() + 1 != chain.size()) throw std::invalid_argument("a chain of n bundles needs n - 1 translations");
  FunctorLawReport report;
  for (const auto& b : chain) {
    auto id = identity(b.theory.signature, "id_" + b.theory.name);
    report.records.push_back(run_law("F(" + id.name() + ") = id", [&](LawRecord& rec) {
      auto m = F_on_morphism(id, b.term, b.term);
      for (auto e : classes_of(b)) {
        ++rec.checked;
        if (m(e) != e) rec.failures.push_back(b.term->describe(e) + " is not fixed");
      }
    }));
    report.records.push_back(run_law("G(" + id.name() + ") = id", [&](LawRecord& rec) {
      auto m = G_on_morphism(id, b.closure, b.closure);
      for (auto e : b.closure->members()) {
        ++rec.checked;
        if (m(e) != e) rec.failures.push_back(b.closure->describe(e) + " is not fixed");
      }
    }));
  }
  for (std::size_t i = 0; i + 2 < chain.size(); ++i) {
    const auto& f = steps[i];
    const auto& g = steps[i + 1];
    const auto& b1 = chain[i];
    const auto& b2 = chain[i + 1];
    const auto& b3 = chain[i + 2];
    auto gf = compose(g, f);
    report.records.push_back(run_law("F(" + gf.name() + ") = F(" + g.name() + ") o F(" + f.name() + ")",
                                     [&](LawRecord& rec) {
                                       auto direct = F_on_morphism(gf, b1.term, b3.term);
                                       auto stepwise = compose_maps(F_on_morphism(g, b2.term, b3.term),
                                                                    F_on_morphism(f, b1.term, b2.term));
                                       compare_maps(rec, direct, stepwise, classes_of(b1));
                                     }));
    report.records.push_back(run_law("G(" + gf.name() + ") = G(" + g.name() + ") o G(" + f.name() + ")",
                                     [&](LawRecord& rec) {
                                       auto direct = G_on_morphism(gf, b1.closure, b3.closure);
                                       auto stepwise = compose_maps(G_on_morphism(g, b2.closure, b3.closure),
                                                                    G_on_morphism(f, b1.closure, b2.closure));
                                       compare_maps(rec, direct, stepwise, b1.closure->members());
                                     }));
  }
  return report;
}

}  // namespace canon::category
