// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "canon/backforth/backforth.hpp"
#include "canon/category/naturality.hpp"
#include "canon/compactness/dyadic.hpp"
#include "canon/henkin/term_model.hpp"
#include "canon/proof/partition.hpp"
#include "canon/syntax/enumerate.hpp"
#include "canon/syntax/print.hpp"
#include "oracles.hpp"

using namespace canon;
using syntax::Formula;
using syntax::Signature;
using syntax::Term;

namespace {

const std::string kTheories = CANON_THEORY_DIR;

syntax::Theory shipped(const std::string& file) { return syntax::load_theory(kTheories + "/" + file); }

// Collects failed checks for one criterion.
struct Outcome {
  std::vector<std::string> failures;
  std::string summary;
  void require(bool ok, const std::string& what) {
    if (!ok && failures.size() < 10) failures.push_back(what);
    if (!ok && failures.size() == 10) failures.push_back("...");
  }
};

bool run(int id, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.failures.push_back(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds)
    out.failures.push_back("runtime " + std::to_string(secs) + " s exceeds " + std::to_string(limit_seconds) + " s");
  bool pass = out.failures.empty();
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << "CRITERION " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << title << "  [" << out.summary << "; "
       << secs << " s]";
  std::cout << line.str() << std::endl;
  for (const auto& f : out.failures) std::cout << "    " << f << "\n";
  return pass;
}

// 1. Congruence closure against the naive fixpoint.
void equivalence_suite(Outcome& out) {
  Signature s;
  for (auto c : {"a", "b", "c"}) s.add_constant(c);
  s.add_function("f", 1);
  s.add_function("g", 2);
  std::mt19937 rng(2024);
  const int instances = 1000;
  for (int round = 0; round < instances; ++round) {
    std::size_t size = 5 + rng() % 26;
    std::vector<Term> universe;
    std::set<std::string> seen;
    for (int tries = 0; universe.size() < size && tries < 500; ++tries) {
      auto t = oracle::random_term(rng, s, {}, 1 + static_cast<int>(rng() % 3));
      if (seen.insert(syntax::print(t)).second) universe.push_back(t);
    }
    std::vector<std::pair<Term, Term>> eqs;
    std::size_t n_eqs = 1 + rng() % 6;
    for (std::size_t i = 0; i < n_eqs; ++i)
      eqs.emplace_back(universe[rng() % universe.size()], universe[rng() % universe.size()]);
    auto p = proof::congruence_close(eqs, universe);
    auto naive = oracle::naive_closure(universe, eqs);
    std::size_t n = universe.size();
    auto rel = [&](std::size_t i, std::size_t j) { return p.same(universe[i], universe[j]); };
    std::string tag = "instance " + std::to_string(round) + ": ";
    for (std::size_t i = 0; i < n; ++i) {
      out.require(rel(i, i), tag + "not reflexive");
      for (std::size_t j = 0; j < n; ++j) {
        out.require(rel(i, j) == rel(j, i), tag + "not symmetric");
        out.require(rel(i, j) == (naive[i] == naive[j]), tag + "differs from the naive fixpoint");
        if (!rel(i, j)) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (rel(j, k)) out.require(rel(i, k), tag + "not transitive");
      }
    }
    // Congruence: equal arguments give equal applications inside the universe.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& u = universe[i];
        const auto& v = universe[j];
        if (u.is_constant() || v.is_constant() || u.name() != v.name()) continue;
        bool args_equal = true;
        for (std::size_t k = 0; k < u.args().size(); ++k) args_equal = args_equal && p.same(u.args()[k], v.args()[k]);
        if (args_equal) out.require(rel(i, j), tag + "not congruence-closed");
      }
  }
  out.summary = std::to_string(instances) + " random instances, universes of 5..30 terms";
}

struct Built {
  std::string file;
  henkin::CompleteFront front;
  henkin::TermModel model;
};

std::vector<Built> build_fronts(std::size_t n) {
  std::vector<Built> out;
  for (const char* file : {"equality.thy", "dlo.thy", "prop.thy"}) {
    auto t = shipped(file);
    auto oracle = compactness::oracle_for(category::resolve_plugin(t, ""));
    auto front = henkin::lindenbaum_extend(t, n, proof::Budget{}, oracle);
    auto model = henkin::build_term_model(front, 3);
    out.push_back({file, front, model});
  }
  return out;
}

// 2. Stage consistency, truncated completeness, witness soundness, determinism.
void lindenbaum_suite(Outcome& out) {
  const std::size_t N = 30;
  std::size_t prefixes = 0;
  for (auto& b : build_fronts(N)) {
    const auto& f = b.front;
    std::string tag = b.file + ": ";
    out.require(f.validate().empty(), tag + "front fails validation");
    std::vector<Formula> prefix;
    for (const auto& s : f.sentences()) {
      prefix.push_back(s.sentence);
      auto status = f.oracle().check(f.stage_language(), prefix, f.budget()).status;
      out.require(status != proof::Consistency::Status::Inconsistent, tag + "inconsistent prefix at " + s.provenance);
      ++prefixes;
    }
    std::set<std::string> present;
    for (const auto& s : f.sentences()) present.insert(syntax::canonical(s.sentence));
    out.require(f.decided().size() == N, tag + "front does not decide N sentences");
    for (const auto& d : f.decided()) {
      bool pos = present.contains(syntax::canonical(d.sentence));
      bool neg = present.contains(syntax::canonical(Formula::negation(d.sentence)));
      out.require(pos != neg, tag + "not exactly one of psi, ~psi for " + d.text);
      out.require(pos == (d.polarity == henkin::Polarity::Asserted), tag + "polarity disagrees for " + d.text);
    }
    syntax::SentenceEnumerator e(f.stage_language());
    for (const auto& s : e.first(N)) out.require(f.polarity_of(s.text).has_value(), tag + "undecided " + s.text);
    auto w = henkin::check_witnesses(b.model);
    out.require(w.pass(), tag + "witness soundness fails");
    auto t = shipped(b.file);
    auto again = henkin::lindenbaum_extend(t, N, proof::Budget{}, compactness::oracle_for(category::resolve_plugin(t, "")));
    out.require(again == f, tag + "re-run differs");
  }
  out.summary = "3 theories, N = 30, " + std::to_string(prefixes) + " prefixes checked";
}

// 3. Truth lemma on the quantifier-free decided sentences.
void truth_lemma_suite(Outcome& out) {
  std::size_t checked = 0;
  for (auto& b : build_fronts(30)) {
    auto r = henkin::check_truth_lemma(b.model, 30);
    checked += r.checked;
    for (const auto& m : r.mismatches) out.require(false, b.file + ": " + m);
  }
  out.require(checked > 0, "no quantifier-free sentence among the first 30");
  out.summary = std::to_string(checked) + " quantifier-free sentences, 0 mismatches allowed";
}

// 4. eta is an isomorphism onto the closure.
void eta_suite(Outcome& out) {
  std::size_t records = 0;
  for (const char* file : {"equality.thy", "dlo.thy"}) {
    auto t = shipped(file);
    auto b = category::build_bundle(t, category::BundleParams{});
    std::string tag = std::string(file) + ": ";
    out.require(b.eta.injective(), tag + "eta not injective");
    out.require(b.eta.surjective(), tag + "eta not surjective onto the closure");
    auto el = backforth::check_elementary(b.eta.map, backforth::formula_battery(t.signature), 64);
    records += el.records.size();
    out.require(el.pass(), tag + std::to_string(el.disagreements()) + " elementarity disagreements");
    auto members = b.closure->members();
    auto inv = category::invert_component(b.eta.map, members);
    out.require(category::is_identity(category::compose_maps(inv, b.eta.map), b.term->elements(b.term->class_count())),
                tag + "inverse after eta is not the identity");
    out.require(category::is_identity(category::compose_maps(b.eta.map, inv), members),
                tag + "eta after inverse is not the identity");
  }
  out.summary = "equality and DLO bundles, depth 3, closure depth 3, " + std::to_string(records) +
                " elementarity records at E = 64";
}

// 5. Naturality squares and functor laws.
void naturality_suite(Outcome& out) {
  auto t1 = shipped("pair_c.thy"), t2 = shipped("pair_d.thy"), t3 = shipped("pair_de.thy");
  auto f = category::load_translation(kTheories + "/c_to_d.tr", t1.signature, t2.signature);
  auto g = category::load_translation(kTheories + "/d_into_de.tr", t2.signature, t3.signature);
  category::BundleParams p;
  auto b1 = category::build_bundle(t1, p);
  auto b2 = category::build_target_bundle(f, b1, t2, p);
  auto b3 = category::build_target_bundle(g, b2, t3, p);
  auto id = category::identity(t1.signature);
  struct Case {
    std::string name;
    const category::Translation* tr;
    const category::Bundle *from, *to;
    const syntax::Theory *t_from, *t_to;
  };
  std::vector<Case> cases = {{"identity", &id, &b1, &b1, &t1, &t1},
                             {"renaming", &f, &b1, &b2, &t1, &t2},
                             {"sublanguage embedding", &g, &b2, &b3, &t2, &t3}};
  std::size_t compared = 0;
  for (const auto& c : cases) {
    auto check = category::check_translation(*c.tr, *c.t_from, *c.t_to, category::default_samples(*c.t_from, 10),
                                             proof::Budget{20000, 2, 3});
    out.require(check.pass(), c.name + ": translation check fails");
    auto r = category::check_naturality(*c.tr, *c.from, *c.to);
    compared += r.entries.size();
    out.require(r.entries.size() == c.from->term->class_count(), c.name + ": square not compared on every class");
    out.require(r.pass(), c.name + ": " + std::to_string(r.mismatches().size()) + " mismatches");
  }
  auto laws = category::check_functor_laws({b1, b2, b3}, {f, g});
  std::size_t law_checks = 0;
  for (const auto& rec : laws.records) {
    law_checks += rec.checked;
    out.require(rec.pass() && rec.checked > 0, "functor law fails: " + rec.law);
  }
  out.summary = "3 squares over " + std::to_string(compared) + " classes; " + std::to_string(laws.records.size()) +
                " functor laws over " + std::to_string(law_checks) + " elements";
}

// 6. DLO <-> DLO back-and-forth.
void back_and_forth_suite(Outcome& out) {
  Signature order;
  order.add_relation("lt", 2);
  auto left = std::make_shared<compactness::DloModel>(order);
  auto right = std::make_shared<compactness::DloModel>(order);
  std::vector<std::pair<proof::Element, proof::Element>> previous;
  for (std::size_t r = 0; r <= 20; ++r) {
    auto iso = backforth::run_back_and_forth(left, right, r);
    const auto& pairs = iso.pairs();
    out.require(std::equal(previous.begin(), previous.end(), pairs.begin()) && pairs.size() >= previous.size(),
                "round " + std::to_string(r) + " does not extend round " + std::to_string(r - 1));
    previous = pairs;
    if (r != 20) continue;
    out.require(pairs.size() == 20, "R = 20 gives " + std::to_string(pairs.size()) + " pairs");
    for (const auto& [l1, r1] : pairs)
      for (const auto& [l2, r2] : pairs) {
        auto dl1 = compactness::decode(l1), dl2 = compactness::decode(l2);
        auto dr1 = compactness::decode(r1), dr2 = compactness::decode(r2);
        out.require((dl1 < dl2) == (dr1 < dr2), "order not preserved on " + dl1.to_string() + ", " + dl2.to_string());
        out.require((l1 == l2) == (r1 == r2), "not injective");
      }
    for (proof::Element e = 0; e < 10; ++e) {
      out.require(iso.image(e).has_value(), "left element " + std::to_string(e) + " uncovered");
      out.require(iso.preimage(e).has_value(), "right element " + std::to_string(e) + " uncovered");
    }
    out.require(iso.violations().empty(), "atom violations");
  }
  out.summary = "R = 20, 20 pairs, first 10 elements of each side covered, nesting checked for R = 0..20";
}

int run_cli(const std::string& args, nlohmann::json& report) {
  auto file = std::filesystem::temp_directory_path() / ("canon_acceptance_" + std::to_string(::getpid()) + ".json");
  std::string cmd = std::string(CANON_CLI) + " " + args + " --output " + file.string() + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(file);
  report = in ? nlohmann::json::parse(in, nullptr, false) : nlohmann::json();
  std::filesystem::remove(file);
  return code;
}

// 7. Negative controls through the command line.
void negative_controls(Outcome& out) {
  nlohmann::json r;
  int code = run_cli("eta --theory " + kTheories + "/dlo.thy --against-parent", r);
  out.require(code == 1, "eta --against-parent exits " + std::to_string(code));
  bool surjective = r.value("/result/eta/surjective"_json_pointer, true);
  auto missed = r.value("/result/eta/missed"_json_pointer, nlohmann::json::array());
  out.require(!surjective && !missed.empty(), "eta --against-parent does not report result.eta.surjective = false");
  out.require(r.value("/result/eta/injective"_json_pointer, false), "eta against the parent is not injective");
  std::set<std::string> image;
  for (const auto& p : r.value("/result/eta/map/assignment"_json_pointer, nlohmann::json::array()))
    image.insert(p.value("target_value", ""));
  for (const auto& m : missed) out.require(!image.contains(m.get<std::string>()), "missed element is in the image");

  int ok = run_cli("eta --theory " + kTheories + "/dlo.thy", r);
  out.require(ok == 0, "eta against the closure exits " + std::to_string(ok));

  std::string square = "naturality --left " + kTheories + "/pair_c.thy --right " + kTheories +
                       "/pair_d.thy --translation " + kTheories + "/c_to_d.tr";
  int clean = run_cli(square, r);
  out.require(clean == 0, "uncorrupted naturality exits " + std::to_string(clean));
  int corrupt = run_cli(square + " --corrupt-gf", r);
  out.require(corrupt == 1, "--corrupt-gf exits " + std::to_string(corrupt));
  auto mismatches = r.value("/result/naturality/mismatches"_json_pointer, nlohmann::json::array());
  out.require(!mismatches.empty(), "--corrupt-gf does not list result.naturality.mismatches");
  out.summary = "eta against the DLO parent: " + std::to_string(missed.size()) + " missed; corrupted G(f): " +
                std::to_string(mismatches.size()) + " mismatched classes";
}

// 8. prove() never contradicts a size-<=3 brute force.
void prover_soundness(Outcome& out) {
  Signature sig;
  sig.add_constant("c");
  sig.add_relation("P", 1);
  sig.add_relation("R", 2);
  std::mt19937 rng(808);
  proof::Budget budget{20000, 2, 3};
  std::size_t proved = 0, refuted = 0, unknown = 0;
  const std::size_t pairs = 200;
  for (std::size_t i = 0; i < pairs; ++i) {
    std::vector<Formula> axioms;
    std::size_t n_axioms = rng() % 3;
    for (std::size_t k = 0; k < n_axioms; ++k) axioms.push_back(oracle::random_formula(rng, sig, {}, 2));
    auto goal = oracle::random_formula(rng, sig, {}, 2);
    auto negated = axioms;
    negated.push_back(Formula::negation(goal));
    bool counter = oracle::satisfiable_up_to(sig, negated, 3);
    auto v = proof::prove(axioms, goal, budget, sig);
    std::string text = syntax::print(goal);
    switch (v.kind) {
      case proof::Verdict::Kind::Proved:
        ++proved;
        out.require(!counter, "proved but brute force has a counter-model: " + text);
        out.require(v.certificate && proof::check_certificate(*v.certificate), "certificate rejected: " + text);
        break;
      case proof::Verdict::Kind::Refuted:
        ++refuted;
        out.require(counter, "refuted but brute force finds no counter-model: " + text);
        break;
      case proof::Verdict::Kind::Unknown: ++unknown; break;
    }
  }
  out.summary = std::to_string(pairs) + " pairs: " + std::to_string(proved) + " proved, " + std::to_string(refuted) +
                " refuted, " + std::to_string(unknown) + " unknown";
}

}  // namespace

int main() {
  bool all = true;
  all &= run(1, "equivalence relation suite", 10, equivalence_suite);
  all &= run(2, "Lindenbaum suite", 60, lindenbaum_suite);
  all &= run(3, "truth-lemma fragment", 0, truth_lemma_suite);
  all &= run(4, "eta-isomorphism suite", 60, eta_suite);
  all &= run(5, "naturality and functor-law suite", 0, naturality_suite);
  all &= run(6, "back-and-forth suite", 10, back_and_forth_suite);
  all &= run(7, "negative-control suite", 0, negative_controls);
  all &= run(8, "prover soundness spot-suite", 120, prover_soundness);
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << "\n";
  return all ? 0 : 1;
}
