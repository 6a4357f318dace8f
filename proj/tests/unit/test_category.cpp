#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "canon/backforth/backforth.hpp"
#include "canon/category/naturality.hpp"
#include "canon/henkin/front.hpp"
#include "canon/syntax/parser.hpp"
#include "canon/syntax/print.hpp"
#include "oracles.hpp"

using namespace canon;
using namespace canon::category;
using syntax::Signature;
using syntax::Theory;

namespace {

std::string dir() { return std::string(CANON_THEORY_DIR) + "/"; }
Theory shipped(const std::string& file) { return syntax::load_theory(dir() + file); }

Signature constants(std::initializer_list<const char*> names) {
  Signature s;
  for (auto n : names) s.add_constant(n);
  return s;
}

struct Chain {
  Theory t1, t2, t3;
  Translation f, g;
  Bundle b1, b2, b3;
};

Chain chain() {
  auto t1 = shipped("pair_c.thy"), t2 = shipped("pair_d.thy"), t3 = shipped("pair_de.thy");
  auto f = load_translation(dir() + "c_to_d.tr", t1.signature, t2.signature);
  auto g = load_translation(dir() + "d_into_de.tr", t2.signature, t3.signature);
  BundleParams p;
  auto b1 = build_bundle(t1, p);
  auto b2 = build_target_bundle(f, b1, t2, p);
  auto b3 = build_target_bundle(g, b2, t3, p);
  return {t1, t2, t3, f, g, b1, b2, b3};
}

Theory successor_theory() {
  return syntax::parse_theory(
      "name succ\nplugin successor\nsig const c\nsig fun s 1\n"
      "axiom forall x. ~s(x) = x\naxiom forall x. forall y. (s(x) = s(y) -> x = y)\n");
}

std::set<Element> image_of(const ModelMap& m) {
  std::set<Element> out;
  for (const auto& [_, t] : m.assignment()) out.insert(t);
  return out;
}

}  // namespace

TEST_CASE("translations commute with connectives and follow the Henkin rule") {
  Signature s1;
  s1.add_constant("c");
  s1.add_function("f", 1);
  s1.add_relation("P", 2);
  Signature s2;
  s2.add_constant("d");
  s2.add_function("g", 1);
  s2.add_relation("Q", 2);
  Translation t("ren", s1, s2, {{"c", "d"}, {"f", "g"}, {"P", "Q"}});
  auto p = [&](const char* text) { return syntax::parse_formula(text, s1); };
  CHECK(syntax::print(t.apply(p("forall x. (P(x, f(c)) -> ~x = c)"))) == "forall x. (Q(x, g(d)) -> ~x = d)");

  std::mt19937 rng(3);
  for (int i = 0; i < 60; ++i) {
    auto a = oracle::random_formula(rng, s1, {"x"}, 2);
    auto b = oracle::random_formula(rng, s1, {"x"}, 2);
    CHECK(t.apply(syntax::Formula::negation(a)) == syntax::Formula::negation(t.apply(a)));
    CHECK(t.apply(syntax::Formula::conjunction(a, b)) == syntax::Formula::conjunction(t.apply(a), t.apply(b)));
    CHECK(t.apply(syntax::Formula::disjunction(a, b)) == syntax::Formula::disjunction(t.apply(a), t.apply(b)));
    CHECK(t.apply(syntax::Formula::implication(a, b)) == syntax::Formula::implication(t.apply(a), t.apply(b)));
    CHECK(t.apply(syntax::Formula::forall("x", a)) == syntax::Formula::forall("x", t.apply(a)));
    CHECK(t.apply(syntax::Formula::exists("x", a)) == syntax::Formula::exists("x", t.apply(a)));
  }

  auto ex = p("exists y. P(y, c)");
  auto c1 = henkin::henkin_constant(ex, 2);
  auto image = t.apply(c1.term());
  CHECK(image.name() == henkin::henkin_constant(syntax::parse_formula("exists x. Q(x, d)", s2), 2).name());
  // Nested Henkin constants are translated inside the base sentence.
  auto nested = henkin::henkin_constant(syntax::Formula::exists("x", syntax::Formula::atom("P", {syntax::Term::variable("x"), c1.term()})), 0);
  CHECK(t.constant_name(nested.name()) == "$0{exists x. Q(x, " + image.name() + ")}");
}

TEST_CASE("translation validity errors") {
  Signature s1;
  s1.add_constant("c");
  s1.add_relation("P", 1);
  Signature s2;
  s2.add_constant("d");
  s2.add_relation("Q", 2);
  CHECK_THROWS_AS(Translation("bad", s1, s2, {{"c", "d"}, {"P", "Q"}}), TranslationError);
  CHECK_THROWS_AS(Translation("bad", s1, s2, {{"c", "Q"}}), TranslationError);
  CHECK_THROWS_AS(Translation("bad", s1, s2, {{"zz", "d"}}), TranslationError);
  CHECK_THROWS_AS(parse_translation("map c d\nmap c d\n", s1, s2), TranslationFileError);
  CHECK_THROWS_AS(parse_translation("mapping c d\n", s1, s2), TranslationFileError);
  auto ok = parse_translation("# r\nname r\nmap c d\n", constants({"c"}), constants({"d"}));
  CHECK(ok.name() == "r");
  CHECK(serialize_translation(ok) == "name r\nmap c d\n");
}

TEST_CASE("compose and identity") {
  auto sc = constants({"c"}), sd = constants({"d"}), se = constants({"e"});
  Translation cd("cd", sc, sd, {{"c", "d"}}), de("de", sd, se, {{"d", "e"}}), ce("ce", sc, se, {{"c", "e"}});
  CHECK(compose(identity(sd), cd) == cd);
  CHECK(compose(cd, identity(sc)) == cd);
  CHECK(compose(de, cd) == ce);
  CHECK_THROWS_AS(compose(cd, cd), SignatureMismatch);

  auto eq = syntax::parse_formula("exists x. ~x = c", sc);
  CHECK(syntax::canonical(compose(de, cd).apply(eq)) == syntax::canonical(ce.apply(eq)));

  Signature a, b, c, d;
  a.add_function("f", 2);
  a.add_relation("R", 1);
  b.add_function("g", 2);
  b.add_relation("S", 1);
  c.add_function("h", 2);
  c.add_relation("T", 1);
  d.add_function("k", 2);
  d.add_relation("U", 1);
  Translation f("f", a, b, {{"f", "g"}, {"R", "S"}}), g("g", b, c, {{"g", "h"}, {"S", "T"}}),
      h("h", c, d, {{"h", "k"}, {"T", "U"}});
  auto left = compose(h, compose(g, f)), right = compose(compose(h, g), f);
  CHECK(left == right);
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    auto phi = oracle::random_formula(rng, a, {}, 3);
    CHECK(left.apply(phi) == right.apply(phi));
    CHECK(left.apply(phi) == h.apply(g.apply(f.apply(phi))));
  }
}

TEST_CASE("check_translation") {
  proof::Budget budget{20000, 2, 3};
  auto t2 = shipped("pair_d.thy"), t3 = shipped("pair_de.thy");
  auto id = identity(t3.signature);
  auto r = check_translation(id, t3, t3, default_samples(t3, 10), budget);
  CHECK(r.pass());
  CHECK(r.count(TranslationCheck::Status::Preserved) >= t3.axioms.size());

  auto embed = load_translation(dir() + "d_into_de.tr", t2.signature, t3.signature);
  auto re = check_translation(embed, t2, t3, default_samples(t2, 10), budget);
  CHECK(re.pass());

  // Into a theory that drops ~e = d.
  auto weak = syntax::parse_theory("name weak\nsig const d\nsig const e\naxiom exists x. ~x = d\n");
  auto rw = check_translation(identity(t3.signature), t3, weak, t3.axioms, budget);
  CHECK(!rw.pass());
  REQUIRE(rw.checks.size() == 2);
  CHECK(rw.checks[0].status == TranslationCheck::Status::Preserved);
  CHECK(rw.checks[1].status == TranslationCheck::Status::Violated);
  CHECK(rw.checks[1].sentence == "~e = d");
}

TEST_CASE("F and G on morphisms") {
  auto ch = chain();
  auto F = F_on_morphism(ch.f, ch.b1.term, ch.b2.term);
  REQUIRE(F.assignment().size() == 2);
  auto c = *ch.b1.term->constant("c");
  CHECK(F(c) == ch.b2.term->constant("d"));
  auto w1 = ch.b1.front().ledger().at(0).constant;
  auto w2 = ch.b2.front().ledger().at(0).constant;
  CHECK(w2.name() == ch.f.constant_name(w1.name()));
  CHECK(F(*ch.b1.term->constant(w1.name())) == ch.b2.term->constant(w2.name()));

  auto G = G_on_morphism(ch.f, ch.b1.closure, ch.b2.closure);
  CHECK(G.injective());
  for (auto e : ch.b1.closure->members()) {
    auto term = ch.f.apply(ch.b1.closure->provenance(e));
    CHECK(G(e) == proof::evaluate(ch.b2.closure->parent(), term));
  }

  // Equal in the source, distinct in the target.
  auto glued = syntax::parse_theory("name glued\nplugin equality\nsig const c\nsig const d\naxiom c = d\n");
  auto apart = syntax::parse_theory("name apart\nplugin equality\nsig const c\nsig const d\naxiom ~c = d\n");
  auto id = identity(glued.signature);
  BundleParams p;
  p.horizon = 4;
  auto bg = build_bundle(glued, p);
  auto ba = build_target_bundle(id, bg, apart, p);
  CHECK_THROWS_AS(F_on_morphism(id, bg.term, ba.term), TranslationUnsound);
  CHECK_THROWS_AS(G_on_morphism(id, bg.closure, ba.closure), TranslationUnsound);
}

TEST_CASE("eta component examples") {
  auto eq = build_bundle(shipped("equality.thy"), BundleParams{});
  CHECK(eq.term->class_count() == 2);
  CHECK(image_of(eq.eta.map) == std::set<Element>{0, 1});
  CHECK(eq.eta.bijective());

  // Successor: [s(c)] goes to 4 when c is interpreted as 3.
  auto t = successor_theory();
  auto front = henkin::lindenbaum_extend(t, 2, proof::Budget{}, compactness::oracle_for("successor"));
  auto term = std::make_shared<const henkin::TermModel>(henkin::build_term_model(front, 1));
  auto nat = std::make_shared<compactness::NaturalsModel>("successor", t.signature, "s", std::map<std::string, bool>{});
  std::vector<compactness::Generator> gens;
  for (const auto& name : term->front().ledger_constants()) {
    nat->assign(name, 10);
    gens.push_back({syntax::Term::constant(name), 10, 0});
  }
  nat->assign("c", 3);
  gens.push_back({syntax::Term::constant("c"), 3, 0});
  auto closure = std::make_shared<const compactness::SkolemSubstructure>(nat, gens, 3);
  auto eta = eta_component(term, closure);
  auto sc = term->class_of(syntax::parse_term("s(c)", t.signature));
  REQUIRE(sc);
  CHECK(eta.map(*sc) == Element{4});
  // Depth 1 against closure depth 3 leaves s(s(c)) unhit.
  CHECK(!eta.surjective());
  CHECK(std::find(eta.missed.begin(), eta.missed.end(), Element{5}) != eta.missed.end());
  try {
    invert_component(eta.map, closure->members());
    FAIL("expected NotBijective");
  } catch (const NotBijective& e) {
    CHECK(e.kind() == NotBijective::Kind::Missed);
    CHECK(std::find(eta.missed.begin(), eta.missed.end(), e.witness()) != eta.missed.end());
  }
  // The other way round the representative s(c) leaves a depth-0 closure.
  auto shallow = std::make_shared<const compactness::SkolemSubstructure>(nat, gens, 0);
  CHECK_THROWS_AS(eta_component(term, shallow), EvaluationOutOfRange);

  // No ledger, one L-constant.
  auto rel = syntax::parse_theory("name rel\nsig const c\nsig rel P 1\naxiom P(c)\n");
  BundleParams one;
  one.horizon = 1;
  auto br = build_bundle(rel, one);
  CHECK(br.front().ledger().empty());
  CHECK(br.term->class_count() == 1);
  CHECK(br.closure->members().size() == 1);
  CHECK(br.eta.bijective());
}

TEST_CASE("invert_component") {
  auto eq = build_bundle(shipped("equality.thy"), BundleParams{});
  auto members = eq.closure->members();
  auto inv = invert_component(eq.eta.map, members);
  CHECK(is_identity(compose_maps(inv, eq.eta.map), eq.term->elements(eq.term->class_count())));
  CHECK(is_identity(compose_maps(eq.eta.map, inv), members));
  auto back = invert_component(inv, eq.term->elements(eq.term->class_count()));
  CHECK(std::set(back.assignment().begin(), back.assignment().end()) ==
        std::set(eq.eta.map.assignment().begin(), eq.eta.map.assignment().end()));
  ModelMap collapse("collapse", eq.term, eq.closure, {{0, members[0]}, {1, members[0]}});
  try {
    invert_component(collapse, members);
    FAIL("expected NotBijective");
  } catch (const NotBijective& e) {
    CHECK(e.kind() == NotBijective::Kind::DoublyHit);
    CHECK(e.witness() == members[0]);
  }
}

TEST_CASE("eta on the DLO bundle: closure versus parent") {
  auto b = build_bundle(shipped("dlo.thy"), BundleParams{});
  CHECK(b.eta.bijective());
  auto report = backforth::check_elementary(b.eta.map, backforth::formula_battery(b.theory.signature), 64);
  CHECK(report.pass());
  auto inv = invert_component(b.eta.map, b.closure->members());
  CHECK(inv.assignment().size() == b.closure->members().size());

  auto wide = eta_against_parent(b.term, b.parent, 64);
  CHECK(wide.injective());
  CHECK(!wide.surjective());
  auto img = image_of(wide.map);
  auto parent = b.parent->elements(64);
  std::set<Element> all(parent.begin(), parent.end());
  CHECK(std::includes(all.begin(), all.end(), img.begin(), img.end()));
  CHECK(img.size() < all.size());
  CHECK_THROWS_AS(invert_component(wide.map, parent), NotBijective);
}

TEST_CASE("naturality squares") {
  auto ch = chain();
  for (const auto* b : {&ch.b1, &ch.b2, &ch.b3}) {
    auto id = identity(b->theory.signature);
    CHECK(check_naturality(id, *b, *b).pass());
  }
  auto nf = check_naturality(ch.f, ch.b1, ch.b2);
  CHECK(nf.pass());
  CHECK(nf.entries.size() == ch.b1.term->class_count());
  CHECK(check_naturality(ch.g, ch.b2, ch.b3).pass());
  CHECK(check_naturality(compose(ch.g, ch.f), ch.b1, ch.b3).pass());
  CHECK(to_dot(nf).find(": fail") == std::string::npos);

  auto bad = check_naturality("corrupt", nf.F, swap_first_images(nf.G), nf.eta1, nf.eta2);
  CHECK(!bad.pass());
  CHECK(bad.mismatches().size() == 2);
  auto dot = to_dot(bad);
  CHECK(dot.find("G(c-to-d) (swapped): fail") != std::string::npos);
  CHECK(dot.find("fail at") != std::string::npos);
}

TEST_CASE("functor laws on a three-theory chain") {
  auto ch = chain();
  auto laws = check_functor_laws({ch.b1, ch.b2, ch.b3}, {ch.f, ch.g});
  CHECK(laws.records.size() == 8);
  for (const auto& r : laws.records) {
    INFO(r.law);
    CHECK(r.pass());
    CHECK(r.checked > 0);
  }
}
