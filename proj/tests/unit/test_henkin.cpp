#include <catch_amalgamated.hpp>

#include "canon/henkin/front.hpp"
#include "canon/henkin/term_model.hpp"
#include "canon/syntax/enumerate.hpp"
#include "canon/syntax/parser.hpp"
#include "canon/syntax/print.hpp"
#include "oracles.hpp"

using namespace canon;
using namespace canon::henkin;
using syntax::Formula;
using syntax::Signature;
using syntax::Term;
using syntax::Theory;

namespace {

Theory theory_from(const char* text) { return syntax::parse_theory(text); }

std::shared_ptr<const proof::ConsistencyOracle> generic() { return std::make_shared<proof::GenericOracle>(); }
std::shared_ptr<const proof::ConsistencyOracle> equality() { return std::make_shared<proof::EqualityOracle>(); }

Formula parse(const char* text, const Signature& s) { return syntax::parse_formula(text, s); }

}  // namespace

TEST_CASE("henkin_constant naming") {
  Signature s;
  s.add_relation("P", 1);
  auto ex = parse("exists x. x = x", s);
  auto c = henkin_constant(ex, 0);
  CHECK(c.name() == "$0{exists x. x = x}");
  CHECK(henkin_constant(parse("exists y. y = y", s), 0) == c);
  auto px = parse("exists x. P(x)", s);
  CHECK(henkin_constant(px, 0) != henkin_constant(px, 1));
  CHECK(henkin_constant(px, 0).name() != henkin_constant(px, 1).name());
  CHECK_THROWS_AS(henkin_constant(parse("forall x. P(x)", s), 0), HenkinError);
  CHECK_THROWS_AS(henkin_constant(parse("exists x. P(z)", s), 0), HenkinError);
  CHECK(parse_henkin_name(c.name()) == c);
}

TEST_CASE("henkin constants are global across theories") {
  auto t1 = theory_from("sig rel P 1\naxiom exists x. P(x)\n");
  auto t2 = theory_from("sig rel P 1\nsig const d\naxiom exists y. P(y)\naxiom P(d)\n");
  auto f1 = lindenbaum_extend(t1, 0, {}, generic());
  auto f2 = lindenbaum_extend(t2, 0, {}, generic());
  REQUIRE(f1.ledger().size() == 1);
  REQUIRE(f2.ledger().size() == 1);
  CHECK(f1.ledger()[0].constant == f2.ledger()[0].constant);
}

TEST_CASE("lindenbaum: disjunctive syllogism") {
  auto t = theory_from("sig const c\nsig rel P 1\nsig rel Q 1\naxiom (P(c) | Q(c))\naxiom ~P(c)\n");
  auto front = lindenbaum_extend(t, 6, {}, generic());
  CHECK(front.polarity_of("P(c)") == Polarity::Negated);
  CHECK(front.polarity_of("Q(c)") == Polarity::Asserted);
  // Oracle: truth table over the four valuations of {P(c), Q(c)}.
  for (int v = 0; v < 4; ++v) {
    bool p = v & 1, q = v & 2;
    bool model = (p || q) && !p;
    if (model) CHECK((!p && q));
  }
  CHECK(front.validate().empty());
}

TEST_CASE("lindenbaum: empty theory is deterministic") {
  auto t = theory_from("sig const c\nsig rel P 1\n");
  auto a = lindenbaum_extend(t, 12, {}, generic());
  auto b = lindenbaum_extend(t, 12, {}, generic());
  CHECK(a == b);
  CHECK(a.decided().size() == 12);
  for (const auto& r : a.stage_log()) CHECK(r.verdict != "Unknown");
}

TEST_CASE("lindenbaum: existential early in the order gets a witness") {
  auto t = theory_from("sig rel R 1\n");
  auto front = lindenbaum_extend(t, 1, {}, generic());
  REQUIRE(front.decided().size() == 1);
  CHECK(front.decided()[0].text == "exists x. R(x)");
  CHECK(front.decided()[0].polarity == Polarity::Asserted);
  REQUIRE(front.ledger().size() == 1);
  CHECK(syntax::print(front.ledger()[0].axiom) == "(exists x. R(x) -> R($0{exists x. R(x)}))");
  auto model = build_term_model(front, 1);
  CHECK(model.front().polarity_of("R($0{exists x. R(x)})") == Polarity::Asserted);
  CHECK(check_witnesses(model).pass());
}

TEST_CASE("lindenbaum: inconsistent input is rejected") {
  auto t = theory_from("sig const c\nsig rel P 1\naxiom P(c)\naxiom ~P(c)\n");
  CHECK_THROWS_AS(lindenbaum_extend(t, 3, {}, generic()), InconsistentInput);
}

TEST_CASE("lindenbaum: unknown verdict is a hard error") {
  // Only infinite models: every stage consistency check needs one.
  auto t = theory_from(
      "sig const c\nsig fun s 1\n"
      "axiom forall x. forall y. (s(x) = s(y) -> x = y)\n"
      "axiom forall x. ~s(x) = c\n");
  try {
    lindenbaum_extend(t, 3, proof::Budget{300, 1, 2}, generic());
    FAIL("expected StageUndecidable");
  } catch (const StageUndecidable& e) {
    CHECK(e.stage() == 0);
  }
}

TEST_CASE("term model: forced identification") {
  auto t = theory_from("sig const c\nsig const d\n");
  auto front = lindenbaum_extend(t, 4, {}, generic());
  CHECK(front.polarity_of("c = d") == Polarity::Asserted);
  auto m = build_term_model(front, 1);
  CHECK(m.class_count() == 1);
}

TEST_CASE("term model: distinct constants stay apart") {
  auto t = theory_from("sig const c\nsig const d\naxiom ~c = d\n");
  auto m = build_term_model(lindenbaum_extend(t, 4, {}, generic()), 1);
  CHECK(m.class_count() == 2);
}

TEST_CASE("term model: a fixed point collapses the tower") {
  auto t = theory_from("sig const c\nsig fun f 1\naxiom f(c) = c\n");
  auto m = build_term_model(lindenbaum_extend(t, 3, {}, generic()), 3);
  Signature s = t.signature;
  std::vector<Term> tower{Term::constant("c")};
  for (int i = 0; i < 3; ++i) tower.push_back(Term::apply("f", {tower.back()}));
  // Oracle: naive closure on the same universe.
  auto naive = oracle::naive_closure(tower, {{tower[1], tower[0]}});
  for (std::size_t i = 0; i < tower.size(); ++i) CHECK(naive[i] == naive[0]);
  CHECK(m.class_count() == 1);
  CHECK(m.universe().size() == 4);
  CHECK(m.congruence_violations().empty());
}

TEST_CASE("shipped theories: front invariants and truth lemma") {
  for (const char* name : {"equality.thy", "prop.thy"}) {
    auto t = syntax::load_theory(std::string(CANON_THEORY_DIR) + "/" + name);
    auto front = lindenbaum_extend(t, 30, {}, equality());
    INFO(name);
    CHECK(front.validate().empty());
    CHECK(front == lindenbaum_extend(t, 30, {}, equality()));
    // Truncated completeness over the final stage language.
    syntax::SentenceEnumerator e(front.stage_language());
    for (const auto& s : e.first(30)) {
      bool pos = front.polarity_of(s.text).has_value();
      CHECK(pos);
    }
    auto model = build_term_model(front, 3);
    auto lemma = check_truth_lemma(model, 30);
    CHECK(lemma.pass());
    CHECK(check_witnesses(model).pass());
    CHECK(model.congruence_violations().empty());
  }
}
