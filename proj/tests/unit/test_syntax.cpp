#include <catch_amalgamated.hpp>

#include <random>

#include "canon/syntax/enumerate.hpp"
#include "canon/syntax/parser.hpp"
#include "canon/syntax/print.hpp"
#include "canon/syntax/substitute.hpp"
#include "canon/syntax/theory.hpp"
#include "oracles.hpp"

using namespace canon::syntax;

namespace {

Signature sig_pqfc() {
  Signature s;
  s.add_constant("c");
  s.add_constant("d");
  s.add_function("f", 1);
  s.add_relation("P", 1);
  s.add_relation("Q", 0);
  s.add_relation("R", 2);
  return s;
}

}  // namespace

TEST_CASE("parse: universal implication") {
  Signature s;
  s.add_relation("P", 1);
  auto f = parse_formula("forall x. (P(x) -> P(x))", s);
  auto px = Formula::atom("P", {Term::variable("x")});
  CHECK(f == Formula::forall("x", Formula::implication(px, px)));
}

TEST_CASE("parse: existential equation") {
  Signature s;
  s.add_constant("c");
  auto f = parse_formula("exists x. x = c", s);
  CHECK(f == Formula::exists("x", Formula::equal(Term::variable("x"), Term::constant("c"))));
}

TEST_CASE("parse: unparenthesised conjunction") {
  Signature s;
  s.add_function("f", 1);
  s.add_constant("c");
  s.add_relation("Q", 0);
  auto c = Term::constant("c");
  auto f = parse_formula("f(c) = c & ~Q", s);
  CHECK(f == Formula::conjunction(Formula::equal(Term::apply("f", {c}), c), Formula::negation(Formula::atom("Q"))));
}

TEST_CASE("parse: errors carry kind and position") {
  auto s = sig_pqfc();
  auto kind_of = [&](const char* text) {
    try {
      parse_formula(text, s);
    } catch (const ParseError& e) {
      return e.kind();
    }
    FAIL("expected a parse error for " << text);
    return ParseError::Kind::Syntax;
  };
  CHECK(kind_of("(P(c) &") == ParseError::Kind::Syntax);
  CHECK(kind_of("S(c)") == ParseError::Kind::UnknownSymbol);
  CHECK(kind_of("P(c, d)") == ParseError::Kind::ArityMismatch);
  CHECK(kind_of("f(c, d) = c") == ParseError::Kind::ArityMismatch);
  try {
    parse_formula("P(c) & & Q", s);
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
  }
}

TEST_CASE("parse: precedence and associativity") {
  auto s = sig_pqfc();
  auto pc = Formula::atom("P", {Term::constant("c")});
  auto pd = Formula::atom("P", {Term::constant("d")});
  auto q = Formula::atom("Q");
  CHECK(parse_formula("Q -> P(c) -> P(d)", s) == Formula::implication(q, Formula::implication(pc, pd)));
  CHECK(parse_formula("Q | P(c) & P(d)", s) == Formula::disjunction(q, Formula::conjunction(pc, pd)));
  CHECK(parse_formula("~Q & Q", s) == Formula::conjunction(Formula::negation(q), q));
}

TEST_CASE("canonical serialization") {
  Signature s;
  s.add_relation("Q", 0);
  s.add_relation("P", 1);
  s.add_constant("c");
  CHECK(canonical(Formula::atom("Q")) == "Q");
  auto ex = [](const char* v) {
    return Formula::exists(v, Formula::equal(Term::variable(v), Term::variable(v)));
  };
  CHECK(canonical(ex("x")) == canonical(ex("y")));
  CHECK(canonical(ex("y")) == "exists x. x = x");
  CHECK(canonical(parse_formula("P(c)", s)) != canonical(parse_formula("~P(c)", s)));
  CHECK(canonical(parse_formula("forall y. exists y. P(y)", s)) == "forall x. exists y. P(y)");
}

TEST_CASE("canonical serialization is injective on alpha classes") {
  auto s = sig_pqfc();
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    auto a = oracle::random_formula(rng, s, {}, 3);
    auto b = oracle::random_formula(rng, s, {}, 3);
    // Structural equality of canonical forms coincides with byte equality.
    CHECK((canonical_form(a) == canonical_form(b)) == (canonical(a) == canonical(b)));
    CHECK(print(canonical_form(a)) == canonical(a));
  }
}

TEST_CASE("enumerate: empty prefix") { CHECK(enumerate_sentences(sig_pqfc(), 0).empty()); }

TEST_CASE("enumerate: matches brute-force generation over a 0-ary relation") {
  Signature s;
  s.add_relation("Q", 0);
  auto brute = oracle::brute_force_sentences(s, "Q~()&|->= x", 4);
  REQUIRE(brute.size() >= 2);
  auto got = enumerate_sentences(s, 2);
  REQUIRE(got.size() == 2);
  CHECK(canonical(got[0]) == brute[0]);
  CHECK(canonical(got[1]) == brute[1]);
  CHECK(brute[0] == "Q");
  CHECK(brute[1] == "~Q");
  // Every brute-forced sentence appears in the same order.
  SentenceEnumerator e(s);
  std::vector<std::string> mine;
  for (std::size_t len = 1; len <= 4; ++len)
    for (const auto& x : e.bucket(len)) mine.push_back(x.text);
  CHECK(mine == brute);
}

TEST_CASE("enumerate: brute-force agreement with a constant and equality") {
  Signature s;
  s.add_constant("c");
  s.add_relation("P", 1);
  auto brute = oracle::brute_force_sentences(s, "cP()~= ", 6);
  SentenceEnumerator e(s);
  std::vector<std::string> mine;
  for (std::size_t len = 1; len <= 6; ++len)
    for (const auto& x : e.bucket(len)) mine.push_back(x.text);
  CHECK(mine == brute);
}

TEST_CASE("enumerate: prefix stable, deterministic, alpha-canonical") {
  auto s = sig_pqfc();
  auto a = enumerate_sentences(s, 10);
  auto b = enumerate_sentences(s, 1000);
  auto c = enumerate_sentences(s, 1000);
  REQUIRE(b.size() == 1000);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(canonical(a[i]) == canonical(b[i]));
  std::set<std::string> seen;
  std::string prev;
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto text = canonical(b[i]);
    CHECK(text == canonical(c[i]));
    CHECK(b[i].is_sentence());
    CHECK(print(b[i]) == text);
    CHECK(seen.insert(text).second);
    if (i > 0) CHECK(enumeration_less(prev, text));
    prev = text;
  }
}

TEST_CASE("substitute: spec cases") {
  Signature s;
  s.add_constant("c");
  s.add_relation("P", 1);
  s.add_relation("Q", 1);
  auto c = Term::constant("c");
  auto x = Term::variable("x");
  CHECK(substitute(Formula::equal(x, x), "x", c) == Formula::equal(c, c));
  auto ex = Formula::exists("x", Formula::atom("P", {x}));
  CHECK(substitute(ex, "x", c) == ex);
  auto mixed = Formula::conjunction(Formula::atom("P", {x}), Formula::exists("x", Formula::atom("Q", {x})));
  CHECK(substitute(mixed, "x", c) ==
        Formula::conjunction(Formula::atom("P", {c}), Formula::exists("x", Formula::atom("Q", {x}))));
}

TEST_CASE("substitute: agrees with the reference on random formulas") {
  auto s = sig_pqfc();
  std::mt19937 rng(11);
  for (int i = 0; i < 20; ++i) {
    auto f = oracle::random_formula(rng, s, {"x", "y"}, 3);
    auto t = oracle::random_term(rng, s, {}, 2);
    CHECK(substitute(f, "x", t) == oracle::naive_substitute(f, "x", t));
  }
}

TEST_CASE("substitute: capture avoidance and free-variable law") {
  auto s = sig_pqfc();
  auto f = parse_formula("exists y. R(x, y)", s);
  auto g = substitute(f, "x", Term::variable("y"));
  CHECK(g.free_variables() == std::set<std::string>{"y"});
  CHECK(canonical(g) != canonical(parse_formula("exists y. R(y, y)", s)));
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    auto phi = oracle::random_formula(rng, s, {"x", "y"}, 3);
    auto t = oracle::random_term(rng, s, {"z"}, 1);
    auto fv = phi.free_variables();
    if (!fv.contains("x")) continue;
    auto expect = fv;
    expect.erase("x");
    std::set<std::string> tv;
    t.collect_variables(tv);
    expect.insert(tv.begin(), tv.end());
    CHECK(substitute(phi, "x", t).free_variables() == expect);
  }
}

TEST_CASE("round trip: parse after print") {
  auto s = sig_pqfc();
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    auto f = oracle::random_formula(rng, s, {"x"}, 4);
    CHECK(parse_formula(print(f), s) == f);
  }
}

TEST_CASE("signature rules") {
  Signature s;
  s.add_constant("c");
  CHECK_THROWS_AS(s.add_relation("c", 1), SignatureError);
  CHECK_THROWS_AS(s.add_constant("x"), SignatureError);
  CHECK_THROWS_AS(s.add_function("g", 0), SignatureError);
}

TEST_CASE("theory files round-trip bit-exactly") {
  const char* text =
      "# sample\n"
      "name sample\n"
      "sig const c\n"
      "sig fun f 1\n"
      "sig rel P 1\n"
      "axiom forall x. (P(x) -> P(f(x)))\n"
      "axiom P(c)\n"
      "axiom exists y. ~y = c\n";
  auto t = parse_theory(text);
  CHECK(t.axioms.size() == 3);
  auto again = parse_theory(serialize_theory(t));
  CHECK(again == t);
  CHECK(serialize_theory(again) == serialize_theory(t));
  CHECK_THROWS_AS(parse_theory("axiom P(x)\n"), TheoryFileError);
  CHECK_THROWS_AS(parse_theory("sig rel P 1\naxiom P(x)\n"), TheoryFileError);
  CHECK_THROWS_AS(parse_theory("bogus\n"), TheoryFileError);
}
