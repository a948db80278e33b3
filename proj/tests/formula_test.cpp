// Parser, renderer, and structural-operation suite for the formula layer.
#include "doctest.h"

#include <map>
#include <random>

#include "nelab/formula.hpp"
#include "testutil.hpp"

using namespace nelab;

namespace {
Formula P() { return Formula::var("p"); }
Formula Q() { return Formula::var("q"); }
Formula must_parse(const std::string& s) {
  auto r = parse(s);
  REQUIRE_MESSAGE(r.has_value(), r.error());
  return std::move(r).take();
}
}  // namespace

TEST_CASE("derived connectives expand to the primitive core") {
  // p => q  is  (p o q*)*
  CHECK(Formula::imp(P(), Q()) ==
        Formula::star(Formula::circ(P(), Formula::star(Q()))));
  // p (+) q  is  (p* & q*)*
  CHECK(Formula::oplus(P(), Q()) ==
        Formula::star(Formula::tensor(Formula::star(P()), Formula::star(Q()))));
  // p -> q  is  p* (+) q
  CHECK(Formula::hook(P(), Q()) == Formula::oplus(Formula::star(P()), Q()));
  // p <=> q  is  (p => q) & (q => p)
  CHECK(Formula::eqv(P(), Q()) ==
        Formula::tensor(Formula::imp(P(), Q()), Formula::imp(Q(), P())));
  CHECK(Formula::neq(P(), Q()) == Formula::star(Formula::eqv(P(), Q())));
}

TEST_CASE("parsing the primitive syntax") {
  CHECK(must_parse("p") == P());
  CHECK(must_parse("p*") == Formula::star(P()));
  CHECK(must_parse("p**") == Formula::star(Formula::star(P())));
  CHECK(must_parse("(p & q)") == Formula::tensor(P(), Q()));
  CHECK(must_parse("(p o q)") == Formula::circ(P(), Q()));
  CHECK(must_parse("(p o q*)*") == Formula::imp(P(), Q()));
  CHECK(must_parse("((p & q) o r)*") ==
        Formula::star(Formula::circ(Formula::tensor(P(), Q()),
                                    Formula::var("r"))));
  // Redundant grouping parens are tolerated.
  CHECK(must_parse("(p)") == P());
  CHECK(must_parse("((p & q))*") == Formula::star(Formula::tensor(P(), Q())));
  // Variable lexicon: lowercase identifiers with digits/underscores.
  CHECK(must_parse("x_12") == Formula::var("x_12"));
  CHECK(must_parse("(ab o cd)").is_circ());
}

TEST_CASE("parsing the sugared syntax") {
  CHECK(must_parse("(p => q)") == Formula::imp(P(), Q()));
  CHECK(must_parse("(p <=> q)") == Formula::eqv(P(), Q()));
  CHECK(must_parse("(p =/= q)") == Formula::neq(P(), Q()));
  CHECK(must_parse("(p (+) q)") == Formula::oplus(P(), Q()));
  CHECK(must_parse("(p -> q)") == Formula::hook(P(), Q()));
  // (+) must not be confused with a grouping paren.
  CHECK(must_parse("(p (+) (q & r))") ==
        Formula::oplus(P(), Formula::tensor(Q(), Formula::var("r"))));
  // Star after a sugared application.
  CHECK(must_parse("(p => q)*") == Formula::star(Formula::imp(P(), Q())));
}

TEST_CASE("parse errors carry a byte offset") {
  SUBCASE("unknown token") {
    auto r = parse("p # q");
    REQUIRE(!r.has_value());
    CHECK(r.error().find("unknown token") != std::string::npos);
    CHECK(r.error().find("offset 2") != std::string::npos);
  }
  SUBCASE("uppercase is not in the variable lexicon") {
    CHECK(!parse("P").has_value());
  }
  SUBCASE("unbalanced open") {
    auto r = parse("(p & q");
    REQUIRE(!r.has_value());
    CHECK(r.error().find("unbalanced") != std::string::npos);
  }
  SUBCASE("unbalanced close") {
    auto r = parse("p)");
    REQUIRE(!r.has_value());
    CHECK(r.error().find("unbalanced") != std::string::npos);
  }
  SUBCASE("unparenthesized binary application") {
    auto r = parse("p & q");
    REQUIRE(!r.has_value());
    CHECK(r.error().find("parenthesized") != std::string::npos);
  }
  SUBCASE("bare o is the connective, not a variable") {
    auto r = parse("o");
    REQUIRE(!r.has_value());
    CHECK(r.error().find("circ connective") != std::string::npos);
  }
  SUBCASE("empty input") { CHECK(!parse("").has_value()); }
  SUBCASE("truncated arrow") { CHECK(!parse("(p = q)").has_value()); }
  SUBCASE("three operands") { CHECK(!parse("(p & q & r)").has_value()); }
}

TEST_CASE("rendering: primitive style") {
  CHECK(render(Formula::imp(P(), Q())) == "(p o q*)*");
  CHECK(render(Formula::star(Formula::tensor(P(), Q()))) == "(p & q)*");
  CHECK(render(Formula::star(Formula::star(P()))) == "p**");
}

TEST_CASE("rendering: sugared style re-sugars maximal patterns") {
  auto sug = [](const Formula& f) { return render(f, RenderStyle::Sugared); };
  CHECK(sug(Formula::star(Formula::circ(P(), Formula::star(P())))) ==
        "(p => p)");
  CHECK(sug(Formula::imp(P(), Q())) == "(p => q)");
  CHECK(sug(Formula::eqv(P(), Q())) == "(p <=> q)");
  CHECK(sug(Formula::oplus(P(), Q())) == "(p (+) q)");
  // The equivalence pattern wins over rendering its two implication halves.
  CHECK(sug(Formula::eqv(Formula::imp(P(), Q()), P())) ==
        "((p => q) <=> p)");
  // Inequivalence is Star(eqv); the star child is an eqv-shaped tensor, so
  // it renders as the sugared equivalence with a postfix star.
  CHECK(sug(Formula::neq(P(), Q())) == "(p <=> q)*");
  // The hook expands to an oplus over a starred left operand.
  CHECK(sug(Formula::hook(P(), Q())) == "(p* (+) q)");
  // A non-implication circ under star stays primitive.
  CHECK(sug(Formula::star(Formula::circ(P(), Q()))) == "(p o q)*");
}

TEST_CASE("property: parse after render is the identity, both styles") {
  std::mt19937 rng(20260822);
  for (int i = 0; i < 400; ++i) {
    Formula f = testutil::random_formula(rng, 6);
    CAPTURE(render(f));
    CHECK(must_parse(render(f, RenderStyle::Primitive)) == f);
    CHECK(must_parse(render(f, RenderStyle::Sugared)) == f);
  }
}

TEST_CASE("substitution is simultaneous") {
  std::map<std::string, Formula> swap{{"p", Q()}, {"q", P()}};
  CHECK(substitute(Formula::tensor(P(), Q()), swap) ==
        Formula::tensor(Q(), P()));
  // p -> q with p := q would capture under sequential substitution.
  Formula f = Formula::circ(P(), Formula::star(Q()));
  CHECK(substitute(f, swap) == Formula::circ(Q(), Formula::star(P())));
}

TEST_CASE("property: substitution distributes over the constructors") {
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    Formula a = testutil::random_formula(rng, 4);
    Formula b = testutil::random_formula(rng, 4);
    std::map<std::string, Formula> sub{{"p", testutil::random_formula(rng, 3)},
                                       {"q", Formula::star(P())}};
    CHECK(substitute(Formula::tensor(a, b), sub) ==
          Formula::tensor(substitute(a, sub), substitute(b, sub)));
    CHECK(substitute(Formula::circ(a, b), sub) ==
          Formula::circ(substitute(a, sub), substitute(b, sub)));
    CHECK(substitute(Formula::star(a), sub) ==
          Formula::star(substitute(a, sub)));
  }
}

TEST_CASE("subterm_at walks child indices") {
  Formula f = must_parse("((p & q) o r*)");
  CHECK(*subterm_at(f, {}) == f);
  CHECK(*subterm_at(f, {0}) == Formula::tensor(P(), Q()));
  CHECK(*subterm_at(f, {0, 1}) == Q());
  CHECK(*subterm_at(f, {1, 0}) == Formula::var("r"));
  CHECK(!subterm_at(f, {2}).has_value());
  CHECK(!subterm_at(f, {0, 0, 0}).has_value());
}

TEST_CASE("replace_at rewrites all addressed equal occurrences") {
  Formula f = must_parse("((p & q) o (p & q))");
  auto r = replace_at(f, {{0}, {1}}, P());
  REQUIRE(r.has_value());
  CHECK(*r == Formula::circ(P(), P()));

  // Addressing only one occurrence leaves the other alone.
  auto r1 = replace_at(f, {{0}}, Formula::var("z"));
  REQUIRE(r1.has_value());
  CHECK(*r1 == must_parse("(z o (p & q))"));

  SUBCASE("invalid position is rejected") {
    auto bad = replace_at(f, {{0, 0, 0, 0}}, P());
    REQUIRE(!bad.has_value());
    CHECK(bad.error().find("invalid position") != std::string::npos);
  }
  SUBCASE("unequal addressed subterms are rejected") {
    auto bad = replace_at(f, {{0, 0}, {0, 1}}, P());
    REQUIRE(!bad.has_value());
    CHECK(bad.error().find("differ") != std::string::npos);
  }
}

TEST_CASE("occurrences finds every position in preorder") {
  Formula f = must_parse("((p & p) o p*)");
  auto occ = occurrences(f, P());
  REQUIRE(occ.size() == 3);
  CHECK(occ[0] == Path{0, 0});
  CHECK(occ[1] == Path{0, 1});
  CHECK(occ[2] == Path{1, 0});
  CHECK(occurrences(f, f) == std::vector<Path>{{}});
  CHECK(occurrences(f, Formula::var("z")).empty());
}

TEST_CASE("left_chain folds to the left") {
  std::vector<Formula> fs{P(), Q(), Formula::var("r")};
  auto r = left_chain(fs, Formula::Kind::Tensor);
  REQUIRE(r.has_value());
  CHECK(*r == must_parse("((p & q) & r)"));
  CHECK(!left_chain({}, Formula::Kind::Tensor).has_value());
}

TEST_CASE("variables are reported sorted and deduplicated") {
  Formula f = must_parse("((z & a) o (a (+) m_2))");
  CHECK(variables(f) == std::vector<std::string>{"a", "m_2", "z"});
}
