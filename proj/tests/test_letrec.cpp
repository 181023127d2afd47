#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "generators.hpp"
#include "ltg/letrec.hpp"
#include "ltg/prefix.hpp"
#include "ltg/transforms.hpp"

using namespace ltg;
using namespace fixtures;

TEST_CASE("parse_term builds the expected syntax trees") {
    LetrecTerm t = parse_term("\\x. x");
    CHECK(t.kind == LetrecTerm::Kind::Abs);
    CHECK(t.name == "x");
    REQUIRE(t.children.size() == 1);
    CHECK(t.children[0].kind == LetrecTerm::Kind::Var);
    CHECK(t.children[0].name == "x");

    // Unicode lambda and left-associative application.
    LetrecTerm u = parse_term("λx. x x x");
    REQUIRE(u.children.size() == 1);
    const LetrecTerm& body = u.children[0];
    CHECK(body.kind == LetrecTerm::Kind::App);
    CHECK(body.children[0].kind == LetrecTerm::Kind::App);
    CHECK(body.children[1].kind == LetrecTerm::Kind::Var);

    LetrecTerm r = parse_term(FixRun::source);
    CHECK(r.kind == LetrecTerm::Kind::Letrec);
    CHECK(r.binding_names == std::vector<std::string>{"f", "g"});
    REQUIRE(r.children.size() == 3);
    CHECK(r.children[2].kind == LetrecTerm::Kind::Var);
    CHECK(r.children[2].name == "f");
}

TEST_CASE("parse_term rejects ill-formed and open terms") {
    CHECK_THROWS_WITH_AS(parse_term("\\x."), doctest::Contains("SyntaxError"), Error);
    CHECK_THROWS_WITH_AS(parse_term("(\\x. x"), doctest::Contains("SyntaxError"), Error);
    CHECK_THROWS_WITH_AS(parse_term("letrec in x"), doctest::Contains("SyntaxError"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_term("x"), doctest::Contains("UnboundVariable"), Error);
    CHECK_THROWS_WITH_AS(parse_term("\\x. y"), doctest::Contains("UnboundVariable"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_term("letrec f = \\x. x; f = \\y. y in f"),
                         doctest::Contains("DuplicateBinding"), Error);
}

TEST_CASE("term_to_graph on the catalog terms") {
    CHECK(are_isomorphic(term_to_graph(parse_term("\\x. x")), fix_id()));
    CHECK(are_isomorphic(term_to_graph(parse_term(FixRun::source)), fix_run().G0));

    // The letrec node is shared between both use sites before any collapse.
    TermGraph g = term_to_graph(parse_term("letrec i = \\x. x in i i"));
    CHECK(g.lab(g.root()) == Label::App);
    CHECK(g.args(g.root())[0] == g.args(g.root())[1]);
    CHECK(g.lab(g.args(g.root())[0]) == Label::Lam);
    CHECK(g.size() == 3);
}

TEST_CASE("term_to_graph resolves aliases and drops unused bindings") {
    CHECK(are_isomorphic(term_to_graph(parse_term("letrec f = g; g = \\x. x in f")),
                         fix_id()));
    CHECK(are_isomorphic(
        term_to_graph(parse_term("letrec f = \\x. x; h = \\y. y y in f")), fix_id()));
}

TEST_CASE("black holes are rejected") {
    CHECK_THROWS_WITH_AS(term_to_graph(parse_term("letrec x = x in x")),
                         doctest::Contains("BlackHole"), Error);
    CHECK_THROWS_WITH_AS(term_to_graph(parse_term("letrec f = g; g = f in f")),
                         doctest::Contains("BlackHole"), Error);
    // A cycle through an abstraction is fine.
    CHECK_NOTHROW(term_to_graph(parse_term("letrec f = \\x. f x in f")));
}

TEST_CASE("alpha invariance and determinism") {
    CHECK(term_to_graph(parse_term("\\x. \\y. x")).canonical_key() ==
          term_to_graph(parse_term("\\a. \\b. a")).canonical_key());
    CHECK(term_to_graph(parse_term("letrec f = \\x. f x in f")).canonical_key() ==
          term_to_graph(parse_term("letrec g = \\z. g z in g")).canonical_key());
    CHECK(term_to_graph(parse_term(FixRun::source)).canonical_key() ==
          term_to_graph(parse_term(FixRun::source)).canonical_key());
}

TEST_CASE("constructed graphs are eager-scope lambda term graphs") {
    std::mt19937 rng(20240829);
    for (int it = 0; it < 150; ++it) {
        TermGraph g = term_to_graph(generators::random_term(rng, 8));
        REQUIRE(is_lambda_tg(g));
        CHECK(is_eager_scope(g));
        CHECK(is_fully_backlinked(g));
        CHECK(are_bisimilar(collapse(g).first, g));
    }
}

TEST_CASE("unfolding equivalence") {
    auto eq = [](const std::string& a, const std::string& b) {
        return unfolding_equivalent(parse_term(a), parse_term(b));
    };
    CHECK(eq("\\x. x", "\\y. y"));
    CHECK_FALSE(eq("\\x. x", "\\x. \\y. y"));
    CHECK(eq("letrec f = \\x. f x in f", "\\x. (letrec f = \\y. f y in f) x"));
    CHECK(eq(FixRun::source, FixRun::source));
    CHECK_FALSE(eq(FixRun::source, "letrec f = \\x. f x in f"));

    // Reflexive and symmetric over a random population.
    std::mt19937 rng(20240830);
    for (int it = 0; it < 40; ++it) {
        LetrecTerm t1 = generators::random_term(rng, 6);
        LetrecTerm t2 = generators::random_term(rng, 6);
        CHECK(unfolding_equivalent(t1, t1));
        CHECK(unfolding_equivalent(t1, t2) == unfolding_equivalent(t2, t1));
    }
}
