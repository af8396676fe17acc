#include <doctest.h>

#include <random>

#include "ihxlab/enumerate.hpp"
#include "ihxlab/errors.hpp"
#include "ihxlab/polynomial.hpp"

using namespace ihxlab;

namespace {

TrivalentGraph theta(bool oriented = false) {
    return TrivalentGraph::from_vertex_pairs(2, {{0, 1}, {0, 1}, {0, 1}}, oriented);
}

GraphPolynomial random_poly(std::mt19937_64& rng, bool oriented, std::uint32_t max_degree = 2) {
    GraphPolynomial p(oriented);
    std::uniform_int_distribution<int> coef(-4, 4);
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < terms; ++k) {
        auto m = static_cast<std::uint32_t>(rng() % (max_degree + 1));
        auto cls = enumerate(m, {.oriented = oriented});
        const auto& c = cls[rng() % cls.size()];
        p.add_graph(c.representative, Rational(coef(rng), 1 + static_cast<int>(rng() % 3)));
    }
    return p;
}

} // namespace

TEST_CASE("additive structure") {
    std::mt19937_64 rng(1);
    auto p = random_poly(rng, false);
    CHECK(add(p, scale(-1, p)).empty());
    CHECK(scale(0, p).empty());
    auto t = GraphPolynomial::of(theta());
    auto tt = add(t, t);
    REQUIRE(tt.size() == 1);
    CHECK(tt.coefficient(theta()) == 2);
    CHECK_THROWS_AS(add(t, GraphPolynomial::of(theta(true))), TypeMismatchError);
    CHECK_THROWS_AS(multiply(t, GraphPolynomial::of(theta(true))), TypeMismatchError);
}

TEST_CASE("multiplication is disjoint union") {
    auto t = GraphPolynomial::of(theta());
    std::mt19937_64 rng(2);
    auto p = random_poly(rng, false);
    CHECK(multiply(GraphPolynomial::one(), p) == p);
    auto t2 = multiply(t, t);
    REQUIRE(t2.size() == 1);
    CHECK(t2.coefficient(disjoint_union(theta(), theta())) == 1);
    CHECK(t2.terms().begin()->first.degree == 2);
    for (int k = 0; k < 20; ++k) {
        auto a = random_poly(rng, k % 2 == 1);
        auto b = random_poly(rng, k % 2 == 1);
        CHECK(multiply(a, b) == multiply(b, a));
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 15; ++k) {
        bool o = k % 3 == 0;
        auto a = random_poly(rng, o), b = random_poly(rng, o), c = random_poly(rng, o);
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        CHECK(multiply(a, add(b, c)) == add(multiply(a, b), multiply(a, c)));
    }
}

TEST_CASE("homogeneous parts partition the terms") {
    auto t = GraphPolynomial::of(theta());
    CHECK(homogeneous_part(t, 1) == t);
    CHECK(homogeneous_part(t, 2).empty());
    std::mt19937_64 rng(4);
    for (int k = 0; k < 10; ++k) {
        auto p = random_poly(rng, false, 3);
        GraphPolynomial sum;
        for (std::uint32_t m = 0; m <= 3; ++m) sum = add(sum, homogeneous_part(p, m));
        CHECK(sum == p);
    }
}

TEST_CASE("AS is applied on insertion") {
    for (const auto& c : enumerate(2, {.oriented = true})) {
        if (c.cls.degenerate()) {
            CHECK(GraphPolynomial::of(c.representative).empty());
            continue;
        }
        auto p = GraphPolynomial::of(c.representative);
        auto flipped = c.representative.reversed_at(0);
        CHECK(p.coefficient(flipped) == -1);
        CHECK(add(p, GraphPolynomial::of(flipped)).empty());
    }
}

TEST_CASE("polynomial text round trip") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 10; ++k) {
        auto p = random_poly(rng, k % 2 == 0, 3);
        CHECK(GraphPolynomial::parse(p.to_text()) == p);
    }
    auto q = GraphPolynomial::parse("coeff=3/2 graph=tg1 vertices=2 oriented=0\nedge 0.0 1.1\nedge 0.1 1.0\nedge 0.2 1.2\n");
    CHECK(q.coefficient(theta()) == Rational(3, 2));
    CHECK_THROWS_AS(GraphPolynomial::parse("coeff=1 graph=tg1 vertices=2 oriented=0\nedge 0.0 1.1\n"), StructuralError);
    CHECK_THROWS_AS(GraphPolynomial::parse("bogus\n"), StructuralError);
}
