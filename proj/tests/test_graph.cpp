#include <doctest.h>

#include "ihxlab/errors.hpp"
#include "ihxlab/graph.hpp"

using namespace ihxlab;

TEST_CASE("theta and dumbbell basics") {
    auto theta = TrivalentGraph::from_vertex_pairs(2, {{0, 1}, {0, 1}, {0, 1}});
    CHECK(theta.degree() == 1);
    CHECK(theta.edge_count() == 3);
    CHECK_FALSE(theta.has_loop());
    CHECK(theta.multiplicity(0, 1) == 3);
    CHECK(theta.is_connected());

    auto dumbbell = TrivalentGraph::from_vertex_pairs(2, {{0, 0}, {0, 1}, {1, 1}});
    CHECK(dumbbell.loop_count() == 2);
    CHECK(dumbbell.multiplicity(0, 0) == 1);
    CHECK(dumbbell.multiplicity(0, 1) == 1);

    auto u = disjoint_union(theta, dumbbell);
    CHECK(u.components().size() == 2);
    CHECK(u.subgraph(u.components()[1]) == dumbbell);
}

TEST_CASE("tg1 round trip") {
    auto g = TrivalentGraph::from_vertex_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}}, true);
    auto text = g.to_tg1();
    CHECK(text.rfind("tg1 vertices=4 oriented=1\n", 0) == 0);
    CHECK(TrivalentGraph::parse_tg1(text) == g);
}

TEST_CASE("structural errors") {
    CHECK_THROWS_AS(TrivalentGraph(2, {1, 0, 3, 2, 5}, false), StructuralError);
    CHECK_THROWS_AS(TrivalentGraph(1, {1, 0, 2}, false), StructuralError);
    CHECK_THROWS_AS(TrivalentGraph::parse_tg1("tg1 vertices=2 oriented=0\nedge 0.0 1.0\n"), StructuralError);
    CHECK_THROWS_AS(TrivalentGraph::parse_tg1("tg1 vertices=2 oriented=0\nedge 0.0 0.0\n"), StructuralError);
    CHECK_THROWS_AS(TrivalentGraph::parse_tg1("tg1 vertices=2 oriented=0\nedge 0.0 1.3\n"), StructuralError);
    CHECK_THROWS_AS(TrivalentGraph::parse_tg1("graph 2\n"), StructuralError);
    CHECK_THROWS_AS(TrivalentGraph::from_vertex_pairs(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}}), StructuralError);
}

TEST_CASE("permutation sign and vertex reversal") {
    CHECK(permutation_sign({0, 1, 2}) == 1);
    CHECK(permutation_sign({1, 0, 2}) == -1);
    CHECK(permutation_sign({1, 2, 0}) == 1);
    auto theta = TrivalentGraph::from_vertex_pairs(2, {{0, 1}, {0, 1}, {0, 1}}, true);
    auto r = theta.reversed_at(0);
    CHECK(r.partner(make_flag(0, 1)) == make_flag(1, 2));
    CHECK(r.reversed_at(0) == theta);
}
