#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ihxlab/canonical.hpp"
#include "ihxlab/enumerate.hpp"
#include "ihxlab/errors.hpp"
#include "ihxlab/ordering.hpp"
#include "ihxlab/structure.hpp"

using namespace ihxlab;

namespace {

TrivalentGraph theta() { return TrivalentGraph::from_vertex_pairs(2, {{0, 1}, {0, 1}, {0, 1}}); }
TrivalentGraph dumbbell() { return TrivalentGraph::from_vertex_pairs(2, {{0, 0}, {0, 1}, {1, 1}}); }

int inversion_sign(const std::vector<std::uint32_t>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    }
    return inv % 2 ? -1 : 1;
}

std::vector<TrivalentGraph> small_graphs(bool oriented) {
    std::vector<TrivalentGraph> out;
    for (std::uint32_t m = 1; m <= 3; ++m) {
        for (const auto& c : enumerate(m, {.oriented = oriented})) out.push_back(c.representative);
    }
    return out;
}

} // namespace

TEST_CASE("admissibility sign on theta matches an inversion count") {
    auto g = theta();
    TotalOrdering tau{{0, 1}, {{0, 1, 2}, {0, 1, 2}}, {}};
    for (auto [a, b] : g.edges()) tau.f_plus.push_back(flag_vertex(a) == 0 ? a : b);
    // positions in the vertex-blocked sequence of 0.0 1.0 0.1 1.1 0.2 1.2
    CHECK(admissibility_sign(g, tau, AdmissibilityMode::wedge) == inversion_sign({0, 3, 1, 4, 2, 5}));
}

TEST_CASE("single transpositions negate the admissibility sign") {
    std::mt19937_64 rng(3);
    for (const auto& g : small_graphs(false)) {
        auto tau = random_admissible(g, AdmissibilityMode::wedge, rng);
        REQUIRE(admissibility_sign(g, tau, AdmissibilityMode::wedge) == 1);
        auto t1 = tau;
        flip_edge(g, t1, static_cast<std::uint32_t>(rng() % g.edge_count()));
        CHECK(admissibility_sign(g, t1, AdmissibilityMode::wedge) == -1);
        auto t2 = tau;
        auto v = static_cast<std::uint32_t>(rng() % g.vertex_count());
        std::swap(t2.flag_order[v][0], t2.flag_order[v][2]);
        CHECK(admissibility_sign(g, t2, AdmissibilityMode::wedge) == -1);
    }
}

TEST_CASE("admissibility sign ignores the edge enumeration order") {
    std::mt19937_64 rng(5);
    for (bool oriented : {false, true}) {
        auto mode = oriented ? AdmissibilityMode::sym : AdmissibilityMode::wedge;
        for (const auto& g : small_graphs(oriented)) {
            auto tau = random_admissible(g, mode, rng);
            if (rng() % 2) flip_edge(g, tau, 0);
            const int base = admissibility_sign(g, tau, mode);
            std::vector<std::uint32_t> order(g.edge_count());
            std::iota(order.begin(), order.end(), 0u);
            for (int k = 0; k < 20; ++k) {
                std::shuffle(order.begin(), order.end(), rng);
                CHECK(admissibility_sign(g, tau, mode, order) == base);
            }
        }
    }
}

TEST_CASE("make_admissible yields sign +1") {
    for (bool oriented : {false, true}) {
        auto mode = oriented ? AdmissibilityMode::sym : AdmissibilityMode::wedge;
        auto graphs = small_graphs(oriented);
        REQUIRE(graphs.size() >= 20);
        for (std::size_t k = 0; k < 20; ++k) {
            CHECK(admissibility_sign(graphs[k], make_admissible(graphs[k], mode), mode) == 1);
        }
    }
    CHECK(admissibility_sign(theta(), make_admissible(theta(), AdmissibilityMode::wedge),
                             AdmissibilityMode::wedge) == 1);
    CHECK(admissibility_sign(dumbbell(), make_admissible(dumbbell(), AdmissibilityMode::wedge),
                             AdmissibilityMode::wedge) == 1);
}

TEST_CASE("ordering validation") {
    auto g = theta();
    TotalOrdering bad{{0}, {{0, 1, 2}}, {}};
    CHECK_THROWS_AS(admissibility_sign(g, bad, AdmissibilityMode::wedge), StructuralError);
    auto tau = make_admissible(g, AdmissibilityMode::wedge);
    CHECK_THROWS_AS(admissibility_sign(g, tau, AdmissibilityMode::sym), PreconditionError);
    auto go = g.with_orientation(true);
    auto t2 = make_admissible(go, AdmissibilityMode::sym);
    std::swap(t2.flag_order[0][0], t2.flag_order[0][1]);
    CHECK_THROWS_AS(admissibility_sign(go, t2, AdmissibilityMode::sym), PreconditionError);
}

TEST_CASE("girth examples and bounds") {
    CHECK(girth(dumbbell()) == 1u);
    CHECK(girth(theta()) == 2u);
    CHECK(girth(complete_graph_k4()) == 3u);
    CHECK(girth(petersen()) == 5u);
    CHECK(girth(build_E(2)) == 2u);
    CHECK(girth(build_E(3)) == 2u);
    CHECK(girth(build_E(4)) == 2u);
    CHECK_THROWS_AS(girth(TrivalentGraph(0, {}, false)), PreconditionError);
    for (std::uint32_t m = 1; m <= 5; ++m) {
        for (const auto& c : connected_classes(m)) {
            auto gr = girth(c.representative);
            REQUIRE(gr.has_value());
            CHECK(*gr <= 2 * m);
            if (!c.has_loop) CHECK(c.representative.vertex_count() >= moore_bound(*gr));
        }
    }
    CHECK(moore_bound(5) == 10);
    CHECK(moore_bound(6) == 14);
    CHECK(claimed_girth_bound(5) == 14);
    CHECK(petersen().vertex_count() < claimed_girth_bound(5));
}

TEST_CASE("I-embeddings") {
    CHECK(find_I_embeddings(theta()).size() == 3);
    CHECK(find_I_embeddings(theta(), true).empty());
    CHECK(find_I_embeddings(dumbbell()).size() == 1);
    CHECK(find_I_embeddings(dumbbell(), true).empty());
    auto e2 = build_E(2);
    auto ih0 = find_I_embeddings(e2, true);
    CHECK(!ih0.empty());
    for (const auto& e : ih0) {
        CHECK(e.u() != e.v());
        CHECK(is_IH0(e2, e));
    }
    auto emb = embedding_of_edge(complete_graph_k4(), 0);
    CHECK(flag_vertex(emb.a[0]) == emb.u());
    CHECK(flag_vertex(emb.a[3]) == emb.v());
}

TEST_CASE("E_n and wheel closures") {
    CHECK(canonicalize(build_E(1)).encoding == canonicalize(theta()).encoding);
    for (std::uint32_t n = 1; n <= 5; ++n) {
        auto e = build_E(n);
        CHECK(e.degree() == n);
        CHECK(e.is_connected());
        CHECK_FALSE(e.has_loop());
    }
    CHECK(canonicalize(build_wheel(2)).encoding == canonicalize(theta()).encoding);
    CHECK(canonicalize(build_wheel(1)).encoding == canonicalize(dumbbell()).encoding);
    CHECK(canonicalize(build_wheel(3)).encoding == canonicalize(complete_graph_k4()).encoding);
    CHECK(canonicalize(build_wheel(3, {1, 0, 2})).encoding == canonicalize(build_wheel(3)).encoding);
    CHECK(canonicalize(build_wheel(3, {1, 2, 0})).encoding == canonicalize(build_wheel(3)).encoding);
    for (std::uint32_t n = 2; n <= 6; ++n) {
        auto w = build_wheel(n);
        CHECK(w.degree() == n - 1);
        CHECK(w.is_connected());
        CHECK_FALSE(w.has_loop());
        CHECK(*girth(w) <= n);
    }
}

TEST_CASE("double pentagon and cycle search") {
    auto dp = double_pentagon();
    CHECK(dp.degree() == 4);
    auto pent = simple_cycles(dp, 5);
    bool found = false;
    for (const auto& p : pent) {
        // contains the path a-b-c
        for (std::size_t i = 0; i < 5; ++i) {
            if (p[i] == 1 && ((p[(i + 1) % 5] == 2 && p[(i + 4) % 5] == 0) ||
                              (p[(i + 1) % 5] == 0 && p[(i + 4) % 5] == 2))) {
                found = true;
            }
        }
    }
    CHECK(found);
    CHECK(simple_cycles(petersen(), 5).size() == 12);
    CHECK(simple_cycles(complete_graph_k4(), 3).size() == 4);
    CHECK(simple_cycles(complete_graph_k4(), 4).size() == 3);
}
