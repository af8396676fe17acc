#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "ihxlab/canonical.hpp"
#include "ihxlab/enumerate.hpp"
#include "ihxlab/errors.hpp"

using namespace ihxlab;

namespace {

TrivalentGraph theta(bool oriented = false) {
    return TrivalentGraph::from_vertex_pairs(2, {{0, 1}, {0, 1}, {0, 1}}, oriented);
}
TrivalentGraph dumbbell(bool oriented = false) {
    return TrivalentGraph::from_vertex_pairs(2, {{0, 0}, {0, 1}, {1, 1}}, oriented);
}

struct Relabel {
    std::vector<std::uint32_t> vmap;
    std::vector<std::array<std::uint8_t, 3>> smap;
    int parity = 1;
};

Relabel random_relabel(std::uint32_t n, std::mt19937_64& rng) {
    Relabel r;
    r.vmap.resize(n);
    std::iota(r.vmap.begin(), r.vmap.end(), 0u);
    std::shuffle(r.vmap.begin(), r.vmap.end(), rng);
    r.smap.resize(n);
    for (auto& s : r.smap) {
        std::array<std::uint8_t, 3> p{0, 1, 2};
        std::shuffle(p.begin(), p.end(), rng);
        s = p;
        r.parity *= permutation_sign({p[0], p[1], p[2]});
    }
    return r;
}

// Multiplicity matrix minimized over all vertex permutations.
std::vector<std::uint32_t> brute_certificate(const TrivalentGraph& g) {
    const std::uint32_t n = g.vertex_count();
    std::vector<std::uint32_t> perm(n), best;
    std::iota(perm.begin(), perm.end(), 0u);
    do {
        std::vector<std::uint32_t> cert;
        for (std::uint32_t i = 0; i < n; ++i) {
            for (std::uint32_t j = i; j < n; ++j) cert.push_back(g.multiplicity(perm[i], perm[j]));
        }
        if (best.empty() || cert < best) best = cert;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

void matchings(std::vector<FlagId> free, std::vector<Edge>& acc, std::vector<std::vector<Edge>>& out) {
    if (free.empty()) {
        out.push_back(acc);
        return;
    }
    FlagId a = free[0];
    for (std::size_t k = 1; k < free.size(); ++k) {
        std::vector<FlagId> rest;
        for (std::size_t j = 1; j < free.size(); ++j) {
            if (j != k) rest.push_back(free[j]);
        }
        acc.emplace_back(a, free[k]);
        matchings(rest, acc, out);
        acc.pop_back();
    }
}

// Parities of all flag bijections that are graph automorphisms.
std::set<int> automorphism_parities(const TrivalentGraph& g) {
    const std::uint32_t n = g.vertex_count();
    std::set<int> out;
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<std::array<std::uint8_t, 3>> slot_perms;
    std::array<std::uint8_t, 3> p{0, 1, 2};
    do slot_perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    do {
        std::uint64_t total = 1;
        for (std::uint32_t i = 0; i < n; ++i) total *= 6;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::vector<std::array<std::uint8_t, 3>> smap(n);
            std::uint64_t c = code;
            int parity = 1;
            for (std::uint32_t v = 0; v < n; ++v) {
                smap[v] = slot_perms[c % 6];
                c /= 6;
                parity *= permutation_sign({smap[v][0], smap[v][1], smap[v][2]});
            }
            if (g.relabeled(perm, smap) == g) out.insert(parity);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace

TEST_CASE("theta and dumbbell classes") {
    auto t = canonicalize(theta());
    auto d = canonicalize(dumbbell());
    CHECK(t.encoding != d.encoding);
    CHECK(t.degree == 1);
    CHECK(t.sign == 1);
    CHECK(canonicalize(dumbbell(true)).sign == 0);
    CHECK(canonicalize(theta(true)).sign != 0);
    CHECK(canonicalize(TrivalentGraph(0, {}, false)).encoding == "tg1 vertices=0 oriented=0\n");
}

TEST_CASE("canonical encoding is relabeling invariant") {
    std::mt19937_64 rng(7);
    for (std::uint32_t m = 1; m <= 3; ++m) {
        for (const auto& c : enumerate(m)) {
            const auto enc = c.cls.encoding;
            CHECK(canonicalize(c.representative).encoding == enc);
            for (int k = 0; k < 100; ++k) {
                auto r = random_relabel(c.representative.vertex_count(), rng);
                CHECK(canonicalize(c.representative.relabeled(r.vmap, r.smap)).encoding == enc);
            }
        }
    }
}

TEST_CASE("oriented sign is multiplicative along relabelings") {
    std::mt19937_64 rng(11);
    for (std::uint32_t m = 1; m <= 3; ++m) {
        for (const auto& c : enumerate(m, {.oriented = true})) {
            const auto& g = c.representative;
            const int base = canonicalize(g).sign;
            for (int k = 0; k < 50; ++k) {
                auto r = random_relabel(g.vertex_count(), rng);
                auto h = g.relabeled(r.vmap, r.smap);
                auto ch = canonicalize_detailed(h);
                CHECK(ch.cls.encoding == c.cls.encoding);
                CHECK(ch.cls.sign == base * r.parity);
                CHECK(ch.representative == g);
            }
        }
    }
}

TEST_CASE("enumeration matches brute-force matching oracle for m <= 2") {
    for (std::uint32_t m = 1; m <= 2; ++m) {
        std::vector<FlagId> flags(6 * m);
        std::iota(flags.begin(), flags.end(), 0u);
        std::vector<std::vector<Edge>> all;
        std::vector<Edge> acc;
        matchings(flags, acc, all);
        CHECK(all.size() == (m == 1 ? 15u : 10395u));
        std::set<std::vector<std::uint32_t>> any, conn, loopfree, conn_loopfree;
        std::set<std::string> encodings;
        for (const auto& es : all) {
            auto g = TrivalentGraph::from_edges(2 * m, es, false);
            auto cert = brute_certificate(g);
            any.insert(cert);
            if (g.is_connected()) conn.insert(cert);
            if (!g.has_loop()) loopfree.insert(cert);
            if (g.is_connected() && !g.has_loop()) conn_loopfree.insert(cert);
            encodings.insert(canonicalize(g).encoding);
        }
        CHECK(encodings.size() == any.size());
        CHECK(enumerate(m).size() == any.size());
        CHECK(enumerate(m, {.connected_only = true}).size() == conn.size());
        CHECK(enumerate(m, {.allow_loops = false}).size() == loopfree.size());
        CHECK(enumerate(m, {.connected_only = true, .allow_loops = false}).size() == conn_loopfree.size());
    }
    CHECK(enumerate(1, {.connected_only = true}).size() == 2);
    CHECK(enumerate(1, {.connected_only = true, .allow_loops = false}).size() == 1);
    CHECK(enumerate(2).size() == 8);
    CHECK(enumerate(0).size() == 1);
    CHECK(enumerate(0, {.connected_only = true, .allow_loops = false, .oriented = true}).size() == 1);
}

TEST_CASE("connected class counts for degrees up to 5") {
    const std::size_t expected[] = {0, 2, 5, 17, 71, 388};
    for (std::uint32_t m = 1; m <= 5; ++m) CHECK(connected_classes(m).size() == expected[m]);
}

TEST_CASE("AS degeneracy matches the automorphism parity oracle") {
    for (std::uint32_t m = 1; m <= 2; ++m) {
        for (const auto& c : enumerate(m, {.oriented = true})) {
            auto parities = automorphism_parities(c.representative);
            bool degenerate = parities.count(-1) > 0;
            CHECK(c.cls.degenerate() == degenerate);
        }
    }
}
