#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ihxlab/graph.hpp"

namespace ihxlab {

/// Shortest cycle length; 1 for a 1-loop, 2 for a double edge. nullopt for a forest
/// (never happens for nonempty trivalent graphs). Throws PreconditionError on the empty graph.
std::optional<std::uint32_t> girth(const TrivalentGraph& g);

/// An internal edge e = (eu, ev) with eu < ev, u = vertex(eu) != v = vertex(ev),
/// and the external flags a[0], a[1] at u (slots s+1, s+2) and a[2], a[3] at v
/// (slots t+1, t+2), slots taken mod 3.
struct IEmbedding {
    std::uint32_t edge = 0;  // index in edges()
    FlagId eu = 0, ev = 0;
    std::array<FlagId, 4> a{};

    std::uint32_t u() const { return flag_vertex(eu); }
    std::uint32_t v() const { return flag_vertex(ev); }
};

IEmbedding embedding_of_edge(const TrivalentGraph& g, std::uint32_t edge_index);
/// True when the four external flags lie on pairwise distinct edges.
bool is_IH0(const TrivalentGraph& g, const IEmbedding& emb);
std::vector<IEmbedding> find_I_embeddings(const TrivalentGraph& g, bool restrict_IH0 = false);

/// Closed graph containing an n-wheel w_0..w_{n-1} whose leg at w_i goes to leaf
/// sigma[i] of a caterpillar tree with n-2 internal vertices. Wheel vertices are
/// 0..n-1, tree vertices n..2n-3. n = 2 joins the two legs (theta); n = 1 gives
/// the dumbbell. Degree n-1 for n >= 2.
TrivalentGraph build_wheel(std::uint32_t n, const std::vector<std::uint32_t>& sigma);
TrivalentGraph build_wheel(std::uint32_t n);

/// Circle p_0..p_{2n-1} with chords p_k p_{2n-1-k}.
TrivalentGraph build_E(std::uint32_t n);

TrivalentGraph petersen();
TrivalentGraph complete_graph_k4();

/// Degree-4 graph with pentagons a-b-c-d-e and a-b-c-f-h sharing edges ab and bc.
/// Vertices a,b,c,d,e,f,h,z = 0..7.
TrivalentGraph double_pentagon();

/// All cycles of length k (k >= 3) in a loop-free graph, each as a vertex sequence.
std::vector<std::vector<std::uint32_t>> simple_cycles(const TrivalentGraph& g, std::uint32_t k);

/// Classical cubic Moore bound on the vertex count for girth g.
std::uint64_t moore_bound(std::uint32_t g);
/// 2^{(g+3)/2}-2 for odd g, 3*2^{g/2}-2 for even g.
std::uint64_t claimed_girth_bound(std::uint32_t g);

} // namespace ihxlab
