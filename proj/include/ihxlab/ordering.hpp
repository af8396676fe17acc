#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "ihxlab/graph.hpp"

namespace ihxlab {

enum class AdmissibilityMode { wedge, sym };

/// Vertex order, per-vertex flag order and per-edge orientation.
struct TotalOrdering {
    /// vertex_order[k] is the k-th vertex.
    std::vector<std::uint32_t> vertex_order;
    /// flag_order[v][j] is the slot of the j-th flag at vertex v.
    std::vector<std::array<std::uint8_t, 3>> flag_order;
    /// f_plus[k] is the f+ flag of edge k in `TrivalentGraph::edges()` order.
    std::vector<FlagId> f_plus;

    /// Flags in vertex-blocked order f_1(v_1) f_2(v_1) ... f_3(v_2m).
    std::vector<FlagId> flag_sequence() const;
};

/// Throws StructuralError if tau does not fit g; for sym mode also
/// PreconditionError unless g is oriented and every flag order is a rotation.
void validate(const TrivalentGraph& g, const TotalOrdering& tau, AdmissibilityMode mode);

/// Sign of the permutation taking the vertex-blocked flag sequence to the
/// edge-blocked sequence f+(e_1) f-(e_1) ... using edges in `edge_order`.
int admissibility_sign(const TrivalentGraph& g, const TotalOrdering& tau, AdmissibilityMode mode,
                       std::span<const std::uint32_t> edge_order);
int admissibility_sign(const TrivalentGraph& g, const TotalOrdering& tau, AdmissibilityMode mode);

/// Identity vertex and slot orders, f+ the smaller flag of each edge; if the
/// sign is -1 the first edge (smallest flag) is flipped.
TotalOrdering make_admissible(const TrivalentGraph& g, AdmissibilityMode mode);

/// Uniformly scrambled admissible ordering (rotations only in sym mode).
TotalOrdering random_admissible(const TrivalentGraph& g, AdmissibilityMode mode, std::mt19937_64& rng);

/// Flips f+/f- on edge k.
void flip_edge(const TrivalentGraph& g, TotalOrdering& tau, std::uint32_t k);

} // namespace ihxlab
