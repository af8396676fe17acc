#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ihxlab {

/// Flags are numbered 3*vertex + slot.
using FlagId = std::uint32_t;

constexpr std::uint32_t flag_vertex(FlagId f) { return f / 3; }
constexpr std::uint32_t flag_slot(FlagId f) { return f % 3; }
constexpr FlagId make_flag(std::uint32_t vertex, std::uint32_t slot) { return 3 * vertex + slot; }

/// An edge as an ordered flag pair with first < second.
using Edge = std::pair<FlagId, FlagId>;

/// Trivalent multigraph stored as a fixed-point-free involution on flags.
///
/// Loops (both flags at one vertex) and parallel edges are allowed. When
/// `oriented()` is true the slot order 0,1,2 at each vertex is its cyclic
/// orientation.
class TrivalentGraph {
public:
    TrivalentGraph() = default;
    /// Throws StructuralError unless `partner` is a perfect matching on 3*vertex_count flags.
    TrivalentGraph(std::uint32_t vertex_count, std::vector<FlagId> partner, bool oriented);

    static TrivalentGraph from_edges(std::uint32_t vertex_count, const std::vector<Edge>& edges,
                                     bool oriented);
    /// Builds from vertex pairs, assigning slots in order of appearance.
    static TrivalentGraph from_vertex_pairs(std::uint32_t vertex_count,
                                            const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
                                            bool oriented = false);

    std::uint32_t vertex_count() const { return vertex_count_; }
    std::uint32_t flag_count() const { return 3 * vertex_count_; }
    std::uint32_t edge_count() const { return 3 * vertex_count_ / 2; }
    std::uint32_t degree() const { return vertex_count_ / 2; }
    bool oriented() const { return oriented_; }
    bool empty() const { return vertex_count_ == 0; }

    FlagId partner(FlagId f) const { return partner_[f]; }
    const std::vector<FlagId>& pairing() const { return partner_; }

    /// Edges sorted by first flag.
    std::vector<Edge> edges() const;
    /// Index of the edge containing f in `edges()` order.
    std::vector<std::uint32_t> edge_index_of_flags() const;

    bool is_loop(FlagId f) const { return flag_vertex(f) == flag_vertex(partner_[f]); }
    bool has_loop() const;
    std::uint32_t loop_count() const;
    /// Number of edges joining u and v (u != v), or loops at u when u == v.
    std::uint32_t multiplicity(std::uint32_t u, std::uint32_t v) const;

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    std::vector<std::vector<std::uint32_t>> components() const;
    bool is_connected() const;
    /// Induced subgraph on a union of components, vertices renumbered in the given order.
    TrivalentGraph subgraph(const std::vector<std::uint32_t>& vertices) const;

    TrivalentGraph with_orientation(bool oriented) const;
    /// Reverses the cyclic order at v (swaps slots 1 and 2).
    TrivalentGraph reversed_at(std::uint32_t v) const;
    /// vertex_map[v] is the new index of v; slot_maps[v][s] is the new slot of (v,s).
    TrivalentGraph relabeled(const std::vector<std::uint32_t>& vertex_map,
                             const std::vector<std::array<std::uint8_t, 3>>& slot_maps) const;

    /// TG1 text with edges sorted by (v,s,w,t).
    std::string to_tg1() const;
    static TrivalentGraph parse_tg1(const std::string& text);

    friend bool operator==(const TrivalentGraph&, const TrivalentGraph&) = default;

private:
    std::uint32_t vertex_count_ = 0;
    std::vector<FlagId> partner_;
    bool oriented_ = false;
};

TrivalentGraph disjoint_union(const TrivalentGraph& a, const TrivalentGraph& b);

/// Sign of a permutation given as an image vector.
int permutation_sign(const std::vector<std::uint32_t>& perm);

} // namespace ihxlab
