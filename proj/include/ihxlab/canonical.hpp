#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ihxlab/graph.hpp"

namespace ihxlab {

/// Isomorphism class of a trivalent graph.
///
/// `encoding` is the canonical TG1 text. For oriented graphs the canonical
/// representative carries the orientation given by its slot order, and `sign`
/// relates the input to that representative under AS: input = sign * rep.
/// An AS-degenerate class (an automorphism reversing an odd number of vertex
/// orientations) has sign 0. Unoriented graphs always have sign +1.
struct CanonicalClass {
    std::string encoding;
    int sign = 1;
    std::uint32_t degree = 0;

    bool degenerate() const { return sign == 0; }

    friend bool operator==(const CanonicalClass&, const CanonicalClass&) = default;
};

struct Canonicalization {
    CanonicalClass cls;
    TrivalentGraph representative;
    /// input flag -> representative flag
    std::vector<FlagId> flag_map;
};

/// Orders classes by degree, then encoding.
struct ClassOrder {
    bool operator()(const CanonicalClass& a, const CanonicalClass& b) const {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.encoding < b.encoding;
    }
};

Canonicalization canonicalize_detailed(const TrivalentGraph& g);
CanonicalClass canonicalize(const TrivalentGraph& g);

/// Orientation-compatible isomorphism for oriented graphs (ignoring AS sign).
bool isomorphic(const TrivalentGraph& a, const TrivalentGraph& b);

/// Product of per-vertex slot-permutation signs of a flag bijection a -> b.
int orientation_parity(const std::vector<FlagId>& flag_map);

} // namespace ihxlab
