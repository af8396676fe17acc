#pragma once

#include <cstdint>
#include <vector>

#include "ihxlab/canonical.hpp"
#include "ihxlab/graph.hpp"

namespace ihxlab {

struct ClassInfo {
    CanonicalClass cls;
    /// Canonical representative; its orientation is the slot order when oriented.
    TrivalentGraph representative;
    bool connected = true;
    bool has_loop = false;
};

struct EnumerationFilter {
    bool connected_only = false;
    bool allow_loops = true;
    bool oriented = false;
};

/// One representative per isomorphism class of degree-m trivalent graphs that
/// passes the filter, sorted by encoding. For oriented enumeration AS-degenerate
/// classes are kept and carry sign 0.
/// Throws CapacityError when the class count exceeds limits().class_cap.
std::vector<ClassInfo> enumerate(std::uint32_t m, const EnumerationFilter& filter = {});

/// Connected unoriented classes of degree m (loops allowed), cached.
const std::vector<ClassInfo>& connected_classes(std::uint32_t m);

} // namespace ihxlab
