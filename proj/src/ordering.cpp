#include "ihxlab/ordering.hpp"

#include <algorithm>
#include <numeric>

#include "ihxlab/errors.hpp"

namespace ihxlab {

std::vector<FlagId> TotalOrdering::flag_sequence() const {
    std::vector<FlagId> seq;
    seq.reserve(3 * vertex_order.size());
    for (auto v : vertex_order) {
        for (std::uint32_t j = 0; j < 3; ++j) seq.push_back(make_flag(v, flag_order[v][j]));
    }
    return seq;
}

namespace {

bool is_rotation(const std::array<std::uint8_t, 3>& p) {
    return permutation_sign({p[0], p[1], p[2]}) == 1;
}

} // namespace

void validate(const TrivalentGraph& g, const TotalOrdering& tau, AdmissibilityMode mode) {
    const std::uint32_t n = g.vertex_count();
    if (tau.vertex_order.size() != n || tau.flag_order.size() != n || tau.f_plus.size() != g.edge_count()) {
        throw StructuralError("total ordering does not match graph size");
    }
    std::vector<bool> seen(n, false);
    for (auto v : tau.vertex_order) {
        if (v >= n || seen[v]) throw StructuralError("vertex order is not a permutation");
        seen[v] = true;
    }
    for (const auto& p : tau.flag_order) {
        if (std::max({p[0], p[1], p[2]}) > 2 || p[0] == p[1] || p[1] == p[2] || p[0] == p[2]) {
            throw StructuralError("flag order is not a permutation of the three slots");
        }
    }
    const auto edges = g.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (tau.f_plus[k] != edges[k].first && tau.f_plus[k] != edges[k].second) {
            throw StructuralError("edge orientation names a flag outside its edge");
        }
    }
    if (mode == AdmissibilityMode::sym) {
        if (!g.oriented()) throw PreconditionError("sym admissibility requires an oriented graph");
        for (const auto& p : tau.flag_order) {
            if (!is_rotation(p)) throw PreconditionError("flag order disagrees with the vertex orientation");
        }
    }
}

int admissibility_sign(const TrivalentGraph& g, const TotalOrdering& tau, AdmissibilityMode mode,
                       std::span<const std::uint32_t> edge_order) {
    validate(g, tau, mode);
    if (edge_order.size() != g.edge_count()) throw StructuralError("edge order has wrong length");
    const auto seq = tau.flag_sequence();
    std::vector<std::uint32_t> pos(g.flag_count());
    for (std::uint32_t k = 0; k < seq.size(); ++k) pos[seq[k]] = k;
    std::vector<bool> used(g.edge_count(), false);
    std::vector<std::uint32_t> perm;
    perm.reserve(seq.size());
    for (auto e : edge_order) {
        if (e >= g.edge_count() || used[e]) throw StructuralError("edge order is not a permutation");
        used[e] = true;
        FlagId plus = tau.f_plus[e];
        perm.push_back(pos[plus]);
        perm.push_back(pos[g.partner(plus)]);
    }
    return permutation_sign(perm);
}

int admissibility_sign(const TrivalentGraph& g, const TotalOrdering& tau, AdmissibilityMode mode) {
    std::vector<std::uint32_t> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0u);
    return admissibility_sign(g, tau, mode, order);
}

void flip_edge(const TrivalentGraph& g, TotalOrdering& tau, std::uint32_t k) {
    tau.f_plus.at(k) = g.partner(tau.f_plus[k]);
}

TotalOrdering make_admissible(const TrivalentGraph& g, AdmissibilityMode mode) {
    TotalOrdering tau;
    tau.vertex_order.resize(g.vertex_count());
    std::iota(tau.vertex_order.begin(), tau.vertex_order.end(), 0u);
    tau.flag_order.assign(g.vertex_count(), {0, 1, 2});
    for (auto [a, b] : g.edges()) tau.f_plus.push_back(a);
    if (!g.empty() && admissibility_sign(g, tau, mode) < 0) flip_edge(g, tau, 0);
    return tau;
}

TotalOrdering random_admissible(const TrivalentGraph& g, AdmissibilityMode mode, std::mt19937_64& rng) {
    TotalOrdering tau;
    tau.vertex_order.resize(g.vertex_count());
    std::iota(tau.vertex_order.begin(), tau.vertex_order.end(), 0u);
    std::shuffle(tau.vertex_order.begin(), tau.vertex_order.end(), rng);
    tau.flag_order.resize(g.vertex_count());
    for (auto& p : tau.flag_order) {
        p = {0, 1, 2};
        if (mode == AdmissibilityMode::sym) {
            std::rotate(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(rng() % 3), p.end());
        } else {
            std::shuffle(p.begin(), p.end(), rng);
        }
    }
    for (auto [a, b] : g.edges()) tau.f_plus.push_back(rng() % 2 ? a : b);
    if (!g.empty() && admissibility_sign(g, tau, mode) < 0) {
        flip_edge(g, tau, static_cast<std::uint32_t>(rng() % g.edge_count()));
    }
    return tau;
}

} // namespace ihxlab
