#include "ihxlab/structure.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "ihxlab/errors.hpp"

namespace ihxlab {

std::optional<std::uint32_t> girth(const TrivalentGraph& g) {
    if (g.empty()) throw PreconditionError("girth of the empty graph");
    if (g.has_loop()) return 1;
    const std::uint32_t n = g.vertex_count();
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = u + 1; v < n; ++v) {
            if (g.multiplicity(u, v) > 1) return 2;
        }
    }
    std::optional<std::uint32_t> best;
    for (std::uint32_t root = 0; root < n; ++root) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::queue<std::uint32_t> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            auto v = q.front();
            q.pop();
            for (std::uint32_t s = 0; s < 3; ++s) {
                auto w = flag_vertex(g.partner(make_flag(v, s)));
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = static_cast<int>(v);
                    q.push(w);
                } else if (parent[v] != static_cast<int>(w)) {
                    auto len = static_cast<std::uint32_t>(dist[v] + dist[w] + 1);
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

IEmbedding embedding_of_edge(const TrivalentGraph& g, std::uint32_t edge_index) {
    const auto edges = g.edges();
    if (edge_index >= edges.size()) throw PreconditionError("edge index out of range");
    auto [f, h] = edges[edge_index];
    if (flag_vertex(f) == flag_vertex(h)) throw PreconditionError("an I-embedding needs a non-loop edge");
    IEmbedding e;
    e.edge = edge_index;
    e.eu = f;
    e.ev = h;
    const auto u = flag_vertex(f), s = flag_slot(f);
    const auto v = flag_vertex(h), t = flag_slot(h);
    e.a = {make_flag(u, (s + 1) % 3), make_flag(u, (s + 2) % 3), make_flag(v, (t + 1) % 3),
           make_flag(v, (t + 2) % 3)};
    return e;
}

bool is_IH0(const TrivalentGraph& g, const IEmbedding& emb) {
    std::set<std::pair<FlagId, FlagId>> seen;
    for (auto f : emb.a) {
        auto p = g.partner(f);
        if (!seen.emplace(std::min(f, p), std::max(f, p)).second) return false;
    }
    return true;
}

std::vector<IEmbedding> find_I_embeddings(const TrivalentGraph& g, bool restrict_IH0) {
    std::vector<IEmbedding> out;
    const auto edges = g.edges();
    for (std::uint32_t k = 0; k < edges.size(); ++k) {
        if (flag_vertex(edges[k].first) == flag_vertex(edges[k].second)) continue;
        auto e = embedding_of_edge(g, k);
        if (restrict_IH0 && !is_IH0(g, e)) continue;
        out.push_back(e);
    }
    return out;
}

TrivalentGraph build_wheel(std::uint32_t n, const std::vector<std::uint32_t>& sigma) {
    if (n == 0) throw PreconditionError("wheel size must be positive");
    if (sigma.size() != n) throw PreconditionError("leg permutation has wrong length");
    {
        auto sorted = sigma;
        std::sort(sorted.begin(), sorted.end());
        for (std::uint32_t i = 0; i < n; ++i) {
            if (sorted[i] != i) throw PreconditionError("leg assignment is not a permutation");
        }
    }
    if (n == 1) return TrivalentGraph::from_vertex_pairs(2, {{0, 0}, {0, 1}, {1, 1}});
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
    if (n == 2) {
        pairs.emplace_back(0, 1);
        return TrivalentGraph::from_vertex_pairs(2, pairs);
    }
    // leaf k of the caterpillar is a flag of tree vertex leaf_vertex[k]
    std::vector<std::uint32_t> leaf_vertex(n);
    const std::uint32_t c1 = n, clast = 2 * n - 3;
    leaf_vertex[0] = c1;
    leaf_vertex[1] = c1;
    for (std::uint32_t k = 2; k + 2 < n; ++k) leaf_vertex[k] = n + k - 1;
    leaf_vertex[n - 2] = clast;
    leaf_vertex[n - 1] = clast;
    for (std::uint32_t c = c1; c < clast; ++c) pairs.emplace_back(c, c + 1);
    for (std::uint32_t i = 0; i < n; ++i) pairs.emplace_back(i, leaf_vertex[sigma[i]]);
    return TrivalentGraph::from_vertex_pairs(2 * n - 2, pairs);
}

TrivalentGraph build_wheel(std::uint32_t n) {
    std::vector<std::uint32_t> id(n);
    std::iota(id.begin(), id.end(), 0u);
    return build_wheel(n, id);
}

TrivalentGraph build_E(std::uint32_t n) {
    if (n == 0) throw PreconditionError("E_n needs n >= 1");
    const std::uint32_t v = 2 * n;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t k = 0; k < v; ++k) pairs.emplace_back(k, (k + 1) % v);
    for (std::uint32_t k = 0; k < n; ++k) pairs.emplace_back(k, v - 1 - k);
    return TrivalentGraph::from_vertex_pairs(v, pairs);
}

TrivalentGraph petersen() {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t i = 0; i < 5; ++i) {
        pairs.emplace_back(i, (i + 1) % 5);
        pairs.emplace_back(i, i + 5);
        pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return TrivalentGraph::from_vertex_pairs(10, pairs);
}

TrivalentGraph complete_graph_k4() {
    return TrivalentGraph::from_vertex_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

TrivalentGraph double_pentagon() {
    enum : std::uint32_t { a, b, c, d, e, f, h, z };
    return TrivalentGraph::from_vertex_pairs(
        8, {{a, b}, {b, c}, {c, d}, {d, e}, {e, a}, {c, f}, {f, h}, {h, a}, {b, z}, {z, d}, {z, f}, {e, h}});
}

std::vector<std::vector<std::uint32_t>> simple_cycles(const TrivalentGraph& g, std::uint32_t k) {
    if (k < 3) throw PreconditionError("simple_cycles needs k >= 3");
    const std::uint32_t n = g.vertex_count();
    std::set<std::vector<std::uint32_t>> found;
    std::vector<std::uint32_t> path;
    std::vector<bool> on(n, false);
    auto neighbors = [&](std::uint32_t v) {
        std::vector<std::uint32_t> out;
        for (std::uint32_t s = 0; s < 3; ++s) out.push_back(flag_vertex(g.partner(make_flag(v, s))));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };
    // smallest vertex first, second vertex smaller than last
    auto dfs = [&](auto&& self, std::uint32_t v) -> void {
        if (path.size() == k) {
            auto nb = neighbors(v);
            if (std::binary_search(nb.begin(), nb.end(), path[0]) && path[1] < path.back()) {
                found.insert(path);
            }
            return;
        }
        for (auto w : neighbors(v)) {
            if (w <= path[0] || on[w]) continue;
            on[w] = true;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            on[w] = false;
        }
    };
    for (std::uint32_t s = 0; s < n; ++s) {
        path = {s};
        on[s] = true;
        dfs(dfs, s);
        on[s] = false;
    }
    return {found.begin(), found.end()};
}

std::uint64_t moore_bound(std::uint32_t g) {
    if (g == 0) return 0;
    if (g % 2 == 1) return 3 * (std::uint64_t{1} << ((g - 1) / 2)) - 2;
    return (std::uint64_t{1} << (g / 2 + 1)) - 2;
}

std::uint64_t claimed_girth_bound(std::uint32_t g) {
    if (g % 2 == 1) return (std::uint64_t{1} << ((g + 3) / 2)) - 2;
    return 3 * (std::uint64_t{1} << (g / 2)) - 2;
}

} // namespace ihxlab
