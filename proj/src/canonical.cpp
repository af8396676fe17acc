#include "ihxlab/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ihxlab/errors.hpp"

namespace ihxlab {

namespace {

using Cert = std::vector<std::uint8_t>;

// Multiplicity matrix of one connected component; diagonal holds loop counts.
struct Multigraph {
    std::uint32_t n = 0;
    std::vector<std::uint8_t> m;

    std::uint8_t at(std::uint32_t u, std::uint32_t v) const { return m[u * n + v]; }
};

Multigraph multigraph_of(const TrivalentGraph& g) {
    Multigraph mg;
    mg.n = g.vertex_count();
    mg.m.assign(mg.n * mg.n, 0);
    for (auto [a, b] : g.edges()) {
        std::uint32_t u = flag_vertex(a), v = flag_vertex(b);
        if (u == v) {
            ++mg.m[u * mg.n + u];
        } else {
            ++mg.m[u * mg.n + v];
            ++mg.m[v * mg.n + u];
        }
    }
    return mg;
}

using Cells = std::vector<std::vector<std::uint32_t>>;

void refine(const Multigraph& g, Cells& cells) {
    std::vector<std::uint32_t> cell_of(g.n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint32_t c = 0; c < cells.size(); ++c) {
            for (auto v : cells[c]) cell_of[v] = c;
        }
        const std::size_t k = cells.size();
        Cells next;
        next.reserve(g.n);
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>> keyed;
            keyed.reserve(cell.size());
            for (auto v : cell) {
                std::vector<std::uint32_t> key(k + 1, 0);
                key[0] = g.at(v, v);
                for (std::uint32_t w = 0; w < g.n; ++w) {
                    if (w != v && g.at(v, w)) key[1 + cell_of[w]] += g.at(v, w);
                }
                keyed.emplace_back(std::move(key), v);
            }
            std::stable_sort(keyed.begin(), keyed.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            std::size_t start = next.size();
            next.push_back({keyed[0].second});
            for (std::size_t i = 1; i < keyed.size(); ++i) {
                if (keyed[i].first != keyed[i - 1].first) next.push_back({});
                next.back().push_back(keyed[i].second);
            }
            if (next.size() - start > 1) changed = true;
        }
        cells = std::move(next);
    }
}

struct Search {
    const Multigraph& g;
    Cert best;
    std::vector<std::vector<std::uint32_t>> best_leaves;  // vertex -> label
    bool keep_all;

    void leaf(const Cells& cells) {
        std::vector<std::uint32_t> label(g.n);
        for (std::uint32_t i = 0; i < cells.size(); ++i) label[cells[i][0]] = i;
        std::vector<std::uint32_t> inv(g.n);
        for (std::uint32_t v = 0; v < g.n; ++v) inv[label[v]] = v;
        Cert cert;
        cert.reserve(g.n * (g.n + 1) / 2);
        for (std::uint32_t i = 0; i < g.n; ++i) {
            for (std::uint32_t j = i; j < g.n; ++j) cert.push_back(g.at(inv[i], inv[j]));
        }
        if (best_leaves.empty() || cert < best) {
            best = std::move(cert);
            best_leaves.clear();
            best_leaves.push_back(std::move(label));
        } else if (cert == best && keep_all) {
            best_leaves.push_back(std::move(label));
        }
    }

    void run(Cells cells) {
        refine(g, cells);
        auto it = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
        if (it == cells.end()) {
            leaf(cells);
            return;
        }
        const std::size_t pos = static_cast<std::size_t>(it - cells.begin());
        const auto target = *it;
        for (auto v : target) {
            Cells next;
            next.reserve(cells.size() + 1);
            next.insert(next.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(pos));
            next.push_back({v});
            std::vector<std::uint32_t> rest;
            for (auto w : target) {
                if (w != v) rest.push_back(w);
            }
            next.push_back(std::move(rest));
            next.insert(next.end(), cells.begin() + static_cast<std::ptrdiff_t>(pos) + 1, cells.end());
            run(std::move(next));
        }
    }
};

struct ComponentResult {
    std::vector<std::uint32_t> vertices;  // original vertex ids
    Cert cert;
    std::uint32_t n = 0;
    std::vector<std::vector<std::uint32_t>> leaves;  // local vertex -> local label
};

// Canonical multigraph from a certificate; slots are assigned in edge order.
// Returns the edges with flags in a per-label-pair queue layout.
struct RepLayout {
    std::vector<Edge> edges;                                           // global flags
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Edge>> by_pair;  // (lo,hi) labels
};

void append_component(const Cert& cert, std::uint32_t n, std::uint32_t offset, RepLayout& layout,
                      std::vector<std::uint32_t>& next_slot) {
    std::size_t k = 0;
    std::vector<std::vector<std::uint8_t>> m(n, std::vector<std::uint8_t>(n, 0));
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i; j < n; ++j) m[i][j] = cert[k++];
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint32_t gi = offset + i;
        for (std::uint8_t r = 0; r < m[i][i]; ++r) {
            FlagId a = make_flag(gi, next_slot[gi]++);
            FlagId b = make_flag(gi, next_slot[gi]++);
            layout.edges.emplace_back(a, b);
            layout.by_pair[{gi, gi}].emplace_back(a, b);
        }
        for (std::uint32_t j = i + 1; j < n; ++j) {
            const std::uint32_t gj = offset + j;
            for (std::uint8_t r = 0; r < m[i][j]; ++r) {
                FlagId a = make_flag(gi, next_slot[gi]++);
                FlagId b = make_flag(gj, next_slot[gj]++);
                layout.edges.emplace_back(a, b);
                layout.by_pair[{gi, gj}].emplace_back(a, b);
            }
        }
    }
}

// Maps input flags to representative flags for the vertex labelling `label`
// (input vertex -> representative vertex).
std::vector<FlagId> flag_map_for(const TrivalentGraph& g, const std::vector<std::uint32_t>& label,
                                 const RepLayout& layout) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> used;
    std::vector<FlagId> fmap(g.flag_count());
    for (auto [a, b] : g.edges()) {
        std::uint32_t la = label[flag_vertex(a)], lb = label[flag_vertex(b)];
        auto key = std::make_pair(std::min(la, lb), std::max(la, lb));
        auto it = layout.by_pair.find(key);
        if (it == layout.by_pair.end()) throw std::logic_error("canonical layout mismatch");
        std::size_t& k = used[key];
        const Edge& e = it->second.at(k++);
        if (la <= lb) {
            fmap[a] = e.first;
            fmap[b] = e.second;
        } else {
            fmap[a] = e.second;
            fmap[b] = e.first;
        }
    }
    return fmap;
}

int vertex_parity(const std::vector<FlagId>& fmap, std::uint32_t v) {
    std::vector<std::uint32_t> p(3);
    for (std::uint32_t s = 0; s < 3; ++s) p[s] = flag_slot(fmap[make_flag(v, s)]);
    return permutation_sign(p);
}

} // namespace

int orientation_parity(const std::vector<FlagId>& flag_map) {
    int sign = 1;
    for (std::uint32_t v = 0; v < flag_map.size() / 3; ++v) sign *= vertex_parity(flag_map, v);
    return sign;
}

Canonicalization canonicalize_detailed(const TrivalentGraph& g) {
    const auto comps = g.components();
    std::vector<ComponentResult> results;
    results.reserve(comps.size());
    for (const auto& verts : comps) {
        TrivalentGraph sub = g.subgraph(verts);
        Multigraph mg = multigraph_of(sub);
        Search s{mg, {}, {}, g.oriented() && !sub.has_loop()};
        Cells start(1);
        start[0].resize(mg.n);
        std::iota(start[0].begin(), start[0].end(), 0u);
        s.run(std::move(start));
        results.push_back({verts, std::move(s.best), mg.n, std::move(s.best_leaves)});
    }
    std::vector<std::size_t> order(results.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (results[a].n != results[b].n) return results[a].n < results[b].n;
        return results[a].cert < results[b].cert;
    });

    RepLayout layout;
    std::vector<std::uint32_t> next_slot(g.vertex_count(), 0);
    std::vector<std::uint32_t> offsets(results.size());
    std::uint32_t offset = 0;
    for (auto idx : order) {
        offsets[idx] = offset;
        append_component(results[idx].cert, results[idx].n, offset, layout, next_slot);
        offset += results[idx].n;
    }
    std::sort(layout.edges.begin(), layout.edges.end());
    TrivalentGraph rep = TrivalentGraph::from_edges(g.vertex_count(), layout.edges, g.oriented());

    auto global_label = [&](std::size_t comp, const std::vector<std::uint32_t>& local) {
        std::vector<std::uint32_t> label(g.vertex_count(), 0);
        for (std::uint32_t k = 0; k < results[comp].vertices.size(); ++k) {
            label[results[comp].vertices[k]] = offsets[comp] + local[k];
        }
        return label;
    };

    std::vector<std::uint32_t> label(g.vertex_count(), 0);
    for (std::size_t c = 0; c < results.size(); ++c) {
        auto part = global_label(c, results[c].leaves.front());
        for (auto v : results[c].vertices) label[v] = part[v];
    }

    Canonicalization out;
    out.flag_map = flag_map_for(g, label, layout);
    out.cls.encoding = rep.to_tg1();
    out.cls.degree = g.degree();
    out.cls.sign = 1;
    if (g.oriented()) {
        if (g.has_loop()) {
            out.cls.sign = 0;
        } else {
            int sign = orientation_parity(out.flag_map);
            // Any best leaf differs from the first by an automorphism; a parity
            // change means an orientation-reversing automorphism exists.
            for (std::size_t c = 0; c < results.size() && sign != 0; ++c) {
                const auto& verts = results[c].vertices;
                auto base_map = out.flag_map;
                int base = 1;
                for (auto v : verts) base *= vertex_parity(base_map, v);
                for (std::size_t l = 1; l < results[c].leaves.size(); ++l) {
                    auto alt = label;
                    auto part = global_label(c, results[c].leaves[l]);
                    for (auto v : verts) alt[v] = part[v];
                    auto fmap = flag_map_for(g, alt, layout);
                    int p = 1;
                    for (auto v : verts) p *= vertex_parity(fmap, v);
                    if (p != base) {
                        sign = 0;
                        break;
                    }
                }
            }
            out.cls.sign = sign;
        }
    }
    out.representative = std::move(rep);
    return out;
}

CanonicalClass canonicalize(const TrivalentGraph& g) { return canonicalize_detailed(g).cls; }

bool isomorphic(const TrivalentGraph& a, const TrivalentGraph& b) {
    return a.oriented() == b.oriented() && canonicalize(a).encoding == canonicalize(b).encoding;
}

} // namespace ihxlab
