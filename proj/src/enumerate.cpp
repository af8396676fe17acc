#include "ihxlab/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "ihxlab/config.hpp"
#include "ihxlab/errors.hpp"

namespace ihxlab {

namespace {

std::mutex cache_mutex;

ClassInfo make_info(const TrivalentGraph& g) {
    auto c = canonicalize_detailed(g);
    ClassInfo info;
    info.cls = c.cls;
    info.representative = c.representative;
    info.connected = g.is_connected();
    info.has_loop = g.has_loop();
    return info;
}

void check_cap(std::size_t count, std::uint32_t m) {
    if (count > limits().class_cap) {
        throw CapacityError("enumeration at degree " + std::to_string(m) + " exceeds class cap " +
                            std::to_string(limits().class_cap));
    }
}

// Degree-1 graphs from all perfect matchings on 6 flags.
std::vector<ClassInfo> degree_one() {
    std::map<std::string, ClassInfo> seen;
    std::vector<FlagId> flags{0, 1, 2, 3, 4, 5};
    for (FlagId b = 1; b < 6; ++b) {
        std::vector<FlagId> rest;
        for (FlagId f = 1; f < 6; ++f) {
            if (f != b) rest.push_back(f);
        }
        for (std::size_t k = 1; k < 4; ++k) {
            std::vector<FlagId> last;
            for (std::size_t j = 1; j < 4; ++j) {
                if (j != k) last.push_back(rest[j]);
            }
            auto g = TrivalentGraph::from_edges(
                2, {{0, b}, {rest[0], rest[k]}, {last[0], last[1]}}, false);
            if (!g.is_connected()) continue;
            auto info = make_info(g);
            seen.emplace(info.cls.encoding, std::move(info));
        }
    }
    std::vector<ClassInfo> out;
    for (auto& [k, v] : seen) out.push_back(std::move(v));
    return out;
}

// All one-degree extensions of a connected graph: subdivide two edges and
// join the new vertices, subdivide one edge twice and add a double edge, or
// hang a looped vertex on a subdivided edge. Every connected graph of degree
// at least 2 arises this way from a connected graph one degree lower.
void extend(const TrivalentGraph& g, std::map<std::string, ClassInfo>& seen) {
    const std::uint32_t n = g.vertex_count();
    const std::uint32_t x = n, y = n + 1;
    const auto edges = g.edges();
    auto build = [&](std::vector<Edge> es) {
        auto h = TrivalentGraph::from_edges(n + 2, es, false);
        auto info = make_info(h);
        seen.emplace(info.cls.encoding, std::move(info));
    };
    auto without = [&](std::initializer_list<std::size_t> drop) {
        std::vector<Edge> es;
        for (std::size_t k = 0; k < edges.size(); ++k) {
            if (std::find(drop.begin(), drop.end(), k) == drop.end()) es.push_back(edges[k]);
        }
        return es;
    };
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [p, q] = edges[i];
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [r, s] = edges[j];
            auto es = without({i, j});
            es.emplace_back(p, make_flag(x, 0));
            es.emplace_back(q, make_flag(x, 1));
            es.emplace_back(r, make_flag(y, 0));
            es.emplace_back(s, make_flag(y, 1));
            es.emplace_back(make_flag(x, 2), make_flag(y, 2));
            build(std::move(es));
        }
        {
            auto es = without({i});
            es.emplace_back(p, make_flag(x, 0));
            es.emplace_back(make_flag(x, 1), make_flag(y, 1));
            es.emplace_back(q, make_flag(y, 0));
            es.emplace_back(make_flag(x, 2), make_flag(y, 2));
            build(std::move(es));
        }
        {
            auto es = without({i});
            es.emplace_back(p, make_flag(x, 0));
            es.emplace_back(q, make_flag(x, 1));
            es.emplace_back(make_flag(x, 2), make_flag(y, 0));
            es.emplace_back(make_flag(y, 1), make_flag(y, 2));
            build(std::move(es));
        }
    }
}

// Unoriented classes of degree m, all components, loops allowed.
void combine(std::uint32_t remaining, std::uint32_t min_degree, std::size_t min_index,
             const TrivalentGraph& acc, std::uint32_t total, std::map<std::string, ClassInfo>& out) {
    if (remaining == 0) {
        auto info = make_info(acc);
        out.emplace(info.cls.encoding, std::move(info));
        check_cap(out.size(), total);
        return;
    }
    for (std::uint32_t d = min_degree; d <= remaining; ++d) {
        const auto& conn = connected_classes(d);
        for (std::size_t k = (d == min_degree ? min_index : 0); k < conn.size(); ++k) {
            combine(remaining - d, d, k, disjoint_union(acc, conn[k].representative), total, out);
        }
    }
}

} // namespace

const std::vector<ClassInfo>& connected_classes(std::uint32_t m) {
    static std::map<std::uint32_t, std::vector<ClassInfo>> cache;
    {
        std::lock_guard lock(cache_mutex);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    std::vector<ClassInfo> result;
    if (m == 0) {
        // The empty graph counts as connected (it is the unit).
        result.push_back(make_info(TrivalentGraph(0, {}, false)));
    } else if (m == 1) {
        result = degree_one();
    } else {
        const auto& prev = connected_classes(m - 1);
        std::map<std::string, ClassInfo> seen;
        for (const auto& c : prev) {
            extend(c.representative, seen);
            check_cap(seen.size(), m);
        }
        for (auto& [k, v] : seen) result.push_back(std::move(v));
    }
    std::lock_guard lock(cache_mutex);
    return cache.emplace(m, std::move(result)).first->second;
}

std::vector<ClassInfo> enumerate(std::uint32_t m, const EnumerationFilter& filter) {
    std::vector<ClassInfo> base;
    if (filter.connected_only || m == 0) {
        base = connected_classes(m);
    } else {
        static std::map<std::uint32_t, std::vector<ClassInfo>> all_cache;
        std::unique_lock lock(cache_mutex);
        auto it = all_cache.find(m);
        if (it == all_cache.end()) {
            lock.unlock();
            std::map<std::string, ClassInfo> out;
            combine(m, 1, 0, TrivalentGraph(0, {}, false), m, out);
            std::vector<ClassInfo> v;
            for (auto& [k, info] : out) v.push_back(std::move(info));
            lock.lock();
            it = all_cache.emplace(m, std::move(v)).first;
        }
        base = it->second;
    }
    std::vector<ClassInfo> out;
    for (auto& info : base) {
        if (!filter.allow_loops && info.has_loop) continue;
        if (filter.oriented) {
            auto oriented = make_info(info.representative.with_orientation(true));
            oriented.connected = info.connected;
            out.push_back(std::move(oriented));
        } else {
            out.push_back(std::move(info));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ClassInfo& a, const ClassInfo& b) { return a.cls.encoding < b.cls.encoding; });
    return out;
}

} // namespace ihxlab
