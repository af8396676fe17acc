#include "ihxlab/graph.hpp"

#include <algorithm>
#include <sstream>

#include "ihxlab/errors.hpp"

namespace ihxlab {

TrivalentGraph::TrivalentGraph(std::uint32_t vertex_count, std::vector<FlagId> partner, bool oriented)
    : vertex_count_(vertex_count), partner_(std::move(partner)), oriented_(oriented) {
    if (vertex_count_ % 2 != 0) {
        throw StructuralError("trivalent graph must have an even number of vertices, got " +
                              std::to_string(vertex_count_));
    }
    if (partner_.size() != 3ull * vertex_count_) {
        throw StructuralError("pairing must cover exactly 3 flags per vertex");
    }
    for (FlagId f = 0; f < partner_.size(); ++f) {
        FlagId p = partner_[f];
        if (p >= partner_.size()) throw StructuralError("flag paired with nonexistent flag");
        if (p == f) throw StructuralError("flag " + std::to_string(f) + " paired with itself");
        if (partner_[p] != f) {
            throw StructuralError("flag " + std::to_string(p) + " appears in two edges");
        }
    }
}

TrivalentGraph TrivalentGraph::from_edges(std::uint32_t vertex_count, const std::vector<Edge>& edges,
                                          bool oriented) {
    constexpr FlagId unset = ~FlagId{0};
    std::vector<FlagId> partner(3ull * vertex_count, unset);
    for (auto [a, b] : edges) {
        if (a >= partner.size() || b >= partner.size()) {
            throw StructuralError("edge refers to a flag outside the graph");
        }
        if (a == b) throw StructuralError("edge joins a flag to itself");
        if (partner[a] != unset || partner[b] != unset) {
            throw StructuralError("flag appears in two edges");
        }
        partner[a] = b;
        partner[b] = a;
    }
    for (FlagId f = 0; f < partner.size(); ++f) {
        if (partner[f] == unset) {
            throw StructuralError("unmatched flag " + std::to_string(flag_vertex(f)) + "." +
                                  std::to_string(flag_slot(f)));
        }
    }
    return TrivalentGraph(vertex_count, std::move(partner), oriented);
}

TrivalentGraph TrivalentGraph::from_vertex_pairs(
    std::uint32_t vertex_count, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
    bool oriented) {
    std::vector<std::uint32_t> used(vertex_count, 0);
    std::vector<Edge> edges;
    auto next = [&](std::uint32_t v) {
        if (v >= vertex_count) throw StructuralError("vertex index out of range");
        if (used[v] == 3) throw StructuralError("vertex " + std::to_string(v) + " has degree > 3");
        return make_flag(v, used[v]++);
    };
    for (auto [u, v] : pairs) {
        FlagId a = next(u);
        FlagId b = next(v);
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return from_edges(vertex_count, edges, oriented);
}

std::vector<Edge> TrivalentGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (FlagId f = 0; f < partner_.size(); ++f) {
        if (f < partner_[f]) out.emplace_back(f, partner_[f]);
    }
    return out;
}

std::vector<std::uint32_t> TrivalentGraph::edge_index_of_flags() const {
    std::vector<std::uint32_t> idx(partner_.size());
    std::uint32_t k = 0;
    for (FlagId f = 0; f < partner_.size(); ++f) {
        if (f < partner_[f]) {
            idx[f] = k;
            idx[partner_[f]] = k;
            ++k;
        }
    }
    return idx;
}

bool TrivalentGraph::has_loop() const { return loop_count() > 0; }

std::uint32_t TrivalentGraph::loop_count() const {
    std::uint32_t n = 0;
    for (FlagId f = 0; f < partner_.size(); ++f) {
        if (f < partner_[f] && is_loop(f)) ++n;
    }
    return n;
}

std::uint32_t TrivalentGraph::multiplicity(std::uint32_t u, std::uint32_t v) const {
    std::uint32_t n = 0;
    for (std::uint32_t s = 0; s < 3; ++s) {
        FlagId f = make_flag(u, s);
        FlagId p = partner_[f];
        if (flag_vertex(p) == v && (u != v || f < p)) ++n;
    }
    return n;
}

std::vector<std::vector<std::uint32_t>> TrivalentGraph::components() const {
    std::vector<int> comp(vertex_count_, -1);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t s = 0; s < vertex_count_; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::uint32_t> members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t k = 0; k < members.size(); ++k) {
            std::uint32_t v = members[k];
            for (std::uint32_t slot = 0; slot < 3; ++slot) {
                std::uint32_t w = flag_vertex(partner_[make_flag(v, slot)]);
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    members.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool TrivalentGraph::is_connected() const { return components().size() <= 1; }

TrivalentGraph TrivalentGraph::subgraph(const std::vector<std::uint32_t>& vertices) const {
    std::vector<std::uint32_t> index(vertex_count_, ~0u);
    for (std::uint32_t k = 0; k < vertices.size(); ++k) index[vertices[k]] = k;
    std::vector<FlagId> partner(3 * vertices.size());
    for (std::uint32_t k = 0; k < vertices.size(); ++k) {
        for (std::uint32_t s = 0; s < 3; ++s) {
            FlagId p = partner_[make_flag(vertices[k], s)];
            std::uint32_t w = index[flag_vertex(p)];
            if (w == ~0u) throw PreconditionError("subgraph vertex set is not closed under adjacency");
            partner[make_flag(k, s)] = make_flag(w, flag_slot(p));
        }
    }
    return TrivalentGraph(static_cast<std::uint32_t>(vertices.size()), std::move(partner), oriented_);
}

TrivalentGraph TrivalentGraph::with_orientation(bool oriented) const {
    TrivalentGraph g = *this;
    g.oriented_ = oriented;
    return g;
}

TrivalentGraph TrivalentGraph::reversed_at(std::uint32_t v) const {
    if (v >= vertex_count_) throw PreconditionError("reversed_at: vertex out of range");
    std::vector<std::uint32_t> vmap(vertex_count_);
    std::vector<std::array<std::uint8_t, 3>> smap(vertex_count_, {0, 1, 2});
    for (std::uint32_t k = 0; k < vertex_count_; ++k) vmap[k] = k;
    smap[v] = {0, 2, 1};
    return relabeled(vmap, smap);
}

TrivalentGraph TrivalentGraph::relabeled(const std::vector<std::uint32_t>& vertex_map,
                                         const std::vector<std::array<std::uint8_t, 3>>& slot_maps) const {
    if (vertex_map.size() != vertex_count_ || slot_maps.size() != vertex_count_) {
        throw StructuralError("relabeling size mismatch");
    }
    auto image = [&](FlagId f) {
        std::uint32_t v = flag_vertex(f);
        return make_flag(vertex_map[v], slot_maps[v][flag_slot(f)]);
    };
    std::vector<FlagId> partner(partner_.size());
    for (FlagId f = 0; f < partner_.size(); ++f) partner[image(f)] = image(partner_[f]);
    return TrivalentGraph(vertex_count_, std::move(partner), oriented_);
}

std::string TrivalentGraph::to_tg1() const {
    std::ostringstream os;
    os << "tg1 vertices=" << vertex_count_ << " oriented=" << (oriented_ ? 1 : 0) << '\n';
    for (auto [a, b] : edges()) {
        os << "edge " << flag_vertex(a) << '.' << flag_slot(a) << ' ' << flag_vertex(b) << '.'
           << flag_slot(b) << '\n';
    }
    return os.str();
}

namespace {

FlagId parse_flag(const std::string& tok, std::uint32_t vertex_count) {
    auto dot = tok.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 2 != tok.size()) {
        throw StructuralError("malformed flag '" + tok + "'");
    }
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < dot; ++i) {
        if (tok[i] < '0' || tok[i] > '9') throw StructuralError("malformed flag '" + tok + "'");
        v = v * 10 + static_cast<std::uint32_t>(tok[i] - '0');
    }
    char s = tok[dot + 1];
    if (s < '0' || s > '2') throw StructuralError("slot must be 0..2 in '" + tok + "'");
    if (v >= vertex_count) throw StructuralError("vertex out of range in '" + tok + "'");
    return make_flag(v, static_cast<std::uint32_t>(s - '0'));
}

} // namespace

TrivalentGraph TrivalentGraph::parse_tg1(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
    }
    std::istringstream head(line);
    std::string magic, vtok, otok;
    head >> magic >> vtok >> otok;
    if (magic != "tg1" || vtok.rfind("vertices=", 0) != 0 || otok.rfind("oriented=", 0) != 0) {
        throw StructuralError("expected 'tg1 vertices=<n> oriented=<0|1>' header");
    }
    std::uint32_t n = 0;
    try {
        n = static_cast<std::uint32_t>(std::stoul(vtok.substr(9)));
    } catch (...) {
        throw StructuralError("bad vertex count in TG1 header");
    }
    std::string o = otok.substr(9);
    if (o != "0" && o != "1") throw StructuralError("oriented flag must be 0 or 1");
    std::vector<Edge> edges;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string kw, a, b, extra;
        ls >> kw >> a >> b;
        if (kw != "edge" || b.empty() || (ls >> extra)) {
            throw StructuralError("malformed TG1 edge line '" + line + "'");
        }
        FlagId fa = parse_flag(a, n);
        FlagId fb = parse_flag(b, n);
        edges.emplace_back(std::min(fa, fb), std::max(fa, fb));
    }
    return from_edges(n, edges, o == "1");
}

TrivalentGraph disjoint_union(const TrivalentGraph& a, const TrivalentGraph& b) {
    if (a.oriented() != b.oriented()) throw TypeMismatchError("disjoint_union: orientedness differs");
    std::vector<FlagId> partner(a.pairing());
    const FlagId shift = a.flag_count();
    for (FlagId p : b.pairing()) partner.push_back(p + shift);
    return TrivalentGraph(a.vertex_count() + b.vertex_count(), std::move(partner), a.oriented());
}

int permutation_sign(const std::vector<std::uint32_t>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

} // namespace ihxlab
