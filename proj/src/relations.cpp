#include "ihxlab/relations.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "ihxlab/config.hpp"
#include "ihxlab/enumerate.hpp"
#include "ihxlab/errors.hpp"

namespace ihxlab {

std::string RelationSpec::name() const {
    auto coeffs = [&] {
        return "(" + format_rational(a) + "," + format_rational(b) + "," + format_rational(c) + ")";
    };
    switch (kind) {
    case RelationKind::loop: return "loop";
    case RelationKind::IH0: return "ih0";
    case RelationKind::AS: return "as";
    case RelationKind::coefficients:
        if (a == 1 && b == 1 && c == 1) return "ihx";
        if (a == 1 && b == -1 && c == 0) return "ih";
        return "coeff" + coeffs();
    case RelationKind::oriented_coefficients:
        if (a == 1 && b == 1 && c == 1) return "as-ihx";
        return "as-coeff" + coeffs();
    }
    return "?";
}

namespace {

RelationSpec coefficient_spec(RelationKind kind, const std::string& tok, std::size_t open) {
    if (tok.back() != ')') throw StructuralError("unterminated coefficients in '" + tok + "'");
    std::stringstream ss(tok.substr(open + 1, tok.size() - open - 2));
    std::vector<Rational> c;
    std::string part;
    while (std::getline(ss, part, ',')) c.push_back(parse_rational(part));
    if (c.size() != 3) throw StructuralError("expected three coefficients in '" + tok + "'");
    return {kind, c[0], c[1], c[2]};
}

} // namespace

std::vector<RelationSpec> parse_relation_specs(const std::string& text) {
    std::vector<std::string> tokens(1);
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            tokens.emplace_back();
        } else if (ch != ' ') {
            tokens.back() += ch;
        }
    }
    std::vector<RelationSpec> out;
    for (const auto& tok : tokens) {
        if (tok.empty()) continue;
        if (tok == "ihx") out.push_back(RelationSpec::ihx());
        else if (tok == "ih") out.push_back(RelationSpec::ih());
        else if (tok == "ih0") out.push_back(RelationSpec::ih0());
        else if (tok == "loop") out.push_back(RelationSpec::loop());
        else if (tok == "as") out.push_back(RelationSpec::as());
        else if (tok == "as-ihx") out.push_back(RelationSpec::as_ihx());
        else if (tok.rfind("coeff(", 0) == 0) out.push_back(coefficient_spec(RelationKind::coefficients, tok, 5));
        else if (tok.rfind("as-coeff(", 0) == 0) out.push_back(coefficient_spec(RelationKind::oriented_coefficients, tok, 8));
        else throw StructuralError("unknown relation '" + tok + "'");
    }
    if (out.empty()) throw StructuralError("empty relation list");
    return out;
}

std::string spec_list_name(const std::vector<RelationSpec>& specs) {
    std::string s;
    for (const auto& r : specs) s += (s.empty() ? "" : ",") + r.name();
    return s;
}

std::array<int, 4> move_pattern(MoveShape shape, bool oriented) {
    switch (shape) {
    case MoveShape::I: return {0, 1, 2, 3};
    case MoveShape::H: return oriented ? std::array<int, 4>{3, 0, 1, 2} : std::array<int, 4>{0, 2, 3, 1};
    case MoveShape::X: return oriented ? std::array<int, 4>{0, 2, 3, 1} : std::array<int, 4>{0, 3, 1, 2};
    }
    return {0, 1, 2, 3};
}

int move_sign(MoveShape shape, bool oriented) {
    auto p = move_pattern(shape, oriented);
    return permutation_sign({static_cast<std::uint32_t>(p[0]), static_cast<std::uint32_t>(p[1]),
                             static_cast<std::uint32_t>(p[2]), static_cast<std::uint32_t>(p[3])});
}

TrivalentGraph move_graph(const TrivalentGraph& g, const IEmbedding& e, MoveShape shape) {
    const auto p = move_pattern(shape, g.oriented());
    const std::uint32_t u = e.u(), v = e.v();
    std::array<FlagId, 4> newpos{};
    newpos[p[0]] = make_flag(u, 0);
    newpos[p[1]] = make_flag(u, 1);
    newpos[p[2]] = make_flag(v, 0);
    newpos[p[3]] = make_flag(v, 1);
    auto image = [&](FlagId f) {
        for (int i = 0; i < 4; ++i) {
            if (e.a[i] == f) return newpos[i];
        }
        return f;
    };
    std::vector<FlagId> partner = g.pairing();
    for (int i = 0; i < 4; ++i) {
        FlagId q = image(g.partner(e.a[i]));
        partner[newpos[i]] = q;
        partner[q] = newpos[i];
    }
    partner[make_flag(u, 2)] = make_flag(v, 2);
    partner[make_flag(v, 2)] = make_flag(u, 2);
    return TrivalentGraph(g.vertex_count(), std::move(partner), g.oriented());
}

GraphPolynomial apply_move(const TrivalentGraph& g, const IEmbedding& e, const RelationSpec& spec) {
    if (!spec.has_moves()) throw PreconditionError("relation '" + spec.name() + "' has no local move");
    if (g.oriented() != spec.oriented()) {
        throw TypeMismatchError("relation '" + spec.name() + "' applied to a graph of the wrong orientedness");
    }
    if (spec.kind == RelationKind::IH0 && !is_IH0(g, e)) {
        throw PreconditionError("ih0 move needs four distinct external edges");
    }
    const bool o = g.oriented();
    GraphPolynomial out(o);
    if (spec.a != 0) out.add_graph(move_graph(g, e, MoveShape::I), spec.a * move_sign(MoveShape::I, o));
    if (spec.b != 0) out.add_graph(move_graph(g, e, MoveShape::H), spec.b * move_sign(MoveShape::H, o));
    if (spec.c != 0) out.add_graph(move_graph(g, e, MoveShape::X), spec.c * move_sign(MoveShape::X, o));
    return out;
}

IEmbedding swapped_legs(const IEmbedding& e) {
    IEmbedding r = e;
    std::swap(r.a[2], r.a[3]);
    return r;
}

IEmbedding swapped_ends(const IEmbedding& e) {
    IEmbedding r = e;
    r.eu = e.ev;
    r.ev = e.eu;
    r.a = {e.a[2], e.a[3], e.a[0], e.a[1]};
    return r;
}

namespace {

bool specs_oriented(const std::vector<RelationSpec>& specs) {
    bool any_oriented = false, any_unoriented = false;
    for (const auto& s : specs) {
        if (s.oriented()) any_oriented = true;
        else if (s.kind != RelationKind::loop) any_unoriented = true;
        if (s.has_moves() && s.a == 0 && s.b == 0 && s.c == 0) {
            throw PreconditionError("relation coefficients must not all vanish");
        }
    }
    if (any_oriented && any_unoriented) throw TypeMismatchError("cannot mix oriented and unoriented relations");
    return any_oriented;
}

std::vector<GraphPolynomial> moves_in(const TrivalentGraph& g, const std::vector<RelationSpec>& specs) {
    std::vector<GraphPolynomial> out;
    for (const auto& spec : specs) {
        if (!spec.has_moves()) continue;
        for (const auto& e : find_I_embeddings(g, spec.kind == RelationKind::IH0)) {
            const IEmbedding variants[2] = {e, g.oriented() ? swapped_ends(e) : swapped_legs(e)};
            std::vector<GraphPolynomial> local;
            for (const auto& emb : variants) {
                auto p = apply_move(g, emb, spec);
                if (p.empty() || std::find(local.begin(), local.end(), p) != local.end()) continue;
                local.push_back(std::move(p));
            }
            for (auto& p : local) out.push_back(std::move(p));
        }
    }
    return out;
}

std::vector<GraphPolynomial> build_relations(std::uint32_t m, const std::vector<RelationSpec>& specs,
                                             bool connected_ambient) {
    const bool oriented = specs_oriented(specs);
    const auto ambient = enumerate(m, {.connected_only = connected_ambient, .oriented = oriented});
    const unsigned threads = std::max(1u, std::min<unsigned>(limits().threads, 64));
    std::vector<std::vector<GraphPolynomial>> per_graph(ambient.size());
    auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t k = begin; k < ambient.size(); k += step) {
            per_graph[k] = moves_in(ambient[k].representative, specs);
        }
    };
    if (threads == 1 || ambient.size() < 2) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
        for (auto& t : pool) t.join();
    }
    std::vector<GraphPolynomial> out;
    for (auto& v : per_graph) {
        for (auto& p : v) out.push_back(std::move(p));
    }
    bool loop = std::any_of(specs.begin(), specs.end(), [](const auto& s) { return s.kind == RelationKind::loop; });
    if (loop) {
        for (const auto& c : ambient) {
            if (c.has_loop && !c.cls.degenerate()) out.push_back(GraphPolynomial::of(c.representative));
        }
    }
    return out;
}

std::vector<std::size_t> fill_order(const std::vector<la::SparseVector>& rows) {
    std::vector<std::size_t> idx(rows.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (rows[a].nnz() != rows[b].nnz()) return rows[a].nnz() < rows[b].nnz();
        const auto& x = rows[a].entries;
        const auto& y = rows[b].entries;
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), [](const auto& p, const auto& q) {
            if (p.first != q.first) return p.first < q.first;
            return p.second < q.second;
        });
    });
    return idx;
}

} // namespace

std::vector<GraphPolynomial> relation_basis(std::uint32_t m, const std::vector<RelationSpec>& specs) {
    return build_relations(m, specs, false);
}

RelationSpan::RelationSpan(std::uint32_t m, std::vector<RelationSpec> specs, bool connected_only)
    : degree_(m), specs_(std::move(specs)), oriented_(specs_oriented(specs_)), connected_only_(connected_only),
      echelon_(0) {
    for (const auto& c : enumerate(m, {.connected_only = connected_only, .oriented = oriented_})) {
        if (c.cls.degenerate()) continue;
        column_.emplace(c.cls.encoding, classes_.size());
        auto key = c.cls;
        key.sign = 1;
        classes_.push_back(key);
    }
    const std::string what = "relation span at degree " + std::to_string(m);
    check_terms(std::uint64_t{classes_.size()} * 3 * m * 6 * specs_.size(), what.c_str());
    relations_ = build_relations(m, specs_, connected_only);
    std::vector<la::SparseVector> rows;
    rows.reserve(relations_.size());
    for (const auto& r : relations_) rows.push_back(coordinates(r));
    matrix_ = la::RationalMatrix(classes_.size(), std::move(rows));
    echelon_ = la::Echelon(classes_.size());
    for (auto i : fill_order(matrix_.row_data())) {
        if (echelon_.insert(matrix_.row(i))) independent_.push_back(i);
    }
    std::sort(independent_.begin(), independent_.end());
}

std::size_t RelationSpan::rank_second_order() const {
    const std::size_t n = classes_.size();
    std::vector<la::SparseVector> rows;
    for (std::size_t i = matrix_.rows(); i-- > 0;) {
        std::vector<std::pair<std::size_t, Rational>> p;
        for (const auto& [c, x] : matrix_.row(i).entries) p.emplace_back(n - 1 - c, x);
        rows.push_back(la::SparseVector::from_pairs(std::move(p)));
    }
    la::Echelon e(n);
    for (const auto& r : rows) e.insert(r);
    return e.rank();
}

la::SparseVector RelationSpan::coordinates(const GraphPolynomial& p) const {
    if (p.oriented() != oriented_) throw TypeMismatchError("polynomial orientedness differs from relation span");
    std::vector<std::pair<std::size_t, Rational>> entries;
    for (const auto& [cls, c] : p.terms()) {
        auto it = column_.find(cls.encoding);
        if (it == column_.end()) {
            if (cls.degree != degree_) throw PreconditionError("polynomial term has the wrong degree");
            if (connected_only_) continue;
            throw PreconditionError("polynomial term outside the class list");
        }
        entries.emplace_back(it->second, c);
    }
    return la::SparseVector::from_pairs(std::move(entries));
}

bool RelationSpan::contains(const GraphPolynomial& p) const { return echelon_.contains(coordinates(p)); }

std::shared_ptr<const RelationSpan> relation_span(std::uint32_t m, const std::vector<RelationSpec>& specs,
                                                  bool connected_only) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const RelationSpan>> cache;
    const std::string key = std::to_string(m) + "|" + spec_list_name(specs) + "|" + (connected_only ? "c" : "a");
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto span = std::make_shared<const RelationSpan>(m, specs, connected_only);
    std::lock_guard lock(mu);
    return cache.emplace(key, span).first->second;
}

QuotientReport quotient_rank(std::uint32_t m, const std::vector<RelationSpec>& specs, bool connected_only) {
    auto span = relation_span(m, specs, connected_only);
    QuotientReport r;
    r.degree = m;
    r.specs = spec_list_name(specs);
    r.connected_only = connected_only;
    r.classes = span->classes().size();
    r.relations = span->relations().size();
    r.rank = span->rank();
    r.rank_second_order = span->rank_second_order();
    r.rank_mod_p = la::rank_mod_p(span->matrix());
    r.quotient_dimension = span->quotient_dimension();
    return r;
}

IdealCertificate in_ideal(const GraphPolynomial& p, const std::vector<RelationSpec>& specs) {
    IdealCertificate cert;
    if (p.empty()) {
        cert.member = true;
        return cert;
    }
    const std::uint32_t m = p.terms().begin()->first.degree;
    for (const auto& [cls, c] : p.terms()) {
        if (cls.degree != m) throw PreconditionError("in_ideal needs a homogeneous polynomial");
    }
    auto span = relation_span(m, specs);
    cert.classes = span->classes();
    auto v = span->coordinates(p);
    std::vector<la::SparseVector> basis;
    for (auto i : span->independent()) basis.push_back(span->matrix().row(i));
    auto mem = la::span_membership(v, basis, span->classes().size());
    cert.member = mem.member;
    if (mem.member) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (mem.coefficients[k] != 0) {
                cert.combination.emplace_back(mem.coefficients[k], span->relations()[span->independent()[k]]);
            }
        }
    } else {
        cert.separating_functional = std::move(mem.separating_functional);
    }
    return cert;
}

bool check_certificate(const GraphPolynomial& p, const IdealCertificate& cert) {
    if (!cert.member) return false;
    GraphPolynomial sum(p.oriented());
    for (const auto& [c, r] : cert.combination) sum = add(sum, scale(c, r));
    return sum == p;
}

std::string format_monomial(const EMonomial& mono) {
    if (mono.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < mono.size();) {
        std::size_t j = i;
        while (j < mono.size() && mono[j] == mono[i]) ++j;
        if (!s.empty()) s += "*";
        s += "E" + std::to_string(mono[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

namespace {

// BFS over IH0 moves among connected graphs; returns the distance to E_d.
std::size_t search_E(const TrivalentGraph& start) {
    const std::uint32_t d = start.degree();
    const std::string target = canonicalize(build_E(d)).encoding;
    static std::mutex mu;
    static std::map<std::string, std::size_t> known;
    auto first = canonicalize_detailed(start);
    {
        std::lock_guard lock(mu);
        auto it = known.find(first.cls.encoding);
        if (it != known.end()) return it->second;
    }
    std::map<std::string, std::pair<std::string, std::size_t>> parent;  // encoding -> (prev, dist)
    std::deque<TrivalentGraph> queue{first.representative};
    parent.emplace(first.cls.encoding, std::make_pair(std::string(), std::size_t{0}));
    std::string found;
    while (!queue.empty() && found.empty()) {
        TrivalentGraph g = std::move(queue.front());
        queue.pop_front();
        const std::string enc = g.to_tg1();
        if (enc == target) {
            found = enc;
            break;
        }
        const std::size_t dist = parent.at(enc).second;
        for (const auto& e : find_I_embeddings(g, true)) {
            for (auto shape : {MoveShape::H, MoveShape::X}) {
                auto h = move_graph(g, e, shape);
                if (!h.is_connected()) continue;
                auto c = canonicalize_detailed(h);
                if (parent.emplace(c.cls.encoding, std::make_pair(enc, dist + 1)).second) {
                    if (parent.size() > limits().class_cap) {
                        throw CapacityError("E normal form search at degree " + std::to_string(d) +
                                            " exceeds class cap");
                    }
                    queue.push_back(std::move(c.representative));
                }
            }
        }
    }
    if (found.empty()) {
        throw std::logic_error("no IH0 path to E_" + std::to_string(d) + " among connected graphs");
    }
    std::size_t dist = parent.at(found).second;
    std::lock_guard lock(mu);
    // every graph on the found path is at known distance from E_d
    for (std::string cur = found; !cur.empty(); cur = parent.at(cur).first) {
        known.emplace(cur, dist - parent.at(cur).second);
    }
    return known.at(first.cls.encoding);
}

} // namespace

std::size_t E_reduction_distance(const TrivalentGraph& connected) {
    if (connected.oriented()) throw TypeMismatchError("E normal form is for unoriented graphs");
    if (!connected.is_connected() || connected.has_loop() || connected.empty()) {
        throw PreconditionError("E reduction needs a nonempty connected loop-free graph");
    }
    return search_E(connected);
}

ENormalForm reduce_to_E_normal_form(const GraphPolynomial& p) {
    if (p.oriented()) throw TypeMismatchError("E normal form is for unoriented polynomials");
    ENormalForm out;
    for (const auto& [cls, c] : p.terms()) {
        auto g = representative(cls);
        if (g.has_loop()) continue;
        EMonomial mono;
        for (const auto& comp : g.components()) {
            auto sub = g.subgraph(comp);
            search_E(sub);
            mono.push_back(sub.degree());
        }
        std::sort(mono.begin(), mono.end());
        auto [it, inserted] = out.try_emplace(mono, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

} // namespace ihxlab
