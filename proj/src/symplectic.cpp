#include "ihxlab/symplectic.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "ihxlab/config.hpp"
#include "ihxlab/errors.hpp"

namespace ihxlab {

int pairing(int a, int b) {
    if (a == 0 || b == 0 || a != -b) return 0;
    return a > 0 ? 1 : -1;
}

Target parse_target(const std::string& name) {
    if (name == "exterior") return Target::exterior;
    if (name == "u" || name == "U") return Target::U;
    if (name == "symmetric") return Target::symmetric;
    throw StructuralError("unknown target '" + name + "' (exterior, u, symmetric)");
}

std::string target_name(Target t) {
    switch (t) {
    case Target::exterior: return "exterior";
    case Target::U: return "u";
    case Target::symmetric: return "symmetric";
    }
    return "";
}

Space target_space(Target t, std::uint32_t m) {
    switch (t) {
    case Target::exterior: return Space::ext_ext3(2 * m);
    case Target::U: return Space::ext_u(2 * m);
    case Target::symmetric: return Space::ext_sym3(2 * m);
    }
    return {};
}

SparseTensor kappa(const Word& b, std::uint32_t genus) {
    if (b.size() != 3) throw StructuralError("kappa expects a block of three letters");
    SparseTensor out(genus, Space::tensor(1));
    out.add_word({b[2]}, pairing(b[0], b[1]));
    out.add_word({b[1]}, -pairing(b[0], b[2]));
    out.add_word({b[0]}, pairing(b[1], b[2]));
    return out;
}

namespace {

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = 1469598103934665603ull;
        for (auto l : w) h = (h ^ static_cast<std::uint8_t>(l)) * 1099511628211ull;
        return h;
    }
};

Word omega_block(int v, int i) {
    return {static_cast<std::int8_t>(v), static_cast<std::int8_t>(i), static_cast<std::int8_t>(-i)};
}

} // namespace

Rational u_scalar(std::uint32_t genus) {
    SparseTensor image(genus, Space::tensor(1));
    const Space ext3{3, Symmetry::ext, Symmetry::none, 1, false};
    for (int i = 1; i <= static_cast<int>(genus); ++i) {
        Word b = omega_block(1, i);
        int s = normalize(b, ext3);
        if (s == 0) continue;
        image.add(kappa(b, genus), s);
    }
    return image.coefficient({1});
}

SparseTensor project_U(const SparseTensor& t) {
    const Space& s = t.space();
    if (s.block_size != 3 || s.inner != Symmetry::ext || s.outer != Symmetry::ext) {
        throw TypeMismatchError("project_U expects an element of Lambda^k Lambda^3 H");
    }
    const std::uint32_t g = t.genus();
    SparseTensor out(g, Space::ext_u(s.blocks));
    if (g < 2) return out;
    const Rational inv = 1 / u_scalar(g);
    const Space flat{3, Symmetry::ext, Symmetry::none, s.blocks, false};
    std::map<Word, Rational> cur(t.terms().begin(), t.terms().end());
    for (std::uint32_t p = 0; p < s.blocks; ++p) {
        SparseTensor next(g, flat);
        for (const auto& [w, c] : cur) {
            next.add_word(w, c);
            Word block(w.begin() + 3 * p, w.begin() + 3 * p + 3);
            const auto kb = kappa(block, g);
            for (const auto& [v, kc] : kb.terms()) {
                for (int i = 1; i <= static_cast<int>(g); ++i) {
                    Word nw = w;
                    Word ob = omega_block(v[0], i);
                    std::copy(ob.begin(), ob.end(), nw.begin() + 3 * p);
                    next.add_word(std::move(nw), -inv * kc * c);
                }
            }
        }
        cur = next.terms();
    }
    for (const auto& [w, c] : cur) out.add_word(w, c);
    return out;
}

namespace {

// Calls leaf(word, sign) for the one-index-per-edge expansion of alpha.
void expand_alpha(const TrivalentGraph& g, const TotalOrdering& tau, std::uint32_t genus,
                  const std::function<void(const Word&, int)>& leaf) {
    const auto seq = tau.flag_sequence();
    std::vector<std::uint32_t> pos(g.flag_count());
    for (std::uint32_t k = 0; k < seq.size(); ++k) pos[seq[k]] = k;
    const auto edges = g.edges();
    std::uint64_t est = 1;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        est *= 2 * genus;
        check_terms(est, "alpha expansion");
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        FlagId fp = tau.f_plus[k];
        FlagId fm = g.partner(fp);
        slots.emplace_back(pos[fp], pos[fm]);
    }
    Word w(seq.size(), 0);
    const int G = static_cast<int>(genus);
    auto rec = [&](auto&& self, std::size_t k, int sign) -> void {
        if (k == slots.size()) {
            leaf(w, sign);
            return;
        }
        for (int i = -G; i <= G; ++i) {
            if (i == 0) continue;
            w[slots[k].first] = static_cast<std::int8_t>(i);
            w[slots[k].second] = static_cast<std::int8_t>(-i);
            self(self, k + 1, sign * sgn(i));
        }
    };
    rec(rec, 0, 1);
}

void require_admissible(const TrivalentGraph& g, const TotalOrdering& tau, AdmissibilityMode mode) {
    validate(g, tau, mode);
    if (admissibility_sign(g, tau, mode) != 1) throw PreconditionError("ordering is not admissible");
}

AdmissibilityMode mode_for(Target t) {
    return t == Target::symmetric ? AdmissibilityMode::sym : AdmissibilityMode::wedge;
}

} // namespace

SparseTensor alpha_words(const TrivalentGraph& g, const TotalOrdering& tau, std::uint32_t genus) {
    if (genus == 0) throw PreconditionError("genus must be positive");
    SparseTensor out(genus, Space::tensor(3 * g.vertex_count()));
    expand_alpha(g, tau, genus, [&](const Word& w, int s) { out.add_normalized(w, s); });
    return out;
}

SparseTensor alpha(const TrivalentGraph& g, std::uint32_t genus, Target target,
                   const std::optional<TotalOrdering>& tau) {
    if (genus == 0) throw PreconditionError("genus must be positive");
    if (target == Target::symmetric && !g.oriented()) {
        throw PreconditionError("symmetric target needs an oriented graph");
    }
    const auto mode = mode_for(target);
    TotalOrdering t = tau ? *tau : make_admissible(g, mode);
    require_admissible(g, t, mode);
    const std::uint32_t m = g.degree();
    const Space space = target == Target::U ? Space::ext_ext3(2 * m) : target_space(target, m);
    std::unordered_map<Word, long, WordHash> acc;
    expand_alpha(g, t, genus, [&](const Word& w, int s) {
        Word nw = w;
        int sign = normalize(nw, space);
        if (sign != 0) acc[std::move(nw)] += sign * s;
    });
    SparseTensor out(genus, space);
    for (const auto& [w, n] : acc) out.add_normalized(w, n);
    return target == Target::U ? project_U(out) : out;
}

SparseTensor alpha(const GraphPolynomial& p, std::uint32_t m, std::uint32_t genus, Target target) {
    SparseTensor out(genus, target_space(target, m));
    for (const auto& [cls, c] : p.terms()) {
        if (cls.degree != m) throw PreconditionError("polynomial is not homogeneous of degree " + std::to_string(m));
        out.add(alpha(representative(cls), genus, target), c);
    }
    return out;
}

std::string Generator::name() const { return (raising ? "E" : "F") + std::to_string(k); }

std::vector<Generator> chevalley_generators(std::uint32_t genus) {
    std::vector<Generator> out;
    for (std::uint32_t k = 1; k <= genus; ++k) out.push_back({true, k});
    for (std::uint32_t k = 1; k <= genus; ++k) out.push_back({false, k});
    return out;
}

std::vector<std::pair<int, int>> generator_image(const Generator& gen, int l, std::uint32_t genus) {
    const int k = static_cast<int>(gen.k), g = static_cast<int>(genus);
    if (gen.k < 1 || gen.k > genus) throw PreconditionError("generator index out of range");
    if (k == g) {
        if (gen.raising && l == -g) return {{g, 1}};
        if (!gen.raising && l == g) return {{-g, 1}};
        return {};
    }
    if (gen.raising) {
        if (l == k + 1) return {{k, 1}};
        if (l == -k) return {{-(k + 1), -1}};
    } else {
        if (l == k) return {{k + 1, 1}};
        if (l == -(k + 1)) return {{-k, -1}};
    }
    return {};
}

SparseTensor sp_action(const Generator& gen, const SparseTensor& t) {
    SparseTensor out(t.genus(), t.space());
    for (const auto& [w, c] : t.terms()) {
        for (std::size_t p = 0; p < w.size(); ++p) {
            for (auto [l, x] : generator_image(gen, w[p], t.genus())) {
                Word nw = w;
                nw[p] = static_cast<std::int8_t>(l);
                out.add_word(std::move(nw), x * c);
            }
        }
    }
    return out;
}

bool is_invariant(const SparseTensor& t) {
    for (const auto& gen : chevalley_generators(t.genus())) {
        if (!sp_action(gen, t).is_zero()) return false;
    }
    return true;
}

bool is_highest_weight(const SparseTensor& t, const std::vector<int>& wt) {
    if (t.is_zero()) return false;
    std::vector<int> full = wt;
    full.resize(t.genus(), 0);
    for (const auto& [w, c] : t.terms()) {
        if (weight(w, t.genus()) != full) return false;
    }
    for (const auto& gen : chevalley_generators(t.genus())) {
        if (gen.raising && !sp_action(gen, t).is_zero()) return false;
    }
    return true;
}

namespace {

std::vector<SparseTensor> word_invariants(std::uint32_t genus, const Space& s) {
    check_terms(static_cast<std::uint64_t>(space_dimension(genus, s).get_d()), "invariant basis enumeration");
    const auto basis = basis_words_of_weight(genus, s, std::vector<int>(genus, 0));
    std::map<std::pair<std::size_t, Word>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
    const auto gens = chevalley_generators(genus);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        SparseTensor b(genus, s);
        b.add_normalized(basis[j], 1);
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            const auto img = sp_action(gens[gi], b);
            for (const auto& [w, c] : img.terms()) {
                auto [it, inserted] = row_of.try_emplace({gi, w}, rows.size());
                if (inserted) rows.emplace_back();
                rows[it->second].emplace_back(j, c);
            }
        }
    }
    std::vector<la::SparseVector> sv;
    sv.reserve(rows.size());
    for (auto& r : rows) sv.push_back(la::SparseVector::from_pairs(std::move(r)));
    la::RationalMatrix m(basis.size(), std::move(sv));
    std::vector<SparseTensor> out;
    for (const auto& k : la::kernel_basis(m)) {
        SparseTensor t(genus, s);
        for (const auto& [j, c] : k.entries) t.add_normalized(basis[j], c);
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace

std::size_t tensor_rank(const std::vector<SparseTensor>& ts) {
    std::map<Word, std::size_t> col;
    for (const auto& t : ts) {
        for (const auto& [w, c] : t.terms()) col.try_emplace(w, col.size());
    }
    la::Echelon ech(col.size());
    for (const auto& t : ts) {
        std::vector<std::pair<std::size_t, Rational>> pairs;
        for (const auto& [w, c] : t.terms()) pairs.emplace_back(col[w], c);
        ech.insert(la::SparseVector::from_pairs(std::move(pairs)));
    }
    return ech.rank();
}

std::vector<SparseTensor> invariant_basis(std::uint32_t genus, const Space& s) {
    if (genus == 0) throw PreconditionError("genus must be positive");
    if (!s.u) return word_invariants(genus, s);
    Space ambient = s;
    ambient.u = false;
    std::vector<SparseTensor> out;
    for (const auto& t : word_invariants(genus, ambient)) {
        auto p = project_U(t);
        if (p.is_zero()) continue;
        out.push_back(std::move(p));
        if (tensor_rank(out) < out.size()) out.pop_back();
    }
    return out;
}

std::size_t invariant_dimension(std::uint32_t genus, const Space& s) { return invariant_basis(genus, s).size(); }

std::vector<std::pair<Word, int>> f_words(FVariant v, const std::array<int, 4>& t, std::uint32_t genus, bool oriented) {
    static constexpr std::array<std::array<int, 4>, 3> ext_pat{{{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}}};
    static constexpr std::array<std::array<int, 4>, 3> sym_pat{{{0, 1, 2, 3}, {3, 0, 1, 2}, {0, 2, 3, 1}}};
    const auto& p = (oriented ? sym_pat : ext_pat)[static_cast<int>(v)];
    std::vector<std::pair<Word, int>> out;
    const int G = static_cast<int>(genus);
    for (int j = -G; j <= G; ++j) {
        if (j == 0) continue;
        Word w{static_cast<std::int8_t>(t[p[0]]), static_cast<std::int8_t>(t[p[1]]), static_cast<std::int8_t>(j),
               static_cast<std::int8_t>(t[p[2]]), static_cast<std::int8_t>(t[p[3]]), static_cast<std::int8_t>(-j)};
        out.emplace_back(std::move(w), sgn(j));
    }
    return out;
}

SparseTensor f_combination(const Rational& a, const Rational& b, const Rational& c, const std::array<int, 4>& t,
                           std::uint32_t genus, Target target) {
    for (int x : t) {
        if (x == 0 || std::abs(x) > static_cast<int>(genus)) throw StructuralError("basis letter outside genus");
    }
    const bool o = target == Target::symmetric;
    SparseTensor out(genus, o ? Space::ext_sym3(2) : Space::ext_ext3(2));
    const Rational coef[3] = {a, b, c};
    for (int k = 0; k < 3; ++k) {
        if (coef[k] == 0) continue;
        for (auto& [w, s] : f_words(static_cast<FVariant>(k), t, genus, o)) out.add_word(w, coef[k] * s);
    }
    return target == Target::U ? project_U(out) : out;
}

SparseTensor f_map(FVariant v, const std::array<int, 4>& t, std::uint32_t genus, Target target) {
    Rational c[3] = {0, 0, 0};
    c[static_cast<int>(v)] = 1;
    return f_combination(c[0], c[1], c[2], t, genus, target);
}

SparseTensor contraction_C(const SparseTensor& t, std::uint32_t k, std::uint32_t l) {
    const Space& s = t.space();
    if (s.block_size != 1 || s.outer != Symmetry::none) throw TypeMismatchError("contraction needs a plain tensor");
    if (!(k < l && l < s.blocks)) throw PreconditionError("contraction slots must satisfy k < l < n");
    SparseTensor out(t.genus(), Space::tensor(s.blocks - 2));
    for (const auto& [w, c] : t.terms()) {
        int p = pairing(w[k], w[l]);
        if (p == 0) continue;
        Word nw;
        for (std::uint32_t i = 0; i < w.size(); ++i) {
            if (i != k && i != l) nw.push_back(w[i]);
        }
        out.add_normalized(nw, p * c);
    }
    return out;
}

TotalOrdering cf_ordering(const TrivalentGraph& g, const IEmbedding& e, AdmissibilityMode mode) {
    const std::uint32_t u = e.u(), v = e.v();
    TotalOrdering tau;
    tau.vertex_order = {u, v};
    for (std::uint32_t w = 0; w < g.vertex_count(); ++w) {
        if (w != u && w != v) tau.vertex_order.push_back(w);
    }
    tau.flag_order.assign(g.vertex_count(), {0, 1, 2});
    auto rot = [](std::uint32_t s) {
        return std::array<std::uint8_t, 3>{static_cast<std::uint8_t>((s + 1) % 3),
                                           static_cast<std::uint8_t>((s + 2) % 3), static_cast<std::uint8_t>(s)};
    };
    tau.flag_order[u] = rot(flag_slot(e.eu));
    tau.flag_order[v] = rot(flag_slot(e.ev));
    const auto edges = g.edges();
    for (std::uint32_t k = 0; k < edges.size(); ++k) tau.f_plus.push_back(k == e.edge ? e.eu : edges[k].first);
    if (admissibility_sign(g, tau, mode) < 0) {
        std::uint32_t k = e.edge == 0 ? 1 : 0;
        flip_edge(g, tau, k);
    }
    return tau;
}

SparseTensor cf_image(const TrivalentGraph& g, const IEmbedding& e, const Rational& a, const Rational& b,
                      const Rational& c, std::uint32_t genus, Target target) {
    const bool o = target == Target::symmetric;
    const auto mode = mode_for(target);
    if (o && !g.oriented()) throw PreconditionError("symmetric target needs an oriented graph");
    const TotalOrdering tau = cf_ordering(g, e, mode);
    require_admissible(g, tau, mode);
    const std::uint32_t m = g.degree();
    const Space space = o ? Space::ext_sym3(2 * m) : Space::ext_ext3(2 * m);
    const Rational coef[3] = {a, b, c};
    std::array<std::unordered_map<Word, long, WordHash>, 3> acc;
    expand_alpha(g, tau, genus, [&](const Word& w, int s) {
        int p = pairing(w[2], w[5]);
        if (p == 0) return;
        const std::array<int, 4> t{w[0], w[1], w[3], w[4]};
        for (int k = 0; k < 3; ++k) {
            if (coef[k] == 0) continue;
            for (auto& [fw, fs] : f_words(static_cast<FVariant>(k), t, genus, o)) {
                Word nw = fw;
                nw.insert(nw.end(), w.begin() + 6, w.end());
                int sign = normalize(nw, space);
                if (sign != 0) acc[k][std::move(nw)] += sign * s * p * fs;
            }
        }
    });
    SparseTensor out(genus, space);
    for (int k = 0; k < 3; ++k) {
        for (const auto& [w, n] : acc[k]) out.add_normalized(w, coef[k] * n);
    }
    return target == Target::U ? project_U(out) : out;
}

CFReport verify_CF_identity(const TrivalentGraph& g, const IEmbedding& e, const Rational& a, const Rational& b,
                            const Rational& c, std::uint32_t genus, Target target) {
    const bool o = target == Target::symmetric;
    const TrivalentGraph h = o ? g : g.with_orientation(false);
    RelationSpec spec{o ? RelationKind::oriented_coefficients : RelationKind::coefficients, a, b, c};
    CFReport r;
    r.lhs = cf_image(h, e, a, b, c, genus, target);
    r.rhs = scaled(alpha(apply_move(h, e, spec), h.degree(), genus, target), 2 * genus);
    r.holds = r.lhs == r.rhs;
    return r;
}

Partition parse_partition(const std::string& text) {
    Partition p;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(tok, &used);
            if (used != tok.size() || v < 0) throw 0;
            p.push_back(static_cast<std::uint32_t>(v));
        } catch (...) {
            throw StructuralError("bad partition part '" + tok + "'");
        }
    }
    if (!std::is_sorted(p.rbegin(), p.rend())) throw StructuralError("partition must be weakly decreasing");
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

std::string format_partition(const Partition& p) {
    if (p.empty()) return "[0]";
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
}

Integer weyl_dimension(std::uint32_t genus, const Partition& lambda) {
    if (lambda.size() > genus) throw PreconditionError("partition has more than g parts");
    std::vector<long> l(genus), rho(genus);
    for (std::uint32_t i = 0; i < genus; ++i) {
        rho[i] = genus - i;
        l[i] = rho[i] + (i < lambda.size() ? lambda[i] : 0);
    }
    Rational d = 1;
    for (std::uint32_t i = 0; i < genus; ++i) {
        d *= Rational(l[i], rho[i]);
        for (std::uint32_t j = i + 1; j < genus; ++j) {
            d *= Rational((l[i] - l[j]) * (l[i] + l[j]), (rho[i] - rho[j]) * (rho[i] + rho[j]));
        }
    }
    d.canonicalize();
    return d.get_num();
}

DecompositionReport verify_decomposition(std::uint32_t genus, const std::string& equation) {
    DecompositionReport r;
    r.equation = equation;
    r.genus = genus;
    std::vector<Partition> parts;
    auto binom2 = [](const Integer& n) { return Integer(n * (n - 1) / 2); };
    const Integer h = 2 * genus;
    if (equation == "1.1") {
        if (genus < 6) throw PreconditionError("the Lambda^2 U decomposition needs g >= 6");
        parts = {{1, 1, 1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1}, {}, {2, 2, 1, 1}, {2, 2}};
        r.ambient = binom2(h * (h - 1) * (h - 2) / 6 - h);
    } else if (equation == "1.3") {
        if (genus < 2) throw PreconditionError("the Lambda^2 Sym^3 H decomposition needs g >= 2");
        parts = {{5, 1}, {4}, {3, 3}, {2, 2}, {1, 1}, {}};
        r.ambient = binom2((h + 2) * (h + 1) * h / 6);
    } else {
        throw StructuralError("unknown decomposition '" + equation + "' (1.1 or 1.3)");
    }
    r.total = 0;
    for (const auto& p : parts) {
        Integer d = weyl_dimension(genus, p);
        r.summands.emplace_back(p, d);
        r.total += d;
    }
    return r;
}

} // namespace ihxlab
