#include "ihxlab/polynomial.hpp"

#include <optional>
#include <sstream>

#include "ihxlab/errors.hpp"

namespace ihxlab {

namespace {

CanonicalClass key_of(CanonicalClass cls) {
    cls.sign = 1;
    return cls;
}

void require_same(const GraphPolynomial& p, const GraphPolynomial& q, const char* what) {
    if (p.oriented() != q.oriented()) {
        throw TypeMismatchError(std::string(what) + ": cannot mix oriented and unoriented polynomials");
    }
}

} // namespace

GraphPolynomial GraphPolynomial::of(const TrivalentGraph& g, const Rational& c) {
    GraphPolynomial p(g.oriented());
    p.add_graph(g, c);
    return p;
}

GraphPolynomial GraphPolynomial::one(bool oriented) {
    return of(TrivalentGraph(0, {}, oriented), 1);
}

void GraphPolynomial::add_graph(const TrivalentGraph& g, const Rational& c) {
    if (g.oriented() != oriented_) throw TypeMismatchError("graph orientedness differs from polynomial");
    auto cls = canonicalize(g);
    if (cls.sign == 0 || c == 0) return;
    add_class(cls, cls.sign == 1 ? c : Rational(-c));
}

void GraphPolynomial::add_class(const CanonicalClass& cls, const Rational& raw) {
    Rational c = raw;
    c.canonicalize();
    if (c == 0) return;
    auto key = key_of(cls);
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational GraphPolynomial::coefficient(const CanonicalClass& cls) const {
    auto it = terms_.find(key_of(cls));
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational GraphPolynomial::coefficient(const TrivalentGraph& g) const {
    auto cls = canonicalize(g);
    if (cls.sign == 0) return 0;
    Rational c = coefficient(cls);
    return cls.sign == 1 ? c : Rational(-c);
}

std::string GraphPolynomial::to_text() const {
    std::ostringstream os;
    os << "poly1 oriented=" << (oriented_ ? 1 : 0) << " terms=" << terms_.size() << '\n';
    for (const auto& [cls, c] : terms_) os << "coeff=" << format_rational(c) << " graph=" << cls.encoding;
    return os.str();
}

GraphPolynomial GraphPolynomial::parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::optional<bool> oriented;
    std::optional<std::size_t> declared;
    struct Record {
        Rational coeff;
        std::string graph;
    };
    std::vector<Record> records;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line.rfind("poly1", 0) == 0) {
            if (!records.empty() || oriented) throw StructuralError("poly1 header must come first");
            std::istringstream hs(line);
            std::string magic, o, t;
            hs >> magic >> o >> t;
            if (o != "oriented=0" && o != "oriented=1") throw StructuralError("bad poly1 header");
            oriented = (o == "oriented=1");
            if (t.rfind("terms=", 0) == 0) declared = std::stoul(t.substr(6));
        } else if (line.rfind("coeff=", 0) == 0) {
            auto sp = line.find(" graph=");
            if (sp == std::string::npos) throw StructuralError("record without graph= field");
            records.push_back({parse_rational(line.substr(6, sp - 6)), line.substr(sp + 7) + "\n"});
        } else if (line.rfind("edge ", 0) == 0) {
            if (records.empty()) throw StructuralError("edge line outside a record");
            records.back().graph += line + "\n";
        } else {
            throw StructuralError("unrecognized polynomial line '" + line + "'");
        }
    }
    if (declared && *declared != records.size()) throw StructuralError("term count does not match header");
    std::optional<bool> seen;
    GraphPolynomial p(oriented.value_or(false));
    std::vector<std::pair<TrivalentGraph, Rational>> graphs;
    for (auto& r : records) {
        auto g = TrivalentGraph::parse_tg1(r.graph);
        if (seen && *seen != g.oriented()) throw TypeMismatchError("polynomial mixes oriented and unoriented graphs");
        seen = g.oriented();
        graphs.emplace_back(std::move(g), r.coeff);
    }
    if (!oriented && seen) p = GraphPolynomial(*seen);
    for (auto& [g, c] : graphs) p.add_graph(g, c);
    return p;
}

TrivalentGraph representative(const CanonicalClass& cls) { return TrivalentGraph::parse_tg1(cls.encoding); }

GraphPolynomial add(const GraphPolynomial& p, const GraphPolynomial& q) {
    require_same(p, q, "add");
    GraphPolynomial r = p;
    for (const auto& [cls, c] : q.terms()) r.add_class(cls, c);
    return r;
}

GraphPolynomial scale(const Rational& c, const GraphPolynomial& p) {
    GraphPolynomial r(p.oriented());
    if (c == 0) return r;
    for (const auto& [cls, x] : p.terms()) r.add_class(cls, c * x);
    return r;
}

GraphPolynomial multiply(const GraphPolynomial& p, const GraphPolynomial& q) {
    require_same(p, q, "multiply");
    GraphPolynomial r(p.oriented());
    std::vector<TrivalentGraph> qreps;
    for (const auto& [cls, c] : q.terms()) qreps.push_back(representative(cls));
    for (const auto& [a, ca] : p.terms()) {
        auto ga = representative(a);
        std::size_t k = 0;
        for (const auto& [b, cb] : q.terms()) r.add_graph(disjoint_union(ga, qreps[k++]), ca * cb);
    }
    return r;
}

GraphPolynomial homogeneous_part(const GraphPolynomial& p, std::uint32_t m) {
    GraphPolynomial r(p.oriented());
    for (const auto& [cls, c] : p.terms()) {
        if (cls.degree == m) r.add_class(cls, c);
    }
    return r;
}

} // namespace ihxlab
