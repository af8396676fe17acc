#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "ihxlab/canonical.hpp"
#include "ihxlab/exactla.hpp"
#include "ihxlab/graph.hpp"

namespace ihxlab {

/// Finite rational combination of canonical graph classes. Oriented polynomials
/// apply AS on insertion, so degenerate classes never appear.
class GraphPolynomial {
public:
    using Terms = std::map<CanonicalClass, Rational, ClassOrder>;

    explicit GraphPolynomial(bool oriented = false) : oriented_(oriented) {}
    static GraphPolynomial of(const TrivalentGraph& g, const Rational& c = 1);
    /// The unit (empty graph).
    static GraphPolynomial one(bool oriented = false);

    bool oriented() const { return oriented_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    /// Adds c * g after signed canonicalization.
    void add_graph(const TrivalentGraph& g, const Rational& c);
    /// Adds c * (canonical representative of cls); cls.sign is ignored.
    void add_class(const CanonicalClass& cls, const Rational& c);
    Rational coefficient(const CanonicalClass& cls) const;
    Rational coefficient(const TrivalentGraph& g) const;

    std::string to_text() const;
    static GraphPolynomial parse(const std::string& text);

    friend bool operator==(const GraphPolynomial& a, const GraphPolynomial& b) {
        return a.oriented_ == b.oriented_ && a.terms_ == b.terms_;
    }

private:
    bool oriented_;
    Terms terms_;
};

GraphPolynomial add(const GraphPolynomial& p, const GraphPolynomial& q);
GraphPolynomial scale(const Rational& c, const GraphPolynomial& p);
GraphPolynomial multiply(const GraphPolynomial& p, const GraphPolynomial& q);
GraphPolynomial homogeneous_part(const GraphPolynomial& p, std::uint32_t m);

/// Canonical representative of a class, parsed from its encoding.
TrivalentGraph representative(const CanonicalClass& cls);

} // namespace ihxlab
