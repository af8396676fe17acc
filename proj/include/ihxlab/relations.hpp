#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ihxlab/exactla.hpp"
#include "ihxlab/graph.hpp"
#include "ihxlab/polynomial.hpp"
#include "ihxlab/structure.hpp"

namespace ihxlab {

enum class RelationKind {
    coefficients,           // a*G_I + b*G_H + c*G_X on unoriented graphs
    oriented_coefficients,  // same on oriented graphs, with the oriented patterns
    loop,                   // every graph with a 1-loop
    IH0,                    // (1,-1,0) with four distinct external edges
    AS                      // oriented graphs, no further relation
};

struct RelationSpec {
    RelationKind kind = RelationKind::coefficients;
    Rational a = 1, b = 1, c = 1;

    static RelationSpec ihx() { return {RelationKind::coefficients, 1, 1, 1}; }
    static RelationSpec ih() { return {RelationKind::coefficients, 1, -1, 0}; }
    static RelationSpec ih0() { return {RelationKind::IH0, 1, -1, 0}; }
    static RelationSpec loop() { return {RelationKind::loop, 0, 0, 0}; }
    static RelationSpec as() { return {RelationKind::AS, 0, 0, 0}; }
    static RelationSpec as_ihx() { return {RelationKind::oriented_coefficients, 1, 1, 1}; }

    bool oriented() const { return kind == RelationKind::oriented_coefficients || kind == RelationKind::AS; }
    bool has_moves() const { return kind != RelationKind::loop && kind != RelationKind::AS; }
    /// ihx, ih, ih0, loop, as, as-ihx, or coeff(a,b,c) / as-coeff(a,b,c).
    std::string name() const;
};

/// Parses a comma-separated list such as "ihx,loop"; throws StructuralError.
std::vector<RelationSpec> parse_relation_specs(const std::string& text);
std::string spec_list_name(const std::vector<RelationSpec>& specs);

enum class MoveShape { I, H, X };

/// External flag order of the two new vertices: the first vertex receives
/// a[p[0]], a[p[1]], the second a[p[2]], a[p[3]], each followed by the new edge.
/// Unoriented: I (12|34), H (13|42), X (14|23). Oriented: I (12|34), H (41|23), X (13|42).
std::array<int, 4> move_pattern(MoveShape shape, bool oriented);
/// Sign of the pattern as a permutation of a1..a4 (oriented H is odd).
int move_sign(MoveShape shape, bool oriented);

/// G_I, G_H or G_X. The new vertices reuse the indices of u and v.
TrivalentGraph move_graph(const TrivalentGraph& g, const IEmbedding& e, MoveShape shape);

/// a*G_I + eps_H*b*G_H + eps_X*c*G_X as a canonical polynomial.
GraphPolynomial apply_move(const TrivalentGraph& g, const IEmbedding& e, const RelationSpec& spec);

/// The same edge with a3, a4 exchanged (H and X swap roles).
IEmbedding swapped_legs(const IEmbedding& e);
/// The same edge seen from v.
IEmbedding swapped_ends(const IEmbedding& e);

/// Degree-m part of the ideal: moves in every degree-m ambient graph (two labelings
/// per embedding, duplicates within an embedding removed, zero vectors dropped),
/// then unit vectors of loop classes for the loop spec.
std::vector<GraphPolynomial> relation_basis(std::uint32_t m, const std::vector<RelationSpec>& specs);

/// Column space, relation matrix and its echelon form at one degree.
class RelationSpan {
public:
    RelationSpan(std::uint32_t m, std::vector<RelationSpec> specs, bool connected_only = false);

    std::uint32_t degree() const { return degree_; }
    bool oriented() const { return oriented_; }
    bool connected_only() const { return connected_only_; }
    const std::vector<CanonicalClass>& classes() const { return classes_; }
    const std::vector<GraphPolynomial>& relations() const { return relations_; }
    const la::RationalMatrix& matrix() const { return matrix_; }
    std::size_t rank() const { return echelon_.rank(); }
    std::size_t quotient_dimension() const { return classes_.size() - rank(); }
    /// Rank recomputed with reversed row and column order.
    std::size_t rank_second_order() const;

    /// Coordinates of p in class order; terms outside the column space throw
    /// PreconditionError unless connected_only (where they are dropped).
    la::SparseVector coordinates(const GraphPolynomial& p) const;
    bool contains(const GraphPolynomial& p) const;
    /// Indices of relations that form a basis of the span.
    const std::vector<std::size_t>& independent() const { return independent_; }

private:
    std::uint32_t degree_;
    std::vector<RelationSpec> specs_;
    bool oriented_;
    bool connected_only_;
    std::vector<CanonicalClass> classes_;
    std::map<std::string, std::size_t> column_;
    std::vector<GraphPolynomial> relations_;
    la::RationalMatrix matrix_;
    la::Echelon echelon_;
    std::vector<std::size_t> independent_;
};

/// Cached span for (m, specs, connected_only).
std::shared_ptr<const RelationSpan> relation_span(std::uint32_t m, const std::vector<RelationSpec>& specs,
                                                  bool connected_only = false);

struct QuotientReport {
    std::uint32_t degree = 0;
    std::string specs;
    bool connected_only = false;
    std::size_t classes = 0;
    std::size_t relations = 0;
    std::size_t rank = 0;
    std::size_t rank_second_order = 0;
    std::size_t rank_mod_p = 0;
    std::size_t quotient_dimension = 0;
};

QuotientReport quotient_rank(std::uint32_t m, const std::vector<RelationSpec>& specs, bool connected_only = false);

struct IdealCertificate {
    bool member = false;
    /// p = sum coefficient_i * relation_i (when member).
    std::vector<std::pair<Rational, GraphPolynomial>> combination;
    /// Functional on class coordinates vanishing on every relation with nonzero value on p.
    la::SparseVector separating_functional;
    std::vector<CanonicalClass> classes;
};

/// Decides whether homogeneous p lies in the degree-m part of the ideal.
IdealCertificate in_ideal(const GraphPolynomial& p, const std::vector<RelationSpec>& specs);
/// Recomputes sum of the certificate and compares with p.
bool check_certificate(const GraphPolynomial& p, const IdealCertificate& cert);

/// Monomial in E_1, E_2, ...: sorted list of indices (E_1^2 E_3 = {1,1,3}).
using EMonomial = std::vector<std::uint32_t>;
using ENormalForm = std::map<EMonomial, Rational>;
std::string format_monomial(const EMonomial& mono);

/// Expresses an unoriented p modulo IH0 and loop in E-monomials, by searching
/// IH0 moves from each connected component until E_d is reached.
/// Throws CapacityError if a component's search exceeds the class cap.
ENormalForm reduce_to_E_normal_form(const GraphPolynomial& p);

/// Length of the IH0-move path used to reach E_d from a connected loop-free graph.
std::size_t E_reduction_distance(const TrivalentGraph& connected);

} // namespace ihxlab
