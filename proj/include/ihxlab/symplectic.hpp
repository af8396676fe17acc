#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ihxlab/ordering.hpp"
#include "ihxlab/relations.hpp"
#include "ihxlab/tensor.hpp"

namespace ihxlab {

/// <x_i, y_i> = 1 = -<y_i, x_i>, all other pairings 0. Letters as in Word.
int pairing(int a, int b);
inline int sgn(int i) { return i > 0 ? 1 : -1; }

enum class Target { exterior, U, symmetric };
Target parse_target(const std::string& name);
std::string target_name(Target t);

/// Lambda^{2m} Lambda^3 H, Lambda^{2m} U or Lambda^{2m} Sym^3 H.
Space target_space(Target t, std::uint32_t m);

/// Contraction Lambda^3 H -> H against the symplectic form.
SparseTensor kappa(const Word& block, std::uint32_t genus);
/// The scalar lambda with kappa(v ^ omega) = lambda v, obtained by evaluation.
Rational u_scalar(std::uint32_t genus);
/// Projects an element of Lambda^k Lambda^3 H onto Lambda^k U (blockwise).
SparseTensor project_U(const SparseTensor& t);

/// Unprojected alpha_{(G,tau)} in H^{(x)6m}.
SparseTensor alpha_words(const TrivalentGraph& g, const TotalOrdering& tau, std::uint32_t genus);
/// Projected alpha. tau must be admissible for the target (wedge for exterior/U,
/// sym for symmetric); without tau a canonical admissible ordering is used.
SparseTensor alpha(const TrivalentGraph& g, std::uint32_t genus, Target target,
                   const std::optional<TotalOrdering>& tau = std::nullopt);
/// Sum of coefficient * alpha(representative) over a graph polynomial.
SparseTensor alpha(const GraphPolynomial& p, std::uint32_t m, std::uint32_t genus, Target target);

struct Generator {
    bool raising = true;
    std::uint32_t k = 1;  // 1..g; k = g is the long root

    std::string name() const;
};
/// E_1..E_g then F_1..F_g.
std::vector<Generator> chevalley_generators(std::uint32_t genus);
/// Image of one basis letter: (letter, coefficient) pairs.
std::vector<std::pair<int, int>> generator_image(const Generator& gen, int letter, std::uint32_t genus);
SparseTensor sp_action(const Generator& gen, const SparseTensor& t);
bool is_invariant(const SparseTensor& t);
/// Annihilated by every raising generator and of weight wt.
bool is_highest_weight(const SparseTensor& t, const std::vector<int>& wt);

/// Basis of the invariants of s (word spaces; for u spaces the projected ext3 invariants).
std::vector<SparseTensor> invariant_basis(std::uint32_t genus, const Space& s);
std::size_t invariant_dimension(std::uint32_t genus, const Space& s);
/// Rank of a family of tensors of one space.
std::size_t tensor_rank(const std::vector<SparseTensor>& ts);

enum class FVariant { I, H, X };
/// Raw two-block words (unnormalized) with coefficients for f_variant(t).
std::vector<std::pair<Word, int>> f_words(FVariant v, const std::array<int, 4>& t, std::uint32_t genus, bool oriented);
SparseTensor f_map(FVariant v, const std::array<int, 4>& t, std::uint32_t genus, Target target);
SparseTensor f_combination(const Rational& a, const Rational& b, const Rational& c, const std::array<int, 4>& t,
                           std::uint32_t genus, Target target);

/// Contracts slots k < l (0-based) of a plain tensor by the pairing (unnormalized).
SparseTensor contraction_C(const SparseTensor& t, std::uint32_t k, std::uint32_t l);

/// Ordering on g with u, v first, flags (a0, a1, eu) and (a2, a3, ev), and f+ = eu.
TotalOrdering cf_ordering(const TrivalentGraph& g, const IEmbedding& e, AdmissibilityMode mode);
/// (C (x) F_{a,b,c})(alpha_{(G,tau)}) with contraction at positions 3 and 6.
SparseTensor cf_image(const TrivalentGraph& g, const IEmbedding& e, const Rational& a, const Rational& b,
                      const Rational& c, std::uint32_t genus, Target target);

struct CFReport {
    bool holds = false;
    SparseTensor lhs, rhs;
};
/// Compares cf_image with 2g * alpha of the graph-side relation polynomial.
CFReport verify_CF_identity(const TrivalentGraph& g, const IEmbedding& e, const Rational& a, const Rational& b,
                            const Rational& c, std::uint32_t genus, Target target);

using Partition = std::vector<std::uint32_t>;
Partition parse_partition(const std::string& text);
std::string format_partition(const Partition& p);
/// Dimension of the irreducible sp(2g)-module with highest weight lambda.
Integer weyl_dimension(std::uint32_t genus, const Partition& lambda);

struct DecompositionReport {
    std::string equation;
    std::uint32_t genus = 0;
    std::vector<std::pair<Partition, Integer>> summands;
    Integer total, ambient;
    bool holds() const { return total == ambient; }
};
/// "1.1": Lambda^2 U (g >= 6); "1.3": Lambda^2 Sym^3 H (g >= 2).
DecompositionReport verify_decomposition(std::uint32_t genus, const std::string& equation);

} // namespace ihxlab
