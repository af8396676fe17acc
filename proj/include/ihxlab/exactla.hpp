#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ihxlab {

using Rational = mpq_class;
using Integer = mpz_class;

/// Formats a rational as `p/q` (always with an explicit denominator).
std::string format_rational(const Rational& r);
/// Parses `p/q` or `p`; throws StructuralError on malformed input.
Rational parse_rational(const std::string& text);

namespace la {

/// Sparse vector with strictly increasing indices and no stored zeros.
struct SparseVector {
    std::vector<std::pair<std::size_t, Rational>> entries;

    bool empty() const { return entries.empty(); }
    std::size_t nnz() const { return entries.size(); }
    Rational at(std::size_t index) const;

    /// Builds from unsorted (index, value) pairs, summing duplicates.
    static SparseVector from_pairs(std::vector<std::pair<std::size_t, Rational>> pairs);
    static SparseVector from_dense(std::span<const Rational> dense);
    std::vector<Rational> to_dense(std::size_t length) const;

    friend bool operator==(const SparseVector&, const SparseVector&) = default;
};

SparseVector add(const SparseVector& a, const SparseVector& b);
SparseVector scale(const Rational& c, const SparseVector& a);
/// a + c*b
SparseVector axpy(const SparseVector& a, const Rational& c, const SparseVector& b);
Rational dot(const SparseVector& a, const SparseVector& b);

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::size_t cols, std::vector<SparseVector> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const SparseVector& row(std::size_t i) const { return rows_[i]; }
    const std::vector<SparseVector>& row_data() const { return rows_; }

    Rational at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Rational& value);
    void append_row(SparseVector row);

    RationalMatrix transposed() const;
    /// New matrix whose row i is old row perm[i] and whose column j is old column colperm[j].
    RationalMatrix permuted(std::span<const std::size_t> row_perm,
                            std::span<const std::size_t> col_perm) const;
    SparseVector multiply(const SparseVector& x) const;

    /// `rows cols nnz` header followed by `r c p/q` triplets.
    std::string to_triplets() const;
    static RationalMatrix from_triplets(const std::string& text);

private:
    std::size_t cols_ = 0;
    std::vector<SparseVector> rows_;
};

/// Incremental fraction-free row echelon form over the integers.
///
/// Rows are scaled to primitive integer vectors on insertion; reduction of a
/// row r by a pivot p with leading column c is r <- p[c]*r - r[c]*p followed
/// by removal of the integer content. Pivots are keyed by leading column.
class Echelon {
public:
    explicit Echelon(std::size_t cols) : cols_(cols) {}

    /// Returns true when the row was independent of the current pivots.
    bool insert(const SparseVector& row);
    /// True when the row reduces to zero against the current pivots.
    bool contains(const SparseVector& row) const;

    std::size_t rank() const { return pivot_count_; }
    std::size_t cols() const { return cols_; }

    /// Reduced row echelon rows (leading coefficient 1), ordered by pivot column.
    std::vector<SparseVector> reduced_rows() const;
    std::vector<std::size_t> pivot_columns() const;

private:
    using IntRow = std::vector<std::pair<std::size_t, Integer>>;
    IntRow reduce(IntRow row) const;

    std::size_t cols_;
    std::size_t pivot_count_ = 0;
    // pivots_[c] holds the pivot row with leading column c (empty if none).
    std::vector<IntRow> pivots_;
};

/// Exact rank. Rows are fed in order of increasing fill, ties broken lexicographically.
std::size_t rank(const RationalMatrix& m);
/// Rank over GF(p); used only as an independent consistency check.
std::size_t rank_mod_p(const RationalMatrix& m, std::uint64_t p = 2305843009213693951ULL);

/// Basis of {x : Mx = 0}, one vector per free column, in increasing free-column order.
std::vector<SparseVector> kernel_basis(const RationalMatrix& m);

struct Membership {
    bool member = false;
    /// Coefficients with v = sum_i coefficients[i] * basis[i] (when member).
    std::vector<Rational> coefficients;
    /// phi with phi.b_i = 0 for all i and phi.v != 0 (when not a member).
    SparseVector separating_functional;
};

/// Decides v in span(basis); `dim` bounds every index.
Membership span_membership(const SparseVector& v, std::span<const SparseVector> basis,
                           std::size_t dim);

} // namespace la
} // namespace ihxlab
