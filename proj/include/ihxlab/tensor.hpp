#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ihxlab/exactla.hpp"

namespace ihxlab {

/// Letters are nonzero integers: i > 0 is x_i, -i is y_i.
using Word = std::vector<std::int8_t>;

enum class Symmetry { none, ext, sym };

/// A word space: `blocks` blocks of `block_size` letters, with the given
/// symmetry inside each block and among the blocks. `u` marks the subspace
/// Lambda^k U inside Lambda^k Lambda^3 H.
struct Space {
    std::uint32_t block_size = 1;
    Symmetry inner = Symmetry::none;
    Symmetry outer = Symmetry::none;
    std::uint32_t blocks = 0;
    bool u = false;

    std::uint32_t length() const { return block_size * blocks; }

    static Space tensor(std::uint32_t n) { return {1, Symmetry::none, Symmetry::none, n, false}; }
    static Space ext(std::uint32_t k) { return {1, Symmetry::none, Symmetry::ext, k, false}; }
    static Space sym(std::uint32_t k) { return {1, Symmetry::none, Symmetry::sym, k, false}; }
    static Space ext_ext3(std::uint32_t k) { return {3, Symmetry::ext, Symmetry::ext, k, false}; }
    static Space ext_u(std::uint32_t k) { return {3, Symmetry::ext, Symmetry::ext, k, true}; }
    static Space ext_sym3(std::uint32_t k) { return {3, Symmetry::sym, Symmetry::ext, k, false}; }
    static Space sym2_sym2() { return {2, Symmetry::sym, Symmetry::sym, 2, false}; }

    /// tensor<n>, ext<k>, sym<k>, ext<k>(ext3), ext<k>(u), ext<k>(sym3), sym2(sym2).
    std::string name() const;
    static Space parse(const std::string& name);

    friend bool operator==(const Space&, const Space&) = default;
};

/// Brings w into normal form for s; returns the sign (0 when the word vanishes).
int normalize(Word& w, const Space& s);

/// Weight of a word: component i-1 counts x_i minus y_i.
std::vector<int> weight(const Word& w, std::uint32_t genus);

/// Exact sparse element of a word space over genus g.
class SparseTensor {
public:
    using Terms = std::map<Word, Rational>;

    SparseTensor() = default;
    SparseTensor(std::uint32_t genus, Space space) : genus_(genus), space_(space) {}

    std::uint32_t genus() const { return genus_; }
    const Space& space() const { return space_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Adds c * w after normalization.
    void add_word(Word w, const Rational& c);
    /// Adds a word already in normal form.
    void add_normalized(const Word& w, const Rational& c);
    void add(const SparseTensor& other, const Rational& c = 1);
    Rational coefficient(Word w) const;

    std::string to_text() const;
    static SparseTensor parse(const std::string& text);

    friend bool operator==(const SparseTensor& a, const SparseTensor& b) {
        return a.genus_ == b.genus_ && a.space_ == b.space_ && a.terms_ == b.terms_;
    }

private:
    std::uint32_t genus_ = 1;
    Space space_;
    Terms terms_;
};

SparseTensor scaled(const SparseTensor& t, const Rational& c);
SparseTensor sum(const SparseTensor& a, const SparseTensor& b);

/// Normal-form basis words of s over genus g, optionally restricted to one weight.
std::vector<Word> basis_words(std::uint32_t genus, const Space& s);
std::vector<Word> basis_words_of_weight(std::uint32_t genus, const Space& s, const std::vector<int>& wt);

/// Dimension of s (ignores the u flag) as a binomial count.
Integer space_dimension(std::uint32_t genus, const Space& s);

} // namespace ihxlab
