#include "ihxlab/exactla.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "ihxlab/errors.hpp"

namespace ihxlab {

std::string format_rational(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw StructuralError("zero denominator in rational '" + text + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw StructuralError("malformed rational '" + text + "'");
    }
}

namespace la {

Rational SparseVector::at(std::size_t index) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), index,
                               [](const auto& e, std::size_t i) { return e.first < i; });
    if (it != entries.end() && it->first == index) return it->second;
    return Rational(0);
}

SparseVector SparseVector::from_pairs(std::vector<std::pair<std::size_t, Rational>> pairs) {
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector v;
    for (auto& [i, x] : pairs) {
        x.canonicalize();
        if (!v.entries.empty() && v.entries.back().first == i) {
            v.entries.back().second += x;
        } else {
            v.entries.emplace_back(i, std::move(x));
        }
    }
    std::erase_if(v.entries, [](const auto& e) { return e.second == 0; });
    return v;
}

SparseVector SparseVector::from_dense(std::span<const Rational> dense) {
    SparseVector v;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (dense[i] != 0) v.entries.emplace_back(i, dense[i]);
    }
    return v;
}

std::vector<Rational> SparseVector::to_dense(std::size_t length) const {
    std::vector<Rational> d(length);
    for (const auto& [i, x] : entries) {
        if (i >= length) throw PreconditionError("sparse index beyond dense length");
        d[i] = x;
    }
    return d;
}

SparseVector axpy(const SparseVector& a, const Rational& c, const SparseVector& b) {
    SparseVector out;
    out.entries.reserve(a.nnz() + b.nnz());
    std::size_t i = 0, j = 0;
    while (i < a.nnz() || j < b.nnz()) {
        if (j == b.nnz() || (i < a.nnz() && a.entries[i].first < b.entries[j].first)) {
            out.entries.push_back(a.entries[i++]);
        } else if (i == a.nnz() || b.entries[j].first < a.entries[i].first) {
            Rational x = c * b.entries[j].second;
            if (x != 0) out.entries.emplace_back(b.entries[j].first, std::move(x));
            ++j;
        } else {
            Rational x = a.entries[i].second + c * b.entries[j].second;
            if (x != 0) out.entries.emplace_back(a.entries[i].first, std::move(x));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVector add(const SparseVector& a, const SparseVector& b) { return axpy(a, Rational(1), b); }

SparseVector scale(const Rational& c, const SparseVector& a) {
    SparseVector out;
    if (c == 0) return out;
    out.entries.reserve(a.nnz());
    for (const auto& [i, x] : a.entries) out.entries.emplace_back(i, c * x);
    return out;
}

Rational dot(const SparseVector& a, const SparseVector& b) {
    Rational s = 0;
    std::size_t i = 0, j = 0;
    while (i < a.nnz() && j < b.nnz()) {
        if (a.entries[i].first < b.entries[j].first) {
            ++i;
        } else if (b.entries[j].first < a.entries[i].first) {
            ++j;
        } else {
            s += a.entries[i].second * b.entries[j].second;
            ++i;
            ++j;
        }
    }
    return s;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

RationalMatrix::RationalMatrix(std::size_t cols, std::vector<SparseVector> rows)
    : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_) {
        if (!r.empty() && r.entries.back().first >= cols_) {
            throw StructuralError("matrix row index exceeds column count");
        }
    }
}

Rational RationalMatrix::at(std::size_t r, std::size_t c) const { return rows_.at(r).at(c); }

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& raw) {
    Rational value = raw;
    value.canonicalize();
    if (r >= rows_.size() || c >= cols_) throw StructuralError("matrix index out of range");
    auto& e = rows_[r].entries;
    auto it = std::lower_bound(e.begin(), e.end(), c,
                               [](const auto& x, std::size_t i) { return x.first < i; });
    if (it != e.end() && it->first == c) {
        if (value == 0) {
            e.erase(it);
        } else {
            it->second = value;
        }
    } else if (value != 0) {
        e.insert(it, {c, value});
    }
}

void RationalMatrix::append_row(SparseVector row) {
    if (!row.empty() && row.entries.back().first >= cols_) {
        throw StructuralError("matrix row index exceeds column count");
    }
    rows_.push_back(std::move(row));
}

RationalMatrix RationalMatrix::transposed() const {
    std::vector<SparseVector> t(cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (const auto& [c, x] : rows_[r].entries) t[c].entries.emplace_back(r, x);
    }
    return RationalMatrix(rows_.size(), std::move(t));
}

RationalMatrix RationalMatrix::permuted(std::span<const std::size_t> row_perm,
                                        std::span<const std::size_t> col_perm) const {
    if (row_perm.size() != rows_.size() || col_perm.size() != cols_) {
        throw StructuralError("permutation sizes do not match matrix");
    }
    std::vector<std::size_t> col_inv(cols_);
    for (std::size_t j = 0; j < cols_; ++j) col_inv[col_perm[j]] = j;
    std::vector<SparseVector> out;
    out.reserve(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::vector<std::pair<std::size_t, Rational>> p;
        for (const auto& [c, x] : rows_[row_perm[i]].entries) p.emplace_back(col_inv[c], x);
        out.push_back(SparseVector::from_pairs(std::move(p)));
    }
    return RationalMatrix(cols_, std::move(out));
}

SparseVector RationalMatrix::multiply(const SparseVector& x) const {
    SparseVector out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Rational s = dot(rows_[r], x);
        if (s != 0) out.entries.emplace_back(r, std::move(s));
    }
    return out;
}

std::string RationalMatrix::to_triplets() const {
    std::size_t nnz = 0;
    for (const auto& r : rows_) nnz += r.nnz();
    std::ostringstream os;
    os << rows_.size() << ' ' << cols_ << ' ' << nnz << '\n';
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (const auto& [c, x] : rows_[r].entries) {
            os << r << ' ' << c << ' ' << format_rational(x) << '\n';
        }
    }
    return os.str();
}

RationalMatrix RationalMatrix::from_triplets(const std::string& text) {
    std::istringstream is(text);
    std::size_t rows = 0, cols = 0, nnz = 0;
    if (!(is >> rows >> cols >> nnz)) throw StructuralError("bad triplet header");
    std::vector<std::vector<std::pair<std::size_t, Rational>>> acc(rows);
    for (std::size_t k = 0; k < nnz; ++k) {
        std::size_t r = 0, c = 0;
        std::string value;
        if (!(is >> r >> c >> value)) throw StructuralError("truncated triplet list");
        if (r >= rows || c >= cols) throw StructuralError("triplet index out of range");
        acc[r].emplace_back(c, parse_rational(value));
    }
    std::vector<SparseVector> out;
    out.reserve(rows);
    for (auto& p : acc) out.push_back(SparseVector::from_pairs(std::move(p)));
    return RationalMatrix(cols, std::move(out));
}

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

void make_primitive(IntRow& row) {
    if (row.empty()) return;
    Integer g = 0;
    for (const auto& [i, x] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    if (row.front().second < 0) g = -g;
    if (g != 1) {
        for (auto& [i, x] : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
}

IntRow to_integer_row(const SparseVector& v) {
    Integer l = 1;
    for (const auto& [i, x] : v.entries) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    IntRow row;
    row.reserve(v.nnz());
    for (const auto& [i, x] : v.entries) {
        Integer n = x.get_num() * (l / x.get_den());
        row.emplace_back(i, std::move(n));
    }
    make_primitive(row);
    return row;
}

// a*r - b*p
IntRow combine(const Integer& a, const IntRow& r, const Integer& b, const IntRow& p) {
    IntRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    Integer t;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, a * r[i].second);
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -b * p[j].second);
            ++j;
        } else {
            t = a * r[i].second - b * p[j].second;
            if (t != 0) out.emplace_back(r[i].first, t);
            ++i;
            ++j;
        }
    }
    return out;
}

bool row_less(const SparseVector& a, const SparseVector& b) {
    if (a.nnz() != b.nnz()) return a.nnz() < b.nnz();
    for (std::size_t k = 0; k < a.nnz(); ++k) {
        if (a.entries[k].first != b.entries[k].first) return a.entries[k].first < b.entries[k].first;
        if (a.entries[k].second != b.entries[k].second) return a.entries[k].second < b.entries[k].second;
    }
    return false;
}

std::vector<std::size_t> fill_order(const std::vector<SparseVector>& rows) {
    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return row_less(rows[a], rows[b]); });
    return order;
}

} // namespace

Echelon::IntRow Echelon::reduce(IntRow row) const {
    while (!row.empty()) {
        std::size_t lead = row.front().first;
        if (lead >= pivots_.size() || pivots_[lead].empty()) break;
        const IntRow& p = pivots_[lead];
        Integer a = p.front().second;
        Integer b = row.front().second;
        Integer g = gcd(a, b);
        a /= g;
        b /= g;
        row = combine(a, row, b, p);
        make_primitive(row);
    }
    return row;
}

bool Echelon::insert(const SparseVector& v) {
    if (!v.empty() && v.entries.back().first >= cols_) {
        throw StructuralError("row index exceeds echelon column count");
    }
    IntRow row = reduce(to_integer_row(v));
    if (row.empty()) return false;
    std::size_t lead = row.front().first;
    if (pivots_.size() < cols_) pivots_.resize(cols_);
    pivots_[lead] = std::move(row);
    ++pivot_count_;
    return true;
}

bool Echelon::contains(const SparseVector& v) const { return reduce(to_integer_row(v)).empty(); }

std::vector<std::size_t> Echelon::pivot_columns() const {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < pivots_.size(); ++c) {
        if (!pivots_[c].empty()) cols.push_back(c);
    }
    return cols;
}

std::vector<SparseVector> Echelon::reduced_rows() const {
    auto cols = pivot_columns();
    std::map<std::size_t, SparseVector> rows;
    for (auto c : cols) {
        SparseVector v;
        const IntRow& p = pivots_[c];
        Rational lead(p.front().second);
        for (const auto& [i, x] : p) v.entries.emplace_back(i, Rational(x) / lead);
        rows.emplace(c, std::move(v));
    }
    // Back substitution from the last pivot column upward.
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
        const SparseVector& p = rows.at(*it);
        for (auto jt = cols.begin(); jt != cols.end() && *jt < *it; ++jt) {
            SparseVector& q = rows.at(*jt);
            Rational f = q.at(*it);
            if (f != 0) q = axpy(q, -f, p);
        }
    }
    std::vector<SparseVector> out;
    out.reserve(cols.size());
    for (auto c : cols) out.push_back(std::move(rows.at(c)));
    return out;
}

std::size_t rank(const RationalMatrix& m) {
    Echelon e(m.cols());
    for (auto i : fill_order(m.row_data())) e.insert(m.row(i));
    return e.rank();
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t to_mod(const Integer& x, std::uint64_t p) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return mpz_fdiv_ui(x.get_mpz_t(), p);
}

} // namespace

std::size_t rank_mod_p(const RationalMatrix& m, std::uint64_t p) {
    using ModRow = std::vector<std::pair<std::size_t, std::uint64_t>>;
    std::vector<ModRow> pivots(m.cols());
    std::size_t rk = 0;
    for (auto idx : fill_order(m.row_data())) {
        ModRow row;
        for (const auto& [c, x] : m.row(idx).entries) {
            std::uint64_t den = to_mod(x.get_den(), p);
            if (den == 0) throw PreconditionError("denominator vanishes modulo the chosen prime");
            std::uint64_t v = mulmod(to_mod(x.get_num(), p), powmod(den, p - 2, p), p);
            if (v) row.emplace_back(c, v);
        }
        while (!row.empty()) {
            std::size_t lead = row.front().first;
            if (pivots[lead].empty()) break;
            const ModRow& piv = pivots[lead];  // leading coefficient 1
            std::uint64_t f = row.front().second;
            ModRow out;
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < piv.size()) {
                if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                    out.push_back(row[i++]);
                } else {
                    std::uint64_t sub = mulmod(f, piv[j].second, p);
                    if (i == row.size() || piv[j].first < row[i].first) {
                        if (sub) out.emplace_back(piv[j].first, p - sub);
                        ++j;
                    } else {
                        std::uint64_t v = (row[i].second + p - sub) % p;
                        if (v) out.emplace_back(row[i].first, v);
                        ++i;
                        ++j;
                    }
                }
            }
            row = std::move(out);
        }
        if (row.empty()) continue;
        std::uint64_t inv = powmod(row.front().second, p - 2, p);
        for (auto& [c, v] : row) v = mulmod(v, inv, p);
        pivots[row.front().first] = std::move(row);
        ++rk;
    }
    return rk;
}

std::vector<SparseVector> kernel_basis(const RationalMatrix& m) {
    Echelon e(m.cols());
    for (auto i : fill_order(m.row_data())) e.insert(m.row(i));
    auto rref = e.reduced_rows();
    auto pivots = e.pivot_columns();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<SparseVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::pair<std::size_t, Rational>> p;
        p.emplace_back(f, Rational(1));
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            Rational x = rref[k].at(f);
            if (x != 0) p.emplace_back(pivots[k], -x);
        }
        basis.push_back(SparseVector::from_pairs(std::move(p)));
    }
    return basis;
}

Membership span_membership(const SparseVector& v, std::span<const SparseVector> basis,
                           std::size_t dim) {
    auto check = [dim](const SparseVector& x) {
        if (!x.empty() && x.entries.back().first >= dim) {
            throw PreconditionError("span_membership: vector index exceeds dimension");
        }
    };
    check(v);
    for (const auto& b : basis) check(b);

    // Columns of M are basis[0..k-1] followed by v; rows are coordinates.
    const std::size_t k = basis.size();
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows(dim);
    for (std::size_t i = 0; i < k; ++i) {
        for (const auto& [r, x] : basis[i].entries) rows[r].emplace_back(i, x);
    }
    for (const auto& [r, x] : v.entries) rows[r].emplace_back(k, x);
    std::vector<SparseVector> mrows;
    mrows.reserve(dim);
    for (auto& r : rows) {
        if (!r.empty()) mrows.push_back(SparseVector::from_pairs(std::move(r)));
    }
    RationalMatrix m(k + 1, std::move(mrows));
    Echelon e(k + 1);
    for (auto i : fill_order(m.row_data())) e.insert(m.row(i));
    auto pivots = e.pivot_columns();

    Membership out;
    if (pivots.empty() || pivots.back() != k) {
        out.member = true;
        out.coefficients.assign(k, Rational(0));
        auto rref = e.reduced_rows();
        for (std::size_t j = 0; j < pivots.size(); ++j) out.coefficients[pivots[j]] = rref[j].at(k);
        return out;
    }

    // Not a member: search the left null space of the basis for phi with phi.v != 0.
    Echelon eb(dim);
    for (const auto& b : basis) eb.insert(b);
    auto rref = eb.reduced_rows();
    auto bp = eb.pivot_columns();
    std::vector<bool> is_pivot(dim, false);
    for (auto c : bp) is_pivot[c] = true;
    for (std::size_t f = 0; f < dim; ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::pair<std::size_t, Rational>> p;
        p.emplace_back(f, Rational(1));
        for (std::size_t j = 0; j < bp.size(); ++j) {
            Rational x = rref[j].at(f);
            if (x != 0) p.emplace_back(bp[j], -x);
        }
        SparseVector phi = SparseVector::from_pairs(std::move(p));
        if (dot(phi, v) != 0) {
            out.separating_functional = std::move(phi);
            return out;
        }
    }
    throw std::logic_error("span_membership: no separating functional found");
}

} // namespace la
} // namespace ihxlab
