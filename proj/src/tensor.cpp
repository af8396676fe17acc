#include "ihxlab/tensor.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "ihxlab/errors.hpp"

namespace ihxlab {

std::string Space::name() const {
    const std::string k = std::to_string(blocks);
    if (block_size == 1 && inner == Symmetry::none) {
        switch (outer) {
        case Symmetry::none: return "tensor" + k;
        case Symmetry::ext: return "ext" + k;
        case Symmetry::sym: return "sym" + k;
        }
    }
    if (block_size == 3 && outer == Symmetry::ext) {
        if (inner == Symmetry::ext) return "ext" + k + (u ? "(u)" : "(ext3)");
        if (inner == Symmetry::sym && !u) return "ext" + k + "(sym3)";
    }
    if (block_size == 2 && inner == Symmetry::sym && outer == Symmetry::sym && blocks == 2) return "sym2(sym2)";
    throw PreconditionError("space has no descriptor name");
}

Space Space::parse(const std::string& name) {
    static const std::regex re(R"((tensor|ext|sym)(\d+)(\((ext3|u|sym3|sym2)\))?)");
    std::smatch m;
    if (!std::regex_match(name, m, re)) throw StructuralError("unknown space descriptor '" + name + "'");
    const auto k = static_cast<std::uint32_t>(std::stoul(m[2]));
    const std::string head = m[1], inner = m[4];
    if (inner.empty()) {
        if (head == "tensor") return tensor(k);
        if (head == "ext") return ext(k);
        return sym(k);
    }
    if (head == "ext" && inner == "ext3") return ext_ext3(k);
    if (head == "ext" && inner == "u") return ext_u(k);
    if (head == "ext" && inner == "sym3") return ext_sym3(k);
    if (head == "sym" && k == 2 && inner == "sym2") return sym2_sym2();
    throw StructuralError("unknown space descriptor '" + name + "'");
}

namespace {

// Insertion sort on [first,last) returning the permutation sign, 0 on a repeat when strict.
template <class It, class Less>
int sort_with_sign(It first, It last, Less less, bool strict) {
    int sign = 1;
    for (It i = first; i != last; ++i) {
        for (It j = i; j != first && less(*j, *(j - 1)); --j) {
            std::iter_swap(j, j - 1);
            sign = -sign;
        }
    }
    if (strict) {
        for (It i = first; i + 1 < last; ++i) {
            if (!less(*i, *(i + 1))) return 0;
        }
    }
    return sign;
}

} // namespace

int normalize(Word& w, const Space& s) {
    if (w.size() != s.length()) throw StructuralError("word length does not match space " + s.name());
    const std::uint32_t b = s.block_size;
    int sign = 1;
    if (s.inner != Symmetry::none) {
        for (std::uint32_t k = 0; k < s.blocks; ++k) {
            auto first = w.begin() + k * b, last = first + b;
            int sg = sort_with_sign(first, last, std::less<>(), s.inner == Symmetry::ext);
            if (s.inner == Symmetry::ext) sign *= sg;
            if (sign == 0) return 0;
        }
    }
    if (s.outer == Symmetry::none) return sign;
    if (b == 1) {
        int sg = sort_with_sign(w.begin(), w.end(), std::less<>(), s.outer == Symmetry::ext);
        return s.outer == Symmetry::ext ? sign * sg : sign;
    }
    auto less = [&](std::uint32_t x, std::uint32_t y) {
        return std::lexicographical_compare(w.begin() + x * b, w.begin() + (x + 1) * b, w.begin() + y * b,
                                            w.begin() + (y + 1) * b);
    };
    for (std::uint32_t i = 1; i < s.blocks; ++i) {
        for (std::uint32_t j = i; j > 0 && less(j, j - 1); --j) {
            std::swap_ranges(w.begin() + j * b, w.begin() + (j + 1) * b, w.begin() + (j - 1) * b);
            if (s.outer == Symmetry::ext) sign = -sign;
        }
    }
    if (s.outer == Symmetry::ext) {
        for (std::uint32_t i = 1; i < s.blocks; ++i) {
            if (!less(i - 1, i)) return 0;
        }
    }
    return sign;
}

std::vector<int> weight(const Word& w, std::uint32_t genus) {
    std::vector<int> wt(genus, 0);
    for (auto l : w) wt[static_cast<std::size_t>(std::abs(l)) - 1] += l > 0 ? 1 : -1;
    return wt;
}

void SparseTensor::add_word(Word w, const Rational& c) {
    if (c == 0) return;
    for (auto l : w) {
        if (l == 0 || static_cast<std::uint32_t>(std::abs(l)) > genus_) {
            throw StructuralError("letter " + std::to_string(l) + " outside genus " + std::to_string(genus_));
        }
    }
    int s = normalize(w, space_);
    if (s == 0) return;
    add_normalized(w, s > 0 ? c : Rational(-c));
}

void SparseTensor::add_normalized(const Word& w, const Rational& raw) {
    if (raw == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, raw);
    if (inserted) {
        it->second.canonicalize();
    } else {
        it->second += raw;
        if (it->second == 0) terms_.erase(it);
    }
}

void SparseTensor::add(const SparseTensor& other, const Rational& c) {
    if (other.genus_ != genus_ || !(other.space_ == space_)) {
        throw TypeMismatchError("adding tensors of different spaces");
    }
    if (c == 0) return;
    for (const auto& [w, x] : other.terms_) add_normalized(w, c * x);
}

Rational SparseTensor::coefficient(Word w) const {
    int s = normalize(w, space_);
    if (s == 0) return 0;
    auto it = terms_.find(w);
    if (it == terms_.end()) return 0;
    return s > 0 ? it->second : Rational(-it->second);
}

std::string SparseTensor::to_text() const {
    std::ostringstream os;
    os << "tensor1 genus=" << genus_ << " space=" << space_.name() << " terms=" << terms_.size() << '\n';
    for (const auto& [w, c] : terms_) {
        os << "coeff=" << format_rational(c) << " word=";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i > 0) os << ((space_.block_size > 1 && i % space_.block_size == 0) ? '|' : ',');
            os << static_cast<int>(w[i]);
        }
        os << '\n';
    }
    return os.str();
}

SparseTensor SparseTensor::parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw StructuralError("empty tensor text");
    std::istringstream hs(line);
    std::string magic, gtok, stok, ttok;
    hs >> magic >> gtok >> stok >> ttok;
    if (magic != "tensor1" || gtok.rfind("genus=", 0) != 0 || stok.rfind("space=", 0) != 0) {
        throw StructuralError("expected 'tensor1 genus=<g> space=<desc>' header");
    }
    SparseTensor t(static_cast<std::uint32_t>(std::stoul(gtok.substr(6))), Space::parse(stok.substr(6)));
    std::size_t count = 0;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto sp = line.find(" word=");
        if (line.rfind("coeff=", 0) != 0 || sp == std::string::npos) {
            throw StructuralError("malformed tensor record '" + line + "'");
        }
        Rational c = parse_rational(line.substr(6, sp - 6));
        std::string ws = line.substr(sp + 6);
        std::replace(ws.begin(), ws.end(), '|', ',');
        Word w;
        std::stringstream ss(ws);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                w.push_back(static_cast<std::int8_t>(std::stoi(tok)));
            } catch (...) {
                throw StructuralError("bad letter '" + tok + "'");
            }
        }
        t.add_word(std::move(w), c);
        ++count;
    }
    if (ttok.rfind("terms=", 0) == 0 && std::stoul(ttok.substr(6)) != count) {
        throw StructuralError("term count does not match header");
    }
    return t;
}

SparseTensor scaled(const SparseTensor& t, const Rational& c) {
    SparseTensor r(t.genus(), t.space());
    r.add(t, c);
    return r;
}

SparseTensor sum(const SparseTensor& a, const SparseTensor& b) {
    SparseTensor r = a;
    r.add(b);
    return r;
}

namespace {

std::vector<std::int8_t> letters(std::uint32_t g) {
    std::vector<std::int8_t> out;
    for (int i = -static_cast<int>(g); i <= static_cast<int>(g); ++i) {
        if (i != 0) out.push_back(static_cast<std::int8_t>(i));
    }
    return out;
}

// Sorted tuples of length k over items; strict for ext, weak for sym, all for none.
template <class T>
void tuples(const std::vector<T>& items, std::uint32_t k, Symmetry sym, std::vector<std::vector<T>>& out) {
    std::vector<std::size_t> idx;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (idx.size() == k) {
            std::vector<T> t;
            for (auto i : idx) t.push_back(items[i]);
            out.push_back(std::move(t));
            return;
        }
        std::size_t from = sym == Symmetry::none ? 0 : start;
        for (std::size_t i = from; i < items.size(); ++i) {
            idx.push_back(i);
            self(self, sym == Symmetry::ext ? i + 1 : i);
            idx.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace

std::vector<Word> basis_words(std::uint32_t genus, const Space& s) {
    std::vector<std::vector<std::int8_t>> blocks;
    tuples(letters(genus), s.block_size, s.block_size == 1 ? Symmetry::none : s.inner, blocks);
    std::vector<std::vector<std::vector<std::int8_t>>> combos;
    tuples(blocks, s.blocks, s.outer, combos);
    std::vector<Word> out;
    out.reserve(combos.size());
    for (const auto& c : combos) {
        Word w;
        for (const auto& b : c) w.insert(w.end(), b.begin(), b.end());
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<Word> basis_words_of_weight(std::uint32_t genus, const Space& s, const std::vector<int>& wt) {
    std::vector<Word> out;
    for (auto& w : basis_words(genus, s)) {
        if (weight(w, genus) == wt) out.push_back(std::move(w));
    }
    return out;
}

namespace {

Integer binomial(const Integer& n, std::uint32_t k) {
    Integer r;
    if (n < 0) return 0;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

Integer power_dim(const Integer& d, std::uint32_t k, Symmetry s) {
    switch (s) {
    case Symmetry::none: {
        Integer r = 1;
        for (std::uint32_t i = 0; i < k; ++i) r *= d;
        return r;
    }
    case Symmetry::ext: return binomial(d, k);
    case Symmetry::sym: return binomial(d + k - 1, k);
    }
    return 0;
}

} // namespace

Integer space_dimension(std::uint32_t genus, const Space& s) {
    Integer h = 2 * genus;
    Integer block = s.block_size == 1 ? h : power_dim(h, s.block_size, s.inner);
    return power_dim(block, s.blocks, s.outer);
}

} // namespace ihxlab
