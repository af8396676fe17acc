#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ihxlab/enumerate.hpp"
#include "ihxlab/errors.hpp"
#include "ihxlab/structure.hpp"
#include "ihxlab/symplectic.hpp"

using namespace ihxlab;

namespace {

TrivalentGraph theta(bool o = false) { return TrivalentGraph::from_vertex_pairs(2, {{0, 1}, {0, 1}, {0, 1}}, o); }
TrivalentGraph dumbbell() { return TrivalentGraph::from_vertex_pairs(2, {{0, 0}, {0, 1}, {1, 1}}); }

SparseTensor single(std::uint32_t g, Space s, Word w, Rational c = 1) {
    SparseTensor t(g, s);
    t.add_word(std::move(w), c);
    return t;
}

// Basis order x_1..x_g, y_1..y_g.
std::size_t index_of(int l, int g) { return l > 0 ? static_cast<std::size_t>(l - 1) : static_cast<std::size_t>(g - l - 1); }

std::vector<std::vector<int>> matrix_of(const Generator& gen, int g) {
    std::vector<std::vector<int>> m(2 * g, std::vector<int>(2 * g, 0));
    for (int l = -g; l <= g; ++l) {
        if (l == 0) continue;
        for (auto [r, c] : generator_image(gen, l, g)) m[index_of(r, g)][index_of(l, g)] += c;
    }
    return m;
}

// (kappa (x) id) on the first slot of the antisymmetrized tensor; must vanish on Lambda^k U.
bool contraction_vanishes(const SparseTensor& t) {
    std::map<Word, Rational> acc;
    const std::uint32_t k = t.space().blocks;
    for (const auto& [w, c] : t.terms()) {
        for (std::uint32_t j = 0; j < k; ++j) {
            Word b(w.begin() + 3 * j, w.begin() + 3 * j + 3);
            const auto kb = kappa(b, t.genus());
            for (const auto& [v, kc] : kb.terms()) {
                Word key{v[0]};
                for (std::uint32_t i = 0; i < k; ++i) {
                    if (i != j) key.insert(key.end(), w.begin() + 3 * i, w.begin() + 3 * i + 3);
                }
                acc[key] += (j % 2 ? -1 : 1) * kc * c;
            }
        }
    }
    return std::all_of(acc.begin(), acc.end(), [](const auto& kv) { return kv.second == 0; });
}

} // namespace

TEST_CASE("pairing is antisymmetric and nondegenerate") {
    const int g = 3;
    for (int a = -g; a <= g; ++a) {
        if (a == 0) continue;
        int nonzero = 0;
        for (int b = -g; b <= g; ++b) {
            if (b == 0) continue;
            CHECK(pairing(a, b) == -pairing(b, a));
            if (pairing(a, b) != 0) ++nonzero;
        }
        CHECK(nonzero == 1);
    }
    CHECK(pairing(1, -1) == 1);
    CHECK(pairing(-1, 1) == -1);
    CHECK(pairing(1, 2) == 0);
}

TEST_CASE("normal forms") {
    Word w{3, 1, 2};
    CHECK(normalize(w, Space::ext(3)) == 1);
    CHECK(w == Word{1, 2, 3});
    w = {2, 1, 3};
    CHECK(normalize(w, Space::ext(3)) == -1);
    w = {1, 1, 2};
    CHECK(normalize(w, Space::ext(3)) == 0);
    w = {2, 1, 1};
    CHECK(normalize(w, Space::sym(3)) == 1);
    CHECK(w == Word{1, 1, 2});
    // block sorts give -1 and -1, the outer swap another -1
    w = {2, 1, 3, -1, -2, -3};
    CHECK(normalize(w, Space::ext_ext3(2)) == -1);
    CHECK(w == Word{-3, -2, -1, 1, 2, 3});
    w = {1, 2, 3, 2, 1, 3};
    CHECK(normalize(w, Space::ext_ext3(2)) == 0);
    w = {1, 1, 2, 1, 1, 2};
    CHECK(normalize(w, Space::ext_sym3(2)) == 0);
}

TEST_CASE("tensor text round trip") {
    SparseTensor t(2, Space::ext_sym3(2));
    t.add_word({1, 1, 2, -1, -2, 2}, Rational(3, 4));
    t.add_word({-2, 1, 1, 1, 1, 1}, -2);
    auto back = SparseTensor::parse(t.to_text());
    CHECK(back == t);
    CHECK(t.to_text().find("space=ext2(sym3)") != std::string::npos);
    for (auto name : {"tensor4", "ext3", "sym2", "ext4(ext3)", "ext2(u)", "ext4(sym3)", "sym2(sym2)"}) {
        CHECK(Space::parse(name).name() == name);
    }
    CHECK_THROWS_AS(Space::parse("ext(2)"), StructuralError);
    CHECK_THROWS_AS(SparseTensor::parse("tensor1 genus=1 space=ext2\ncoeff=1/1 word=1,3\n"), StructuralError);
}

TEST_CASE("space dimensions by binomial counts match basis enumeration") {
    for (std::uint32_t g = 1; g <= 2; ++g) {
        for (auto s : {Space::tensor(3), Space::ext(3), Space::sym(3), Space::ext_ext3(2), Space::ext_sym3(2),
                       Space::sym2_sym2()}) {
            CHECK(Integer(basis_words(g, s).size()) == space_dimension(g, s));
        }
    }
    CHECK(space_dimension(2, Space::ext_sym3(4)) == 4845);
}

TEST_CASE("Chevalley generators preserve the form, against explicit matrices") {
    for (int g = 1; g <= 4; ++g) {
        // J with <u,v> = u^T J v
        std::vector<std::vector<int>> J(2 * g, std::vector<int>(2 * g, 0));
        for (int i = 1; i <= g; ++i) {
            J[index_of(i, g)][index_of(-i, g)] = 1;
            J[index_of(-i, g)][index_of(i, g)] = -1;
        }
        for (const auto& gen : chevalley_generators(g)) {
            auto X = matrix_of(gen, g);
            for (int r = 0; r < 2 * g; ++r) {
                for (int c = 0; c < 2 * g; ++c) {
                    int s = 0;
                    for (int k = 0; k < 2 * g; ++k) s += X[k][r] * J[k][c] + J[r][k] * X[k][c];
                    CHECK(s == 0);
                }
            }
        }
    }
    // E_1 x_2 at g = 2 via the matrix column of x_2
    auto X = matrix_of({true, 1}, 2);
    auto image = sp_action({true, 1}, single(2, Space::tensor(1), {2}));
    for (int l : {1, 2, -1, -2}) CHECK(image.coefficient({static_cast<std::int8_t>(l)}) == X[index_of(l, 2)][index_of(2, 2)]);
    CHECK(image == single(2, Space::tensor(1), {1}));
}

TEST_CASE("sp_action is linear") {
    std::mt19937_64 rng(7);
    const std::uint32_t g = 3;
    auto basis = basis_words(g, Space::ext_ext3(2));
    for (int trial = 0; trial < 20; ++trial) {
        SparseTensor p(g, Space::ext_ext3(2)), q(g, Space::ext_ext3(2));
        for (int k = 0; k < 5; ++k) {
            p.add_normalized(basis[rng() % basis.size()], static_cast<long>(rng() % 7) - 3);
            q.add_normalized(basis[rng() % basis.size()], static_cast<long>(rng() % 7) - 3);
        }
        for (const auto& gen : chevalley_generators(g)) {
            CHECK(sp_action(gen, sum(p, q)) == sum(sp_action(gen, p), sp_action(gen, q)));
        }
    }
}

TEST_CASE("invariant dimensions") {
    CHECK(invariant_dimension(1, Space::tensor(2)) == 1);
    CHECK(invariant_dimension(2, Space::ext(2)) == 1);
    CHECK(invariant_dimension(2, Space::sym(2)) == 0);
    CHECK(invariant_dimension(2, Space::tensor(4)) == 3);
    CHECK(invariant_dimension(3, Space::ext_ext3(2)) == enumerate(1, {}).size());
    CHECK(invariant_dimension(3, Space::ext_u(2)) == 1);
    CHECK(invariant_dimension(2, Space::ext_sym3(2)) == 1);
    // the symplectic form spans the H (x) H invariants
    auto inv = invariant_basis(1, Space::tensor(2));
    REQUIRE(inv.size() == 1);
    SparseTensor omega(1, Space::tensor(2));
    omega.add_word({1, -1}, 1);
    omega.add_word({-1, 1}, -1);
    CHECK(tensor_rank({inv[0], omega}) == 1);
}

TEST_CASE("U projector") {
    CHECK(u_scalar(2) == 1);
    CHECK(u_scalar(5) == 4);
    const std::uint32_t g = 3;
    auto basis = basis_words(g, Space::ext_ext3(2));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        SparseTensor t(g, Space::ext_ext3(2));
        for (int k = 0; k < 4; ++k) t.add_normalized(basis[rng() % basis.size()], static_cast<long>(rng() % 5) - 2);
        auto p = project_U(t);
        CHECK(contraction_vanishes(p));
        CHECK(project_U(p) == p);
    }
    // Lambda^3 H = U + H ^ omega, so dim U = C(2g,3) - 2g
    std::vector<SparseTensor> images;
    for (const auto& w : basis_words(g, Space::ext_ext3(1))) images.push_back(project_U(single(g, Space::ext_ext3(1), w)));
    CHECK(tensor_rank(images) == 20 - 6);
}

TEST_CASE("alpha examples") {
    CHECK(alpha(dumbbell(), 3, Target::U).is_zero());
    CHECK(!alpha(dumbbell(), 3, Target::exterior).is_zero());
    CHECK(alpha(theta(), 1, Target::exterior).is_zero());
    CHECK(!alpha(theta(), 3, Target::U).is_zero());
    CHECK(!alpha(theta(true), 2, Target::symmetric).is_zero());
    CHECK_THROWS_AS(alpha(theta(), 2, Target::symmetric), PreconditionError);
    auto tau = make_admissible(theta(), AdmissibilityMode::wedge);
    flip_edge(theta(), tau, 1);
    CHECK_THROWS_AS(alpha(theta(), 3, Target::exterior, tau), PreconditionError);

    auto ref = alpha(theta(), 3, Target::exterior);
    std::mt19937_64 rng(11);
    for (int k = 0; k < 10; ++k) {
        auto t = random_admissible(theta(), AdmissibilityMode::wedge, rng);
        CHECK(alpha(theta(), 3, Target::exterior, t) == ref);
    }
    for (const auto& gen : chevalley_generators(3)) CHECK(sp_action(gen, ref).is_zero());
}

TEST_CASE("alpha of degree-1 classes spans the invariants") {
    std::vector<SparseTensor> ext;
    for (const auto& c : enumerate(1, {})) ext.push_back(alpha(c.representative, 3, Target::exterior));
    CHECK(tensor_rank(ext) == 2);
    auto inv = invariant_basis(3, Space::ext_ext3(2));
    auto all = inv;
    all.insert(all.end(), ext.begin(), ext.end());
    CHECK(tensor_rank(all) == 2);
}

TEST_CASE("f maps") {
    CHECK(f_map(FVariant::I, {1, 1, 2, 3}, 3, Target::exterior).is_zero());
    // two-term expansion at g = 1: (x x x)^(x x y) - (x x y)^(x x x) = 2 (x x x)^(x x y)
    auto f = f_map(FVariant::I, {1, 1, 1, 1}, 1, Target::symmetric);
    CHECK(f == single(1, Space::ext_sym3(2), {1, 1, 1, 1, 1, -1}, 2));
    CHECK(f_combination(1, 1, 1, {1, 1, 2, 3}, 3, Target::exterior).is_zero());
    CHECK(!f_combination(1, 1, 1, {1, 1, 1, 1}, 1, Target::symmetric).is_zero());

    std::mt19937_64 rng(5);
    const std::uint32_t g = 3;
    for (int trial = 0; trial < 10; ++trial) {
        std::array<int, 4> t;
        for (auto& x : t) {
            x = static_cast<int>(rng() % 3) + 1;
            if (rng() % 2) x = -x;
        }
        auto base = f_combination(1, 1, 1, t, g, Target::exterior);
        std::array<int, 4> perm{0, 1, 2, 3};
        do {
            std::array<int, 4> s{t[perm[0]], t[perm[1]], t[perm[2]], t[perm[3]]};
            int sign = permutation_sign({static_cast<std::uint32_t>(perm[0]), static_cast<std::uint32_t>(perm[1]),
                                         static_cast<std::uint32_t>(perm[2]), static_cast<std::uint32_t>(perm[3])});
            CHECK(f_combination(1, 1, 1, s, g, Target::exterior) == scaled(base, sign));
        } while (std::next_permutation(perm.begin(), perm.end()));

        auto ih = f_combination(1, -1, 0, t, g, Target::exterior);
        CHECK(f_combination(1, -1, 0, {t[3], t[1], t[2], t[0]}, g, Target::exterior) == ih);
        CHECK(f_combination(1, -1, 0, {t[0], t[2], t[1], t[3]}, g, Target::exterior) == ih);
        CHECK(f_combination(1, -1, 0, {t[1], t[0], t[3], t[2]}, g, Target::exterior) == ih);
    }
}

TEST_CASE("contraction") {
    CHECK(contraction_C(single(1, Space::tensor(2), {1, -1}), 0, 1) == single(1, Space::tensor(0), {}));
    CHECK(contraction_C(single(2, Space::tensor(2), {1, 2}), 0, 1).is_zero());
    for (std::uint32_t g = 1; g <= 4; ++g) {
        SparseTensor t(g, Space::tensor(2));
        for (int i = 1; i <= static_cast<int>(g); ++i) {
            t.add_word({static_cast<std::int8_t>(i), static_cast<std::int8_t>(-i)}, 1);
            t.add_word({static_cast<std::int8_t>(-i), static_cast<std::int8_t>(i)}, -1);
        }
        CHECK(contraction_C(t, 0, 1).coefficient({}) == 2 * g);
    }
    CHECK_THROWS_AS(contraction_C(single(1, Space::tensor(2), {1, -1}), 1, 1), PreconditionError);
}

TEST_CASE("CF identity on theta") {
    auto g = theta();
    for (std::uint32_t k = 0; k < 3; ++k) {
        auto e = embedding_of_edge(g, k);
        CHECK(verify_CF_identity(g, e, 1, 1, 1, 3, Target::exterior).holds);
        CHECK(verify_CF_identity(g, e, 1, 0, 0, 3, Target::exterior).holds);
        CHECK(verify_CF_identity(g, e, 1, -1, 0, 3, Target::U).holds);
        CHECK(verify_CF_identity(theta(true), e, 1, 1, 1, 2, Target::symmetric).holds);
        CHECK(verify_CF_identity(theta(true), e, 0, 1, 0, 2, Target::symmetric).holds);
    }
}

TEST_CASE("Weyl dimensions") {
    CHECK(weyl_dimension(3, {}) == 1);
    CHECK(weyl_dimension(2, {1, 1}) == 6 - 1);
    CHECK(weyl_dimension(2, {4}) == 35);
    for (std::uint32_t g = 1; g <= 5; ++g) {
        CHECK(weyl_dimension(g, {1}) == 2 * g);
        // Sym^k H is irreducible: C(2g+k-1, k)
        Integer c;
        mpz_bin_uiui(c.get_mpz_t(), 2 * g + 2, 3);
        CHECK(weyl_dimension(g, {3}) == c);
    }
    CHECK_THROWS_AS(weyl_dimension(1, {1, 1}), PreconditionError);
    auto r13 = verify_decomposition(2, "1.3");
    CHECK(r13.total == 190);
    CHECK(r13.holds());
    auto r11 = verify_decomposition(6, "1.1");
    Integer u;
    mpz_bin_uiui(u.get_mpz_t(), 12, 3);
    u -= 12;
    CHECK(r11.total == u * (u - 1) / 2);
    CHECK(r11.total == 21528);
    CHECK_THROWS_AS(verify_decomposition(5, "1.1"), PreconditionError);
}
