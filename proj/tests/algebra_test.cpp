#include "hcs/algebra/generators.hpp"

#include <doctest.h>

#include <random>

using namespace hcs;

namespace {

using E = AlgebraElement;

E scal(int n, const TowerScalar& c) { return E::scalar(n, c); }
E eps_el(int n) { return scal(n, TowerScalar(epsilon())); }

E random_element(int n, std::mt19937& rng, int terms) {
    const auto& b = HeckeCliffordBasis::get(n);
    std::uniform_int_distribution<int> perm(0, b.perm_count() - 1);
    std::uniform_int_distribution<unsigned> mask(0, b.clifford_count() - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> shift(-2, 2);
    std::vector<E::Term> t;
    for (int i = 0; i < terms; ++i)
        t.emplace_back(b.key(perm(rng), mask(rng)),
                       TowerScalar(RationalFunction::q_power(shift(rng)) * RationalFunction(coef(rng))));
    return E::from_terms(n, std::move(t));
}

}  // namespace

TEST_CASE("basic products") {
    const int n = 3;
    const E t1 = E::T(1, n), c1 = E::C(1, n), one = E::one(n);
    CHECK(t1 * t1 == one + eps_el(n) * t1);
    CHECK(c1 * c1 == -one);
    const E prod = t1 * c1;
    REQUIRE(prod.size() == 1);
    // T_1 C_1 is already a basis element, and it equals C_2 T_1.
    CHECK(prod.coeff(Permutation::simple(1, n), 0b001) == TowerScalar(1));
    CHECK(prod == E::C(2, n) * t1);
    CHECK(E::C(1, n) * E::C(3, n) == -(E::C(3, n) * E::C(1, n)));
}

TEST_CASE("defining relations") {
    for (int n = 2; n <= 5; ++n) {
        const E one = E::one(n), eps = eps_el(n);
        for (int k = 1; k < n; ++k) {
            const E tk = E::T(k, n);
            const E ck = E::C(k, n), ck1 = E::C(k + 1, n);
            const E q = scal(n, TowerScalar(RationalFunction::q_power(1)));
            const E qi = scal(n, TowerScalar(RationalFunction::q_power(-1)));
            CHECK(((tk - q) * (tk + qi)).is_zero());
            CHECK(tk * ck == ck1 * tk);
            CHECK(tk * ck1 == ck * tk - eps * (ck - ck1));
            CHECK(t_inv<TowerScalar>(k, n) * tk == one);
            for (int l = k + 2; l < n; ++l) CHECK(tk * E::T(l, n) == E::T(l, n) * tk);
            if (k + 1 < n) {
                const E tk1 = E::T(k + 1, n);
                CHECK(tk * tk1 * tk == tk1 * tk * tk1);
            }
            for (int l = 1; l <= n; ++l)
                if (l != k && l != k + 1) CHECK(tk * E::C(l, n) == E::C(l, n) * tk);
        }
        for (int k = 1; k <= n; ++k) {
            CHECK(E::C(k, n) * E::C(k, n) == -one);
            for (int l = k + 1; l <= n; ++l) CHECK(E::C(k, n) * E::C(l, n) == -(E::C(l, n) * E::C(k, n)));
        }
    }
}

TEST_CASE("basis products and T_w") {
    const int n = 4;
    const auto& b = HeckeCliffordBasis::get(n);
    CHECK(b.dimension() == 16u * 24u);
    for (int i = 0; i < b.perm_count(); ++i) {
        const Permutation& w = b.perm(i);
        const E tw = t_of_word<TowerScalar>(w.reduced_word(), n);
        CHECK(tw == t_of_perm<TowerScalar>(w));
        CHECK(tw * t_of_perm_inv<TowerScalar>(w) == E::one(n));
    }
    // Both reduced words of w0 in S_3.
    CHECK(t_of_word<TowerScalar>({1, 2, 1}, 3) == t_of_word<TowerScalar>({2, 1, 2}, 3));
    CHECK(t_of_perm_inv<TowerScalar>(Permutation::identity(3)) == E::one(3));
    // A non-reduced word picks up the quadratic relation.
    CHECK(t_of_word<TowerScalar>({1, 1}, 2) == E::one(2) + eps_el(2) * E::T(1, 2));
}

TEST_CASE("associativity and grading on random elements") {
    std::mt19937 rng(7);
    for (int n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 6; ++trial) {
            const E a = random_element(n, rng, 3), b = random_element(n, rng, 3), c = random_element(n, rng, 2);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
        // Products of homogeneous elements are homogeneous of the summed degree.
        const E odd = E::C(1, n) * E::T(1, n) + E::C(n, n);
        const E even = E::T(1, n) * E::C(1, n) * E::C(2, n);
        CHECK(odd.is_odd());
        CHECK(even.is_even());
        CHECK((odd * even).is_odd());
        CHECK((odd * odd).is_even());
    }
}

TEST_CASE("Jucys-Murphy elements") {
    for (int n = 1; n <= 4; ++n) {
        const E one = E::one(n), eps = eps_el(n);
        CHECK(jucys_murphy<TowerScalar>(1, n) == one);
        CHECK(jm_inverse<TowerScalar>(1, n) == one);
        std::vector<E> j(static_cast<std::size_t>(n + 1));
        for (int k = 1; k <= n; ++k) j[static_cast<std::size_t>(k)] = jucys_murphy<TowerScalar>(k, n);
        for (int k = 1; k <= n; ++k) {
            const E& jk = j[static_cast<std::size_t>(k)];
            const E ji = jm_inverse<TowerScalar>(k, n);
            CHECK(jk * ji == one);
            CHECK(ji * jk == one);
            CHECK(E::C(k, n) * jk == ji * E::C(k, n));
            CHECK(jk.is_even());
            for (int l = k + 1; l <= n; ++l) {
                CHECK(jk * j[static_cast<std::size_t>(l)] == j[static_cast<std::size_t>(l)] * jk);
                CHECK(E::C(l, n) * jk == jk * E::C(l, n));
            }
            for (int l = k + 1; l < n; ++l) CHECK(E::T(l, n) * jk == jk * E::T(l, n));
            if (k < n) {
                const E cc = E::C(k, n) * E::C(k + 1, n);
                CHECK((E::T(k, n) - eps * cc) * jk * E::T(k, n) == j[static_cast<std::size_t>(k + 1)]);
            }
        }
    }
    // J_2 = (T_1 - eps C_1 C_2) T_1 written out.
    const int n = 2;
    const E t1 = E::T(1, n);
    const E expect = E::one(n) + eps_el(n) * t1 - eps_el(n) * E::C(1, n) * E::C(2, n) * t1;
    CHECK(jucys_murphy<TowerScalar>(2, n) == expect);
}

TEST_CASE("alpha") {
    std::mt19937 rng(11);
    for (int n = 2; n <= 4; ++n) {
        for (int k = 1; k < n; ++k) CHECK(alpha(E::T(k, n)) == E::T(n - k, n));
        for (int k = 1; k <= n; ++k) CHECK(alpha(E::C(k, n)) == E::C(n - k + 1, n));
        for (int trial = 0; trial < 5; ++trial) {
            const E a = random_element(n, rng, 3), b = random_element(n, rng, 3);
            CHECK(alpha(alpha(a)) == a);
            CHECK(alpha(a * b) == alpha(b) * alpha(a));
        }
        // Reverse the generator word directly on one basis element.
        const E x = E::T(1, n) * E::C(1, n) * E::C(n, n);
        CHECK(alpha(x) == E::C(1, n) * E::C(n, n) * E::T(n - 1, n));
    }
}

TEST_CASE("supercentrality") {
    const int n = 3;
    CHECK(center_check({}, n));
    CHECK(center_check({1}, n));
    CHECK(center_check({2}, n));
    CHECK(center_check({1, 1}, n));
    CHECK_FALSE(is_supercentral(jucys_murphy<TowerScalar>(2, n)));
    CHECK_FALSE(is_supercentral(E::T(1, n)));
    CHECK_FALSE(is_supercentral(E::C(1, n)));
}
