#include "hcs/scalar/serialize.hpp"
#include "hcs/scalar/tower_scalar.hpp"

#include <doctest.h>

#include <random>

using namespace hcs;

namespace {

RationalFunction Q(int e) { return RationalFunction::q_power(e); }

Polynomial roots_poly(const std::vector<long>& roots) {
    Polynomial p(1);
    for (long r : roots) p = p * Polynomial::from_ints({-r, 1});
    return p;
}

// Independent expansion of a Laurent polynomial from (exponent, coefficient) pairs,
// compared by numeric evaluation at several points.
bool same_values(const RationalFunction& a, const RationalFunction& b) {
    for (double q : {1.3, 0.7, 2.1, -1.7}) {
        auto x = a.eval(q), y = b.eval(q);
        if (std::abs(x - y) > 1e-9 * (1 + std::abs(x))) return false;
    }
    return true;
}

RationalFunction random_rf(std::mt19937& rng, int maxdeg) {
    std::uniform_int_distribution<int> c(-5, 5), d(0, maxdeg), s(-3, 3);
    auto poly = [&](bool nonzero) {
        for (;;) {
            std::vector<long> v(static_cast<size_t>(d(rng)) + 1);
            for (auto& x : v) x = c(rng);
            Polynomial p = Polynomial::from_ints(v);
            if (!nonzero || !p.is_zero()) return p;
        }
    };
    return RationalFunction(poly(false), poly(true), s(rng));
}

TowerScalar random_tower(std::mt19937& rng, int level) {
    std::vector<std::pair<TowerScalar::Mask, RationalFunction>> t;
    std::uniform_int_distribution<int> pick(0, 2);
    for (TowerScalar::Mask s = 0; s < (1u << (level - 1)); ++s)
        if (pick(rng) != 0) t.emplace_back(s, random_rf(rng, 2));
    return TowerScalar(level, std::move(t));
}

}  // namespace

TEST_CASE("gaussian rationals") {
    GaussianRational a(mpq_class(1, 2), mpq_class(3)), b(mpq_class(-2), mpq_class(1, 3));
    CHECK((a * b) / b == a);
    CHECK(a * a.inverse() == GaussianRational(1));
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK((a - a).is_zero());
}

TEST_CASE("polynomial gcd against constructed common factors") {
    Polynomial a = roots_poly({1, 2, 3, -4, 7});
    Polynomial b = roots_poly({5, -6, 8, 9});
    Polynomial c = roots_poly({-1, 11, 13, 17});
    CHECK(gcd(a, b).is_one());
    CHECK(gcd(a * c, b * c) == c);
    CHECK(gcd(a * c.scaled(mpq_class(3, 7)), c * c) == c);
    // Complex coefficients go through the Q(i) Euclidean path.
    Polynomial lin({GaussianRational(mpq_class(0), mpq_class(1)), GaussianRational(1)});  // q + i
    CHECK(gcd(a * lin, b * lin) == lin);
    // Higher degree inputs exercise the heuristic integer path.
    Polynomial big = roots_poly({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
    CHECK(gcd(big * a, big * b) == big);
}

TEST_CASE("polynomial division") {
    Polynomial a = roots_poly({1, 2, 3});
    Polynomial b = roots_poly({1, -1});
    auto [q, r] = divrem(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(exact_div(a * b, b) == a);
}

TEST_CASE("quantum integers and epsilon") {
    CHECK(quantum_int(0).is_zero());
    CHECK(quantum_int(1).is_one());
    CHECK(quantum_int(2) == RationalFunction::laurent({{2, 1}, {-2, 1}}));
    CHECK(quantum_int(-3) == -quantum_int(3));
    // Defining quotient, computed by independent rational-function division.
    for (int m = 1; m <= 6; ++m) {
        RationalFunction quotient = (Q(2 * m) - Q(-2 * m)) / (Q(2) - Q(-2));
        CHECK(quotient == quantum_int(m));
    }
    CHECK(epsilon() == RationalFunction::laurent({{1, 1}, {-1, -1}}));
    CHECK(epsilon() * epsilon() == RationalFunction::laurent({{2, 1}, {0, -2}, {-2, 1}}));
    CHECK(std::abs(epsilon().eval(1.0)) == 0.0);
}

TEST_CASE("rational function canonical form") {
    RationalFunction r(roots_poly({1, 2}), roots_poly({1, 3}).scaled(GaussianRational(5)), 0);
    CHECK(r.den() == Polynomial::from_ints({-3, 1}));
    CHECK(r.den().lc().is_one());
    RationalFunction zero = r - r;
    CHECK(zero.is_zero());
    CHECK(zero == RationalFunction());
    CHECK((r * r.inverse()).is_one());
    CHECK(Q(3) * Q(-3) == RationalFunction(1));
    std::mt19937 rng(7);
    for (int t = 0; t < 30; ++t) {
        RationalFunction a = random_rf(rng, 3), b = random_rf(rng, 3), c = random_rf(rng, 3);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(same_values(a + b, b + a));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("tower arithmetic") {
    const int L = 4;
    TowerScalar s2 = sqrt_gen(2, L), s3 = sqrt_gen(3, L);
    CHECK(s2 * s2 == TowerScalar(quantum_int(2), L));
    CHECK((s2 * s3).terms().size() == 1);
    CHECK((s2 * s3).terms()[0].first == 0b11u);
    CHECK(tower_inv(TowerScalar(1)) == TowerScalar(1));
    CHECK(tower_inv(TowerScalar(Q(1))) == TowerScalar(Q(-1)));
    CHECK_THROWS_AS(tower_inv(TowerScalar()), std::domain_error);

    std::mt19937 rng(11);
    for (int t = 0; t < 6; ++t) {
        TowerScalar a = random_tower(rng, 3), b = random_tower(rng, 3), c = random_tower(rng, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
}

TEST_CASE("special values") {
    const int L = 5;
    CHECK(special_value(0, L).is_one());
    TowerScalar expected = TowerScalar(quantum_int(2) - RationalFunction(1), L) -
                           sqrt_gen(2, L).scaled(epsilon());
    CHECK(special_value(1, L) == expected);
    for (int a = 0; a <= 3; ++a) {
        CHECK((special_value(a, L) * special_value_conjugate(a, L)).is_one());
        CHECK(tower_inv(special_value(a, L)) == special_value_conjugate(a, L));
    }
    CHECK_THROWS(special_value(-1, L));
    CHECK_THROWS(special_value(3, 3));
    // x + 1/x = 2(q^{2a+1} + q^{-2a-1})/(q + 1/q), and x satisfies the substitution with u = q^a.
    for (int a = 0; a <= 4; ++a) {
        TowerScalar x = special_value(a, L);
        RationalFunction sum = (Q(2 * a + 1) + Q(-2 * a - 1)) * RationalFunction(2) / (Q(1) + Q(-1));
        CHECK(x + x.inverse() == TowerScalar(sum, L));
        CHECK((x + x.inverse()).in_Qq());
        RationalFunction u2 = Q(2 * a);
        RationalFunction rhs = (Q(1) * u2 + Q(-1) * u2.inverse()) / (Q(1) + Q(-1));
        CHECK((x + x.inverse()).scaled(RationalFunction(mpq_class(1, 2))) == TowerScalar(rhs, L));
    }
}

TEST_CASE("numeric evaluation is a homomorphism") {
    std::mt19937 rng(3);
    const double q = 1.2;
    for (int t = 0; t < 10; ++t) {
        TowerScalar a = random_tower(rng, 4), b = random_tower(rng, 4);
        auto ab = (a * b).eval(q), expect = a.eval(q) * b.eval(q);
        CHECK(std::abs(ab - expect) <= 1e-10 * (1 + std::abs(expect)));
        auto s = (a + b).eval(q), se = a.eval(q) + b.eval(q);
        CHECK(std::abs(s - se) <= 1e-10 * (1 + std::abs(se)));
    }
    CHECK(std::abs(special_value(0, 3).eval(q) - 1.0) < 1e-15);
    CHECK(sqrt_gen(2, 2).eval(q).real() > 0);
}

TEST_CASE("serialization round trip") {
    std::mt19937 rng(5);
    for (int t = 0; t < 10; ++t) {
        TowerScalar a = random_tower(rng, 4);
        if (t % 3 == 0) a = a * TowerScalar(GaussianRational(mpq_class(1, 3), mpq_class(-2, 5)));
        Json j = to_json(a);
        TowerScalar b = tower_from_json(j);
        CHECK(a == b);
        CHECK(b.level() == a.level());
        CHECK(to_json(b).dump() == j.dump());
        CHECK(tower_from_json(Json::parse(j.dump())) == a);
    }
    Json one = to_json(TowerScalar(1, 2));
    CHECK(one.dump() == R"({"level":2,"terms":[{"subset":[],"num":[[0,["1","1","0","1"]]],"den":[[0,["1","1","0","1"]]]}]})");
}
