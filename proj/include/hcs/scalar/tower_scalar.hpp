#pragma once

#include "hcs/scalar/rational_function.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hcs {

// An element of F = Q(i)(q)(sqrt[2], ..., sqrt[level]) where [m] = [m]_{q^2}.
//
// Stored as sum over subsets S of {2..level} of c_S * prod_{m in S} sqrt[m]; subset S is the
// bitmask with bit (m-2) set for each m in S. Terms are sorted by mask, none is zero.
class TowerScalar {
public:
    using Mask = std::uint32_t;
    static constexpr int kMaxLevel = 24;

    TowerScalar() = default;
    TowerScalar(long c) : TowerScalar(RationalFunction(c)) {}  // NOLINT(implicit)
    TowerScalar(const GaussianRational& c) : TowerScalar(RationalFunction(c)) {}  // NOLINT(implicit)
    TowerScalar(RationalFunction r, int level = 1);  // NOLINT(implicit)
    // Builds from raw (mask, coefficient) pairs; zero coefficients are dropped.
    TowerScalar(int level, std::vector<std::pair<Mask, RationalFunction>> terms);

    int level() const { return level_; }
    const std::vector<std::pair<Mask, RationalFunction>>& terms() const { return terms_; }
    RationalFunction coeff(Mask s) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one(); }
    // True when no square-root generator occurs, i.e. the value lies in Q(i)(q).
    bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
    // True when the value lies in Q(q).
    bool in_Qq() const { return is_rational() && (terms_.empty() || terms_[0].second.is_real()); }
    RationalFunction rational_part() const { return coeff(0); }

    // Same element viewed at a higher level.
    TowerScalar at_level(int level) const;
    // Galois conjugate flipping the sign of sqrt[m].
    TowerScalar conjugate(int m) const;

    TowerScalar& operator+=(const TowerScalar& o);
    TowerScalar& operator-=(const TowerScalar& o);
    TowerScalar& operator*=(const TowerScalar& o) { return *this = *this * o; }
    TowerScalar& operator/=(const TowerScalar& o) { return *this = *this * o.inverse(); }
    friend TowerScalar operator+(TowerScalar a, const TowerScalar& b) { return a += b; }
    friend TowerScalar operator-(TowerScalar a, const TowerScalar& b) { return a -= b; }
    friend TowerScalar operator*(const TowerScalar& a, const TowerScalar& b);
    friend TowerScalar operator/(const TowerScalar& a, const TowerScalar& b) { return a * b.inverse(); }
    TowerScalar operator-() const;
    TowerScalar scaled(const RationalFunction& r) const;

    // Iterated rationalization, highest generator first. Throws std::domain_error on zero and
    // std::logic_error if a conjugate norm vanishes.
    TowerScalar inverse() const;

    // Equality of field elements (level is not compared).
    friend bool operator==(const TowerScalar& a, const TowerScalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TowerScalar& a, const TowerScalar& b) { return !(a == b); }

    // Evaluation at numeric q with sqrt[m] realized as the principal square root.
    std::complex<double> eval(std::complex<double> q) const;
    std::string to_string() const;

private:
    int level_ = 1;
    std::vector<std::pair<Mask, RationalFunction>> terms_;
};

TowerScalar tower_mul(const TowerScalar& a, const TowerScalar& b);
TowerScalar tower_inv(const TowerScalar& a);

// sqrt([m]_{q^2}) at the given level (m >= 2); m = 1 gives 1 and m = 0 gives 0.
TowerScalar sqrt_gen(int m, int level);
// [a+1] - [a] - eps*sqrt([a+1][a]); level must be at least a+1.
TowerScalar special_value(int a, int level);
// The conjugate [a+1] - [a] + eps*sqrt([a+1][a]), which is the inverse of special_value(a).
TowerScalar special_value_conjugate(int a, int level);

}  // namespace hcs
