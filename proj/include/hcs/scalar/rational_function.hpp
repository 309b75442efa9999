#pragma once

#include "hcs/scalar/polynomial.hpp"

#include <complex>
#include <string>

namespace hcs {

// An element q^shift * num(q) / den(q) of Q(i)(q) in lowest terms.
//
// Canonical form: num(0) != 0 and den(0) != 0 (all powers of q live in shift),
// den is monic, gcd(num, den) = 1. Zero is num = 0, den = 1, shift = 0.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const GaussianRational& c) : num_(c), den_(1) {}  // NOLINT(implicit)
    RationalFunction(long c) : RationalFunction(GaussianRational(c)) {}  // NOLINT(implicit)
    // num / den with an extra factor q^shift; normalizes.
    RationalFunction(Polynomial num, Polynomial den, int shift = 0);
    explicit RationalFunction(const Polynomial& p) : RationalFunction(p, Polynomial(1), 0) {}

    static RationalFunction q_power(int e);
    // Sum_e c_e q^e given as (exponent, coefficient) pairs.
    static RationalFunction laurent(const std::vector<std::pair<int, long>>& terms);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    int shift() const { return shift_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return shift_ == 0 && den_.is_one() && num_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }
    bool is_constant() const { return shift_ == 0 && den_.is_one() && num_.is_constant(); }
    bool is_real() const { return num_.is_real() && den_.is_real(); }
    // Constant value; throws unless is_constant().
    GaussianRational constant_value() const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        return a * b.inverse();
    }
    RationalFunction operator-() const;
    RationalFunction inverse() const;
    RationalFunction pow(int e) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    // Throws std::domain_error at a pole.
    std::complex<double> eval(std::complex<double> q) const;
    std::string to_string() const;

private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
    int shift_ = 0;
};

// [m]_{q^2} = (q^{2m} - q^{-2m}) / (q^2 - q^{-2}); [-m] = -[m].
RationalFunction quantum_int(int m);
// q - q^{-1}
RationalFunction epsilon();

}  // namespace hcs
