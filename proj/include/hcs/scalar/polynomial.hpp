#pragma once

#include "hcs/scalar/gaussian_rational.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace hcs {

// Dense univariate polynomial in q over Q(i). coeffs_[d] is the coefficient of q^d;
// the leading coefficient is never zero and the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<GaussianRational> coeffs);
    Polynomial(const GaussianRational& c);  // NOLINT(implicit)
    Polynomial(long c) : Polynomial(GaussianRational(c)) {}  // NOLINT(implicit)

    static Polynomial monomial(const GaussianRational& c, int degree);
    static Polynomial from_ints(const std::vector<long>& coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_real() const;
    const GaussianRational& lc() const { return coeffs_.back(); }
    const GaussianRational& operator[](int d) const { return coeffs_[static_cast<size_t>(d)]; }
    GaussianRational coeff(int d) const;
    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
    // Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
    int valuation() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial scaled(const GaussianRational& c) const;

    // Multiply by q^k (k >= 0), or divide by q^k when every dropped coefficient is zero.
    Polynomial shifted_up(int k) const;
    Polynomial shifted_down(int k) const;

    Polynomial monic() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::complex<double> eval(std::complex<double> q) const;
    GaussianRational eval(const GaussianRational& q) const;
    std::string to_string() const;

private:
    void trim();
    std::vector<GaussianRational> coeffs_;
};

// Quotient and remainder over the coefficient field; throws on division by zero.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);
// a / b, which must be exact.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
// Monic gcd (zero only if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace hcs
