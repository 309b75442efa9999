#pragma once

#include "hcs/algebra/basis.hpp"
#include "hcs/scalar/tower_scalar.hpp"

#include <algorithm>
#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace hcs {

// Arithmetic context for the coefficients of an algebra element.
template <class S>
struct ScalarDomain;

template <>
struct ScalarDomain<TowerScalar> {
    static TowerScalar from_int(long v) { return TowerScalar(v); }
    static TowerScalar eps() { return TowerScalar(epsilon()); }
    static TowerScalar eps_poly(const EpsPoly& p);
    static bool is_zero(const TowerScalar& s) { return s.is_zero(); }
    static TowerScalar inverse(const TowerScalar& s) { return s.inverse(); }
    // Exact domain: negligible means zero.
    static bool negligible(const TowerScalar& s) { return s.is_zero(); }
    static bool same(const TowerScalar& a, const TowerScalar& b) { return a == b; }
    friend bool operator==(const ScalarDomain&, const ScalarDomain&) { return true; }
};

// Floating-point realization at a fixed numeric q.
template <>
struct ScalarDomain<std::complex<double>> {
    std::complex<double> q{1.2, 0.0};
    static std::complex<double> from_int(long v) { return static_cast<double>(v); }
    std::complex<double> eps() const { return q - 1.0 / q; }
    std::complex<double> eps_poly(const EpsPoly& p) const;
    static bool is_zero(const std::complex<double>& s) { return s == 0.0; }
    static std::complex<double> inverse(const std::complex<double>& s) { return 1.0 / s; }
    static constexpr double kTolerance = 1e-9;
    static bool negligible(const std::complex<double>& s) { return std::abs(s) < kTolerance; }
    static bool same(const std::complex<double>& a, const std::complex<double>& b) {
        return std::abs(a - b) <= kTolerance * std::max(1.0, std::max(std::abs(a), std::abs(b)));
    }
    friend bool operator==(const ScalarDomain& a, const ScalarDomain& b) { return a.q == b.q; }
};

// A sparse linear combination of the basis elements T_w C_S of G_n(q).
template <class S>
class Element {
public:
    using Basis = HeckeCliffordBasis;
    using Key = Basis::Key;
    using Mask = Basis::Mask;
    using Domain = ScalarDomain<S>;
    using Term = std::pair<Key, S>;

    Element() = default;
    explicit Element(int n, Domain dom = {}) : n_(n), dom_(dom) { Basis::get(n); }

    static Element zero(int n, Domain dom = {}) { return Element(n, dom); }
    static Element scalar(int n, const S& c, Domain dom = {});
    static Element one(int n, Domain dom = {}) { return scalar(n, Domain::from_int(1), dom); }
    static Element basis_element(int n, const Permutation& w, Mask mask, Domain dom = {});
    static Element T(int k, int n, Domain dom = {});
    static Element C(int l, int n, Domain dom = {});
    // Builds from unsorted terms; repeated keys are summed and zeros dropped.
    static Element from_terms(int n, std::vector<Term> terms, Domain dom = {});

    int n() const { return n_; }
    const Domain& domain() const { return dom_; }
    const Basis& basis() const { return Basis::get(n_); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    S coeff(const Permutation& w, Mask mask) const;
    S coeff(Key key) const;

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    Element operator-() const;
    Element scaled(const S& c) const;
    friend Element operator*(const S& c, const Element& a) { return a.scaled(c); }
    friend Element operator*(const Element& a, const Element& b) { return mul(a, b); }

    // Left multiplication by a single generator.
    Element left_T(int k) const;
    Element left_C(int l) const;
    // Right multiplication by C_l (no rewriting needed since Clifford words sit on the right).
    Element right_C(int l) const;
    // Left multiplication by the Clifford word with the given mask.
    Element left_clifford(Mask mask) const;

    static Element mul(const Element& a, const Element& b);

    // Z/2 grading: every term has even (resp. odd) Clifford length.
    bool is_even() const;
    bool is_odd() const;
    // Maximal Coxeter length among terms with nonzero coefficient; -1 for zero.
    int max_length() const;

    friend bool operator==(const Element& a, const Element& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    std::string to_string() const;

private:
    void check_compatible(const Element& o) const;
    int n_ = 1;
    Domain dom_{};
    std::vector<Term> terms_;
};

using AlgebraElement = Element<TowerScalar>;
using NumericElement = Element<std::complex<double>>;

extern template class Element<TowerScalar>;
extern template class Element<std::complex<double>>;

// Dense scratch space for building elements; keys are basis keys.
template <class S>
class Accumulator {
public:
    explicit Accumulator(std::size_t dim) : values_(dim), present_(dim, 0) {}
    void add(typename Element<S>::Key k, S v);
    // Sorted nonzero terms; leaves the accumulator empty.
    std::vector<typename Element<S>::Term> take();

private:
    std::vector<S> values_;
    std::vector<unsigned char> present_;
    std::vector<typename Element<S>::Key> touched_;
};

std::string clifford_to_string(std::uint32_t mask);

}  // namespace hcs
