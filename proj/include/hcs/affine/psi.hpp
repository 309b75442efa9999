#pragma once

#include "hcs/algebra/element.hpp"

namespace hcs {

// x^{-1}y/(x^{-1}y - 1)^2 + xy/(xy - 1)^2, the bracket in the psi-square formula.
// Throws std::domain_error when x^{-1}y = 1 or xy = 1.
template <class S>
S psi_bracket(const S& x, const S& y, ScalarDomain<S> dom = {});

// psi_k(x,y) = T_k + eps/(x^{-1}y - 1) + eps/(xy - 1) C_k C_{k+1}.
template <class S>
Element<S> psi_factor(int k, const S& x, const S& y, int n, ScalarDomain<S> dom = {});

// [1 - eps^2 bracket]^{-1} psi_k(y,x). Throws std::domain_error on an idempotent pair
// (the bracket factor vanishes) or when y = x, x^{-1}.
template <class S>
Element<S> psi_factor_inverse(int k, const S& x, const S& y, int n, ScalarDomain<S> dom = {});

// Exact (resp. tolerance-based for the numeric domain) test of
//   x^{-1}y/(x^{-1}y - 1)^2 + xy/(xy - 1)^2 = 1/eps^2.
template <class S>
bool idempotency_holds(const S& x, const S& y, ScalarDomain<S> dom = {});

// The same condition written in s = x + x^{-1}, t = y + y^{-1}: (s - t)^2 = eps^2 (st - 4).
template <class S>
bool idempotency_holds_symmetric(const S& s, const S& t, ScalarDomain<S> dom = {});

// theta_k(x,y); requires k + 2 <= n, (x,y) idempotent and y != x, x^{-1}.
template <class S>
Element<S> theta_factor(int k, const S& x, const S& y, int n, ScalarDomain<S> dom = {});

// The regular form of psi_k(x,y) psi_{k+1}(z,y) psi_k(z,x) valid when (x,y) is idempotent.
// Agrees with the product for z != y^{+-1} and with theta_factor at z = y.
template <class S>
Element<S> theta_regular(int k, const S& x, const S& y, const S& z, int n, ScalarDomain<S> dom = {});

// d(x,y) = eps^3 y { (y^2-1)(x^3/(xy-1)^4 + x^{-3}/(x^{-1}y-1)^4) + (x^3-x)/(xy-1)^4 + (x^{-3}-x^{-1})/(x^{-1}y-1)^4 }.
template <class S>
S d_scalar(const S& x, const S& y, ScalarDomain<S> dom = {});

// C_a C_b as an element (a != b, any order).
template <class S>
Element<S> clifford_pair(int a, int b, int n, ScalarDomain<S> dom = {});

}  // namespace hcs
