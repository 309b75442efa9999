#pragma once

#include "hcs/algebra/element.hpp"

#include <vector>

namespace hcs {

// T_{j_1} ... T_{j_r} for an arbitrary word (reduced or not).
template <class S>
Element<S> t_of_word(const std::vector<int>& word, int n, ScalarDomain<S> dom = {}) {
    Element<S> r = Element<S>::one(n, dom);
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = r.left_T(*it);
    return r;
}

template <class S>
Element<S> t_of_perm(const Permutation& s, ScalarDomain<S> dom = {}) {
    return Element<S>::basis_element(s.n(), s, 0, dom);
}

// T_k^{-1} = T_k - eps.
template <class S>
Element<S> t_inv(int k, int n, ScalarDomain<S> dom = {}) {
    return Element<S>::T(k, n, dom) - Element<S>::scalar(n, dom.eps(), dom);
}

// T_s^{-1} = T_{j_r}^{-1} ... T_{j_1}^{-1} for a reduced word j_1 ... j_r of s.
template <class S>
Element<S> t_of_perm_inv(const Permutation& s, ScalarDomain<S> dom = {}) {
    const int n = s.n();
    Element<S> r = Element<S>::one(n, dom);
    for (int k : s.reduced_word()) r = t_inv<S>(k, n, dom) * r;
    return r;
}

// J_1 = 1, J_k = (T_{k-1} - eps C_{k-1} C_k) J_{k-1} T_{k-1}.
template <class S>
Element<S> jucys_murphy(int k, int n, ScalarDomain<S> dom = {}) {
    Element<S> j = Element<S>::one(n, dom);
    for (int m = 2; m <= k; ++m) {
        Element<S> cc = Element<S>::one(n, dom).right_C(m - 1).right_C(m).scaled(dom.eps());
        j = (Element<S>::T(m - 1, n, dom) - cc) * j * Element<S>::T(m - 1, n, dom);
    }
    return j;
}

// J_k^{-1} = -C_k J_k C_k.
template <class S>
Element<S> jm_inverse(int k, int n, ScalarDomain<S> dom = {}) {
    return -jucys_murphy<S>(k, n, dom).left_C(k).right_C(k);
}

// The involutive antiautomorphism T_k -> T_{n-k}, C_k -> C_{n-k+1}.
template <class S>
Element<S> alpha(const Element<S>& a) {
    const int n = a.n();
    const auto& b = a.basis();
    const Permutation w0 = Permutation::longest(n);
    std::vector<typename Element<S>::Term> out;
    for (const auto& [key, c] : a.terms()) {
        // alpha(T_w C_S) = C_{S'} T_{w0 w^{-1} w0}; the reflected Clifford word stays increasing.
        typename Element<S>::Mask m = 0;
        for (int l = 1; l <= n; ++l)
            if (b.mask_of(key) & (1u << (l - 1))) m |= 1u << (n - l);
        const Permutation& w = b.perm(b.perm_of(key));
        Element<S> t = Element<S>::basis_element(n, w0 * w.inverse() * w0, 0, a.domain()).left_clifford(m);
        for (const auto& [k2, v] : t.terms()) out.emplace_back(k2, v * c);
    }
    return Element<S>::from_terms(n, std::move(out), a.domain());
}

// a g - (-1)^{|a||g|} g a for homogeneous a and g.
template <class S>
Element<S> supercommutator(const Element<S>& a, const Element<S>& g) {
    const bool both_odd = a.is_odd() && !a.is_zero() && g.is_odd() && !g.is_zero();
    return both_odd ? a * g + g * a : a * g - g * a;
}

// Whether the homogeneous element a supercommutes with every T_k and C_l.
template <class S>
bool is_supercentral(const Element<S>& a) {
    const int n = a.n();
    for (int k = 1; k < n; ++k)
        if (!supercommutator(a, Element<S>::T(k, n, a.domain())).is_zero()) return false;
    for (int l = 1; l <= n; ++l)
        if (!supercommutator(a, Element<S>::C(l, n, a.domain())).is_zero()) return false;
    return true;
}

// e_j(J_1 + J_1^{-1}, ..., J_n + J_n^{-1}) for j = 0..n.
template <class S>
std::vector<Element<S>> jm_elementary_symmetric(int n, ScalarDomain<S> dom = {}) {
    std::vector<Element<S>> e(static_cast<std::size_t>(n + 1), Element<S>::zero(n, dom));
    e[0] = Element<S>::one(n, dom);
    for (int m = 1; m <= n; ++m) {
        const Element<S> y = jucys_murphy<S>(m, n, dom) + jm_inverse<S>(m, n, dom);
        for (int j = m; j >= 1; --j) e[static_cast<std::size_t>(j)] += y * e[static_cast<std::size_t>(j - 1)];
    }
    return e;
}

// Product of e_j(J + J^{-1}) over the given indices (empty product = 1).
template <class S>
Element<S> jm_symmetric_product(const std::vector<int>& js, int n, ScalarDomain<S> dom = {}) {
    const auto e = jm_elementary_symmetric<S>(n, dom);
    Element<S> r = Element<S>::one(n, dom);
    for (int j : js) {
        if (j < 0 || j > n) throw std::invalid_argument("jm_symmetric_product: index out of range");
        r = r * e[static_cast<std::size_t>(j)];
    }
    return r;
}

inline bool center_check(const std::vector<int>& js, int n) {
    return is_supercentral(jm_symmetric_product<TowerScalar>(js, n));
}

}  // namespace hcs
