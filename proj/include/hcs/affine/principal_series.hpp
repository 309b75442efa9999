#pragma once

#include "hcs/algebra/element.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace hcs {

// A character of the Laurent subalgebra, stored through the values chi(X_k^{-1}).
template <class S>
class Character {
public:
    Character() = default;
    explicit Character(std::vector<S> inverse_values, ScalarDomain<S> dom = {});

    int n() const { return static_cast<int>(inv_.size()); }
    const ScalarDomain<S>& domain() const { return dom_; }
    const std::vector<S>& inverse_values() const { return inv_; }
    // chi(X_k^{-1}) and chi(X_k), 1-based.
    const S& x_inv(int k) const { return inv_[static_cast<std::size_t>(k - 1)]; }
    S x(int k) const { return ScalarDomain<S>::inverse(x_inv(k)); }

    // (s . chi)(X_k) = chi(X_{s^{-1}(k)}).
    Character permuted(const Permutation& s) const;
    // chi(X_k) != chi(X_l)^{+-1} for all k != l.
    bool is_generic() const;

private:
    std::vector<S> inv_;
    ScalarDomain<S> dom_{};
};

// The principal series module M_chi realized on G_n(q) (m <-> m . 1), with the action of the
// X_k computed by pushing X's rightward with the affine relations. Results for basis
// vectors are memoized, so one instance should be reused for many actions.
template <class S>
class PrincipalSeries {
public:
    explicit PrincipalSeries(Character<S> chi) : chi_(std::move(chi)) {}
    const Character<S>& character() const { return chi_; }

    // X_k^{e} . m for e = +1 or -1.
    Element<S> act(int k, int e, const Element<S>& m);

private:
    const Element<S>& act_basis(int k, int e, typename Element<S>::Key key);
    Character<S> chi_;
    std::map<std::tuple<int, int, typename Element<S>::Key>, Element<S>> memo_;
};

template <class S>
Element<S> act_X(int k, const Element<S>& m, const Character<S>& chi) {
    return PrincipalSeries<S>(chi).act(k, 1, m);
}

// pi_chi(Phi_s)(1): psi-factors along a reduced word of s, rightmost letter first, each taken
// at the running permuted character. Throws std::domain_error on a singular factor.
template <class S>
Element<S> phi_on_identity(const Permutation& s, const Character<S>& chi);

// Same along an explicit reduced word.
template <class S>
Element<S> phi_on_word(const std::vector<int>& word, const Character<S>& chi);

// Checks X_k (m P) = (X_k m in M_{s.chi}) P for all k and all basis vectors m, where
// P = pi_chi(Phi_s)(1). Exact for TowerScalar, tolerance-based for the numeric domain.
template <class S>
bool intertwiner_check(const Permutation& s, const Character<S>& chi);

// max |a - b| over coefficients (numeric elements).
double max_abs_diff(const NumericElement& a, const NumericElement& b);

// Equality in the element's domain: structural for exact, tolerance for numeric.
bool elements_agree(const AlgebraElement& a, const AlgebraElement& b);
bool elements_agree(const NumericElement& a, const NumericElement& b);

}  // namespace hcs
