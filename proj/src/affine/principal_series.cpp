#include "hcs/affine/principal_series.hpp"

#include "hcs/affine/psi.hpp"

#include <cmath>
#include <stdexcept>

namespace hcs {

template <class S>
Character<S>::Character(std::vector<S> inverse_values, ScalarDomain<S> dom) : inv_(std::move(inverse_values)), dom_(dom) {
    for (const auto& v : inv_)
        if (ScalarDomain<S>::is_zero(v)) throw std::invalid_argument("Character: zero value");
}

template <class S>
Character<S> Character<S>::permuted(const Permutation& s) const {
    if (s.n() != n()) throw std::invalid_argument("Character::permuted: size mismatch");
    const Permutation si = s.inverse();
    std::vector<S> out(inv_.size());
    for (int k = 1; k <= n(); ++k) out[static_cast<std::size_t>(k - 1)] = x_inv(si(k));
    return Character(std::move(out), dom_);
}

template <class S>
bool Character<S>::is_generic() const {
    for (int k = 1; k <= n(); ++k)
        for (int l = k + 1; l <= n(); ++l)
            if (ScalarDomain<S>::same(x_inv(k), x_inv(l)) || ScalarDomain<S>::same(x_inv(k) * x_inv(l), S(1)))
                return false;
    return true;
}

template <class S>
Element<S> PrincipalSeries<S>::act(int k, int e, const Element<S>& m) {
    if (k < 1 || k > chi_.n() || (e != 1 && e != -1)) throw std::invalid_argument("PrincipalSeries::act: bad generator");
    if (m.n() != chi_.n()) throw std::invalid_argument("PrincipalSeries::act: rank mismatch");
    Element<S> r(m.n(), m.domain());
    for (const auto& [key, c] : m.terms()) r += act_basis(k, e, key).scaled(c);
    return r;
}

template <class S>
const Element<S>& PrincipalSeries<S>::act_basis(int k, int e, typename Element<S>::Key key) {
    const auto memo_key = std::make_tuple(k, e, key);
    if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;

    const int n = chi_.n();
    const auto& dom = chi_.domain();
    const auto& b = HeckeCliffordBasis::get(n);
    const int w = b.perm_of(key);
    const auto mask = b.mask_of(key);
    Element<S> r(n, dom);
    if (w == b.identity_index()) {
        // X_k^e C_S . 1 = C_S X_k^{+-e} . 1; the exponent flips when C_k occurs in C_S.
        const int ee = (mask & (1u << (k - 1))) ? -e : e;
        r = Element<S>::from_terms(n, {{key, ee > 0 ? chi_.x(k) : chi_.x_inv(k)}}, dom);
    } else {
        const int j = b.reduced_word(w).front();
        const auto rest = b.key(b.left_mul(w, j), mask);
        const S eps = dom.eps();
        auto sub = [&](int kk, int ee) -> Element<S> { return act_basis(kk, ee, rest); };
        auto d = [&](const Element<S>& v) { return v.left_C(j + 1).left_C(j); };  // C_j C_{j+1} v
        if (k != j && k != j + 1) {
            r = sub(k, e).left_T(j);
        } else if (e == 1 && k == j) {
            // X_j T_j = T_j X_{j+1} - eps X_{j+1} - eps C_jC_{j+1} X_{j+1}
            const Element<S> v = sub(j + 1, 1);
            r = v.left_T(j) - v.scaled(eps) - d(v).scaled(eps);
        } else if (e == 1) {
            // X_{j+1} T_j = T_j X_j + eps X_{j+1} - eps C_jC_{j+1} X_j
            const Element<S> v1 = sub(j, 1), v2 = sub(j + 1, 1);
            r = v1.left_T(j) + v2.scaled(eps) - d(v1).scaled(eps);
        } else if (k == j) {
            // X_j^{-1} T_j = T_j X_{j+1}^{-1} + eps X_j^{-1} + eps C_jC_{j+1} X_j
            const Element<S> v1 = sub(j + 1, -1), v2 = sub(j, -1), v3 = sub(j, 1);
            r = v1.left_T(j) + v2.scaled(eps) + d(v3).scaled(eps);
        } else {
            // X_{j+1}^{-1} T_j = T_j X_j^{-1} - eps X_j^{-1} + eps C_jC_{j+1} X_{j+1}
            const Element<S> v1 = sub(j, -1), v2 = sub(j + 1, 1);
            r = v1.left_T(j) - v1.scaled(eps) + d(v2).scaled(eps);
        }
    }
    return memo_.emplace(memo_key, std::move(r)).first->second;
}

template <class S>
Element<S> phi_on_word(const std::vector<int>& word, const Character<S>& chi) {
    const int n = chi.n();
    Element<S> r = Element<S>::one(n, chi.domain());
    Character<S> cur = chi;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int k = *it;
        r = psi_factor(k, cur.x_inv(k), cur.x_inv(k + 1), n, chi.domain()) * r;
        cur = cur.permuted(Permutation::simple(k, n));
    }
    return r;
}

template <class S>
Element<S> phi_on_identity(const Permutation& s, const Character<S>& chi) {
    return phi_on_word(s.reduced_word(), chi);
}

bool elements_agree(const AlgebraElement& a, const AlgebraElement& b) { return a == b; }

double max_abs_diff(const NumericElement& a, const NumericElement& b) {
    const NumericElement d = a - b;
    double m = 0.0;
    for (const auto& t : d.terms()) m = std::max(m, std::abs(t.second));
    return m;
}

bool elements_agree(const NumericElement& a, const NumericElement& b) {
    double scale = 1.0;
    for (const auto& t : a.terms()) scale = std::max(scale, std::abs(t.second));
    return max_abs_diff(a, b) <= ScalarDomain<std::complex<double>>::kTolerance * scale;
}

template <class S>
bool intertwiner_check(const Permutation& s, const Character<S>& chi) {
    const int n = chi.n();
    const Element<S> p = phi_on_identity(s, chi);
    PrincipalSeries<S> m_chi(chi), m_schi(chi.permuted(s));
    const auto& b = HeckeCliffordBasis::get(n);
    for (int w = 0; w < b.perm_count(); ++w) {
        for (typename Element<S>::Mask mask = 0; mask < b.clifford_count(); ++mask) {
            const Element<S> m = Element<S>::from_terms(n, {{b.key(w, mask), S(1)}}, chi.domain());
            for (int k = 1; k <= n; ++k)
                if (!elements_agree(m_chi.act(k, 1, m * p), m_schi.act(k, 1, m) * p)) return false;
        }
    }
    return true;
}

#define HCS_INSTANTIATE_PS(S)                                                                 \
    template class Character<S>;                                                             \
    template class PrincipalSeries<S>;                                                       \
    template Element<S> phi_on_word<S>(const std::vector<int>&, const Character<S>&);        \
    template Element<S> phi_on_identity<S>(const Permutation&, const Character<S>&);         \
    template bool intertwiner_check<S>(const Permutation&, const Character<S>&);

HCS_INSTANTIATE_PS(TowerScalar)
HCS_INSTANTIATE_PS(std::complex<double>)

}  // namespace hcs
