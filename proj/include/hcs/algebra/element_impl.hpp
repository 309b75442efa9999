#pragma once

// Template bodies for Element<S>; included only by the translation units that instantiate it.

#include "hcs/algebra/element.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace hcs {

template <class S>
void Accumulator<S>::add(typename Element<S>::Key k, S v) {
    if (present_[k]) {
        values_[k] += v;
    } else {
        values_[k] = std::move(v);
        present_[k] = 1;
        touched_.push_back(k);
    }
}

template <class S>
std::vector<typename Element<S>::Term> Accumulator<S>::take() {
    std::sort(touched_.begin(), touched_.end());
    std::vector<typename Element<S>::Term> out;
    out.reserve(touched_.size());
    for (auto k : touched_) {
        if (!ScalarDomain<S>::is_zero(values_[k])) out.emplace_back(k, std::move(values_[k]));
        values_[k] = S{};
        present_[k] = 0;
    }
    touched_.clear();
    return out;
}

namespace detail {

// Caches eps-polynomial conversions within one operation.
template <class S>
class EpsCache {
public:
    explicit EpsCache(const ScalarDomain<S>& dom) : dom_(dom) {}
    // c * p(eps), skipping the multiplication for p = +-1.
    S times(const S& c, const EpsPoly& p) {
        if (p.size() == 1 && p[0] == 1) return c;
        if (p.size() == 1 && p[0] == -1) return -c;
        auto it = cache_.find(p);
        if (it == cache_.end()) it = cache_.emplace(p, dom_.eps_poly(p)).first;
        return c * it->second;
    }
    const S& eps() {
        if (!eps_) eps_ = dom_.eps();
        return *eps_;
    }

private:
    const ScalarDomain<S>& dom_;
    std::map<EpsPoly, S> cache_;
    std::optional<S> eps_;
};

}  // namespace detail

template <class S>
Element<S> Element<S>::scalar(int n, const S& c, Domain dom) {
    Element e(n, dom);
    if (!Domain::is_zero(c)) e.terms_.emplace_back(e.basis().key(e.basis().identity_index(), 0), c);
    return e;
}

template <class S>
Element<S> Element<S>::basis_element(int n, const Permutation& w, Mask mask, Domain dom) {
    Element e(n, dom);
    if (mask >= e.basis().clifford_count()) throw std::invalid_argument("basis_element: Clifford index out of range");
    e.terms_.emplace_back(e.basis().key(e.basis().index_of(w), mask), Domain::from_int(1));
    return e;
}

template <class S>
Element<S> Element<S>::T(int k, int n, Domain dom) {
    if (k < 1 || k >= n) throw std::invalid_argument("T: index out of range");
    return basis_element(n, Permutation::simple(k, n), 0, dom);
}

template <class S>
Element<S> Element<S>::C(int l, int n, Domain dom) {
    if (l < 1 || l > n) throw std::invalid_argument("C: index out of range");
    return basis_element(n, Permutation::identity(n), Mask(1) << (l - 1), dom);
}

template <class S>
Element<S> Element<S>::from_terms(int n, std::vector<Term> terms, Domain dom) {
    Element e(n, dom);
    Accumulator<S> acc(e.basis().dimension());
    for (auto& [k, c] : terms) {
        if (k >= e.basis().dimension()) throw std::invalid_argument("from_terms: key out of range");
        acc.add(k, std::move(c));
    }
    e.terms_ = acc.take();
    return e;
}

template <class S>
S Element<S>::coeff(Key key) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, Key k) { return t.first < k; });
    if (it != terms_.end() && it->first == key) return it->second;
    return S{};
}

template <class S>
S Element<S>::coeff(const Permutation& w, Mask mask) const {
    return coeff(basis().key(basis().index_of(w), mask));
}

template <class S>
void Element<S>::check_compatible(const Element& o) const {
    if (n_ != o.n_) throw std::invalid_argument("algebra elements of different rank");
    if (!(dom_ == o.dom_)) throw std::invalid_argument("algebra elements over different scalar domains");
}

template <class S>
Element<S>& Element<S>::operator+=(const Element& o) {
    check_compatible(o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            out.push_back(o.terms_[j++]);
        } else {
            S s = std::move(terms_[i].second);
            s += o.terms_[j].second;
            if (!Domain::is_zero(s)) out.emplace_back(terms_[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

template <class S>
Element<S>& Element<S>::operator-=(const Element& o) {
    return *this += -o;
}

template <class S>
Element<S> Element<S>::operator-() const {
    Element r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

template <class S>
Element<S> Element<S>::scaled(const S& c) const {
    Element r(n_, dom_);
    if (Domain::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [k, v] : terms_) {
        S p = v * c;
        if (!Domain::is_zero(p)) r.terms_.emplace_back(k, std::move(p));
    }
    return r;
}

template <class S>
Element<S> Element<S>::left_T(int k) const {
    if (k < 1 || k >= n_) throw std::invalid_argument("left_T: index out of range");
    const Basis& b = basis();
    Accumulator<S> acc(b.dimension());
    detail::EpsCache<S> eps(dom_);
    for (const auto& [key, c] : terms_) {
        const int u = b.perm_of(key);
        const Mask m = b.mask_of(key);
        acc.add(b.key(b.left_mul(u, k), m), c);
        if (!b.left_grows(u, k)) acc.add(key, c * eps.eps());
    }
    Element r(n_, dom_);
    r.terms_ = acc.take();
    return r;
}

template <class S>
Element<S> Element<S>::left_C(int l) const {
    if (l < 1 || l > n_) throw std::invalid_argument("left_C: index out of range");
    const Basis& b = basis();
    Accumulator<S> acc(b.dimension());
    detail::EpsCache<S> eps(dom_);
    for (const auto& [key, c] : terms_) {
        const int u = b.perm_of(key);
        const Mask m = b.mask_of(key);
        for (const auto& t : b.clifford_past(l, u)) {
            auto p = clifford_left(t.gen, m);
            S v = eps.times(c, t.coeff);
            if (p.sign < 0) v = -v;
            acc.add(b.key(t.perm, p.mask), std::move(v));
        }
    }
    Element r(n_, dom_);
    r.terms_ = acc.take();
    return r;
}

template <class S>
Element<S> Element<S>::right_C(int l) const {
    if (l < 1 || l > n_) throw std::invalid_argument("right_C: index out of range");
    const Basis& b = basis();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [key, c] : terms_) {
        auto p = clifford_right(b.mask_of(key), l);
        out.emplace_back(b.key(b.perm_of(key), p.mask), p.sign < 0 ? S(-c) : c);
    }
    std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    Element r(n_, dom_);
    r.terms_ = std::move(out);
    return r;
}

template <class S>
Element<S> Element<S>::left_clifford(Mask mask) const {
    Element r = *this;
    for (Mask rest = mask; rest;) {
        int top = 31 - std::countl_zero(rest);
        rest &= ~(Mask(1) << top);
        r = r.left_C(top + 1);
    }
    return r;
}

template <class S>
Element<S> Element<S>::mul(const Element& a, const Element& b) {
    a.check_compatible(b);
    Element r(a.n_, a.dom_);
    if (a.is_zero() || b.is_zero()) return r;
    const Basis& bs = a.basis();
    Accumulator<S> acc(bs.dimension());
    // a = sum_w T_w (sum_S c_{w,S} C_S); terms with equal w are contiguous.
    std::size_t i = 0;
    while (i < a.terms_.size()) {
        const int w = bs.perm_of(a.terms_[i].first);
        Element y(a.n_, a.dom_);
        for (; i < a.terms_.size() && bs.perm_of(a.terms_[i].first) == w; ++i) {
            const auto& [key, c] = a.terms_[i];
            y += b.left_clifford(bs.mask_of(key)).scaled(c);
        }
        const auto& word = bs.reduced_word(w);
        for (auto it = word.rbegin(); it != word.rend(); ++it) y = y.left_T(*it);
        for (auto& [k, v] : y.terms_) acc.add(k, std::move(v));
    }
    r.terms_ = acc.take();
    return r;
}

template <class S>
bool Element<S>::is_even() const {
    const Basis& b = basis();
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return std::popcount(b.mask_of(t.first)) % 2 == 0; });
}

template <class S>
bool Element<S>::is_odd() const {
    const Basis& b = basis();
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return std::popcount(b.mask_of(t.first)) % 2 == 1; });
}

template <class S>
int Element<S>::max_length() const {
    int best = -1;
    const Basis& b = basis();
    for (const auto& t : terms_) best = std::max(best, b.length(b.perm_of(t.first)));
    return best;
}

template <class S>
std::string Element<S>::to_string() const {
    if (terms_.empty()) return "0";
    const Basis& b = basis();
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << "\n";
        first = false;
        const int w = b.perm_of(key);
        os << "T" << b.perm(w).to_string() << " " << clifford_to_string(b.mask_of(key)) << " : ";
        if constexpr (std::is_same_v<S, TowerScalar>) {
            os << c.to_string();
        } else {
            os << c;
        }
    }
    return os.str();
}

}  // namespace hcs
