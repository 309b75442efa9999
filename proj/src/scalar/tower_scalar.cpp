#include "hcs/scalar/tower_scalar.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace hcs {

namespace {

int highest_generator(TowerScalar::Mask s) { return s ? 33 - std::countl_zero(s) : 0; }

RationalFunction carry_factor(TowerScalar::Mask common) {
    RationalFunction r(1);
    while (common) {
        int bit = std::countr_zero(common);
        r *= quantum_int(bit + 2);
        common &= common - 1;
    }
    return r;
}

}  // namespace

TowerScalar::TowerScalar(RationalFunction r, int level) : level_(level) {
    if (level < 1 || level > kMaxLevel) throw std::invalid_argument("TowerScalar: level out of range");
    if (!r.is_zero()) terms_.emplace_back(0, std::move(r));
}

TowerScalar::TowerScalar(int level, std::vector<std::pair<Mask, RationalFunction>> terms) : level_(level) {
    if (level < 1 || level > kMaxLevel) throw std::invalid_argument("TowerScalar: level out of range");
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [s, c] : terms) {
        if (highest_generator(s) > level) throw std::invalid_argument("TowerScalar: generator above level");
        if (!terms_.empty() && terms_.back().first == s) {
            terms_.back().second += c;
        } else {
            terms_.emplace_back(s, std::move(c));
        }
    }
    std::erase_if(terms_, [](const auto& t) { return t.second.is_zero(); });
}

RationalFunction TowerScalar::coeff(Mask s) const {
    for (const auto& [m, c] : terms_)
        if (m == s) return c;
    return {};
}

TowerScalar TowerScalar::at_level(int level) const {
    if (level < 1 || level > kMaxLevel) throw std::invalid_argument("TowerScalar: level out of range");
    for (const auto& t : terms_)
        if (highest_generator(t.first) > level) throw std::invalid_argument("TowerScalar::at_level: cannot lower");
    TowerScalar r = *this;
    r.level_ = level;
    return r;
}

TowerScalar TowerScalar::conjugate(int m) const {
    TowerScalar r = *this;
    if (m < 2) return r;
    const Mask bit = Mask(1) << (m - 2);
    for (auto& [s, c] : r.terms_)
        if (s & bit) c = -c;
    return r;
}

TowerScalar& TowerScalar::operator+=(const TowerScalar& o) {
    level_ = std::max(level_, o.level_);
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    std::vector<std::pair<Mask, RationalFunction>> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            out.push_back(o.terms_[j++]);
        } else {
            RationalFunction s = std::move(terms_[i].second);
            s += o.terms_[j].second;
            if (!s.is_zero()) out.emplace_back(terms_[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

TowerScalar& TowerScalar::operator-=(const TowerScalar& o) { return *this += -o; }

TowerScalar TowerScalar::operator-() const {
    TowerScalar r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

TowerScalar TowerScalar::scaled(const RationalFunction& f) const {
    if (f.is_zero()) return TowerScalar(RationalFunction(), level_);
    TowerScalar r = *this;
    for (auto& t : r.terms_) t.second *= f;
    return r;
}

TowerScalar operator*(const TowerScalar& a, const TowerScalar& b) {
    const int level = std::max(a.level_, b.level_);
    if (a.terms_.empty() || b.terms_.empty()) return TowerScalar(RationalFunction(), level);
    if (a.terms_.size() == 1 && a.terms_[0].first == 0) {
        TowerScalar r = b.scaled(a.terms_[0].second);
        r.level_ = level;
        return r;
    }
    if (b.terms_.size() == 1 && b.terms_[0].first == 0) {
        TowerScalar r = a.scaled(b.terms_[0].second);
        r.level_ = level;
        return r;
    }
    std::vector<std::pair<TowerScalar::Mask, RationalFunction>> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [sa, ca] : a.terms_) {
        for (const auto& [sb, cb] : b.terms_) {
            RationalFunction c = ca * cb;
            if (TowerScalar::Mask common = sa & sb) c *= carry_factor(common);
            acc.emplace_back(sa ^ sb, std::move(c));
        }
    }
    return TowerScalar(level, std::move(acc));
}

TowerScalar TowerScalar::inverse() const {
    if (terms_.empty()) throw std::domain_error("tower_inv: zero input");
    if (is_rational()) return TowerScalar(terms_[0].second.inverse(), level_);
    Mask all = 0;
    for (const auto& t : terms_) all |= t.first;
    const int m = highest_generator(all);
    const Mask bit = Mask(1) << (m - 2);
    std::vector<std::pair<Mask, RationalFunction>> u, v;
    for (const auto& [s, c] : terms_) {
        if (s & bit) {
            v.emplace_back(s ^ bit, c);
        } else {
            u.emplace_back(s, c);
        }
    }
    TowerScalar U(level_, std::move(u)), V(level_, std::move(v));
    TowerScalar norm = U * U - (V * V).scaled(quantum_int(m));
    if (norm.is_zero()) throw std::logic_error("tower_inv: vanishing conjugate norm");
    TowerScalar conj = U - V * sqrt_gen(m, level_);
    TowerScalar r = conj * norm.inverse();
    r.level_ = level_;
    return r;
}

std::complex<double> TowerScalar::eval(std::complex<double> q) const {
    std::complex<double> r = 0;
    for (const auto& [s, c] : terms_) {
        std::complex<double> t = c.eval(q);
        for (Mask rest = s; rest; rest &= rest - 1) {
            int m = std::countr_zero(rest) + 2;
            t *= std::sqrt(quantum_int(m).eval(q));
        }
        r += t;
    }
    return r;
}

std::string TowerScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.to_string();
        for (Mask rest = s; rest; rest &= rest - 1) os << "*sqrt[" << (std::countr_zero(rest) + 2) << "]";
    }
    return os.str();
}

TowerScalar tower_mul(const TowerScalar& a, const TowerScalar& b) { return a * b; }
TowerScalar tower_inv(const TowerScalar& a) { return a.inverse(); }

TowerScalar sqrt_gen(int m, int level) {
    if (m < 0) throw std::invalid_argument("sqrt_gen: negative index");
    if (m > level) throw std::invalid_argument("sqrt_gen: index above level");
    if (m == 0) return TowerScalar(RationalFunction(), level);
    if (m == 1) return TowerScalar(RationalFunction(1), level);
    return TowerScalar(level, {{TowerScalar::Mask(1) << (m - 2), RationalFunction(1)}});
}

namespace {

TowerScalar special(int a, int level, int sign) {
    if (a < 0) throw std::invalid_argument("special_value: negative content");
    if (level < a + 1) throw std::invalid_argument("special_value: level too small for content");
    TowerScalar base(quantum_int(a + 1) - quantum_int(a), level);
    if (a == 0) return base;
    TowerScalar root = sqrt_gen(a + 1, level) * sqrt_gen(a, level);
    return base + root.scaled(epsilon() * RationalFunction(sign));
}

}  // namespace

TowerScalar special_value(int a, int level) { return special(a, level, -1); }
TowerScalar special_value_conjugate(int a, int level) { return special(a, level, +1); }

}  // namespace hcs
