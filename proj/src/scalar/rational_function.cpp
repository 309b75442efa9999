#include "hcs/scalar/rational_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hcs {

RationalFunction::RationalFunction(Polynomial num, Polynomial den, int shift)
    : num_(std::move(num)), den_(std::move(den)), shift_(shift) {
    normalize();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        shift_ = 0;
        return;
    }
    if (int v = num_.valuation(); v > 0) {
        num_ = num_.shifted_down(v);
        shift_ += v;
    }
    if (int v = den_.valuation(); v > 0) {
        den_ = den_.shifted_down(v);
        shift_ -= v;
    }
    if (!den_.is_constant()) {
        Polynomial g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    if (!den_.lc().is_one()) {
        num_ = num_.scaled(den_.lc().inverse());
        den_ = den_.monic();
    }
}

RationalFunction RationalFunction::q_power(int e) {
    RationalFunction r(1);
    r.shift_ = e;
    return r;
}

RationalFunction RationalFunction::laurent(const std::vector<std::pair<int, long>>& terms) {
    if (terms.empty()) return {};
    int lo = terms.front().first;
    for (const auto& t : terms) lo = std::min(lo, t.first);
    std::vector<GaussianRational> c;
    for (const auto& [e, v] : terms) {
        size_t idx = static_cast<size_t>(e - lo);
        if (c.size() <= idx) c.resize(idx + 1);
        c[idx] += GaussianRational(v);
    }
    return RationalFunction(Polynomial(std::move(c)), Polynomial(1), lo);
}

GaussianRational RationalFunction::constant_value() const {
    if (!is_constant()) throw std::logic_error("RationalFunction::constant_value: not a constant");
    return num_.is_zero() ? GaussianRational() : num_[0];
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RationalFunction r;
    r.shift_ = a.shift_ + b.shift_;
    if (a.is_laurent() && b.is_laurent()) {
        r.num_ = a.num_ * b.num_;
        return r;
    }
    Polynomial g1 = b.den_.is_constant() ? Polynomial(1) : gcd(a.num_, b.den_);
    Polynomial g2 = a.den_.is_constant() ? Polynomial(1) : gcd(b.num_, a.den_);
    const bool t1 = g1.is_one(), t2 = g2.is_one();
    r.num_ = (t1 ? a.num_ : exact_div(a.num_, g1)) * (t2 ? b.num_ : exact_div(b.num_, g2));
    r.den_ = (t2 ? a.den_ : exact_div(a.den_, g2)) * (t1 ? b.den_ : exact_div(b.den_, g1));
    return r;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) { return *this = *this * o; }

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int m = std::min(shift_, o.shift_);
    Polynomial na = num_.shifted_up(shift_ - m);
    Polynomial nb = o.num_.shifted_up(o.shift_ - m);
    if (den_ == o.den_) {
        num_ = na + nb;
        shift_ = m;
        if (num_.is_zero()) return *this = RationalFunction();
        if (int v = num_.valuation(); v > 0) {
            num_ = num_.shifted_down(v);
            shift_ += v;
        }
        if (!den_.is_constant()) {
            Polynomial h = gcd(num_, den_);
            if (!h.is_one()) {
                num_ = exact_div(num_, h);
                den_ = exact_div(den_, h);
            }
        }
        return *this;
    }
    Polynomial g = (den_.is_constant() || o.den_.is_constant()) ? Polynomial(1) : gcd(den_, o.den_);
    if (g.is_one()) {
        num_ = na * o.den_ + nb * den_;
        den_ = den_ * o.den_;
        shift_ = m;
        if (num_.is_zero()) return *this = RationalFunction();
        if (int v = num_.valuation(); v > 0) {
            num_ = num_.shifted_down(v);
            shift_ += v;
        }
        return *this;
    }
    Polynomial da = exact_div(den_, g), db = exact_div(o.den_, g);
    num_ = na * db + nb * da;
    shift_ = m;
    if (num_.is_zero()) return *this = RationalFunction();
    if (int v = num_.valuation(); v > 0) {
        num_ = num_.shifted_down(v);
        shift_ += v;
    }
    Polynomial h = gcd(num_, g);
    if (!h.is_one()) {
        num_ = exact_div(num_, h);
        g = exact_div(g, h);
    }
    den_ = g * da * db;
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this = *this / o; }

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("RationalFunction::inverse: zero");
    RationalFunction r;
    r.shift_ = -shift_;
    const GaussianRational& c = num_.lc();
    if (c.is_one()) {
        r.num_ = den_;
        r.den_ = num_;
    } else {
        GaussianRational ci = c.inverse();
        r.num_ = den_.scaled(ci);
        r.den_ = num_.scaled(ci);
    }
    return r;
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::complex<double> RationalFunction::eval(std::complex<double> q) const {
    if (is_zero()) return 0.0;
    std::complex<double> d = den_.eval(q);
    if (d == 0.0) throw std::domain_error("RationalFunction::eval: pole");
    std::complex<double> r = num_.eval(q) / d * std::pow(q, shift_);
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) throw std::domain_error("RationalFunction::eval: pole");
    return r;
}

std::string RationalFunction::to_string() const {
    if (is_zero()) return "0";
    std::string s = "(" + num_.to_string() + ")";
    if (shift_ != 0) s += "*q^" + std::to_string(shift_);
    if (!den_.is_one()) s += "/(" + den_.to_string() + ")";
    return s;
}

RationalFunction quantum_int(int m) {
    if (m == 0) return {};
    if (m < 0) return -quantum_int(-m);
    std::vector<GaussianRational> c(static_cast<size_t>(4 * (m - 1) + 1));
    for (int j = 0; j < m; ++j) c[static_cast<size_t>(4 * j)] = GaussianRational(1);
    return RationalFunction(Polynomial(std::move(c)), Polynomial(1), -2 * (m - 1));
}

RationalFunction epsilon() { return RationalFunction::laurent({{1, 1}, {-1, -1}}); }

}  // namespace hcs
