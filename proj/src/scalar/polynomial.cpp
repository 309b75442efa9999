#include "hcs/scalar/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace hcs {

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const GaussianRational& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

Polynomial Polynomial::monomial(const GaussianRational& c, int degree) {
    if (degree < 0) throw std::invalid_argument("Polynomial::monomial: negative degree");
    Polynomial p;
    if (c.is_zero()) return p;
    p.coeffs_.resize(static_cast<size_t>(degree) + 1);
    p.coeffs_.back() = c;
    return p;
}

Polynomial Polynomial::from_ints(const std::vector<long>& coeffs) {
    std::vector<GaussianRational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool Polynomial::is_real() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const GaussianRational& c) { return c.is_real(); });
}

GaussianRational Polynomial::coeff(int d) const {
    if (d < 0 || d > degree()) return {};
    return coeffs_[static_cast<size_t>(d)];
}

int Polynomial::valuation() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return static_cast<int>(i);
    return 0;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        if (!o.coeffs_[i].is_zero()) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        if (!o.coeffs_[i].is_zero()) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.coeffs_.size() == 1) return b.scaled(a.coeffs_[0]);
    if (b.coeffs_.size() == 1) return a.scaled(b.coeffs_[0]);
    std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    if (a.is_real() && b.is_real()) {
        std::vector<mpq_class> acc(out.size());
        mpq_class t;
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            const mpq_class& ai = a.coeffs_[i].re();
            if (sgn(ai) == 0) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j) {
                const mpq_class& bj = b.coeffs_[j].re();
                if (sgn(bj) == 0) continue;
                mpq_mul(t.get_mpq_t(), ai.get_mpq_t(), bj.get_mpq_t());
                acc[i + j] += t;
            }
        }
        for (size_t k = 0; k < out.size(); ++k) out[k] = GaussianRational(std::move(acc[k]));
    } else {
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                if (!b.coeffs_[j].is_zero()) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
    if (c.is_zero()) return {};
    if (c.is_one()) return *this;
    Polynomial p = *this;
    for (auto& x : p.coeffs_)
        if (!x.is_zero()) x *= c;
    return p;
}

Polynomial Polynomial::shifted_up(int k) const {
    if (k < 0) return shifted_down(-k);
    if (k == 0 || is_zero()) return *this;
    Polynomial p;
    p.coeffs_.resize(coeffs_.size() + static_cast<size_t>(k));
    std::copy(coeffs_.begin(), coeffs_.end(), p.coeffs_.begin() + k);
    return p;
}

Polynomial Polynomial::shifted_down(int k) const {
    if (k < 0) return shifted_up(-k);
    if (k == 0 || is_zero()) return *this;
    if (k > valuation()) throw std::domain_error("Polynomial::shifted_down: not divisible by q^k");
    Polynomial p;
    p.coeffs_.assign(coeffs_.begin() + k, coeffs_.end());
    return p;
}

Polynomial Polynomial::monic() const {
    if (is_zero() || lc().is_one()) return *this;
    return scaled(lc().inverse());
}

std::complex<double> Polynomial::eval(std::complex<double> q) const {
    std::complex<double> r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * q + it->to_complex();
    return r;
}

GaussianRational Polynomial::eval(const GaussianRational& q) const {
    GaussianRational r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        r *= q;
        r += *it;
    }
    return r;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const auto& c = coeffs_[static_cast<size_t>(d)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        bool show_c = !(c.is_one() && d > 0);
        if (show_c) os << (c.is_real() ? c.to_string() : "(" + c.to_string() + ")");
        if (d > 0) os << (show_c ? "*" : "") << "q" << (d > 1 ? "^" + std::to_string(d) : "");
    }
    return os.str();
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<GaussianRational> r = a.coeffs();
    std::vector<GaussianRational> qc(static_cast<size_t>(a.degree() - b.degree() + 1));
    const int db = b.degree();
    const GaussianRational inv_lc = b.lc().inverse();
    for (int d = a.degree(); d >= db; --d) {
        GaussianRational& top = r[static_cast<size_t>(d)];
        if (top.is_zero()) continue;
        GaussianRational f = top * inv_lc;
        for (int j = 0; j <= db; ++j) {
            const auto& bj = b[j];
            if (!bj.is_zero()) r[static_cast<size_t>(d - db + j)] -= f * bj;
        }
        qc[static_cast<size_t>(d - db)] = std::move(f);
    }
    r.resize(static_cast<size_t>(db));
    return {Polynomial(std::move(qc)), Polynomial(std::move(r))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    if (b.is_constant()) {
        if (b.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
        return a.scaled(b.lc().inverse());
    }
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

namespace {

// Integer polynomials for the real gcd fast path; index = degree, no leading zeros.
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

mpz_class zcontent(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void zmake_primitive(ZPoly& p) {
    if (p.empty()) return;
    mpz_class g = zcontent(p);
    if (sgn(p.back()) < 0) g = -g;
    if (g != 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly to_primitive_z(const Polynomial& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
    ZPoly z(p.coeffs().size());
    for (size_t i = 0; i < z.size(); ++i) {
        const mpq_class& c = p.coeffs()[i].re();
        if (sgn(c) == 0) continue;
        mpz_divexact(z[i].get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        z[i] *= c.get_num();
    }
    zmake_primitive(z);
    return z;
}

Polynomial monic_from_z(const ZPoly& z) {
    std::vector<GaussianRational> c(z.size());
    const mpz_class& lead = z.back();
    for (size_t i = 0; i < z.size(); ++i) {
        if (sgn(z[i]) == 0) continue;
        mpq_class v(z[i], lead);
        v.canonicalize();
        c[i] = GaussianRational(std::move(v));
    }
    return Polynomial(std::move(c));
}

mpz_class zabs_max(const ZPoly& p) {
    mpz_class m = 0;
    for (const auto& c : p)
        if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
    return m;
}

mpz_class zeval(const ZPoly& p, const mpz_class& x) {
    mpz_class r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        r *= x;
        r += *it;
    }
    return r;
}

// Exact division test over Z[q]; on success stores the quotient.
bool zdivides(const ZPoly& g, const ZPoly& f, ZPoly* quot) {
    if (g.size() > f.size()) return false;
    ZPoly r = f;
    ZPoly q(f.size() - g.size() + 1);
    const size_t dg = g.size() - 1;
    mpz_class t;
    for (size_t d = f.size(); d-- > dg;) {
        if (sgn(r[d]) == 0) continue;
        if (!mpz_divisible_p(r[d].get_mpz_t(), g.back().get_mpz_t())) return false;
        mpz_divexact(t.get_mpz_t(), r[d].get_mpz_t(), g.back().get_mpz_t());
        for (size_t j = 0; j <= dg; ++j) r[d - dg + j] -= t * g[j];
        q[d - dg] = t;
    }
    for (const auto& c : r)
        if (sgn(c) != 0) return false;
    if (quot) *quot = std::move(q);
    return true;
}

// Heuristic gcd (evaluation at a large integer, balanced-digit interpolation).
std::optional<ZPoly> zheugcd(const ZPoly& f, const ZPoly& g) {
    mpz_class fn = zabs_max(f), gn = zabs_max(g);
    mpz_class b = 2 * std::min(fn, gn) + 29;
    mpz_class x = b;
    {
        mpz_class s = sqrt(b) * 99;
        if (s < x) x = s;
        mpz_class alt = 2 * std::min(mpz_class(fn / abs(f.back())), mpz_class(gn / abs(g.back()))) + 2;
        if (alt > x) x = alt;
    }
    const size_t maxdeg = std::max(f.size(), g.size());
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (mpz_sizeinbase(x.get_mpz_t(), 2) * maxdeg > 400000) break;
        mpz_class ff = zeval(f, x), gg = zeval(g, x);
        if (sgn(ff) != 0 && sgn(gg) != 0) {
            mpz_class h;
            mpz_gcd(h.get_mpz_t(), ff.get_mpz_t(), gg.get_mpz_t());
            ZPoly cand;
            mpz_class half = x / 2, digit;
            while (sgn(h) != 0) {
                mpz_fdiv_r(digit.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
                if (digit > half) digit -= x;
                cand.push_back(digit);
                h -= digit;
                mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
            }
            ztrim(cand);
            if (!cand.empty()) {
                zmake_primitive(cand);
                if (zdivides(cand, f, nullptr) && zdivides(cand, g, nullptr)) return cand;
            }
        }
        mpz_class r4 = sqrt(sqrt(x));
        x = x * 73794 * r4 / 27011;
    }
    return std::nullopt;
}

ZPoly zprem(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    const size_t db = b.size() - 1;
    while (r.size() >= b.size()) {
        mpz_class lr = r.back();
        for (auto& c : r) c *= b.back();
        const size_t shift = r.size() - b.size();
        for (size_t j = 0; j <= db; ++j) r[shift + j] -= lr * b[j];
        ztrim(r);
    }
    return r;
}

ZPoly zprs_gcd(ZPoly a, ZPoly b) {
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = zprem(a, b);
        zmake_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    zmake_primitive(a);
    return a;
}

Polynomial field_euclid(Polynomial a, Polynomial b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Polynomial r = divrem(a, b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    if (!a.is_real() || !b.is_real()) return field_euclid(a, b);
    // One cheap field division first: it settles the frequent case of a small factor.
    const Polynomial& big = a.degree() >= b.degree() ? a : b;
    const Polynomial& small = a.degree() >= b.degree() ? b : a;
    if (small.degree() <= 2) return field_euclid(big, small);
    ZPoly za = to_primitive_z(a), zb = to_primitive_z(b);
    if (auto h = zheugcd(za, zb)) return monic_from_z(*h);
    return monic_from_z(zprs_gcd(std::move(za), std::move(zb)));
}

}  // namespace hcs
