#include "hcs/numeric/oracle.hpp"

#include "hcs/affine/psi.hpp"
#include "hcs/numeric/extrapolate.hpp"

#include <cmath>
#include <stdexcept>

namespace hcs {

using cd = std::complex<double>;

std::complex<double> numeric_eval(const TowerScalar& x, const NumericConfig& cfg) { return x.eval(cd(cfg.q, 0.0)); }

NumericElement to_numeric(const AlgebraElement& a, const NumericConfig& cfg) {
    std::vector<NumericElement::Term> terms;
    terms.reserve(a.size());
    for (const auto& [k, c] : a.terms()) terms.emplace_back(k, numeric_eval(c, cfg));
    return NumericElement::from_terms(a.n(), std::move(terms), cfg.domain());
}

std::complex<double> curve_coordinate(double q, cd u, int content) {
    const cd h = (q * u * u + 1.0 / (q * u * u)) / (q + 1.0 / q);
    const cd r = std::sqrt(h * h - 1.0);
    if (content == 0) return h - r;
    // Away from the branch point pick the root nearest the special value, which is below 1.
    const double qc = std::pow(q, content);
    const double h0 = (q * qc * qc + 1.0 / (q * qc * qc)) / (q + 1.0 / q);
    const double x0 = h0 - std::sqrt(h0 * h0 - 1.0);
    return std::abs(h - r - x0) <= std::abs(h + r - x0) ? h - r : h + r;
}

std::vector<cd> path_point(const ShiftedTableau& t, double tau, const NumericConfig& cfg) {
    if (cfg.offsets.empty()) throw std::invalid_argument("path_point: no offsets");
    std::vector<cd> x(static_cast<std::size_t>(t.n()));
    for (int k = 1; k <= t.n(); ++k) {
        const Box b = t.box_of(k);
        const std::size_t i = std::min(static_cast<std::size_t>(b.row - 1), cfg.offsets.size() - 1);
        const double u = std::pow(cfg.q, b.content()) * (1.0 + tau * tau * cfg.offsets[i]);
        x[static_cast<std::size_t>(k - 1)] = curve_coordinate(cfg.q, u, b.content());
    }
    return x;
}

NumericElement psi_product(const ShiftedTableau& t, const std::vector<cd>& x, const NumericConfig& cfg) {
    const int n = t.n();
    const auto dom = cfg.domain();
    // Factors in order; multiply from the right end.
    std::vector<NumericElement> factors;
    for (int k = 2; k <= n; ++k) {
        const auto bs = subsequences(t, k).B_star;
        for (std::size_t p = 1; p <= bs.size(); ++p)
            factors.push_back(psi_factor<cd>(k - static_cast<int>(p), x[static_cast<std::size_t>(k - 1)],
                                             x[static_cast<std::size_t>(bs[p - 1] - 1)], n, dom));
    }
    NumericElement r = NumericElement::one(n, dom);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) r = *it * r;
    return r;
}

NumericElement fusion_limit(const ShiftedTableau& t, const NumericConfig& cfg) {
    if (cfg.taus.size() < 2) throw std::invalid_argument("fusion_limit: need at least two samples");
    for (std::size_t i = 1; i < cfg.taus.size(); ++i)
        if (!(cfg.taus[i] < cfg.taus[i - 1]) || cfg.taus[i] <= 0)
            throw std::invalid_argument("fusion_limit: samples must be positive and decreasing");

    // Branch continuity: every coordinate must approach its special value monotonically.
    const auto x0 = path_point(t, 0.0, cfg);
    std::vector<double> last(x0.size(), INFINITY);
    std::vector<NumericElement> values;
    for (double tau : cfg.taus) {
        const auto x = path_point(t, tau, cfg);
        for (std::size_t k = 0; k < x.size(); ++k) {
            const double d = std::abs(x[k] - x0[k]);
            if (d > last[k]) throw std::runtime_error("fusion_limit: branch discontinuity along the path");
            last[k] = d;
        }
        try {
            values.push_back(psi_product(t, x, cfg));
        } catch (const std::domain_error& e) {
            throw std::runtime_error(std::string("fusion_limit: singular sample: ") + e.what());
        }
    }
    return neville_at_zero(cfg.taus, std::move(values), [](const NumericElement& a, double s) { return a.scaled(cd(s)); });
}

DegenerationResult degeneration_check(int a, int b, const NumericConfig& cfg) {
    if (a < 0 || b < 0 || a == b) throw std::invalid_argument("degeneration_check: need distinct non-negative contents");
    const int level = std::max(a, b) + 1;
    const TowerScalar x = special_value(a, level), y = special_value(b, level);
    // q = 1 + h; the coefficients are analytic in h.
    const std::vector<double> hs = {2e-2, 1e-2, 5e-3, 2.5e-3, 1.25e-3};
    std::vector<cd> c0, c1;
    for (double h : hs) {
        const cd qq(1.0 + h, 0.0);
        const cd xv = x.eval(qq), yv = y.eval(qq), e = qq - 1.0 / qq;
        c0.push_back(e / (yv / xv - 1.0));
        c1.push_back(e / (xv * yv - 1.0));
    }
    DegenerationResult r;
    r.scalar = neville_at_zero(hs, c0);
    r.clifford = neville_at_zero(hs, c1);
    const double sa = std::sqrt(double(a) * (a + 1)), sb = std::sqrt(double(b) * (b + 1));
    r.expected_scalar = 1.0 / (sa - sb);
    r.expected_clifford = -1.0 / (sa + sb);
    r.error = std::max(std::abs(r.scalar - r.expected_scalar), std::abs(r.clifford - r.expected_clifford));
    r.ok = r.error <= cfg.tolerance;
    return r;
}

}  // namespace hcs
