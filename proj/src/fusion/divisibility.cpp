#include "hcs/fusion/divisibility.hpp"

#include "hcs/affine/psi.hpp"
#include "hcs/algebra/generators.hpp"

#include <string>

namespace hcs {

namespace {

std::string pair_detail(const char* what, int a, int b) {
    return std::string(what) + " " + std::to_string(a) + "," + std::to_string(b);
}

// eps (x + y)/(x - y)
TowerScalar minus_scalar(const TowerScalar& x, const TowerScalar& y) {
    return TowerScalar(epsilon()) * (x + y) * (x - y).inverse();
}

// Entries of the leading diagonal in pairs (2j-1, 2j).
std::vector<std::pair<int, int>> diagonal_pairs(const StrictPartition& shape) {
    const auto d = row_tableau(shape).diagonal();
    std::vector<std::pair<int, int>> out;
    for (std::size_t j = 0; j + 1 < d.size(); j += 2) out.emplace_back(d[j], d[j + 1]);
    return out;
}

AlgebraElement gamma_from(const StrictPartition& shape, const std::vector<int>& signs, const Permutation* relabel) {
    const auto pairs = diagonal_pairs(shape);
    if (signs.size() != pairs.size()) throw std::invalid_argument("gamma: sign vector has the wrong length");
    const int n = shape.n();
    const TowerScalar i_unit(GaussianRational(0, 1));
    AlgebraElement g = AlgebraElement::one(n);
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (signs[j] != 1 && signs[j] != -1) throw std::invalid_argument("gamma: signs must be +1 or -1");
        int a = pairs[j].first, b = pairs[j].second;
        if (relabel) a = (*relabel)(a), b = (*relabel)(b);
        const AlgebraElement f = AlgebraElement::one(n) +
                                 AlgebraElement::one(n).right_C(a).right_C(b).scaled(i_unit * TowerScalar(signs[j]));
        g = g * f;
    }
    const TowerScalar half = TowerScalar(GaussianRational(mpq_class(1, 2)));
    for (std::size_t j = 0; j < pairs.size(); ++j) g = g.scaled(half);
    return g;
}

}  // namespace

AlgebraElement gamma_idempotent(const StrictPartition& shape, const std::vector<int>& signs) {
    return gamma_from(shape, signs, nullptr);
}

AlgebraElement gamma_prime(const StrictPartition& shape, const std::vector<int>& signs) {
    const Permutation wi = w_of(row_tableau(shape)).inverse();
    return gamma_from(shape, signs, &wi);
}

std::vector<std::vector<int>> gamma_signs(const StrictPartition& shape) {
    const std::size_t m = diagonal_pairs(shape).size();
    std::vector<std::vector<int>> out;
    for (std::size_t bits = 0; bits < (std::size_t(1) << m); ++bits) {
        std::vector<int> s(m);
        for (std::size_t j = 0; j < m; ++j) s[j] = (bits >> j) & 1 ? -1 : 1;
        out.push_back(std::move(s));
    }
    return out;
}

Checks row_annihilation_checks(FusionEngine& e) {
    Checks out;
    const ShiftedTableau r = row_tableau(e.shape());
    const int n = r.n();
    const AlgebraElement& p = e.psi(r);
    for (int k = 1; k < n; ++k) {
        if (bruhat_step(r, k) != BruhatStep::NonStandardRow) continue;
        const TowerScalar qk = e.point().value(r, k), qk1 = e.point().value(r, k + 1);
        out.push_back(check("row-annihilation", (psi_factor(k, qk, qk1, n) * p).is_zero(), pair_detail("row entries", k, k + 1)));
        out.push_back(check("row-divisibility", psi_factor(k, qk1, qk, n) * p == p.scaled(minus_scalar(qk, qk1)),
                            pair_detail("row entries", k, k + 1)));
    }
    return out;
}

Checks fixed_point_check(FusionEngine& e) {
    const AlgebraElement& p = e.psi_column();
    return {check("alpha-fixed-point", alpha(p) == p, "column tableau")};
}

Checks column_divisibility_checks(FusionEngine& e) {
    Checks out;
    const StrictPartition& shape = e.shape();
    const ShiftedTableau c = column_tableau(shape), r = row_tableau(shape);
    const int n = c.n();
    const AlgebraElement& th = e.theta_column();
    const AlgebraElement& pc = e.psi_column();
    for (int k = 1; k < n; ++k) {
        if (bruhat_step(c, k) != BruhatStep::NonStandardColumn) continue;
        const TowerScalar qk = e.point().value(c, k), qk1 = e.point().value(c, k + 1);
        const TowerScalar m = minus_scalar(qk, qk1);
        const AlgebraElement left = psi_factor(k, qk1, qk, n);
        // Left divisibility by an idempotent-pair factor f is f X = m X (f^2 = m f).
        out.push_back(check(k == n - 1 ? "theta-column-divisibility" : "theta-left-divisibility", left * th == th.scaled(m),
                            pair_detail("column entries", k, k + 1)));
        out.push_back(check("column-divisibility-left", left * pc == pc.scaled(m), pair_detail("column entries", k, k + 1)));
        out.push_back(check("column-divisibility-right", pc * psi_factor(n - k, qk1, qk, n) == pc.scaled(m),
                            pair_detail("column entries", k, k + 1)));
    }
    const AlgebraElement& pr = e.psi(r);
    for (int i = 1; i < shape.length(); ++i) {
        for (int j = i + 1; j < i + shape.part(i + 1) + 1; ++j) {
            if (!r.contains(i + 1, j)) continue;
            const int k = r.at(i, j), l = r.at(i + 1, j), p = c.at(i, j);
            const TowerScalar qk = e.point().value(r, k), ql = e.point().value(r, l);
            out.push_back(check("row-tableau-column-divisibility",
                                pr * psi_factor(n - p, ql, qk, n) == pr.scaled(minus_scalar(qk, ql)),
                                pair_detail("row tableau column entries", k, l)));
        }
    }
    return out;
}

Checks clifford_intertwining_checks(FusionEngine& e) {
    Checks out;
    const StrictPartition& shape = e.shape();
    const int n = shape.n();
    for (int k = 1; k <= n; ++k) {
        // One engine per inverted box; tableaux share it.
        std::map<std::pair<int, int>, FusionEngine> primed;
        for (const auto& t : enumerate_standard(shape)) {
            const Box b = t.box_of(k);
            auto it = primed.try_emplace({b.row, b.col}, shape, b).first;
            const AlgebraElement& p = e.psi(t);
            const AlgebraElement& pp = it->second.psi(t);
            const int m = w_of(t).inverse()(k);
            out.push_back(check("clifford-intertwining", p.left_C(k) == pp.right_C(m),
                                "tableau " + t.key() + ", k=" + std::to_string(k)));
        }
    }
    return out;
}

Checks gamma_intertwining_checks(FusionEngine& e) {
    Checks out;
    const StrictPartition& shape = e.shape();
    const AlgebraElement& pr = e.psi(row_tableau(shape));
    for (const auto& s : gamma_signs(shape)) {
        std::string sig;
        for (int v : s) sig += v > 0 ? '+' : '-';
        const AlgebraElement g = gamma_idempotent(shape, s), gp = gamma_prime(shape, s);
        out.push_back(check("gamma-intertwining", g * pr == pr * gp, "signs [" + sig + "]"));
    }
    return out;
}

Checks divisibility_suite(FusionEngine& e) {
    Checks out;
    for (auto* f : {&row_annihilation_checks, &fixed_point_check, &column_divisibility_checks, &clifford_intertwining_checks,
                    &gamma_intertwining_checks}) {
        Checks c = (*f)(e);
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

}  // namespace hcs
