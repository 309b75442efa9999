#include "hcs/fusion/fusion.hpp"

#include "hcs/affine/psi.hpp"
#include "hcs/algebra/generators.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hcs {

namespace {

std::size_t box_index(const StrictPartition& shape, const Box& b) {
    std::size_t off = 0;
    for (int i = 1; i < b.row; ++i) off += static_cast<std::size_t>(shape.part(i));
    return off + static_cast<std::size_t>(b.col - b.row);
}

bool same_diagonal(const ShiftedTableau& t, int a, int b) { return t.content(a) == t.content(b); }

bool row_adjacent(const ShiftedTableau& t, int a, int b) {
    const Box x = t.box_of(a), y = t.box_of(b);
    return x.row == y.row && std::abs(x.col - y.col) == 1;
}

// Product of a list of factors, multiplied from the right end.
AlgebraElement product(int n, const std::vector<AlgebraElement>& fs) {
    AlgebraElement r = AlgebraElement::one(n);
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) r = *it * r;
    return r;
}

}  // namespace

SpecialPoint::SpecialPoint(StrictPartition shape, std::optional<Box> inverted)
    : shape_(std::move(shape)), level_(std::max(1, shape_.n())), inverted_(inverted) {
    for (int i = 1; i <= shape_.length(); ++i)
        for (int j = i; j < i + shape_.part(i); ++j) box_values_.push_back(special_value(j - i, level_));
    if (inverted_) {
        const Box b = *inverted_;
        if (b.row < 1 || b.row > shape_.length() || b.col < b.row || b.col >= b.row + shape_.part(b.row))
            throw std::invalid_argument("SpecialPoint: inverted box outside the diagram");
        auto& v = box_values_[box_index(shape_, b)];
        v = special_value_conjugate(b.content(), level_);
    }
}

const TowerScalar& SpecialPoint::at(const Box& b) const { return box_values_[box_index(shape_, b)]; }

std::vector<TowerScalar> SpecialPoint::values(const ShiftedTableau& t) const {
    if (t.shape() != shape_) throw std::invalid_argument("SpecialPoint: shape mismatch");
    std::vector<TowerScalar> x;
    for (int k = 1; k <= t.n(); ++k) x.push_back(value(t, k));
    return x;
}

std::string FusionFactor::to_string() const {
    std::ostringstream os;
    if (kind == Kind::Regular) {
        os << "psi_" << gen << "(x" << left << ",x" << right << ")";
    } else {
        os << "theta_" << gen << "(x" << next << ",x" << right << ")[z=x" << left << "]";
    }
    return os.str();
}

int FusionPlan::singular_pairs() const {
    return static_cast<int>(std::count_if(theta.begin(), theta.end(),
                                          [](const FusionFactor& f) { return f.kind == FusionFactor::Kind::Grouped; }));
}

std::string FusionPlan::to_string() const {
    std::ostringstream os;
    os << "theta:";
    for (const auto& f : theta) os << ' ' << f.to_string();
    os << "\ntheta':";
    for (const auto& f : theta_prime) os << ' ' << f.to_string();
    return os.str();
}

FusionPlan make_fusion_plan(const StrictPartition& shape) {
    const ShiftedTableau c = column_tableau(shape);
    const int n = shape.n();
    FusionPlan plan{shape, {}, {}};
    for (int k = 2; k <= n; ++k) {
        const auto bs = subsequences(c, k).B;
        const int b = static_cast<int>(bs.size());
        for (int p = 1; p <= b; ++p) {
            const int bp = bs[static_cast<std::size_t>(p - 1)];
            if (!same_diagonal(c, k, bp)) {
                plan.theta.push_back({FusionFactor::Kind::Regular, k - p, k, bp, 0});
                continue;
            }
            // The successor psi_{k-p-1}(x_k, x_{B_k(p+1)}) must exist, be regular, and
            // B_k(p), B_k(p+1) must be row neighbours.
            if (p + 1 > b) throw std::logic_error("fusion plan: singular factor has no successor");
            const int bn = bs[static_cast<std::size_t>(p)];
            if (!row_adjacent(c, bp, bn) || same_diagonal(c, k, bn) || k - p - 1 < 1)
                throw std::logic_error("fusion plan: singular factor does not match the grouping pattern");
            plan.theta.push_back({FusionFactor::Kind::Grouped, k - p - 1, k, bp, bn});
            ++p;  // the successor is consumed
        }
    }
    for (int k = n; k >= 2; --k) {
        const auto as = subsequences(c, k).A;
        const int a = static_cast<int>(as.size());
        for (int q = a; q >= 1; --q) {
            const int aq = as[static_cast<std::size_t>(a - q)];
            if (same_diagonal(c, k, aq)) throw std::logic_error("fusion plan: singular factor in theta'");
            plan.theta_prime.push_back({FusionFactor::Kind::Regular, n - k + q, k, aq, 0});
        }
    }
    return plan;
}

FusionEngine::FusionEngine(StrictPartition shape, std::optional<Box> inverted)
    : point_(shape, inverted), plan_(make_fusion_plan(shape)), column_(column_tableau(shape)) {}

AlgebraElement FusionEngine::factor(const FusionFactor& f, const ShiftedTableau& column) const {
    const int n = column.n();
    const TowerScalar xl = point_.value(column, f.left), xr = point_.value(column, f.right);
    if (f.kind == FusionFactor::Kind::Regular) return psi_factor(f.gen, xl, xr, n);
    // eps^{-1} (y - x)/(y + x) psi(x, y) psi_{+1}(z, y) psi(z, x) with x = x_next, y = x_right,
    // z = x_left; its value at z = y (or y^{-1}) is the regular form.
    const TowerScalar x = point_.value(column, f.next), y = xr;
    const TowerScalar scale = (y - x) * ((y + x) * TowerScalar(epsilon())).inverse();
    return theta_regular(f.gen, x, y, xl, n).scaled(scale);
}

AlgebraElement FusionEngine::evaluate(const std::vector<FusionFactor>& fs) const {
    std::vector<AlgebraElement> els;
    els.reserve(fs.size());
    for (const auto& f : fs) els.push_back(factor(f, column_));
    return product(shape().n(), els);
}

const AlgebraElement& FusionEngine::theta_column() {
    if (!theta_) theta_ = evaluate(plan_.theta);
    return *theta_;
}

const AlgebraElement& FusionEngine::theta_prime_column() {
    if (!theta_prime_) theta_prime_ = evaluate(plan_.theta_prime);
    return *theta_prime_;
}

const AlgebraElement& FusionEngine::psi_column() {
    const auto key = column_.row_reading();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    AlgebraElement v = theta_column() * theta_prime_column();
    return memo_.emplace(key, std::move(v)).first->second;
}

const AlgebraElement& FusionEngine::psi(const ShiftedTableau& t) {
    if (t.shape() != shape()) throw std::invalid_argument("FusionEngine::psi: shape mismatch");
    if (!t.is_standard()) throw std::invalid_argument("FusionEngine::psi: tableau is not standard");
    if (t == column_) return psi_column();
    const auto key = t.row_reading();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // psi_k(q_k, q_{k+1}) psi_Lambda = psi_{s_k Lambda} for an up-step, so
    // psi_Lambda = psi_k(q_k, q_{k+1})^{-1} psi_{s_k Lambda}.
    const int n = t.n();
    int k = 1;
    while (k < n && bruhat_step(t, k) != BruhatStep::Up) ++k;
    if (k == n) throw std::logic_error("FusionEngine::psi: no up-step from a non-column tableau");
    const AlgebraElement inv = psi_factor_inverse(k, point_.value(t, k), point_.value(t, k + 1), n);
    AlgebraElement v = inv * psi(t.act_simple(k));
    return memo_.emplace(key, std::move(v)).first->second;
}

AlgebraElement psi_tableau(const ShiftedTableau& t) { return FusionEngine(t.shape()).psi(t); }

AlgebraElement psi_prime_tableau(const ShiftedTableau& t, int k) {
    if (k < 1 || k > t.n()) throw std::invalid_argument("psi_prime_tableau: k out of range");
    return FusionEngine(t.shape(), t.box_of(k)).psi(t);
}

AlgebraElement psi_column(const StrictPartition& shape) { return FusionEngine(shape).psi_column(); }

AlgebraElement theta_column(const StrictPartition& shape) { return FusionEngine(shape).theta_column(); }

AlgebraElement symmetrizer(FusionEngine& engine) {
    const ShiftedTableau r = row_tableau(engine.shape());
    return engine.psi(r) * t_of_perm_inv<TowerScalar>(w_of(r));
}

AlgebraElement symmetrizer(const StrictPartition& shape) {
    FusionEngine e(shape);
    return symmetrizer(e);
}

AlgebraElement psi_tableau_via_prefactor(FusionEngine& engine, const ShiftedTableau& t) {
    if (!t.is_standard()) throw std::invalid_argument("psi_tableau_via_prefactor: tableau is not standard");
    const int n = t.n();
    AlgebraElement acc = engine.psi_column();
    // The prefactor is prod_{k=n..2} prod_{q=a*_k..1} psi_{k-q}(x_{A*_k(a*_k-q+1)}, x_k);
    // peel it off from the left.
    for (int k = n; k >= 2; --k) {
        const auto as = subsequences(t, k).A_star;
        const int a = static_cast<int>(as.size());
        for (int q = a; q >= 1; --q) {
            const int m = as[static_cast<std::size_t>(a - q)];
            acc = psi_factor_inverse(k - q, engine.point().value(t, m), engine.point().value(t, k), n) * acc;
        }
    }
    return acc;
}

}  // namespace hcs
