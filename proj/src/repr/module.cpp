#include "hcs/repr/module.hpp"

#include "hcs/affine/psi.hpp"
#include "hcs/algebra/basis.hpp"
#include "hcs/fusion/divisibility.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace hcs {

namespace {

using Mask = SeminormalModule::Mask;
using Clifford = std::map<Mask, TowerScalar>;

Mask bit(int l) { return Mask(1) << (l - 1); }

void add_to(Clifford& c, Mask m, const TowerScalar& v) {
    auto& x = c[m];
    x += v;
    if (x.is_zero()) c.erase(m);
}

// T_k C_S = A T_k + B with A, B in the Clifford algebra, from T_k C_k = C_{k+1} T_k,
// T_k C_{k+1} = C_k T_k - eps (C_k - C_{k+1}) and T_k C_l = C_l T_k otherwise.
std::pair<Clifford, Clifford> push_through(int k, Mask s, int n) {
    Clifford a{{0, TowerScalar(1)}}, b;
    const TowerScalar eps(epsilon());
    Mask rest = 0;
    for (int l = n; l >= 1; --l) {
        if (!(s & bit(l))) continue;
        const int sl = l == k ? k + 1 : l == k + 1 ? k : l;
        Clifford na, nb;
        for (const auto& [m, v] : a) {
            const auto p = clifford_left(sl, m);
            add_to(na, p.mask, p.sign > 0 ? v : -v);
        }
        for (const auto& [m, v] : b) {
            const auto p = clifford_left(sl, m);
            add_to(nb, p.mask, p.sign > 0 ? v : -v);
        }
        if (l == k + 1) {
            const auto pk = clifford_left(k, rest), pk1 = clifford_left(k + 1, rest);
            add_to(nb, pk.mask, pk.sign > 0 ? -eps : eps);
            add_to(nb, pk1.mask, pk1.sign > 0 ? eps : -eps);
        }
        a = std::move(na);
        b = std::move(nb);
        rest |= bit(l);
    }
    return {std::move(a), std::move(b)};
}

bool commute(const Matrix& x, const Matrix& y) { return x * y == y * x; }
bool anticommute(const Matrix& x, const Matrix& y) { return (x * y + y * x).is_zero(); }

std::string pair_label(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

Matrix from_columns(const std::vector<std::vector<TowerScalar>>& cols, int rows) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < rows; ++i) m(i, static_cast<int>(j)) = cols[j][static_cast<std::size_t>(i)];
    return m;
}

}  // namespace

SeminormalModule::SeminormalModule(StrictPartition shape)
    : shape_(std::move(shape)), tableaux_(enumerate_standard(shape_)) {
    const int n = shape_.n();
    if (n < 1) throw std::invalid_argument("SeminormalModule: empty shape");
    std::map<std::vector<int>, int> pos;
    for (std::size_t i = 0; i < tableaux_.size(); ++i) {
        pos[tableaux_[i].row_reading()] = static_cast<int>(i);
        std::vector<TowerScalar> qs;
        for (int k = 1; k <= n; ++k) qs.push_back(special_value(tableaux_[i].content(k), n));
        q_.push_back(std::move(qs));
    }
    const int d = dim();
    const TowerScalar eps(epsilon());
    for (int l = 1; l <= n; ++l) {
        Matrix c(d, d);
        for (int j = 0; j < d; ++j) {
            const auto p = clifford_left(l, mask_of(j));
            c(index(tableau_of(j), p.mask), j) = TowerScalar(p.sign);
        }
        c_.push_back(std::move(c));
    }
    for (int k = 1; k < n; ++k) {
        // T_k psi = coef psi_{s_k Lambda} - (a + b C_k C_{k+1}) psi.
        struct Action {
            int target = -1;
            TowerScalar coef, a, b;
        };
        std::vector<Action> act(tableaux_.size());
        for (std::size_t t = 0; t < tableaux_.size(); ++t) {
            const TowerScalar& x = q_[t][static_cast<std::size_t>(k - 1)];
            const TowerScalar& y = q_[t][static_cast<std::size_t>(k)];
            Action& ac = act[t];
            ac.a = eps * (x.inverse() * y - TowerScalar(1)).inverse();
            ac.b = eps * (x * y - TowerScalar(1)).inverse();
            switch (bruhat_step(tableaux_[t], k)) {
                case BruhatStep::Up:
                    ac.target = pos.at(tableaux_[t].act_simple(k).row_reading());
                    ac.coef = TowerScalar(1);
                    break;
                case BruhatStep::Down:
                    ac.target = pos.at(tableaux_[t].act_simple(k).row_reading());
                    ac.coef = TowerScalar(1) - eps * eps * psi_bracket(y, x);
                    break;
                default: break;
            }
        }
        const Mask kk = bit(k) | bit(k + 1);
        Matrix m(d, d);
        for (int j = 0; j < d; ++j) {
            const int t = tableau_of(j);
            const Action& ac = act[static_cast<std::size_t>(t)];
            const auto [a, b] = push_through(k, mask_of(j), n);
            for (const auto& [mm, v] : a) {
                if (ac.target >= 0) m(index(ac.target, mm), j) += v * ac.coef;
                m(index(t, mm), j) -= v * ac.a;
                const auto p = clifford_mul(mm, kk);
                m(index(t, p.mask), j) -= p.sign > 0 ? v * ac.b : -(v * ac.b);
            }
            for (const auto& [mm, v] : b) m(index(t, mm), j) += v;
        }
        t_.push_back(std::move(m));
    }
}

const TowerScalar& SeminormalModule::q(int tableau, int k) const {
    return q_[static_cast<std::size_t>(tableau)][static_cast<std::size_t>(k - 1)];
}

Matrix SeminormalModule::J(int k) const {
    if (k < 1 || k > n()) throw std::invalid_argument("SeminormalModule::J: k out of range");
    const TowerScalar eps(epsilon());
    Matrix j = Matrix::identity(dim());
    for (int i = 2; i <= k; ++i) j = (T(i - 1) - (C(i - 1) * C(i)).scaled(eps)) * j * T(i - 1);
    return j;
}

Matrix SeminormalModule::rho(int i) const {
    if (i < 1 || i > shape_.length()) throw std::invalid_argument("SeminormalModule::rho: i out of range");
    const int d = dim();
    Matrix r(d, d);
    for (int j = 0; j < d; ++j) {
        const int t = tableau_of(j);
        const int l = tableaux_[static_cast<std::size_t>(t)].at(i, i);
        const auto p = clifford_right(mask_of(j), l);
        r(index(t, p.mask), j) = TowerScalar(p.sign);
    }
    return r;
}

TowerScalar SeminormalModule::jm_eigenvalue(int idx, int k) const {
    const TowerScalar& x = q(tableau_of(idx), k);
    return (mask_of(idx) & bit(k)) ? x : x.inverse();
}

Checks module_relation_checks(const SeminormalModule& m) {
    const int n = m.n(), d = m.dim();
    const Matrix one = Matrix::identity(d);
    const TowerScalar eps(epsilon());
    Checks out;
    for (int k = 1; k < n; ++k) {
        const Matrix& t = m.T(k);
        out.push_back(check("module-quadratic", t * t == t.scaled(eps) + one, "k=" + std::to_string(k)));
        out.push_back(check("module-T-C", t * m.C(k) == m.C(k + 1) * t, "k=" + std::to_string(k)));
        out.push_back(check("module-T-C-next",
                            t * m.C(k + 1) == m.C(k) * t - (m.C(k) - m.C(k + 1)).scaled(eps),
                            "k=" + std::to_string(k)));
        for (int l = 1; l <= n; ++l)
            if (l != k && l != k + 1)
                out.push_back(check("module-T-C-far", commute(t, m.C(l)), pair_label(k, l)));
        for (int l = k + 1; l < n; ++l) {
            const Matrix& u = m.T(l);
            const bool ok = l == k + 1 ? t * u * t == u * t * u : commute(t, u);
            out.push_back(check(l == k + 1 ? "module-braid" : "module-T-far", ok, pair_label(k, l)));
        }
    }
    for (int k = 1; k <= n; ++k) {
        out.push_back(check("module-C-square", m.C(k) * m.C(k) == -one, "k=" + std::to_string(k)));
        for (int l = k + 1; l <= n; ++l)
            out.push_back(check("module-C-anticommute", anticommute(m.C(k), m.C(l)), pair_label(k, l)));
    }
    return out;
}

Checks jm_eigencheck(const SeminormalModule& m) {
    Checks out;
    out.push_back(check("jm-first", m.J(1) == Matrix::identity(m.dim())));
    for (int k = 1; k <= m.n(); ++k) {
        const Matrix j = m.J(k);
        bool ok = j.is_diagonal();
        for (int i = 0; ok && i < m.dim(); ++i) ok = j(i, i) == m.jm_eigenvalue(i, k);
        out.push_back(check("jm-eigenvalues", ok, "k=" + std::to_string(k)));
    }
    return out;
}

Checks commutant_check(const SeminormalModule& m) {
    Checks out;
    const int l = m.shape().length();
    const Matrix one = Matrix::identity(m.dim());
    std::vector<Matrix> rho;
    for (int i = 1; i <= l; ++i) rho.push_back(m.rho(i));
    for (int i = 1; i <= l; ++i) {
        const Matrix& r = rho[static_cast<std::size_t>(i - 1)];
        bool ok = r * r == -one;
        for (int k = 1; ok && k < m.n(); ++k) ok = commute(r, m.T(k));
        for (int k = 1; ok && k <= m.n(); ++k) ok = commute(r, m.C(k));
        out.push_back(check("rho-commutes", ok, "i=" + std::to_string(i)));
        for (int j = i + 1; j <= l; ++j)
            out.push_back(check("rho-anticommute", anticommute(r, rho[static_cast<std::size_t>(j - 1)]),
                                pair_label(i, j)));
    }
    return out;
}

Checks ideal_model_check(const SeminormalModule& m, FusionEngine& engine) {
    if (engine.shape() != m.shape()) throw std::invalid_argument("ideal_model_check: shape mismatch");
    const int d = m.dim(), n = m.n();
    std::vector<AlgebraElement> basis;
    basis.reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
        basis.push_back(engine.psi(m.tableaux()[static_cast<std::size_t>(m.tableau_of(j))]).left_clifford(m.mask_of(j)));
    auto image = [&](const Matrix& x, int j) {
        AlgebraElement r = AlgebraElement::zero(n);
        for (int i = 0; i < d; ++i)
            if (!x(i, j).is_zero()) r += basis[static_cast<std::size_t>(i)].scaled(x(i, j));
        return r;
    };
    Checks out;
    for (int k = 1; k < n; ++k) {
        bool ok = true;
        for (int j = 0; ok && j < d; ++j) ok = basis[static_cast<std::size_t>(j)].left_T(k) == image(m.T(k), j);
        out.push_back(check("ideal-model-T", ok, "k=" + std::to_string(k)));
    }
    for (int l = 1; l <= n; ++l) {
        bool ok = true;
        for (int j = 0; ok && j < d; ++j) ok = basis[static_cast<std::size_t>(j)].left_C(l) == image(m.C(l), j);
        out.push_back(check("ideal-model-C", ok, "l=" + std::to_string(l)));
    }
    return out;
}

Matrix gamma_projector(const SeminormalModule& m, const std::vector<int>& signs) {
    const int half = m.shape().length() / 2;
    if (static_cast<int>(signs.size()) != half) throw std::invalid_argument("gamma_projector: wrong number of signs");
    const TowerScalar i_unit(GaussianRational(0, 1));
    const Matrix one = Matrix::identity(m.dim());
    Matrix p = one;
    for (int j = 1; j <= half; ++j) {
        const TowerScalar c = signs[static_cast<std::size_t>(j - 1)] > 0 ? i_unit : -i_unit;
        p = p * (one + (m.rho(2 * j - 1) * m.rho(2 * j)).scaled(c));
    }
    return p.scaled(TowerScalar(RationalFunction(GaussianRational(mpq_class(1, 1 << half)))));
}

USubmodule build_U(const SeminormalModule& m, const std::vector<int>& signs) {
    USubmodule u;
    u.signs = signs;
    u.projector = gamma_projector(m, signs);
    const int d = m.dim();
    const Matrix& p = u.projector;

    // Joint J-eigenspaces: the tableau and the part of S off the leading diagonal.
    std::map<std::pair<int, Mask>, std::vector<int>> groups;
    for (int j = 0; j < d; ++j) {
        Mask diag = 0;
        for (int e : m.tableaux()[static_cast<std::size_t>(m.tableau_of(j))].diagonal()) diag |= bit(e);
        groups[{m.tableau_of(j), m.mask_of(j) & ~diag}].push_back(j);
    }
    std::vector<std::vector<TowerScalar>> cols;
    for (const auto& [key, idx] : groups) {
        RowEchelon e(static_cast<int>(idx.size()));
        std::vector<int> block;
        for (int j : idx) {
            std::vector<TowerScalar> v(idx.size());
            for (std::size_t r = 0; r < idx.size(); ++r) v[r] = p(idx[r], j);
            if (!e.add(std::move(v))) continue;
            block.push_back(static_cast<int>(cols.size()));
            cols.push_back(p.column(j));
            u.parity.push_back(std::popcount(m.mask_of(j)) & 1);
        }
        if (!block.empty()) u.blocks.push_back(std::move(block));
    }
    const int du = static_cast<int>(cols.size());
    const Matrix b = from_columns(cols, d);

    // Coordinates through an invertible row selection of the basis matrix.
    RowEchelon rows(du);
    std::vector<int> sel;
    for (int i = 0; i < d && static_cast<int>(sel.size()) < du; ++i) {
        std::vector<TowerScalar> r(static_cast<std::size_t>(du));
        for (int j = 0; j < du; ++j) r[static_cast<std::size_t>(j)] = b(i, j);
        if (rows.add(std::move(r))) sel.push_back(i);
    }
    Matrix bs(du, du);
    for (int i = 0; i < du; ++i)
        for (int j = 0; j < du; ++j) bs(i, j) = b(sel[static_cast<std::size_t>(i)], j);
    const Matrix bi = inverse(bs);
    auto restrict = [&](const Matrix& x) {
        const Matrix img = x * b;
        Matrix s(du, du);
        for (int i = 0; i < du; ++i) {
            for (int j = 0; j < du; ++j) {
                TowerScalar acc;
                for (int r = 0; r < du; ++r)
                    if (!bi(i, r).is_zero()) acc += bi(i, r) * img(sel[static_cast<std::size_t>(r)], j);
                s(i, j) = acc;
            }
        }
        if (!(b * s == img)) throw std::logic_error("build_U: the image is not a submodule");
        return s;
    };
    for (int k = 1; k < m.n(); ++k) u.T.push_back(restrict(m.T(k)));
    for (int l = 1; l <= m.n(); ++l) u.C.push_back(restrict(m.C(l)));
    return u;
}

CommutantDimension commutant_dimension(const USubmodule& u) {
    CommutantDimension out;
    const int du = u.dim();
    for (int parity = 0; parity < 2; ++parity) {
        // Unknowns Z(r, c) within a block with the requested degree.
        std::map<std::pair<int, int>, int> var;
        for (const auto& block : u.blocks)
            for (int r : block)
                for (int c : block)
                    if ((u.parity[static_cast<std::size_t>(r)] ^ u.parity[static_cast<std::size_t>(c)]) == parity)
                        var.emplace(std::pair{r, c}, static_cast<int>(var.size()));
        const int nv = static_cast<int>(var.size());
        RowEchelon e(nv);
        auto impose = [&](const Matrix& x, int sign) {
            // (Z X - sign X Z)(i, j) = sum_m Z(i,m) X(m,j) - sign sum_m X(i,m) Z(m,j).
            std::map<std::pair<int, int>, std::vector<TowerScalar>> eqs;
            auto row = [&](int i, int j) -> std::vector<TowerScalar>& {
                auto it = eqs.find({i, j});
                if (it == eqs.end()) it = eqs.emplace(std::pair{i, j}, std::vector<TowerScalar>(static_cast<std::size_t>(nv))).first;
                return it->second;
            };
            for (const auto& [rc, v] : var) {
                const auto [r, c] = rc;
                for (int j = 0; j < du; ++j)
                    if (!x(c, j).is_zero()) row(r, j)[static_cast<std::size_t>(v)] += x(c, j);
                for (int i = 0; i < du; ++i)
                    if (!x(i, r).is_zero())
                        row(i, c)[static_cast<std::size_t>(v)] -= sign > 0 ? x(i, r) : -x(i, r);
            }
            for (auto& [ij, coeffs] : eqs) e.add(std::move(coeffs));
        };
        for (const auto& t : u.T) impose(t, 1);
        for (const auto& c : u.C) impose(c, parity ? -1 : 1);
        (parity ? out.odd : out.even) = nv - e.rank();
    }
    return out;
}

Checks splitting_checks(const SeminormalModule& m) {
    const auto signs = gamma_signs(m.shape());
    std::vector<Matrix> ps;
    for (const auto& s : signs) ps.push_back(gamma_projector(m, s));
    const int d = m.dim();
    const int expected = d >> (m.shape().length() / 2);
    Checks out;
    Matrix sum(d, d);
    for (std::size_t a = 0; a < ps.size(); ++a) {
        const std::string tag = "sign vector " + std::to_string(a);
        out.push_back(check("projector-idempotent", ps[a] * ps[a] == ps[a], tag));
        out.push_back(check("projector-rank", rank(ps[a]) == expected, tag));
        for (std::size_t b = a + 1; b < ps.size(); ++b)
            out.push_back(check("projector-orthogonal", (ps[a] * ps[b]).is_zero(), pair_label(static_cast<int>(a), static_cast<int>(b))));
        sum = sum + ps[a];
    }
    out.push_back(check("projector-sum", sum == Matrix::identity(d)));
    return out;
}

std::vector<CentralCharacterRow> central_character_table(int n) {
    std::vector<CentralCharacterRow> rows;
    for (const auto& shape : enumerate_strict_partitions(n)) {
        const ShiftedTableau t = row_tableau(shape);
        std::vector<TowerScalar> e(static_cast<std::size_t>(n + 1));
        e[0] = TowerScalar(1);
        for (int k = 1; k <= n; ++k) {
            const int c = t.content(k);
            const TowerScalar y = special_value(c, n) + special_value_conjugate(c, n);
            for (int i = k; i >= 1; --i) e[static_cast<std::size_t>(i)] += y * e[static_cast<std::size_t>(i - 1)];
        }
        rows.push_back({shape, std::vector<TowerScalar>(e.begin() + 1, e.end())});
    }
    return rows;
}

Checks central_character_checks(int n) {
    const auto rows = central_character_table(n);
    Checks out;
    out.push_back(check("central-character-count", rows.size() == enumerate_strict_partitions(n).size()));
    bool rational = true;
    for (const auto& r : rows)
        for (const auto& v : r.values) rational = rational && v.in_Qq();
    out.push_back(check("central-character-rational", rational));
    bool distinct = true;
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = a + 1; b < rows.size(); ++b)
            if (rows[a].values == rows[b].values) {
                distinct = false;
                out.push_back(check("central-character-distinct", false, rows[a].shape.to_string() + " " + rows[b].shape.to_string()));
            }
    if (distinct) out.push_back(check("central-character-distinct", true));
    return out;
}

Checks central_character_module_checks(const SeminormalModule& m, const CentralCharacterRow& row) {
    const int n = m.n(), d = m.dim();
    const Matrix one = Matrix::identity(d);
    Checks out;
    std::vector<Matrix> e(static_cast<std::size_t>(n + 1), Matrix(d, d));
    e[0] = one;
    for (int k = 1; k <= n; ++k) {
        const Matrix j = m.J(k);
        // J_k^{-1} = C_k J_k C_k^{-1}.
        const Matrix ji = -(m.C(k) * j * m.C(k));
        out.push_back(check("jm-inverse", j * ji == one, "k=" + std::to_string(k)));
        const Matrix y = j + ji;
        for (int i = k; i >= 1; --i) e[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)] + y * e[static_cast<std::size_t>(i - 1)];
    }
    for (int i = 1; i <= n; ++i)
        out.push_back(check("central-character-module", e[static_cast<std::size_t>(i)] == one.scaled(row.values[static_cast<std::size_t>(i - 1)]),
                            "e" + std::to_string(i)));
    return out;
}

int supercentre_dimension(int n) {
    const auto& bs = HeckeCliffordBasis::get(n);
    const int dim = static_cast<int>(bs.dimension());
    std::vector<AlgebraElement> gens;
    std::vector<int> gen_parity;
    for (int k = 1; k < n; ++k) {
        gens.push_back(AlgebraElement::T(k, n));
        gen_parity.push_back(0);
    }
    for (int l = 1; l <= n; ++l) {
        gens.push_back(AlgebraElement::C(l, n));
        gen_parity.push_back(1);
    }
    const int width = dim * static_cast<int>(gens.size());
    int total = 0;
    for (int parity = 0; parity < 2; ++parity) {
        RowEchelon e(width);
        int unknowns = 0;
        for (int key = 0; key < dim; ++key) {
            const auto mask = bs.mask_of(static_cast<HeckeCliffordBasis::Key>(key));
            if ((std::popcount(mask) & 1) != parity) continue;
            ++unknowns;
            const AlgebraElement z = AlgebraElement::basis_element(n, bs.perm(bs.perm_of(static_cast<HeckeCliffordBasis::Key>(key))), mask);
            std::vector<TowerScalar> row(static_cast<std::size_t>(width));
            for (std::size_t g = 0; g < gens.size(); ++g) {
                const bool anti = parity && gen_parity[g];
                const AlgebraElement c = anti ? z * gens[g] + gens[g] * z : z * gens[g] - gens[g] * z;
                for (const auto& [k, v] : c.terms()) row[g * static_cast<std::size_t>(dim) + k] = v;
            }
            e.add(std::move(row));
        }
        total += unknowns - e.rank();
    }
    return total;
}

DimensionIdentity dimension_identity(int n) {
    DimensionIdentity out;
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    out.rhs_times_two = 2 * (1LL << n) * fact;
    for (const auto& shape : enumerate_strict_partitions(n)) {
        const long long mult = static_cast<long long>(enumerate_standard(shape).size());
        const long long du = ((1LL << n) * mult) >> (shape.length() / 2);
        out.lhs_times_two += (du * du) << (1 - shape.d());
    }
    return out;
}

}  // namespace hcs
