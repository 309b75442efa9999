#include "hcs/verify/suites.hpp"

#include "hcs/affine/principal_series.hpp"
#include "hcs/affine/psi.hpp"
#include "hcs/algebra/generators.hpp"
#include "hcs/fusion/divisibility.hpp"
#include "hcs/fusion/fusion.hpp"
#include "hcs/numeric/extrapolate.hpp"
#include "hcs/repr/module.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <iomanip>
#include <random>
#include <sstream>

namespace hcs {

namespace {

using E = AlgebraElement;
using NE = NumericElement;
using cd = std::complex<double>;
using Clock = std::chrono::steady_clock;

struct Ctx {
    int n;
    const SuiteOptions& opts;
    Report& report;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void append(Checks& out, Checks more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

std::string k_label(int k) { return "k=" + std::to_string(k); }

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(3) << std::scientific << v;
    return os.str();
}

// Runs fn over the strict partitions of n, in parallel, and merges the results in shape order.
void over_shapes(Ctx& c, const std::function<Checks(const StrictPartition&)>& fn) {
    const auto shapes = enumerate_strict_partitions(c.n);
    struct Out {
        Checks checks;
        double secs = 0;
    };
    auto task = [&fn](const StrictPartition& s) {
        const auto t0 = Clock::now();
        Out o{fn(s)};
        o.secs = seconds_since(t0);
        return o;
    };
    std::vector<Out> outs(shapes.size());
    const std::size_t width = c.opts.threads > 0 ? static_cast<std::size_t>(c.opts.threads) : shapes.size();
    for (std::size_t start = 0; start < shapes.size(); start += width) {
        const std::size_t end = std::min(shapes.size(), start + width);
        std::vector<std::future<Out>> fs;
        for (std::size_t i = start; i < end; ++i) fs.push_back(std::async(std::launch::async, task, std::cref(shapes[i])));
        for (std::size_t i = start; i < end; ++i) outs[i] = fs[i - start].get();
    }
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        append(c.report.checks, std::move(outs[i].checks));
        c.report.timings.emplace_back(shapes[i].to_string(), outs[i].secs);
    }
}

// Aggregates a per-sample predicate into one check.
struct Tally {
    explicit Tally(std::string l) : label(std::move(l)) {}
    std::string label;
    int total = 0, failed = 0;
    std::string first_failure;
    void add(bool ok, const std::string& where) {
        ++total;
        if (!ok && failed++ == 0) first_failure = where;
    }
    Check result() const {
        std::string d = std::to_string(total - failed) + "/" + std::to_string(total) + " samples";
        if (failed) d += ", first failure at " + first_failure;
        return check(label, failed == 0 && total > 0, d);
    }
};

// ---------------------------------------------------------------------------------------------

void suite_relations(Ctx& c) {
    const int n = c.n;
    const E one = E::one(n), eps = E::scalar(n, TowerScalar(epsilon()));
    const E q = E::scalar(n, TowerScalar(RationalFunction::q_power(1)));
    const E qi = E::scalar(n, TowerScalar(RationalFunction::q_power(-1)));
    Checks& out = c.report.checks;
    for (int k = 1; k < n; ++k) {
        const E t = E::T(k, n), ck = E::C(k, n), ck1 = E::C(k + 1, n);
        out.push_back(check("relation-quadratic", ((t - q) * (t + qi)).is_zero(), k_label(k)));
        out.push_back(check("relation-T-C", t * ck == ck1 * t, k_label(k)));
        out.push_back(check("relation-T-C-next", t * ck1 == ck * t - eps * (ck - ck1), k_label(k)));
        out.push_back(check("relation-T-inverse", t_inv<TowerScalar>(k, n) * t == one, k_label(k)));
        for (int l = k + 1; l < n; ++l) {
            const E u = E::T(l, n);
            if (l == k + 1)
                out.push_back(check("relation-braid", t * u * t == u * t * u, k_label(k)));
            else
                out.push_back(check("relation-T-far", t * u == u * t, k_label(k) + " l=" + std::to_string(l)));
        }
        for (int l = 1; l <= n; ++l)
            if (l != k && l != k + 1)
                out.push_back(check("relation-T-C-far", t * E::C(l, n) == E::C(l, n) * t, k_label(k) + " l=" + std::to_string(l)));
    }
    for (int k = 1; k <= n; ++k) {
        out.push_back(check("relation-C-square", E::C(k, n) * E::C(k, n) == -one, k_label(k)));
        for (int l = k + 1; l <= n; ++l)
            out.push_back(check("relation-C-anticommute", E::C(k, n) * E::C(l, n) == -(E::C(l, n) * E::C(k, n)),
                                k_label(k) + " l=" + std::to_string(l)));
    }
}

void suite_murphy(Ctx& c) {
    const int n = c.n;
    const E one = E::one(n), e = E::scalar(n, TowerScalar(epsilon()));
    std::vector<E> j(static_cast<std::size_t>(n + 1)), ji(static_cast<std::size_t>(n + 1));
    for (int k = 1; k <= n; ++k) {
        j[static_cast<std::size_t>(k)] = jucys_murphy<TowerScalar>(k, n);
        ji[static_cast<std::size_t>(k)] = jm_inverse<TowerScalar>(k, n);
    }
    auto J = [&](int k) -> const E& { return j[static_cast<std::size_t>(k)]; };
    Checks& out = c.report.checks;
    for (int k = 1; k <= n; ++k) {
        out.push_back(check("murphy-inverse", J(k) * ji[static_cast<std::size_t>(k)] == one, k_label(k)));
        out.push_back(check("murphy-even", J(k).is_even(), k_label(k)));
        for (int l = k + 1; l <= n; ++l)
            out.push_back(check("murphy-commute", J(k) * J(l) == J(l) * J(k), k_label(k) + " l=" + std::to_string(l)));
        for (int l = 1; l <= n; ++l) {
            const E cl = E::C(l, n);
            const bool ok = l == k ? cl * J(k) == ji[static_cast<std::size_t>(k)] * cl : cl * J(k) == J(k) * cl;
            out.push_back(check("murphy-C-J", ok, k_label(k) + " l=" + std::to_string(l)));
        }
    }
    for (int k = 1; k < n; ++k) {
        const E t = E::T(k, n), cc = E::C(k, n) * E::C(k + 1, n);
        out.push_back(check("murphy-T-J", t * J(k) == J(k + 1) * t - e * (J(k + 1) - cc * J(k)), k_label(k)));
        out.push_back(check("murphy-T-J-next", t * J(k + 1) == J(k) * t + e * (one + cc) * J(k + 1), k_label(k)));
        for (int l = 1; l <= n; ++l)
            if (l != k && l != k + 1)
                out.push_back(check("murphy-T-J-far", t * J(l) == J(l) * t, k_label(k) + " l=" + std::to_string(l)));
    }
}

// Nonzero exact points c q^e with c from a small pool of rationals.
struct PointSampler {
    std::mt19937_64 rng;
    explicit PointSampler(std::uint64_t seed) : rng(seed) {}
    TowerScalar next() {
        static const std::vector<std::pair<long, long>> pool = {{2, 1}, {3, 1}, {5, 1}, {-7, 1}, {3, 2}, {-5, 3}, {11, 4}, {13, 1}, {-2, 5}, {7, 3}};
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        std::uniform_int_distribution<int> e(-2, 2);
        const auto& [num, den] = pool[pick(rng)];
        return TowerScalar(GaussianRational(mpq_class(num, den))) * TowerScalar(RationalFunction::q_power(e(rng)));
    }
    static bool regular(const TowerScalar& x, const TowerScalar& y) {
        const TowerScalar one(1);
        return !(x.inverse() * y == one) && !(x * y == one) && !(x == y);
    }
};

void suite_psi_lemma(Ctx& c) {
    const int n = std::max(c.n, 3);
    const TowerScalar e(epsilon()), one(1);
    PointSampler ps(c.opts.seed);
    Tally inv_prod{"psi-inverse-product"}, far{"psi-far-commute"}, yb{"psi-yang-baxter"}, sq{"psi-square"},
        tw_a{"psi-clifford-twist-left"}, tw_b{"psi-clifford-twist-right"}, minus{"psi-minus"},
        inv_a{"psi-inverse-left"}, inv_b{"psi-inverse-right"};
    const int points = 20;
    for (int p = 0; p < points;) {
        const TowerScalar x = ps.next(), y = ps.next(), z = ps.next(), w = ps.next();
        if (!PointSampler::regular(x, y) || !PointSampler::regular(z, y) || !PointSampler::regular(z, x) ||
            !PointSampler::regular(z, w) || idempotency_holds(x, y))
            continue;
        ++p;
        const std::string where = "point " + std::to_string(p);
        const int k = 1 + p % (n - 2);
        const E pxy = psi_factor(k, x, y, n), pyx = psi_factor(k, y, x, n);
        const TowerScalar br = psi_bracket(x, y);
        const TowerScalar ratio = (x + y) * (x - y).inverse();
        inv_prod.add(pyx * pxy == E::scalar(n, one - e * e * br), where);
        if (n >= 4) {
            const E a = psi_factor(1, x, y, n), b = psi_factor(3, z, w, n);
            far.add(a * b == b * a, where);
        }
        yb.add(pxy * psi_factor(k + 1, z, y, n) * psi_factor(k, z, x, n) ==
                   psi_factor(k + 1, z, x, n) * psi_factor(k, z, y, n) * psi_factor(k + 1, x, y, n),
               where);
        sq.add(pxy * pxy == pxy.scaled(-e * ratio) + E::scalar(n, one - e * e * br), where);
        tw_a.add(E::C(k, n) * pxy == psi_factor(k, x, y.inverse(), n) * E::C(k + 1, n), where);
        tw_b.add(E::C(k + 1, n) * pxy == psi_factor(k, x.inverse(), y, n) * E::C(k, n), where);
        minus.add(pyx == pxy + E::scalar(n, e * ratio), where);
        const E pinv = psi_factor_inverse(k, x, y, n);
        inv_a.add(pinv * pxy == E::one(n), where);
        inv_b.add(pxy * pinv == E::one(n), where);
    }
    Checks& out = c.report.checks;
    for (const Tally* t : {&inv_prod, &yb, &sq, &tw_a, &tw_b, &minus, &inv_a, &inv_b}) out.push_back(t->result());
    if (n >= 4) out.push_back(far.result());

    // Pairs on the idempotency curve: consecutive special values and their transforms.
    std::vector<std::pair<TowerScalar, TowerScalar>> curve;
    for (int a = 0; a <= 1; ++a) {
        const TowerScalar x = special_value(a, 3), y = special_value(a + 1, 3);
        curve.insert(curve.end(), {{x, y}, {y, x}, {x.inverse(), y}, {x, y.inverse()}});
    }
    Tally reg{"theta-regular-form"}, res{"theta-result"}, ann{"psi-idempotent-annihilation"};
    int idx = 0;
    for (const auto& [x, y] : curve) {
        const std::string where = "curve point " + std::to_string(++idx);
        TowerScalar z = ps.next();
        while (!PointSampler::regular(z, y) || !PointSampler::regular(z, x)) z = ps.next();
        const E pxy = psi_factor(1, x, y, n);
        reg.add(theta_regular(1, x, y, z, n) == pxy * psi_factor(2, z, y, n) * psi_factor(1, z, x, n), where);
        res.add(theta_factor(1, x, y, n) * pxy == pxy.scaled(-d_scalar(x, y)), where);
        ann.add((psi_factor(1, y, x, n) * pxy).is_zero(), where);
    }
    out.push_back(reg.result());
    out.push_back(res.result());
    out.push_back(ann.result());

    Tally zero{"theta-zero"};
    for (const auto& x : {special_value(1, 2), special_value(1, 2).inverse()})
        zero.add(d_scalar(x, one).is_zero() && (theta_factor(1, x, one, n) * psi_factor(1, x, one, n)).is_zero(),
                 x.to_string());
    out.push_back(zero.result());

    // theta as the limit z -> y of the raw triple product, numerically.
    const NumericConfig& cfg = c.opts.numeric;
    const double q = cfg.q;
    const auto dom = cfg.domain();
    auto from_u = [q](cd u) {
        const cd h = (q * u * u + 1.0 / (q * u * u)) / (q + 1.0 / q);
        return h - std::sqrt(h * h - 1.0);
    };
    double worst = 0;
    const std::vector<double> ts = {1e-2, 5e-3, 2.5e-3, 1.25e-3, 6.25e-4};
    for (double u : {0.7, 1.3, 2.1}) {
        const cd x = from_u(u), y = from_u(q * u);
        std::vector<NE> vals;
        for (double t : ts) {
            const cd z = y * (1.0 + t);
            vals.push_back(psi_factor<cd>(1, x, y, n, dom) * psi_factor<cd>(2, z, y, n, dom) * psi_factor<cd>(1, z, x, n, dom));
        }
        const NE lim = neville_at_zero(ts, vals, [](const NE& a, double s) { return a.scaled(cd(s)); });
        worst = std::max(worst, max_abs_diff(lim, theta_factor<cd>(1, x, y, n, dom)));
    }
    out.push_back(check("singular-limit", worst < cfg.tolerance, "max deviation " + fmt(worst)));
}

void suite_fusion(Ctx& c) {
    const NumericConfig cfg = c.opts.numeric;
    over_shapes(c, [&cfg](const StrictPartition& shape) {
        Checks out;
        FusionEngine engine(shape);
        for (const auto& t : enumerate_standard(shape)) {
            const std::string where = shape.to_string() + " " + t.key();
            const E& psi = engine.psi(t);
            const Permutation w = w_of(t);
            out.push_back(check("fusion-leading-coefficient", psi.coeff(w, 0).is_one(), where));
            out.push_back(check("fusion-leading-length", psi.max_length() == w.length(), where));
            out.push_back(check("fusion-prefactor-route", psi_tableau_via_prefactor(engine, t) == psi, where));
            try {
                const double err = max_abs_diff(fusion_limit(t, cfg), to_numeric(psi, cfg));
                out.push_back(check("fusion-numeric-limit", err < cfg.tolerance, where + " deviation " + fmt(err)));
            } catch (const std::exception& ex) {
                out.push_back(check("fusion-numeric-limit", false, where + ": " + ex.what()));
            }
        }
        return out;
    });
}

void suite_divisibility(Ctx& c) {
    over_shapes(c, [](const StrictPartition& shape) {
        FusionEngine engine(shape);
        return divisibility_suite(engine);
    });
}

void suite_module(Ctx& c) {
    const int n = c.n;
    over_shapes(c, [n](const StrictPartition& shape) {
        Checks out;
        const SeminormalModule m(shape);
        const std::string tag = shape.to_string();
        auto tagged = [&tag](Checks cs) {
            for (auto& x : cs) x.detail = x.detail.empty() ? tag : tag + " " + x.detail;
            return cs;
        };
        const long mult = static_cast<long>(enumerate_standard(shape).size());
        out.push_back(check("module-dimension", m.dim() == (1L << n) * mult, tag + " dim " + std::to_string(m.dim())));
        append(out, tagged(module_relation_checks(m)));
        append(out, tagged(jm_eigencheck(m)));
        append(out, tagged(commutant_check(m)));
        if (n <= 3) {
            FusionEngine engine(shape);
            append(out, tagged(ideal_model_check(m, engine)));
        }
        append(out, tagged(splitting_checks(m)));
        const int expected = shape.length() % 2 ? 2 : 1;
        for (const auto& signs : gamma_signs(shape)) {
            const USubmodule u = build_U(m, signs);
            out.push_back(check("U-dimension", u.dim() == (m.dim() >> (shape.length() / 2)), tag + " dim " + std::to_string(u.dim())));
            const CommutantDimension cd = commutant_dimension(u);
            out.push_back(check("commutant-dimension", cd.even == 1 && cd.total() == expected,
                                tag + " even " + std::to_string(cd.even) + " odd " + std::to_string(cd.odd) +
                                    " expected total " + std::to_string(expected)));
        }
        for (const auto& row : central_character_table(n))
            if (row.shape == shape) append(out, tagged(central_character_module_checks(m, row)));
        return out;
    });
}

void suite_center(Ctx& c) {
    const int n = c.n;
    Checks& out = c.report.checks;
    append(out, central_character_checks(n));
    const int shapes = static_cast<int>(enumerate_strict_partitions(n).size());
    if (n <= 3) {
        const int z = supercentre_dimension(n);
        out.push_back(check("supercentre-dimension", z == shapes,
                            std::to_string(z) + " vs " + std::to_string(shapes) + " strict partitions"));
    }
    if (n <= 4) {
        const auto es = jm_elementary_symmetric<TowerScalar>(n);
        for (std::size_t i = 1; i < es.size(); ++i)
            out.push_back(check("jm-symmetric-central", is_supercentral(es[i]), "e" + std::to_string(i)));
    }
}

void suite_dims(Ctx& c) {
    const DimensionIdentity d = dimension_identity(c.n);
    c.report.checks.push_back(check("dimension-identity", d.holds(),
                                    "2*lhs " + std::to_string(d.lhs_times_two) + " 2*rhs " + std::to_string(d.rhs_times_two)));
}

void suite_numeric(Ctx& c) {
    const int n = c.n;
    const NumericConfig& cfg = c.opts.numeric;
    PointSampler ps(c.opts.seed);
    std::mt19937_64 rng(c.opts.seed ^ 0x9e3779b97f4a7c15ull);
    Checks& out = c.report.checks;

    // Random tower elements mixing square-root generators.
    const int level = std::max(n, 2);
    auto random_tower = [&]() {
        std::uniform_int_distribution<int> m(0, level);
        return ps.next() + ps.next() * sqrt_gen(std::max(2, m(rng)), level);
    };
    Tally hom{"numeric-homomorphism"};
    for (int i = 0; i < 20; ++i) {
        const TowerScalar a = random_tower(), b = random_tower();
        const cd na = numeric_eval(a, cfg), nb = numeric_eval(b, cfg);
        const double scale = std::max(1.0, std::abs(na * nb));
        bool ok = std::abs(numeric_eval(a * b, cfg) - na * nb) < 1e-12 * scale &&
                  std::abs(numeric_eval(a + b, cfg) - (na + nb)) < 1e-12 * std::max(1.0, std::abs(na) + std::abs(nb));
        if (!a.is_zero()) ok = ok && std::abs(numeric_eval(a.inverse(), cfg) - 1.0 / na) < 1e-12 * std::max(1.0, std::abs(1.0 / na));
        hom.add(ok, "sample " + std::to_string(i));
    }
    out.push_back(hom.result());
    out.push_back(check("numeric-special-value", std::abs(numeric_eval(special_value(0, level), cfg) - 1.0) < 1e-14));

    if (n >= 2) {
        Tally el{"numeric-psi-image"};
        for (int i = 0; i < 10;) {
            const TowerScalar x = ps.next(), y = ps.next();
            if (!PointSampler::regular(x, y)) continue;
            ++i;
            const NE exact = to_numeric(psi_factor(1, x, y, n), cfg);
            const NE direct = psi_factor<cd>(1, numeric_eval(x, cfg), numeric_eval(y, cfg), n, cfg.domain());
            el.add(max_abs_diff(exact, direct) < 1e-9, "sample " + std::to_string(i));
        }
        out.push_back(el.result());
    }
    if (n >= 2 && n <= 4) {
        std::uniform_real_distribution<double> ud(0.3, 3.0);
        Tally inter{"numeric-intertwiner"};
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<cd> vals;
            for (int i = 0; i < n; ++i) vals.emplace_back(ud(rng), ud(rng));
            const Character<cd> chi(vals, cfg.domain());
            if (!chi.is_generic()) continue;
            inter.add(intertwiner_check(Permutation::longest(n), chi), "trial " + std::to_string(trial));
        }
        out.push_back(inter.result());
    }
}

void suite_conjecture(Ctx& c) {
    over_shapes(c, [](const StrictPartition& shape) {
        FusionEngine engine(shape);
        const E s = symmetrizer(engine);
        const E s2 = s * s;
        std::string detail = shape.to_string() + ": ";
        if (s.is_zero()) return Checks{{"symmetrizer-square", Status::Info, detail + "symmetrizer is zero"}};
        const auto& [key, v] = s.terms().front();
        const TowerScalar ratio = s2.coeff(key) / v;
        if (s2 == s.scaled(ratio))
            detail += "proportional, scalar " + ratio.to_string();
        else
            detail += "not proportional";
        return Checks{{"symmetrizer-square", Status::Info, detail}};
    });
}

void suite_degeneration(Ctx& c) {
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}}) {
        const DegenerationResult r = degeneration_check(a, b, c.opts.numeric);
        std::ostringstream d;
        d << "contents (" << a << "," << b << ") scalar " << r.scalar.real() << " expected " << r.expected_scalar
          << ", clifford " << r.clifford.real() << " expected " << r.expected_clifford << ", error " << fmt(r.error);
        c.report.checks.push_back(check("degeneration", r.ok, d.str()));
    }
}

using SuiteFn = void (*)(Ctx&);

struct SuiteEntry {
    const char* name;
    SuiteFn fn;
    bool heavy;
};

const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> r = {
        {"relations", suite_relations, true},       {"murphy", suite_murphy, true},
        {"psi-lemma", suite_psi_lemma, true},       {"fusion", suite_fusion, true},
        {"divisibility", suite_divisibility, true}, {"module", suite_module, true},
        {"center", suite_center, false},            {"dims", suite_dims, false},
        {"numeric", suite_numeric, true},           {"conjecture", suite_conjecture, true},
        {"degeneration", suite_degeneration, false},
    };
    return r;
}

const SuiteEntry* find(const std::string& name) {
    for (const auto& e : registry())
        if (name == e.name) return &e;
    return nullptr;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : registry()) v.emplace_back(e.name);
        return v;
    }();
    return names;
}

bool is_suite(const std::string& name) { return find(name) != nullptr; }

bool suite_is_heavy(const std::string& name) {
    const SuiteEntry* e = find(name);
    return e && e->heavy;
}

Report run_suite(const std::string& name, int n, const SuiteOptions& opts) {
    const SuiteEntry* e = find(name);
    if (!e) throw std::invalid_argument("unknown suite: " + name);
    if (n < 1 || n > HeckeCliffordBasis::kMaxN) throw std::invalid_argument("n out of range: " + std::to_string(n));
    if (e->heavy && n > kDeskBound && !opts.force)
        throw DeskScaleError("suite " + name + " at n = " + std::to_string(n) + " exceeds the desk bound " +
                             std::to_string(kDeskBound) + "; pass --force to run it anyway");
    Report r;
    r.suite = name;
    r.n = n;
    r.seed = opts.seed;
    Ctx c{n, opts, r};
    const auto t0 = Clock::now();
    e->fn(c);
    r.timings.emplace_back("total", seconds_since(t0));
    std::stable_sort(r.checks.begin(), r.checks.end(), [](const Check& a, const Check& b) { return a.label < b.label; });
    return r;
}

Json Report::to_json() const {
    Json j;
    j["suite"] = suite;
    j["n"] = n;
    j["passed"] = passed();
    Json cs = Json::array();
    for (const auto& ch : checks) cs.push_back({{"label", ch.label}, {"status", hcs::to_string(ch.status)}, {"detail", ch.detail}});
    j["checks"] = std::move(cs);
    j["seed"] = seed;
    Json t = Json::object();
    for (const auto& [phase, secs] : timings) t[phase] = secs;
    j["timings"] = std::move(t);
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << "  n = " << n << "  seed " << seed << "\n";
    std::size_t width = 0;
    for (const auto& ch : checks) width = std::max(width, ch.label.size());
    for (const auto& ch : checks)
        os << "  " << std::left << std::setw(5) << hcs::to_string(ch.status) << " " << std::setw(static_cast<int>(width)) << ch.label
           << "  " << ch.detail << "\n";
    std::size_t fails = 0, infos = 0;
    for (const auto& ch : checks) {
        fails += ch.status == Status::Fail;
        infos += ch.status == Status::Info;
    }
    os << "  " << checks.size() << " checks, " << fails << " failed, " << infos << " informational";
    for (const auto& [phase, secs] : timings)
        if (phase == "total") os << ", " << std::fixed << std::setprecision(2) << secs << " s";
    os << "\n" << (passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace hcs
