#include "hcs/algebra/element_json.hpp"
#include "hcs/affine/psi.hpp"
#include "hcs/algebra/generators.hpp"
#include "hcs/fusion/divisibility.hpp"
#include "hcs/fusion/fusion.hpp"
#include "hcs/fusion/psi_cache.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace hcs;

namespace {

using E = AlgebraElement;

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() / ("hcs-fusion-test-" + std::to_string(::getpid()));
        std::filesystem::remove_all(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("fusion plans") {
    // One-row shapes have no two boxes on a common diagonal.
    for (int n = 1; n <= 5; ++n) CHECK(make_fusion_plan(StrictPartition({n})).singular_pairs() == 0);
    // In (2,1) the entry 3 shares the leading diagonal with 1.
    const FusionPlan p = make_fusion_plan(StrictPartition({2, 1}));
    CHECK(p.singular_pairs() == 1);
    CHECK(p.theta.size() == 2);
    CHECK(p.theta_prime.empty());
    // Every shape up to n = 6 fits the grouping pattern.
    for (int n = 1; n <= 6; ++n)
        for (const auto& s : enumerate_strict_partitions(n)) CHECK_NOTHROW(make_fusion_plan(s));
}

TEST_CASE("psi for tiny shapes") {
    CHECK(psi_tableau(row_tableau(StrictPartition({1}))) == E::one(1));
    // (2): a single tableau with q_1 = 1 and q_2 the content-1 special value.
    const ShiftedTableau t = row_tableau(StrictPartition({2}));
    CHECK(psi_tableau(t) == psi_factor(1, special_value(1, 2), special_value(0, 2), 2));
}

TEST_CASE("leading term and eigenvector property") {
    // X_k acts on psi_Lambda by q_k^{-1} through the Jucys-Murphy elements.
    for (int n = 2; n <= 3; ++n) {
        std::vector<E> j;
        for (int k = 1; k <= n; ++k) j.push_back(jucys_murphy<TowerScalar>(k, n));
        for (const auto& shape : enumerate_strict_partitions(n)) {
            FusionEngine engine(shape);
            for (const auto& t : enumerate_standard(shape)) {
                const E& psi = engine.psi(t);
                const Permutation w = w_of(t);
                CHECK(psi.coeff(w, 0).is_one());
                CHECK(psi.max_length() == w.length());
                for (int k = 1; k <= n; ++k) {
                    const TowerScalar qk = special_value(t.content(k), n);
                    CHECK(j[static_cast<std::size_t>(k - 1)] * psi == psi.scaled(qk.inverse()));
                }
            }
        }
    }
}

TEST_CASE("eigenvector property at n = 4, column tableau") {
    const StrictPartition shape({3, 1});
    const E psi = psi_column(shape);
    const ShiftedTableau c = column_tableau(shape);
    for (int k = 1; k <= 4; ++k)
        CHECK(jucys_murphy<TowerScalar>(k, 4) * psi == psi.scaled(special_value(c.content(k), 4).inverse()));
}

TEST_CASE("Bruhat walk and prefactor route agree") {
    for (const auto& shape : {StrictPartition({3, 1}), StrictPartition({4})}) {
        FusionEngine engine(shape);
        for (const auto& t : enumerate_standard(shape)) CHECK(psi_tableau_via_prefactor(engine, t) == engine.psi(t));
    }
}

TEST_CASE("inverted point and non-standard input") {
    const StrictPartition shape({2, 1});
    const ShiftedTableau t = row_tableau(shape);
    // Inverting the content-1 box replaces q_2 by its inverse; psi is still an eigenvector.
    const E p = psi_prime_tableau(t, 2);
    const TowerScalar q2 = special_value(1, 3);
    CHECK(jucys_murphy<TowerScalar>(2, 3) * p == p.scaled(q2));
    CHECK_THROWS_AS(FusionEngine(shape).psi(ShiftedTableau(shape, {{2, 1}, {3}})), std::invalid_argument);
}

TEST_CASE("divisibility identities for n <= 3") {
    for (int n = 2; n <= 3; ++n)
        for (const auto& shape : enumerate_strict_partitions(n)) {
            FusionEngine engine(shape);
            for (const auto& c : divisibility_suite(engine)) {
                INFO(c.label << " " << c.detail);
                CHECK(c.status != Status::Fail);
            }
        }
}

TEST_CASE("gamma idempotents") {
    const StrictPartition shape({3, 2});
    const auto signs = gamma_signs(shape);
    REQUIRE(signs.size() == 2);
    E sum = E::zero(5);
    for (const auto& s : signs) {
        const E g = gamma_idempotent(shape, s);
        CHECK(g * g == g);
        CHECK(g.is_even());
        sum += g;
    }
    CHECK(sum == E::one(5));
    CHECK((gamma_idempotent(shape, signs[0]) * gamma_idempotent(shape, signs[1])).is_zero());
}

TEST_CASE("psi cache") {
    TempDir dir;
    const PsiCache cache(dir.path);
    const ShiftedTableau t = row_tableau(StrictPartition({2, 1}));
    CHECK_FALSE(cache.load(t).has_value());
    const E psi = psi_tableau(t);
    const auto path = cache.store(t, psi);
    CHECK(path == cache.path_for(t));
    const std::string first = slurp(path);
    CHECK(cache.load(t).value() == psi);
    cache.store(t, psi);
    CHECK(slurp(path) == first);
    // No temporary files remain.
    int files = 0;
    for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir.path)) ++files;
    CHECK(files == 1);
    CHECK(element_from_json(to_json(psi)) == psi);
    // A damaged entry is reported, not silently recomputed.
    std::ofstream(path) << "{\"tableau\": 3";
    CHECK_THROWS_AS(cache.load(t), std::runtime_error);
}
