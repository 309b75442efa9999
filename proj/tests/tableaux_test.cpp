#include "hcs/combinat/shifted_tableau.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace hcs;

namespace {

// Brute force: every filling of the diagram, keep the standard ones.
std::vector<ShiftedTableau> brute_standard(const StrictPartition& shape) {
    std::vector<int> perm(static_cast<size_t>(shape.n()));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<ShiftedTableau> out;
    do {
        std::vector<std::vector<int>> rows;
        size_t pos = 0;
        for (int p : shape.parts()) {
            rows.emplace_back(perm.begin() + static_cast<long>(pos), perm.begin() + static_cast<long>(pos + p));
            pos += static_cast<size_t>(p);
        }
        ShiftedTableau t(shape, rows);
        if (t.is_standard()) out.push_back(t);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Strict partitions by filtering all compositions into decreasing sequences.
std::set<std::vector<int>> brute_strict(int n) {
    std::set<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> parts{1};
        for (int b = 0; b < n - 1; ++b) {
            if (mask & (1u << b)) {
                parts.push_back(1);
            } else {
                ++parts.back();
            }
        }
        std::sort(parts.rbegin(), parts.rend());
        if (std::adjacent_find(parts.begin(), parts.end()) == parts.end()) out.insert(parts);
    }
    return out;
}

}  // namespace

TEST_CASE("strict partitions") {
    auto p1 = enumerate_strict_partitions(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].parts() == std::vector<int>{1});
    auto p3 = enumerate_strict_partitions(3);
    REQUIRE(p3.size() == 2);
    CHECK(p3[0].parts() == std::vector<int>{3});
    CHECK(p3[1].parts() == std::vector<int>{2, 1});
    auto p5 = enumerate_strict_partitions(5);
    REQUIRE(p5.size() == 3);
    CHECK(p5[1].parts() == std::vector<int>{4, 1});
    CHECK(p5[2].parts() == std::vector<int>{3, 2});
    for (int n = 1; n <= 10; ++n) {
        auto ps = enumerate_strict_partitions(n);
        std::set<std::vector<int>> got;
        for (auto& p : ps) got.insert(p.parts());
        CHECK(got.size() == ps.size());
        CHECK(got == brute_strict(n));
    }
    CHECK_THROWS(parse_strict_partition("2,2"));
    CHECK_THROWS(StrictPartition({1, 2}));
    CHECK(parse_strict_partition("4,3,1").n() == 8);
    CHECK(parse_strict_partition("4,3,1").d() == 1);
}

TEST_CASE("row and column tableaux") {
    StrictPartition s({4, 3, 1});
    ShiftedTableau r = row_tableau(s), c = column_tableau(s);
    CHECK(r.rows() == std::vector<std::vector<int>>{{1, 2, 3, 4}, {5, 6, 7}, {8}});
    CHECK(c.at(2, 2) == 3);
    CHECK(c.at(1, 3) == 4);
    CHECK(c.at(3, 3) == 6);
    CHECK(c.rows() == std::vector<std::vector<int>>{{1, 2, 4, 7}, {3, 5, 8}, {6}});
    std::vector<int> iota(8);
    std::iota(iota.begin(), iota.end(), 1);
    CHECK(r.row_reading() == iota);
    CHECK(c.column_reading() == iota);
    CHECK(row_tableau(StrictPartition({5})) == column_tableau(StrictPartition({5})));
    CHECK(r.content(8) == 0);
    CHECK(r.content(4) == 3);
    CHECK(r.diagonal() == std::vector<int>{1, 5, 8});
    CHECK(c.render() == " 1 2 4 7\n   3 5 8\n     6");
}

TEST_CASE("standard tableaux counts match brute force") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& shape : enumerate_strict_partitions(n)) {
            auto got = enumerate_standard(shape);
            auto brute = brute_standard(shape);
            std::sort(brute.begin(), brute.end());
            CHECK(got == brute);
        }
    }
    CHECK(enumerate_standard(StrictPartition({2, 1})).size() == 1);
    CHECK(enumerate_standard(StrictPartition({3, 1})).size() == 2);
    CHECK(enumerate_standard(StrictPartition({4})).size() == 1);
}

TEST_CASE("subsequences") {
    StrictPartition s({2, 1});
    ShiftedTableau r = row_tableau(s);  // rows (1,2),(3); column reading (1,2,3)
    for (int k = 2; k <= 3; ++k) {
        auto sub = subsequences(r, k);
        CHECK(sub.A.size() + sub.B.size() == static_cast<size_t>(k - 1));
        CHECK(sub.A_star.size() + sub.B_star.size() == static_cast<size_t>(k - 1));
    }
    auto sub3 = subsequences(r, 3);
    CHECK(sub3.B == std::vector<int>{1, 2});
    CHECK(sub3.A.empty());
    ShiftedTableau c = column_tableau(StrictPartition({4, 3, 1}));
    for (int k = 2; k <= 8; ++k) {
        std::vector<int> interval(static_cast<size_t>(k - 1));
        std::iota(interval.begin(), interval.end(), 1);
        CHECK(subsequences(c, k).B_star == interval);
    }
}

TEST_CASE("w and s permutations") {
    std::mt19937 rng(1);
    for (int n = 1; n <= 6; ++n) {
        const Permutation w0 = Permutation::longest(n);
        for (const auto& shape : enumerate_strict_partitions(n)) {
            ShiftedTableau col = column_tableau(shape);
            CHECK(s_of(col).is_identity());
            CHECK(w_of(col) == w0);
            for (const auto& t : enumerate_standard(shape)) {
                CHECK(s_of(t) * w_of(t) == w0);
                CHECK(t.act(s_of(t)) == col);
                auto words = reduced_words(t);
                CHECK(Permutation::from_word(words.w, n) == w_of(t));
                CHECK(Permutation::from_word(words.s, n) == s_of(t));
                CHECK(static_cast<int>(words.w.size()) == w_of(t).length());
                CHECK(static_cast<int>(words.s.size()) == s_of(t).length());
                auto cat = words.s;
                cat.insert(cat.end(), words.w.begin(), words.w.end());
                CHECK(Permutation::from_word(cat, n) == w0);
                CHECK(static_cast<int>(cat.size()) == n * (n - 1) / 2);
                // Equivariance on random (possibly non-standard) images.
                std::vector<int> img(static_cast<size_t>(n));
                std::iota(img.begin(), img.end(), 1);
                std::shuffle(img.begin(), img.end(), rng);
                Permutation s(img);
                CHECK(w_of(t.act(s)) == s * w_of(t));
            }
        }
    }
    CHECK(reduced_words(column_tableau(StrictPartition({3, 1}))).s.empty());
}

TEST_CASE("bruhat steps agree with length comparison") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& shape : enumerate_strict_partitions(n)) {
            for (const auto& t : enumerate_standard(shape)) {
                for (int k = 1; k < n; ++k) {
                    BruhatStep step = bruhat_step(t, k);
                    ShiftedTableau moved = t.act_simple(k);
                    Box a = t.box_of(k), b = t.box_of(k + 1);
                    if (step == BruhatStep::NonStandardRow) {
                        CHECK(a.row == b.row);
                        CHECK(!moved.is_standard());
                    } else if (step == BruhatStep::NonStandardColumn) {
                        CHECK(a.col == b.col);
                        CHECK(!moved.is_standard());
                    } else {
                        CHECK(moved.is_standard());
                        const int before = w_of(t).length(), after = w_of(moved).length();
                        CHECK((step == BruhatStep::Up) == (after > before));
                    }
                }
            }
        }
    }
    ShiftedTableau r31 = row_tableau(StrictPartition({3, 1}));
    CHECK(bruhat_step(r31, 3) == BruhatStep::Up);
    CHECK(bruhat_step(r31, 1) == BruhatStep::NonStandardRow);
}

TEST_CASE("transitive action on fillings") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& shape : enumerate_strict_partitions(n)) {
            std::set<std::vector<int>> orbit;
            std::vector<ShiftedTableau> frontier{row_tableau(shape)};
            orbit.insert(frontier[0].row_reading());
            while (!frontier.empty()) {
                ShiftedTableau t = frontier.back();
                frontier.pop_back();
                for (int k = 1; k < n; ++k) {
                    ShiftedTableau u = t.act_simple(k);
                    if (orbit.insert(u.row_reading()).second) frontier.push_back(u);
                }
            }
            long fact = 1;
            for (int i = 2; i <= n; ++i) fact *= i;
            CHECK(static_cast<long>(orbit.size()) == fact);
        }
    }
}

TEST_CASE("json form") {
    ShiftedTableau c = column_tableau(StrictPartition({3, 1}));
    CHECK(c.to_json().dump() == R"({"shape":[3,1],"rows":[[1,2,4],[3]]})");
    CHECK(ShiftedTableau::from_json(c.to_json()) == c);
}
