#pragma once

#include "hcs/combinat/permutation.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace hcs {

// A strict partition lambda_1 > lambda_2 > ... > lambda_l > 0.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    // 0 if the length is even, 1 if odd.
    int d() const { return length() % 2; }
    int part(int i) const { return parts_[static_cast<size_t>(i - 1)]; }

    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
    friend auto operator<=>(const StrictPartition& a, const StrictPartition& b) { return a.parts_ <=> b.parts_; }

    std::string to_string() const;  // "(3,1)"
    std::string key() const;        // "3-1"

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// All strict partitions of n, in decreasing lexicographic order: 5 -> (5), (4,1), (3,2).
std::vector<StrictPartition> enumerate_strict_partitions(int n);
// Parses "4,3,1"; throws std::invalid_argument if not a strict partition.
StrictPartition parse_strict_partition(const std::string& text);

struct Box {
    int row = 0;  // i, 1-based
    int col = 0;  // j, 1-based; row i occupies columns i .. i + lambda_i - 1
    int content() const { return col - row; }
    friend bool operator==(const Box&, const Box&) = default;
};

enum class BruhatStep { Up, Down, NonStandardRow, NonStandardColumn };

std::string to_string(BruhatStep s);

// A bijective filling of the shifted diagram of a strict partition by 1..n.
class ShiftedTableau {
public:
    ShiftedTableau() = default;
    // rows[i-1] lists the entries of row i from left to right.
    ShiftedTableau(StrictPartition shape, std::vector<std::vector<int>> rows);

    const StrictPartition& shape() const { return shape_; }
    int n() const { return shape_.n(); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int at(int i, int j) const { return rows_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - i)]; }
    bool contains(int i, int j) const;
    Box box_of(int k) const { return boxes_[static_cast<size_t>(k - 1)]; }
    int content(int k) const { return box_of(k).content(); }

    bool is_standard() const;
    // Entries of the leading diagonal, Lambda(i,i) for i = 1..l.
    std::vector<int> diagonal() const;

    // Row reading (Lambda) and column reading (Lambda)*.
    std::vector<int> row_reading() const;
    std::vector<int> column_reading() const;

    // s . Lambda: every entry k is replaced by s(k).
    ShiftedTableau act(const Permutation& s) const;
    ShiftedTableau act_simple(int k) const;

    friend bool operator==(const ShiftedTableau& a, const ShiftedTableau& b) { return a.rows_ == b.rows_; }
    friend auto operator<=>(const ShiftedTableau& a, const ShiftedTableau& b) {
        return a.row_reading() <=> b.row_reading();
    }

    std::string render() const;  // shifted layout, one line per row
    std::string key() const;     // row reading joined by '-'
    nlohmann::ordered_json to_json() const;
    static ShiftedTableau from_json(const nlohmann::ordered_json& j);

private:
    void index();
    StrictPartition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<Box> boxes_;
};

// Entries j < k that come after (A) or before (B) k in a reading sequence, in sequence order.
struct Subsequences {
    std::vector<int> A, B;            // from the row reading (Lambda)
    std::vector<int> A_star, B_star;  // from the column reading (Lambda)*
};

ShiftedTableau row_tableau(const StrictPartition& shape);
ShiftedTableau column_tableau(const StrictPartition& shape);
// Standard tableaux of the shape, sorted by row reading.
std::vector<ShiftedTableau> enumerate_standard(const StrictPartition& shape);
std::pair<std::vector<int>, std::vector<int>> readings(const ShiftedTableau& t);
Subsequences subsequences(const ShiftedTableau& t, int k);

// w_Lambda(k) = p_{n+1-k} for the column reading p; s_Lambda maps Lambda to Lambda^c.
Permutation w_of(const ShiftedTableau& t);
Permutation s_of(const ShiftedTableau& t);

struct ReducedWords {
    std::vector<int> w;  // prod_{k=2..n} prod_{p=1..b*_k} s_{k-p}
    std::vector<int> s;  // prod_{k=n..2} prod_{p=a*_k..1} s_{k-p}
};
// Throws std::invalid_argument for non-standard tableaux.
ReducedWords reduced_words(const ShiftedTableau& t);

// Classifies s_k . Lambda for standard Lambda.
BruhatStep bruhat_step(const ShiftedTableau& t, int k);

}  // namespace hcs
