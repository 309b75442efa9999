#pragma once

#include "hcs/algebra/element.hpp"
#include "hcs/combinat/shifted_tableau.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hcs {

// Values attached to the boxes of a shifted diagram: the special value of the box content,
// optionally with one box inverted. For a tableau, x_k is the value of the box holding k.
class SpecialPoint {
public:
    explicit SpecialPoint(StrictPartition shape, std::optional<Box> inverted = std::nullopt);

    const StrictPartition& shape() const { return shape_; }
    int level() const { return level_; }
    const std::optional<Box>& inverted() const { return inverted_; }
    const TowerScalar& at(const Box& b) const;
    // x_1, ..., x_n for the tableau (index k-1).
    std::vector<TowerScalar> values(const ShiftedTableau& t) const;
    TowerScalar value(const ShiftedTableau& t, int k) const { return at(t.box_of(k)); }

private:
    StrictPartition shape_;
    int level_;
    std::optional<Box> inverted_;
    std::vector<TowerScalar> box_values_;  // row-major over the shifted diagram
};

// The ordered factors of psi at the column tableau. The theta part lists factors
// psi_{k-p}(x_k, x_{B_k(p)}); a singular pair (k, p) is grouped with the inserted
// normalized factor and its successor (k, p+1) into one regular theta block.
struct FusionFactor {
    enum class Kind { Regular, Grouped };
    Kind kind = Kind::Regular;
    int gen = 0;    // generator index of the (first) factor
    int left = 0;   // x_left
    int right = 0;  // x_right; for a group: B_k(p)
    int next = 0;   // for a group: B_k(p+1)
    std::string to_string() const;
};

struct FusionPlan {
    StrictPartition shape;
    std::vector<FusionFactor> theta;        // left to right
    std::vector<FusionFactor> theta_prime;  // left to right, all regular
    int singular_pairs() const;
    std::string to_string() const;
};

// Builds the plan and checks the grouping pattern; throws std::logic_error when a singular
// factor is not followed by the expected partner.
FusionPlan make_fusion_plan(const StrictPartition& shape);

// Fusion values at a special point (or a point with one inverted box). Results are memoized
// per tableau; the engine is not thread-safe.
class FusionEngine {
public:
    explicit FusionEngine(StrictPartition shape, std::optional<Box> inverted = std::nullopt);

    const StrictPartition& shape() const { return point_.shape(); }
    const SpecialPoint& point() const { return point_; }
    const FusionPlan& plan() const { return plan_; }

    const AlgebraElement& theta_column();
    const AlgebraElement& theta_prime_column();
    const AlgebraElement& psi_column();
    // psi_Lambda by walking down the Bruhat order from the column tableau. Throws
    // std::invalid_argument for a non-standard tableau.
    const AlgebraElement& psi(const ShiftedTableau& t);

private:
    AlgebraElement factor(const FusionFactor& f, const ShiftedTableau& column) const;
    AlgebraElement evaluate(const std::vector<FusionFactor>& fs) const;

    SpecialPoint point_;
    FusionPlan plan_;
    ShiftedTableau column_;
    std::optional<AlgebraElement> theta_, theta_prime_;
    std::map<std::vector<int>, AlgebraElement> memo_;
};

// psi_Lambda at the special point.
AlgebraElement psi_tableau(const ShiftedTableau& t);
// psi_Lambda at the point with q_k inverted.
AlgebraElement psi_prime_tableau(const ShiftedTableau& t, int k);
// psi at the column tableau, and its theta factor.
AlgebraElement psi_column(const StrictPartition& shape);
AlgebraElement theta_column(const StrictPartition& shape);
// psi_{row tableau} T_{w}^{-1} for w = w_{row tableau}.
AlgebraElement symmetrizer(const StrictPartition& shape);
AlgebraElement symmetrizer(FusionEngine& engine);

// Independent route to psi_Lambda: invert the prefactors that carry psi_Lambda to
// psi at the column tableau, one regular factor at a time.
AlgebraElement psi_tableau_via_prefactor(FusionEngine& engine, const ShiftedTableau& t);

}  // namespace hcs
