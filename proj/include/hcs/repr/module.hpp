#pragma once

#include "hcs/combinat/shifted_tableau.hpp"
#include "hcs/fusion/fusion.hpp"
#include "hcs/repr/matrix.hpp"
#include "hcs/verify/check.hpp"

#include <cstdint>
#include <vector>

namespace hcs {

// V_lambda on the basis C_S psi_Lambda, index = tableau * 2^n + S. Generator matrices act on
// columns: column j is the image of basis vector j.
class SeminormalModule {
public:
    using Mask = std::uint32_t;

    explicit SeminormalModule(StrictPartition shape);

    const StrictPartition& shape() const { return shape_; }
    int n() const { return shape_.n(); }
    int dim() const { return static_cast<int>(tableaux_.size()) << n(); }
    const std::vector<ShiftedTableau>& tableaux() const { return tableaux_; }
    int index(int tableau, Mask s) const { return (tableau << n()) | static_cast<int>(s); }
    int tableau_of(int idx) const { return idx >> n(); }
    Mask mask_of(int idx) const { return static_cast<Mask>(idx) & ((Mask(1) << n()) - 1); }
    // Special value q_k of tableau t.
    const TowerScalar& q(int tableau, int k) const;

    const Matrix& T(int k) const { return t_[static_cast<std::size_t>(k - 1)]; }
    const Matrix& C(int k) const { return c_[static_cast<std::size_t>(k - 1)]; }
    // J_k from the recursion J_k = (T_{k-1} - eps C_{k-1} C_k) J_{k-1} T_{k-1}.
    Matrix J(int k) const;
    // C psi_Lambda -> C C_l psi_Lambda, l = Lambda(i,i).
    Matrix rho(int i) const;
    // Expected J_k eigenvalue on basis vector idx: q_k if C_k occurs in S, else q_k^{-1}.
    TowerScalar jm_eigenvalue(int idx, int k) const;

private:
    StrictPartition shape_;
    std::vector<ShiftedTableau> tableaux_;
    std::vector<std::vector<TowerScalar>> q_;
    std::vector<Matrix> t_, c_;
};

// Defining relations of G_n(q) as matrix identities.
Checks module_relation_checks(const SeminormalModule& m);
// J_k diagonal with the expected eigenvalues, and J_1 = 1.
Checks jm_eigencheck(const SeminormalModule& m);
// rho_i commute with all generators, square to -1 and pairwise anticommute.
Checks commutant_check(const SeminormalModule& m);
// Left multiplication on the elements C psi_Lambda agrees with the matrices.
Checks ideal_model_check(const SeminormalModule& m, FusionEngine& engine);

// The image of the rho-substituted idempotent for a sign vector.
struct USubmodule {
    std::vector<int> signs;
    Matrix projector;                       // on V
    std::vector<std::vector<int>> blocks;   // U basis positions grouped by joint J-eigenspace
    std::vector<int> parity;                // Z/2 degree of each U basis vector
    std::vector<Matrix> T, C;               // restricted generator matrices on U
    int dim() const { return static_cast<int>(parity.size()); }
};

Matrix gamma_projector(const SeminormalModule& m, const std::vector<int>& signs);
USubmodule build_U(const SeminormalModule& m, const std::vector<int>& signs);

struct CommutantDimension {
    int even = 0, odd = 0;
    int total() const { return even + odd; }
};
// Dimension of the supercommutant of U: even Z commuting with every generator, odd Z
// commuting with the T_k and anticommuting with the C_k. Solved blockwise on the joint
// eigenspaces of the J_k, which every such Z preserves.
CommutantDimension commutant_dimension(const USubmodule& u);

// Projector relations: idempotent, pairwise orthogonal, summing to 1, equal ranks.
Checks splitting_checks(const SeminormalModule& m);

struct CentralCharacterRow {
    StrictPartition shape;
    std::vector<TowerScalar> values;  // e_1 .. e_n of J_k + J_k^{-1}
};
// Central characters from the contents (J_k + J_k^{-1} -> q_k + q_k^{-1}).
std::vector<CentralCharacterRow> central_character_table(int n);
// Table rows are distinct, entries lie in Q(q), and there is one row per strict partition.
Checks central_character_checks(int n);
// The table against the e_i computed from the module matrices (small n).
Checks central_character_module_checks(const SeminormalModule& m, const CentralCharacterRow& row);
// Dimension of the supercentre of G_n(q), computed directly (small n).
int supercentre_dimension(int n);

// sum over strict lambda of 2^{-d} (dim U)^2 with dim U = 2^n m / 2^{[l/2]}; returns the
// left side times 2 (an integer) and the expected 2 * 2^n n!.
struct DimensionIdentity {
    long long lhs_times_two = 0, rhs_times_two = 0;
    bool holds() const { return lhs_times_two == rhs_times_two; }
};
DimensionIdentity dimension_identity(int n);

}  // namespace hcs
