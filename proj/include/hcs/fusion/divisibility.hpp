#pragma once

#include "hcs/fusion/fusion.hpp"
#include "hcs/verify/check.hpp"

namespace hcs {

// The idempotent 2^{-[l/2]} prod_j (1 + sign_j sqrt(-1) C_a C_b) with a, b the diagonal
// entries 2j-1, 2j of the row tableau; signs has length [l/2].
AlgebraElement gamma_idempotent(const StrictPartition& shape, const std::vector<int>& signs);
// Its image under C_l -> C_{w^{-1}(l)}, w = w of the row tableau.
AlgebraElement gamma_prime(const StrictPartition& shape, const std::vector<int>& signs);
// All sign vectors of length [l/2].
std::vector<std::vector<int>> gamma_signs(const StrictPartition& shape);

// Exact divisibility and intertwining identities for psi at the row and column tableaux.
// Each check carries the tableau entries it was evaluated at in its detail.
Checks divisibility_suite(FusionEngine& engine);

// Individual groups of the suite.
Checks row_annihilation_checks(FusionEngine& engine);
Checks column_divisibility_checks(FusionEngine& engine);
Checks fixed_point_check(FusionEngine& engine);
Checks clifford_intertwining_checks(FusionEngine& engine);
Checks gamma_intertwining_checks(FusionEngine& engine);

}  // namespace hcs
