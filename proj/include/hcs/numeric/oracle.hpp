#pragma once

#include "hcs/algebra/element.hpp"
#include "hcs/combinat/shifted_tableau.hpp"

#include <complex>
#include <vector>

namespace hcs {

struct NumericConfig {
    double q = 1.2;
    // Path parameter: u(i,j) = q^{j-i} (1 + tau^2 h_i). Points on the leading diagonal move
    // like tau, so extrapolation runs in tau. Decreasing, positive.
    std::vector<double> taus = {0.04, 0.02, 0.01, 0.005, 0.0025, 0.00125};
    // Per-row offsets h_i; rows beyond the list reuse the last step.
    std::vector<double> offsets = {1.0, 1.7, 2.3, 3.1, 3.7};
    double tolerance = 1e-6;

    ScalarDomain<std::complex<double>> domain() const { return {std::complex<double>(q, 0.0)}; }
};

std::complex<double> numeric_eval(const TowerScalar& x, const NumericConfig& cfg);
NumericElement to_numeric(const AlgebraElement& a, const NumericConfig& cfg);

// x with (x + 1/x)/2 = (q u^2 + q^{-1} u^{-2})/(q + q^{-1}), on the branch through the
// special value at u = q^c.
std::complex<double> curve_coordinate(double q, std::complex<double> u, int content);

// The point on the path at parameter tau, x_k for k = 1..n (index k-1).
std::vector<std::complex<double>> path_point(const ShiftedTableau& t, double tau, const NumericConfig& cfg);

// The ordered psi-factor product for Lambda at a numeric point.
NumericElement psi_product(const ShiftedTableau& t, const std::vector<std::complex<double>>& x,
                           const NumericConfig& cfg);

// Limit of the product at the special point along the path. Throws std::runtime_error when
// the path branch is not continuous or a sample is singular.
NumericElement fusion_limit(const ShiftedTableau& t, const NumericConfig& cfg);

struct DegenerationResult {
    std::complex<double> scalar, clifford;        // extrapolated coefficients at q = 1
    double expected_scalar = 0, expected_clifford = 0;
    double error = 0;
    bool ok = false;
};

// psi_k(x, y) at the special values for contents a != b, as q -> 1, against
// s_k + (sqrt(a(a+1)) - sqrt(b(b+1)))^{-1} - (sqrt(a(a+1)) + sqrt(b(b+1)))^{-1} C_k C_{k+1}.
DegenerationResult degeneration_check(int a, int b, const NumericConfig& cfg);

}  // namespace hcs
