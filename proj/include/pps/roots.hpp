#pragma once

#include <complex>
#include <span>
#include <vector>

namespace pps {

// Roots of sum_n coeffs[n] X^n via eigenvalues of the companion matrix.
// Trailing (highest-order) zero coefficients are dropped first.
std::vector<std::complex<double>> polynomial_roots(std::span<const double> coeffs);

// Roots with |Im| < 1e-9 max(1, |Re|) and Re > 1e-9 (1 + |Re|), ascending.
std::vector<double> positive_real_roots(std::span<const double> coeffs);

double horner(std::span<const double> coeffs, double x);
std::complex<double> horner(std::span<const double> coeffs, std::complex<double> x);

}  // namespace pps
