#include "pps/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "pps/error.hpp"

namespace pps {

std::vector<std::complex<double>> polynomial_roots(std::span<const double> coeffs) {
  std::size_t degree = coeffs.size();
  while (degree > 0 && coeffs[degree - 1] == 0.0) --degree;
  if (degree == 0) throw Error(ErrorCode::InvalidConfig, "zero polynomial has no finite roots");
  --degree;

  std::vector<std::complex<double>> roots;
  // Zero roots from vanishing low-order coefficients.
  std::size_t low = 0;
  while (low < degree && coeffs[low] == 0.0) {
    roots.emplace_back(0.0, 0.0);
    ++low;
  }
  const std::size_t n = degree - low;
  if (n == 0) return roots;

  const double lead = coeffs[degree];
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                                    static_cast<Eigen::Index>(n));
  for (std::size_t r = 1; r < n; ++r) companion(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r - 1)) = 1.0;
  for (std::size_t r = 0; r < n; ++r) {
    companion(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(n - 1)) = -coeffs[low + r] / lead;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::InvalidConfig, "companion eigenvalue iteration did not converge");
  }
  for (Eigen::Index r = 0; r < solver.eigenvalues().size(); ++r) roots.push_back(solver.eigenvalues()[r]);
  return roots;
}

std::vector<double> positive_real_roots(std::span<const double> coeffs) {
  std::vector<double> out;
  for (const auto& root : polynomial_roots(coeffs)) {
    const double re = root.real();
    if (std::abs(root.imag()) < 1e-9 * std::max(1.0, std::abs(re)) && re > 1e-9 * (1.0 + std::abs(re))) {
      out.push_back(re);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double horner(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> horner(std::span<const double> coeffs, std::complex<double> x) {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace pps
