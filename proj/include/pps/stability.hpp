#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string_view>
#include <vector>

#include "pps/equilibria.hpp"
#include "pps/model.hpp"

namespace pps {

enum class Stability { Stable, Unstable, Marginal };

std::string_view to_string(Stability s);

inline constexpr double kMarginalBand = 1e-9;
inline constexpr double kRouthHurwitzMargin = 1e-12;

struct StabilityVerdict {
  Stability classification = Stability::Unstable;
  int dimension = 3;
  // Characteristic polynomial lambda^3 + m1 lambda^2 + m2 lambda + m3; for a
  // 2x2 Jacobian m1 = -trace, m2 = det and m3 = 0.
  double m1 = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  std::vector<std::complex<double>> eigenvalues;
  std::vector<ConditionCheck> criteria;
  // Set when the closed-form criteria and the eigenvalue test disagree; the
  // eigenvalue verdict is kept.
  bool criteria_disagree = false;
  Eigen::MatrixXd jacobian;
};

// Analytic Jacobian of rhs_subsystem. 3x3 for Full; 2x2 ordered (x, y) for
// PredPrey, (y, z) for PredScav and (x, z) for ScavPrey.
Eigen::MatrixXd jacobian(const ModelParams& p, const State& s, Subsystem mask = Subsystem::Full);

// m1 = -trace, m2 = sum of principal 2x2 minors, m3 = -det.
std::array<double, 3> characteristic_coefficients(const Eigen::Matrix3d& j);

// Stable iff m1, m2, m3 > 0 and m1 m2 - m3 > 0 (1e-12 margin); Marginal when a
// test sits within the margin of zero. Eigenvalues are filled from the cubic.
StabilityVerdict routh_hurwitz_cubic(double m1, double m2, double m3);

// Verdict from eigenvalue real parts: any > 1e-9 Unstable, else any within
// 1e-9 of zero Marginal, else Stable.
Stability classify_eigenvalues(const std::vector<std::complex<double>>& eigenvalues);

// Jacobian, eigenvalues, Routh-Hurwitz quantities and the closed-form criteria
// for the equilibrium's label. Throws ExistenceViolated when !eq.exists.
StabilityVerdict classify(const ModelParams& p, const Equilibrium& eq);

}  // namespace pps
