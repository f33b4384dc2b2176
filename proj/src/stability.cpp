#include "pps/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pps/error.hpp"
#include "pps/roots.hpp"

namespace pps {

namespace {

struct Response {
  double value;  // u^2 / (1 + c u^2)
  double slope;  // 2u / (1 + c u^2)^2
};

Response type3(double u, double handle) {
  const double den = 1.0 + handle * u * u;
  return {u * u / den, 2.0 * u / (den * den)};
}

std::array<int, 2> subsystem_indices(Subsystem mask) {
  switch (mask) {
    case Subsystem::PredPrey: return {0, 1};
    case Subsystem::PredScav: return {1, 2};
    case Subsystem::ScavPrey: return {0, 2};
    case Subsystem::Full: break;
  }
  return {0, 1};
}

std::vector<std::complex<double>> quadratic_roots(double c1, double c2) {
  // lambda^2 + c1 lambda + c2
  const double disc = c1 * c1 - 4.0 * c2;
  if (disc >= 0.0) {
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (c1 + std::copysign(sq, c1));
    if (q == 0.0) return {0.0, 0.0};
    return {q, c2 / q};
  }
  const double im = 0.5 * std::sqrt(-disc);
  return {{-0.5 * c1, im}, {-0.5 * c1, -im}};
}

bool all_satisfied(const std::vector<ConditionCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const ConditionCheck& c) { return c.satisfied; });
}

double ratio_or_inf(double num, double den) {
  return den > 0.0 ? num / den : std::numeric_limits<double>::infinity();
}

// Closed-form stability conditions quoted for each steady state.
std::vector<ConditionCheck> named_criteria(const ModelParams& p, const Equilibrium& eq,
                                           const StabilityVerdict& v) {
  std::vector<ConditionCheck> out;
  const double k2 = p.k * p.k;
  const bool full = eq.subsystem == Subsystem::Full;
  const State& s = eq.point;

  switch (eq.label) {
    case EquilibriumLabel::Origin:
      if (eq.subsystem == Subsystem::PredScav) {
        out.push_back({"-e < 0 and -j < 0", p.e > 0.0 && p.j > 0.0, std::min(p.e, p.j)});
      } else {
        out.push_back({"r < 0", p.r < 0.0, p.r});
      }
      break;
    case EquilibriumLabel::PreyOnly: {
      if (full || eq.subsystem == Subsystem::PredPrey) {
        const double bound = ratio_or_inf(p.e, p.d - p.a0 * p.e);
        out.push_back({"k^2 < e / (d - a0 e)", k2 < bound, bound});
      }
      if (full || eq.subsystem == Subsystem::ScavPrey) {
        const double bound = ratio_or_inf(p.j, p.g - p.b0 * p.j);
        out.push_back({"k^2 < j / (g - b0 j)", k2 < bound, bound});
      }
      break;
    }
    case EquilibriumLabel::PredScav:
      if (full) {
        out.push_back({"r < 0", p.r < 0.0, p.r});
      } else {
        const double product = -2.0 * p.j * p.e * (p.f - p.i0 * p.e) / p.f;
        out.push_back({"lambda1 lambda2 = -2 j e (f - i0 e) / f > 0", product > 0.0, product});
      }
      break;
    case EquilibriumLabel::PredPrey: {
      const double x0 = s.x;
      const double trace_term = 2.0 * p.a0 * p.e * (p.k - x0) / (p.d * p.k);
      out.push_back({"2 a0 e (k - x0) / (d k) < 1", trace_term < 1.0, trace_term});
      if (full) {
        const double shift = p.d + (p.b0 - p.a0) * p.e;
        const double invasion = p.h * p.d * p.r * x0 * (1.0 - x0 / p.k) * shift +
                                p.a * p.e * (p.g * p.e - p.j * shift);
        out.push_back({"h d r x0 (1 - x0/k)[d + (b0 - a0) e] + a e [g e - j (d + (b0 - a0) e)] < 0",
                       invasion < 0.0, invasion});
      }
      break;
    }
    case EquilibriumLabel::ScavPrey: {
      const double x0 = s.x;
      const double trace_term = 2.0 * p.b0 * p.j * (p.k - x0) / (p.g * p.k);
      out.push_back({"2 b0 j (k - x0) / (g k) < 1", trace_term < 1.0, trace_term});
      if (full) {
        const double shift = p.g + p.j * (p.a0 - p.b0);
        const double t = (p.e * shift - p.d * p.j) / shift;
        const double z0 = s.z;
        const double feed = p.f * z0 * z0 / (1.0 + p.i0 * z0 * z0);
        out.push_back({"f z0^2 / (1 + i0 z0^2) < (e s - d j) / s, s = g + (a0 - b0) j", feed < t, feed - t});
      }
      break;
    }
    case EquilibriumLabel::Interior:
      out.push_back({"m1 > 0", v.m1 > 0.0, v.m1});
      out.push_back({"m2 > 0", v.m2 > 0.0, v.m2});
      out.push_back({"m3 > 0", v.m3 > 0.0, v.m3});
      out.push_back({"m1 m2 - m3 > 0", v.m1 * v.m2 - v.m3 > 0.0, v.m1 * v.m2 - v.m3});
      break;
  }
  return out;
}

}  // namespace

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "Stable";
    case Stability::Unstable: return "Unstable";
    case Stability::Marginal: return "Marginal";
  }
  return "Unstable";
}

Eigen::MatrixXd jacobian(const ModelParams& p, const State& s, Subsystem mask) {
  const double x = s.x, y = s.y, z = s.z;
  const Response P = type3(x, p.a0);
  const Response Q = type3(x, p.b0);
  const Response S = type3(z, p.i0);

  Eigen::Matrix3d full;
  full(0, 0) = p.r * (1.0 - 2.0 * x / p.k) - p.a * P.slope * y - p.b * Q.slope * z;
  full(0, 1) = -p.a * P.value;
  full(0, 2) = -p.b * Q.value;
  full(1, 0) = p.d * P.slope * y;
  full(1, 1) = p.d * P.value + p.f * S.value - p.e;
  full(1, 2) = p.f * S.slope * y;
  full(2, 0) = p.g * Q.slope * z;
  full(2, 1) = p.h * z - p.i * S.value;
  full(2, 2) = p.g * Q.value + p.h * y - p.i * y * S.slope - p.j;

  if (mask == Subsystem::Full) return full;
  const auto idx = subsystem_indices(mask);
  Eigen::MatrixXd sub(2, 2);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) sub(r, c) = full(idx[r], idx[c]);
  }
  return sub;
}

std::array<double, 3> characteristic_coefficients(const Eigen::Matrix3d& j) {
  const double m1 = -j.trace();
  const double m2 = (j(1, 1) * j(2, 2) - j(1, 2) * j(2, 1)) + (j(0, 0) * j(2, 2) - j(0, 2) * j(2, 0)) +
                    (j(0, 0) * j(1, 1) - j(0, 1) * j(1, 0));
  const double m3 = -j.determinant();
  return {m1, m2, m3};
}

Stability classify_eigenvalues(const std::vector<std::complex<double>>& eigenvalues) {
  bool marginal = false;
  for (const auto& lambda : eigenvalues) {
    if (lambda.real() > kMarginalBand) return Stability::Unstable;
    if (std::abs(lambda.real()) <= kMarginalBand) marginal = true;
  }
  return marginal ? Stability::Marginal : Stability::Stable;
}

StabilityVerdict routh_hurwitz_cubic(double m1, double m2, double m3) {
  StabilityVerdict v;
  v.dimension = 3;
  v.m1 = m1;
  v.m2 = m2;
  v.m3 = m3;
  const double hurwitz = m1 * m2 - m3;
  v.criteria = {{"m1 > 0", m1 > kRouthHurwitzMargin, m1},
                {"m2 > 0", m2 > kRouthHurwitzMargin, m2},
                {"m3 > 0", m3 > kRouthHurwitzMargin, m3},
                {"m1 m2 - m3 > 0", hurwitz > kRouthHurwitzMargin, hurwitz}};
  const double tests[] = {m1, m2, m3, hurwitz};
  bool failed = false, borderline = false;
  for (double t : tests) {
    if (t < -kRouthHurwitzMargin) failed = true;
    else if (t <= kRouthHurwitzMargin) borderline = true;
  }
  v.classification = failed ? Stability::Unstable
                            : (borderline ? Stability::Marginal : Stability::Stable);
  const double coeffs[] = {m3, m2, m1, 1.0};
  v.eigenvalues = polynomial_roots(coeffs);
  return v;
}

StabilityVerdict classify(const ModelParams& p, const Equilibrium& eq) {
  if (!eq.exists) {
    throw Error(ErrorCode::ExistenceViolated,
                "cannot classify nonexistent " + std::string(to_string(eq.label)) + " equilibrium");
  }
  StabilityVerdict v;
  v.jacobian = jacobian(p, eq.point, eq.subsystem);
  if (eq.subsystem == Subsystem::Full) {
    const Eigen::Matrix3d j3 = v.jacobian;
    const auto m = characteristic_coefficients(j3);
    v = routh_hurwitz_cubic(m[0], m[1], m[2]);
    v.jacobian = j3;
    v.dimension = 3;
  } else {
    v.dimension = 2;
    v.m1 = -v.jacobian.trace();
    v.m2 = v.jacobian.determinant();
    v.m3 = 0.0;
    v.eigenvalues = quadratic_roots(v.m1, v.m2);
  }
  v.classification = classify_eigenvalues(v.eigenvalues);
  v.criteria = named_criteria(p, eq, v);
  const bool criteria_stable = all_satisfied(v.criteria);
  v.criteria_disagree = criteria_stable != (v.classification == Stability::Stable);
  return v;
}

}  // namespace pps
