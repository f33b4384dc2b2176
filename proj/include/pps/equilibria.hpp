#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pps/model.hpp"

namespace pps {

enum class EquilibriumLabel { Origin, PreyOnly, PredScav, PredPrey, ScavPrey, Interior };

std::string_view to_string(EquilibriumLabel label);

// A named inequality and the number it was decided on.
struct ConditionCheck {
  std::string name;
  bool satisfied = false;
  double value = 0.0;
};

// A candidate steady state. Points are always ordered (x, y, z); species that
// are absent from `subsystem` are zero. When `exists` is false the point may
// hold NaN coordinates and the failing condition is listed in `existence`.
struct Equilibrium {
  State point;
  Subsystem subsystem = Subsystem::Full;
  EquilibriumLabel label = EquilibriumLabel::Origin;
  bool exists = true;
  std::vector<ConditionCheck> existence;
  std::optional<double> x0;  // sqrt(e / (d - a0 e)) or sqrt(j / (g - b0 j))
  std::optional<double> z0;  // sqrt(e / (f - i0 e))
  bool multiple_roots = false;

  const ConditionCheck* find_check(std::string_view name) const;
};

using PolyCoeffs = std::array<double, 13>;

// Steady states of the two-species subsystems. Every candidate is returned;
// nonexistence is reported through `exists` and the named checks.
std::vector<Equilibrium> predscav_equilibria(const ModelParams& p);
std::vector<Equilibrium> predprey_equilibria(const ModelParams& p);
std::vector<Equilibrium> scavprey_equilibria(const ModelParams& p);

PolyCoeffs interior_poly_coeffs(const ModelParams& p);

// z*(x) from dy/dt = 0 and y*(x) from dz/dt = 0 along the coexistence branch.
// Returns nullopt where z*^2 <= 0 or the values are not finite.
struct CoexistenceBranch {
  double y = 0.0;
  double z = 0.0;
  double prey_residual = 0.0;  // (dx/dt) / x
};
std::optional<CoexistenceBranch> coexistence_branch(const ModelParams& p, double x);

inline constexpr std::size_t kInteriorScanPoints = 4096;

// Scan-and-bisect solve for the coexistence equilibrium on x in (0, k).
// Always returns an Interior-labelled entry; `exists` requires a single
// admissible root and the z* upper bound.
Equilibrium interior_equilibrium_direct(const ModelParams& p);

// Every positive real root of the degree-12 interior polynomial whose
// companion-matrix eigenvalue is real to 1e-9.
std::vector<double> interior_poly_positive_roots(const ModelParams& p);

struct InteriorCrossCheck {
  std::vector<double> poly_roots;
  std::optional<double> direct_x;
  double relative_gap = 0.0;  // |poly - direct| / direct, when both single
  bool agrees = false;
};
InteriorCrossCheck cross_check_interior(const ModelParams& p, double tolerance = 1e-6);

// Origin, prey-only, the three boundary states and the coexistence state,
// embedded in the full system. Existing points within 1e-9 are merged.
std::vector<Equilibrium> all_equilibria(const ModelParams& p);

}  // namespace pps
