#include "pps/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pps/roots.hpp"

namespace pps {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Equilibrium make(State point, Subsystem sub, EquilibriumLabel label) {
  Equilibrium eq;
  eq.point = point;
  eq.subsystem = sub;
  eq.label = label;
  return eq;
}

// Shared shape of the predator-prey and scavenger-prey systems:
//   x' = r x (1 - x/k) - c x^2 w / (1 + c0 x^2),  w' = m x^2 w / (1 + c0 x^2) - death w.
struct PreyConsumer {
  double c, c0, m, death;
  const char* existence_name;
};

Equilibrium prey_consumer_interior(const ModelParams& p, const PreyConsumer& pc, Subsystem sub,
                                   EquilibriumLabel label, bool consumer_is_y) {
  Equilibrium eq = make(State{kNaN, 0.0, 0.0}, sub, label);
  const double margin = pc.m - pc.c0 * pc.death;
  eq.existence.push_back({pc.existence_name, margin > 0.0, margin});
  double x0 = kNaN;
  if (margin > 0.0) x0 = std::sqrt(pc.death / margin);
  eq.existence.push_back({"x0 < k", margin > 0.0 && x0 < p.k, x0});
  eq.exists = margin > 0.0 && x0 < p.k;
  if (margin > 0.0) {
    eq.x0 = x0;
    const double w = pc.m * p.r * x0 * (p.k - x0) / (pc.c * pc.death * p.k);
    eq.point = consumer_is_y ? State{x0, w, 0.0} : State{x0, 0.0, w};
  } else {
    eq.point = consumer_is_y ? State{kNaN, kNaN, 0.0} : State{kNaN, 0.0, kNaN};
  }
  return eq;
}

bool admissible(const CoexistenceBranch& br) {
  return br.y > 0.0 && br.z > 0.0 && std::isfinite(br.y) && std::isfinite(br.z);
}

struct Root {
  double x;
  CoexistenceBranch branch;
};

std::vector<Root> scan_coexistence_roots(const ModelParams& p) {
  std::vector<Root> roots;
  const double dx = p.k / static_cast<double>(kInteriorScanPoints + 1);
  std::optional<CoexistenceBranch> prev;
  double prev_x = 0.0;
  for (std::size_t n = 1; n <= kInteriorScanPoints; ++n) {
    const double x = dx * static_cast<double>(n);
    const auto cur = coexistence_branch(p, x);
    if (prev && cur && ((prev->prey_residual < 0.0) != (cur->prey_residual < 0.0) ||
                        cur->prey_residual == 0.0)) {
      double lo = prev_x, hi = x;
      double flo = prev->prey_residual;
      for (int it = 0; it < 200 && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        const auto bm = coexistence_branch(p, mid);
        if (!bm) break;
        if ((bm->prey_residual < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = bm->prey_residual;
        } else {
          hi = mid;
        }
      }
      const double xr = 0.5 * (lo + hi);
      const auto br = coexistence_branch(p, xr);
      // A sign change across a pole of y*(x) leaves a huge residual; skip it.
      if (br && admissible(*br) && std::abs(br->prey_residual) < 1e-6 * (1.0 + p.r)) {
        roots.push_back({xr, *br});
      }
    }
    prev = cur;
    prev_x = x;
  }
  return roots;
}

double distance(const State& a, const State& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

}  // namespace

std::string_view to_string(EquilibriumLabel label) {
  switch (label) {
    case EquilibriumLabel::Origin: return "Origin";
    case EquilibriumLabel::PreyOnly: return "PreyOnly";
    case EquilibriumLabel::PredScav: return "PredScav";
    case EquilibriumLabel::PredPrey: return "PredPrey";
    case EquilibriumLabel::ScavPrey: return "ScavPrey";
    case EquilibriumLabel::Interior: return "Interior";
  }
  return "Origin";
}

const ConditionCheck* Equilibrium::find_check(std::string_view name) const {
  for (const auto& c : existence) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<Equilibrium> predscav_equilibria(const ModelParams& p) {
  p.validate();
  std::vector<Equilibrium> out;
  out.push_back(make(State{}, Subsystem::PredScav, EquilibriumLabel::Origin));

  Equilibrium eq = make(State{0.0, kNaN, kNaN}, Subsystem::PredScav, EquilibriumLabel::PredScav);
  const double margin = p.f - p.i0 * p.e;
  eq.existence.push_back({"f - i0 e > 0", margin > 0.0, margin});
  if (margin > 0.0) {
    const double z0 = std::sqrt(p.e / margin);
    const double second = p.h * p.f * z0 - p.i * p.e;
    eq.existence.push_back({"h f z0 - i e > 0", second > 0.0, second});
    eq.z0 = z0;
    eq.exists = second > 0.0;
    eq.point = State{0.0, p.f * p.j * z0 / second, z0};
  } else {
    eq.existence.push_back({"h f z0 - i e > 0", false, kNaN});
    eq.exists = false;
  }
  out.push_back(eq);
  return out;
}

std::vector<Equilibrium> predprey_equilibria(const ModelParams& p) {
  p.validate();
  std::vector<Equilibrium> out;
  out.push_back(make(State{}, Subsystem::PredPrey, EquilibriumLabel::Origin));
  out.push_back(make(State{p.k, 0.0, 0.0}, Subsystem::PredPrey, EquilibriumLabel::PreyOnly));
  out.push_back(prey_consumer_interior(p, {p.a, p.a0, p.d, p.e, "d - a0 e > 0"},
                                       Subsystem::PredPrey, EquilibriumLabel::PredPrey, true));
  return out;
}

std::vector<Equilibrium> scavprey_equilibria(const ModelParams& p) {
  p.validate();
  std::vector<Equilibrium> out;
  out.push_back(make(State{}, Subsystem::ScavPrey, EquilibriumLabel::Origin));
  out.push_back(make(State{p.k, 0.0, 0.0}, Subsystem::ScavPrey, EquilibriumLabel::PreyOnly));
  out.push_back(prey_consumer_interior(p, {p.b, p.b0, p.g, p.j, "g - b0 j > 0"},
                                       Subsystem::ScavPrey, EquilibriumLabel::ScavPrey, false));
  return out;
}

std::optional<CoexistenceBranch> coexistence_branch(const ModelParams& p, double x) {
  const double x2 = x * x;
  // dy/dt = 0:  f z^2 / (1 + i0 z^2) = e - d x^2 / (1 + a0 x^2)
  const double num = p.e + (p.a0 * p.e - p.d) * x2;
  const double den = p.f * (1.0 + p.a0 * x2) - p.i0 * num;
  const double z2 = num / den;
  if (!(z2 > 0.0) || !std::isfinite(z2)) return std::nullopt;
  const double z = std::sqrt(z2);
  // dz/dt = 0:  y (h (1 + i0 z^2) - i z) = (j - g x^2 / (1 + b0 x^2)) (1 + i0 z^2)
  const double y = (p.j - p.g * x2 / (1.0 + p.b0 * x2)) * (1.0 + p.i0 * z2) /
                   (p.h * (1.0 + p.i0 * z2) - p.i * z);
  const double res =
      p.r * (1.0 - x / p.k) - p.a * x * y / (1.0 + p.a0 * x2) - p.b * x * z / (1.0 + p.b0 * x2);
  if (!std::isfinite(y) || !std::isfinite(res)) return std::nullopt;
  return CoexistenceBranch{y, z, res};
}

Equilibrium interior_equilibrium_direct(const ModelParams& p) {
  p.validate();
  Equilibrium eq = make(State{kNaN, kNaN, kNaN}, Subsystem::Full, EquilibriumLabel::Interior);
  const auto roots = scan_coexistence_roots(p);
  const auto count = static_cast<double>(roots.size());
  eq.existence.push_back({"single positive real root", roots.size() == 1, count});
  eq.multiple_roots = roots.size() > 1;
  if (roots.empty()) {
    eq.exists = false;
    return eq;
  }
  const Root& root = roots.front();
  const double x = root.x, z = root.branch.z;
  eq.point = State{x, root.branch.y, z};

  const double prey_bound = p.r * (1.0 + p.b0 * x * x) * (p.k - x) / (p.b * x);
  const double scav_bound = p.i * p.e / (p.h * p.f);
  eq.existence.push_back({"z* < r (1 + b0 x*^2)(k - x*) / (b x*)", z < prey_bound, prey_bound});
  eq.existence.push_back({"z* < i e / (h f)", z < scav_bound, scav_bound});
  eq.exists = std::all_of(eq.existence.begin(), eq.existence.end(),
                          [](const ConditionCheck& c) { return c.satisfied; });
  return eq;
}

std::vector<double> interior_poly_positive_roots(const ModelParams& p) {
  const PolyCoeffs coeffs = interior_poly_coeffs(p);
  return positive_real_roots(coeffs);
}

InteriorCrossCheck cross_check_interior(const ModelParams& p, double tolerance) {
  InteriorCrossCheck out;
  out.poly_roots = interior_poly_positive_roots(p);
  const Equilibrium direct = interior_equilibrium_direct(p);
  if (std::isfinite(direct.point.x) && !direct.multiple_roots) out.direct_x = direct.point.x;
  if (out.direct_x) {
    // The polynomial also carries the roots of the squared-away branch
    // (negative z*); pick the root nearest the direct solve.
    double best = std::numeric_limits<double>::infinity();
    for (double root : out.poly_roots) {
      best = std::min(best, std::abs(root - *out.direct_x) / *out.direct_x);
    }
    out.relative_gap = best;
    out.agrees = out.poly_roots.size() == 1 && best < tolerance;
  }
  return out;
}

std::vector<Equilibrium> all_equilibria(const ModelParams& p) {
  p.validate();
  std::vector<Equilibrium> candidates;
  candidates.push_back(make(State{}, Subsystem::Full, EquilibriumLabel::Origin));
  candidates.push_back(make(State{p.k, 0.0, 0.0}, Subsystem::Full, EquilibriumLabel::PreyOnly));
  candidates.push_back(predscav_equilibria(p)[1]);
  candidates.push_back(predprey_equilibria(p)[2]);
  candidates.push_back(scavprey_equilibria(p)[2]);
  candidates.push_back(interior_equilibrium_direct(p));

  std::vector<Equilibrium> out;
  for (Equilibrium& eq : candidates) {
    eq.subsystem = Subsystem::Full;
    if (eq.exists) {
      const bool duplicate = std::any_of(out.begin(), out.end(), [&](const Equilibrium& kept) {
        return kept.exists && distance(kept.point, eq.point) < 1e-9;
      });
      if (duplicate) continue;
    }
    out.push_back(std::move(eq));
  }
  return out;
}

}  // namespace pps
