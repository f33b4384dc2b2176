#include "pps/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "pps/error.hpp"
#include "pps/format.hpp"

namespace pps {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 eval(const ModelParams& p, const Vec3& u) {
  return rhs(State{u[0], u[1], u[2], 0.0}, p).values();
}

Vec3 axpy(const Vec3& u, double h, const Vec3& v) {
  return {u[0] + h * v[0], u[1] + h * v[1], u[2] + h * v[2]};
}

Vec3 rk4(const ModelParams& p, const Vec3& u, double h) {
  const Vec3 k1 = eval(p, u);
  const Vec3 k2 = eval(p, axpy(u, 0.5 * h, k1));
  const Vec3 k3 = eval(p, axpy(u, 0.5 * h, k2));
  const Vec3 k4 = eval(p, axpy(u, h, k3));
  Vec3 out;
  for (int c = 0; c < 3; ++c) out[c] = u[c] + h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
  return out;
}

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// Difference between the 5th and embedded 4th order weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

struct DopriStep {
  Vec3 next;
  Vec3 k_next;  // derivative at next (FSAL)
  double err = 0.0;
};

DopriStep dopri(const ModelParams& p, const Vec3& u, const Vec3& k1, double h, double atol,
                double rtol) {
  Vec3 tmp;
  for (int c = 0; c < 3; ++c) tmp[c] = u[c] + h * a21 * k1[c];
  const Vec3 k2 = eval(p, tmp);
  for (int c = 0; c < 3; ++c) tmp[c] = u[c] + h * (a31 * k1[c] + a32 * k2[c]);
  const Vec3 k3 = eval(p, tmp);
  for (int c = 0; c < 3; ++c) tmp[c] = u[c] + h * (a41 * k1[c] + a42 * k2[c] + a43 * k3[c]);
  const Vec3 k4 = eval(p, tmp);
  for (int c = 0; c < 3; ++c)
    tmp[c] = u[c] + h * (a51 * k1[c] + a52 * k2[c] + a53 * k3[c] + a54 * k4[c]);
  const Vec3 k5 = eval(p, tmp);
  for (int c = 0; c < 3; ++c)
    tmp[c] = u[c] + h * (a61 * k1[c] + a62 * k2[c] + a63 * k3[c] + a64 * k4[c] + a65 * k5[c]);
  const Vec3 k6 = eval(p, tmp);

  DopriStep out;
  for (int c = 0; c < 3; ++c)
    out.next[c] = u[c] + h * (b1 * k1[c] + b3 * k3[c] + b4 * k4[c] + b5 * k5[c] + b6 * k6[c]);
  out.k_next = eval(p, out.next);

  double err = 0.0;
  for (int c = 0; c < 3; ++c) {
    const double local = h * (e1 * k1[c] + e3 * k3[c] + e4 * k4[c] + e5 * k5[c] + e6 * k6[c] +
                              e7 * out.k_next[c]);
    const double scale = atol + rtol * std::max(std::abs(u[c]), std::abs(out.next[c]));
    err = std::max(err, std::abs(local) / scale);
  }
  out.err = err;
  return out;
}

void check_mask(const State& s0, Subsystem mask) {
  // rhs_subsystem enforces the zero component; afterwards it stays exactly
  // zero because every term of its derivative carries that factor.
  (void)rhs_subsystem(s0, ModelParams{}, mask);
}

void check_initial(const State& s0) {
  for (double v : s0.values()) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::InvalidConfig, "initial state must be finite and nonnegative");
    }
  }
}

class Recorder {
 public:
  Recorder(const SolverConfig& cfg, Trajectory& traj) : cfg_(cfg), traj_(traj) {}

  // Applies guards and the negativity policy; returns the (possibly clamped) state.
  Vec3 accept(Vec3 u, double t, bool record) {
    for (double& v : u) {
      if (!std::isfinite(v) || std::abs(v) > kOverflowGuard) {
        throw Error(ErrorCode::NumericalOverflow,
                    "population left [-1e12, 1e12] at t = " + std::to_string(t));
      }
      auto& diag = traj_.diagnostics;
      diag.min_component = std::min(diag.min_component, v);
      if (v < 0.0) {
        diag.went_negative = true;
        if (cfg_.negativity == NegativityPolicy::Clamp) {
          v = 0.0;
          ++diag.clamp_events;
        }
      }
    }
    ++traj_.diagnostics.steps;
    if (traj_.diagnostics.steps > cfg_.max_steps) {
      throw Error(ErrorCode::StepBudgetExceeded,
                  "more than " + std::to_string(cfg_.max_steps) + " steps");
    }
    if (record) push(u, t);
    return u;
  }

  void push(const Vec3& u, double t) {
    traj_.times.push_back(t);
    traj_.states.push_back(State{u[0], u[1], u[2], t});
  }

 private:
  const SolverConfig& cfg_;
  Trajectory& traj_;
};

// Advances u from t0 to t1 with RK45, ending exactly at t1. h carries the
// step size between calls.
Vec3 dopri_interval(const ModelParams& p, Vec3 u, double t0, double t1, double& h,
                    const SolverConfig& cfg, Recorder& rec, bool record_steps) {
  double t = t0;
  Vec3 k1 = eval(p, u);
  while (t < t1) {
    const bool last = t + h >= t1;
    const double step = last ? t1 - t : h;
    if (step < kMinAdaptiveStep && !last) {
      throw Error(ErrorCode::StepUnderflow, "adaptive step fell below 1e-12 at t = " +
                                                std::to_string(t));
    }
    const DopriStep trial = dopri(p, u, k1, step, cfg.abs_tol, cfg.rel_tol);
    const double factor =
        trial.err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(trial.err, -0.2), 0.2, 5.0);
    if (trial.err <= 1.0) {
      t = last ? t1 : t + step;
      const Vec3 accepted = rec.accept(trial.next, t, record_steps);
      k1 = accepted == trial.next ? trial.k_next : eval(p, accepted);
      u = accepted;
      if (!last || factor < 1.0) h = step * factor;
    } else {
      h = step * factor;
      if (h < kMinAdaptiveStep) {
        throw Error(ErrorCode::StepUnderflow,
                    "adaptive step fell below 1e-12 at t = " + std::to_string(t));
      }
    }
  }
  return u;
}

}  // namespace

void SolverConfig::validate() const {
  if (!(step > 0.0) || !std::isfinite(step)) throw Error(ErrorCode::InvalidConfig, "step must be > 0");
  if (!(t_end > t_start)) throw Error(ErrorCode::InvalidConfig, "t_end must exceed t_start");
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw Error(ErrorCode::InvalidConfig, "tolerances must be > 0");
  }
  if (max_steps == 0) throw Error(ErrorCode::InvalidConfig, "max_steps must be > 0");
}

State rk4_step(const ModelParams& p, const State& s, double h, Subsystem mask) {
  check_mask(s, mask);
  const Vec3 u = rk4(p, s.values(), h);
  return State{u[0], u[1], u[2], s.t + h};
}

Trajectory integrate(const ModelParams& p, const State& s0, const SolverConfig& cfg,
                     Subsystem mask) {
  cfg.validate();
  check_initial(s0);
  check_mask(s0, mask);

  Trajectory traj;
  traj.diagnostics.min_component = std::min({s0.x, s0.y, s0.z});
  Recorder rec(cfg, traj);
  Vec3 u = s0.values();
  rec.push(u, cfg.t_start);

  if (cfg.method == Method::RK4Fixed) {
    const double span = cfg.t_end - cfg.t_start;
    const auto n = static_cast<std::size_t>(std::ceil(span / cfg.step - 1e-9));
    const double h = span / static_cast<double>(n);
    for (std::size_t s = 1; s <= n; ++s) {
      const double t = s == n ? cfg.t_end : cfg.t_start + static_cast<double>(s) * h;
      u = rec.accept(rk4(p, u, h), t, true);
    }
  } else {
    double h = cfg.step;
    dopri_interval(p, u, cfg.t_start, cfg.t_end, h, cfg, rec, true);
  }
  return traj;
}

Trajectory integrate_at(const ModelParams& p, const State& s0, std::span<const double> times,
                        const SolverConfig& cfg, Subsystem mask) {
  if (times.empty()) throw Error(ErrorCode::InvalidConfig, "no output times");
  for (std::size_t n = 1; n < times.size(); ++n) {
    if (!(times[n] > times[n - 1])) {
      throw Error(ErrorCode::InvalidConfig, "output times must be strictly increasing");
    }
  }
  SolverConfig local = cfg;
  local.t_start = times.front();
  local.t_end = times.size() > 1 ? times.back() : times.front() + 1.0;
  local.validate();
  check_initial(s0);
  check_mask(s0, mask);

  Trajectory traj;
  traj.diagnostics.min_component = std::min({s0.x, s0.y, s0.z});
  Recorder rec(local, traj);
  Vec3 u = s0.values();
  rec.push(u, times.front());

  double h = local.step;
  for (std::size_t n = 1; n < times.size(); ++n) {
    const double t0 = times[n - 1], t1 = times[n];
    if (local.method == Method::RK4Fixed) {
      const auto substeps =
          std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((t1 - t0) / local.step - 1e-9)));
      const double dt = (t1 - t0) / static_cast<double>(substeps);
      for (std::size_t s = 1; s <= substeps; ++s) {
        u = rec.accept(rk4(p, u, dt), s == substeps ? t1 : t0 + static_cast<double>(s) * dt, false);
      }
    } else {
      u = dopri_interval(p, u, t0, t1, h, local, rec, false);
    }
    rec.push(u, t1);
  }
  return traj;
}

std::optional<State> detect_settling(const Trajectory& traj, double window, double tol) {
  if (traj.empty()) return std::nullopt;
  const double t_last = traj.times.back();
  std::size_t first = traj.size() - 1;
  while (first > 0 && traj.times[first - 1] >= t_last - window) --first;

  State mean;
  const double count = static_cast<double>(traj.size() - first);
  for (std::size_t n = first; n < traj.size(); ++n) {
    mean.x += traj.states[n].x / count;
    mean.y += traj.states[n].y / count;
    mean.z += traj.states[n].z / count;
  }
  mean.t = t_last;
  for (std::size_t n = first; n < traj.size(); ++n) {
    const State& s = traj.states[n];
    const double dev =
        std::max({std::abs(s.x - mean.x), std::abs(s.y - mean.y), std::abs(s.z - mean.z)});
    if (!(dev < tol)) return std::nullopt;
  }
  return mean;
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  const auto fmt = format_double;
  out << "t,x,y,z\n";
  for (const State& s : traj.states) {
    out << fmt(s.t) << ',' << fmt(s.x) << ',' << fmt(s.y) << ',' << fmt(s.z) << '\n';
  }
}

}  // namespace pps
