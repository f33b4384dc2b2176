#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "pps/model.hpp"

namespace pps {

enum class Method { RK4Fixed, RK45Adaptive };
enum class NegativityPolicy { Diagnose, Clamp };

struct SolverConfig {
  Method method = Method::RK45Adaptive;
  double step = 1e-2;  // fixed step for RK4, initial step for RK45
  double t_start = 0.0;
  double t_end = 1.0;
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  NegativityPolicy negativity = NegativityPolicy::Diagnose;
  std::size_t max_steps = 5'000'000;

  void validate() const;
};

enum class Termination { Completed };

struct SolverDiagnostics {
  std::size_t steps = 0;
  std::size_t rejected_steps = 0;
  double min_component = 0.0;
  std::size_t clamp_events = 0;
  bool went_negative = false;
  Termination reason = Termination::Completed;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;
  SolverDiagnostics diagnostics;

  std::size_t size() const { return states.size(); }
  bool empty() const { return states.empty(); }
  const State& back() const { return states.back(); }
};

// Population ceiling above which the run is declared a blow-up.
inline constexpr double kOverflowGuard = 1e12;
inline constexpr double kMinAdaptiveStep = 1e-12;

// Integrates the selected subsystem from s0 over [cfg.t_start, cfg.t_end].
// RK4 records every step; RK45 records every accepted step.
// Throws NumericalOverflow, StepUnderflow or StepBudgetExceeded.
Trajectory integrate(const ModelParams& p, const State& s0, const SolverConfig& cfg,
                     Subsystem mask = Subsystem::Full);

// Like integrate, but returns states exactly at the requested times, which must
// be strictly increasing and start at s0's time. The RK4 step is shortened so
// that every interval is covered by a whole number of equal substeps.
Trajectory integrate_at(const ModelParams& p, const State& s0, std::span<const double> times,
                        const SolverConfig& cfg, Subsystem mask = Subsystem::Full);

// One classical RK4 step of size h (h may be negative). No guards.
State rk4_step(const ModelParams& p, const State& s, double h, Subsystem mask = Subsystem::Full);

// Mean state over the trailing window if every component stays within tol of it.
std::optional<State> detect_settling(const Trajectory& traj, double window, double tol);

void write_trajectory_csv(const Trajectory& traj, std::ostream& out);

}  // namespace pps
