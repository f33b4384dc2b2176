#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "pps/error.hpp"

namespace pps {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Scalar objective with an optional analytic gradient. Without one, central
// differences with step 1e-6 (1 + |theta_i|) are used.
struct Objective {
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> gradient;

  Vector grad(const Vector& theta) const;
};

Vector fd_gradient(const std::function<double(const Vector&)>& f, const Vector& theta,
                   double relative_step = 1e-6);

struct AdamConfig {
  double alpha = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  std::size_t num_steps = 100;

  void validate() const;
};

struct AdamState {
  Vector m;
  Vector v;
  std::size_t t = 0;

  static AdamState zeros(Eigen::Index n);
};

// theta <- theta - alpha m* / sqrt(v* + epsilon), epsilon inside the root.
void adam_step(AdamState& state, const Vector& grad, Vector& theta, const AdamConfig& cfg);

struct AdamResult {
  Vector theta;
  std::vector<double> history;  // loss before each step
  std::optional<Error> failure;  // NonFiniteLoss; history is partial
};

AdamResult adam_run(const Objective& obj, const Vector& theta0, const AdamConfig& cfg);

enum class BfgsUpdate {
  // B_{k+1} = B + y y^T / (y^T s) - B s s^T B^T / (s^T B s), applied to the
  // matrix that multiplies the gradient in p = -B g.
  Printed,
  // Standard inverse-Hessian form (I - rho s y^T) B (I - rho y s^T) + rho s s^T.
  Inverse,
};

std::string_view to_string(BfgsUpdate u);

struct BfgsConfig {
  std::size_t max_iterations = 200;
  double gradient_tolerance = 1e-6;
  double step_tolerance = 1e-10;
  double initial_step = 1.0;
  double shrink = 0.5;
  double sufficient_decrease = 1e-4;
  std::size_t max_halvings = 60;
  double curvature_floor = 1e-12;
  BfgsUpdate update = BfgsUpdate::Inverse;
  // Applied to every trial point, e.g. a positivity floor.
  std::function<void(Vector&)> project;
  // Componentwise floor. Components resting on it with a gradient pointing
  // below it are held fixed for that iteration and ignored by the gradient test.
  std::optional<double> lower_bound;
  // Called after every accepted step with the iteration count, x and f(x).
  std::function<void(std::size_t, const Vector&, double)> on_accept;

  void validate() const;
};

enum class BfgsStatus { GradientTolerance, StepTolerance, MaxIterations, LineSearchFailed };

std::string_view to_string(BfgsStatus s);

struct BfgsResult {
  Vector x;
  std::vector<double> history;  // f at x0 and after every accepted step
  std::size_t iterations = 0;
  std::size_t skipped_updates = 0;
  double gradient_norm = 0.0;
  BfgsStatus status = BfgsStatus::MaxIterations;
};

// Quasi-Newton descent with backtracking Armijo line search. Non-finite trial
// values are treated as +inf and shrink the step.
BfgsResult bfgs_run(const Objective& obj, const Vector& x0, const Matrix& B0,
                    const BfgsConfig& cfg);
BfgsResult bfgs_run(const Objective& obj, const Vector& x0, const BfgsConfig& cfg);

// CSV `step,loss`.
void write_loss_history_csv(const std::vector<double>& history, std::ostream& out);

}  // namespace pps
