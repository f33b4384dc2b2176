#include "pps/optimize.hpp"

#include <cmath>
#include <limits>

#include "pps/format.hpp"

namespace pps {

Vector Objective::grad(const Vector& theta) const {
  if (gradient) return gradient(theta);
  return fd_gradient(value, theta);
}

Vector fd_gradient(const std::function<double(const Vector&)>& f, const Vector& theta,
                   double relative_step) {
  Vector g(theta.size());
  Vector probe = theta;
  for (Eigen::Index n = 0; n < theta.size(); ++n) {
    const double h = relative_step * (1.0 + std::abs(theta[n]));
    probe[n] = theta[n] + h;
    const double up = f(probe);
    probe[n] = theta[n] - h;
    const double down = f(probe);
    probe[n] = theta[n];
    g[n] = (up - down) / (2.0 * h);
  }
  return g;
}

void AdamConfig::validate() const {
  if (!(alpha > 0.0) || !(epsilon > 0.0) || !(beta1 >= 0.0 && beta1 < 1.0) ||
      !(beta2 >= 0.0 && beta2 < 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "adam: need alpha, epsilon > 0 and 0 <= beta1, beta2 < 1");
  }
}

AdamState AdamState::zeros(Eigen::Index n) {
  return AdamState{Vector::Zero(n), Vector::Zero(n), 0};
}

void adam_step(AdamState& state, const Vector& grad, Vector& theta, const AdamConfig& cfg) {
  if (state.m.size() != theta.size() || state.v.size() != theta.size() ||
      grad.size() != theta.size()) {
    throw Error(ErrorCode::DimensionMismatch, "adam_step: state, gradient and theta differ in size");
  }
  state.t += 1;
  const double t = static_cast<double>(state.t);
  state.m = cfg.beta1 * state.m + (1.0 - cfg.beta1) * grad;
  state.v = cfg.beta2 * state.v + (1.0 - cfg.beta2) * grad.cwiseProduct(grad);
  const double c1 = 1.0 - std::pow(cfg.beta1, t);
  const double c2 = 1.0 - std::pow(cfg.beta2, t);
  for (Eigen::Index n = 0; n < theta.size(); ++n) {
    const double m_hat = state.m[n] / c1;
    const double v_hat = state.v[n] / c2;
    theta[n] -= cfg.alpha * m_hat / std::sqrt(v_hat + cfg.epsilon);
  }
}

AdamResult adam_run(const Objective& obj, const Vector& theta0, const AdamConfig& cfg) {
  cfg.validate();
  AdamResult out;
  out.theta = theta0;
  out.history.reserve(cfg.num_steps);
  AdamState state = AdamState::zeros(theta0.size());
  for (std::size_t step = 0; step < cfg.num_steps; ++step) {
    const double loss = obj.value(out.theta);
    if (!std::isfinite(loss)) {
      out.failure = Error(ErrorCode::NonFiniteLoss,
                          "adam: non-finite loss at step " + std::to_string(step));
      return out;
    }
    out.history.push_back(loss);
    const Vector g = obj.grad(out.theta);
    if (!g.allFinite()) {
      out.failure = Error(ErrorCode::NonFiniteLoss,
                          "adam: non-finite gradient at step " + std::to_string(step));
      return out;
    }
    adam_step(state, g, out.theta, cfg);
  }
  return out;
}

std::string_view to_string(BfgsUpdate u) {
  return u == BfgsUpdate::Printed ? "printed" : "inverse";
}

std::string_view to_string(BfgsStatus s) {
  switch (s) {
    case BfgsStatus::GradientTolerance: return "gradient_tolerance";
    case BfgsStatus::StepTolerance: return "step_tolerance";
    case BfgsStatus::MaxIterations: return "max_iterations";
    case BfgsStatus::LineSearchFailed: return "line_search_failed";
  }
  return "max_iterations";
}

void BfgsConfig::validate() const {
  if (max_iterations == 0 || !(gradient_tolerance > 0.0) || !(step_tolerance > 0.0) ||
      !(initial_step > 0.0) || !(shrink > 0.0 && shrink < 1.0) ||
      !(sufficient_decrease > 0.0 && sufficient_decrease < 1.0) || max_halvings == 0) {
    throw Error(ErrorCode::InvalidConfig, "bfgs: invalid configuration");
  }
}

namespace {

double safe_value(const Objective& obj, const Vector& x) {
  const double v = obj.value(x);
  return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
}

void update_matrix(Matrix& B, const Vector& s, const Vector& y, BfgsUpdate kind) {
  const double ys = y.dot(s);
  if (kind == BfgsUpdate::Printed) {
    const Vector Bs = B * s;
    const double sBs = s.dot(Bs);
    B += (y * y.transpose()) / ys - (Bs * Bs.transpose()) / sBs;
  } else {
    const double rho = 1.0 / ys;
    const Eigen::Index n = s.size();
    const Matrix I = Matrix::Identity(n, n);
    B = (I - rho * s * y.transpose()) * B * (I - rho * y * s.transpose()) +
        rho * s * s.transpose();
  }
  B = 0.5 * (B + B.transpose());
}

}  // namespace

BfgsResult bfgs_run(const Objective& obj, const Vector& x0, const BfgsConfig& cfg) {
  return bfgs_run(obj, x0, Matrix::Identity(x0.size(), x0.size()), cfg);
}

BfgsResult bfgs_run(const Objective& obj, const Vector& x0, const Matrix& B0,
                    const BfgsConfig& cfg) {
  cfg.validate();
  if (B0.rows() != x0.size() || B0.cols() != x0.size()) {
    throw Error(ErrorCode::DimensionMismatch, "bfgs: B0 does not match x0");
  }
  BfgsResult out;
  Vector x = x0;
  if (cfg.project) cfg.project(x);
  Matrix B = B0;
  double fx = safe_value(obj, x);
  if (!std::isfinite(fx)) throw Error(ErrorCode::NonFiniteLoss, "bfgs: objective not finite at x0");
  Vector g = obj.grad(x);
  out.history.push_back(fx);

  // Gradient with the components held at the lower bound removed.
  auto free_part = [&](const Vector& grad) {
    Vector out_g = grad;
    if (cfg.lower_bound) {
      const double tol = 1e-12 * std::max(1.0, std::abs(*cfg.lower_bound));
      for (Eigen::Index n = 0; n < x.size(); ++n) {
        if (x[n] <= *cfg.lower_bound + tol && grad[n] > 0.0) out_g[n] = 0.0;
      }
    }
    return out_g;
  };

  out.status = BfgsStatus::MaxIterations;
  for (std::size_t iter = 0; iter < cfg.max_iterations; ++iter) {
    const Vector g_free = free_part(g);
    out.gradient_norm = g_free.norm();
    if (out.gradient_norm < cfg.gradient_tolerance) {
      out.status = BfgsStatus::GradientTolerance;
      break;
    }
    Vector p = -(B * g_free);
    for (Eigen::Index n = 0; n < p.size(); ++n) {
      if (g_free[n] == 0.0 && g[n] != 0.0) p[n] = 0.0;
    }
    double slope = g.dot(p);
    if (!(slope < 0.0)) {
      // Lost positive definiteness; restart from steepest descent.
      B = Matrix::Identity(x.size(), x.size());
      p = -g_free;
      slope = g.dot(p);
    }

    double alpha = cfg.initial_step;
    bool accepted = false;
    Vector trial;
    double f_trial = 0.0;
    for (std::size_t h = 0; h <= cfg.max_halvings; ++h) {
      trial = x + alpha * p;
      if (cfg.project) cfg.project(trial);
      f_trial = safe_value(obj, trial);
      // Decrease is measured along the projected step actually taken.
      const double taken = cfg.project ? g.dot(trial - x) : alpha * slope;
      if (taken < 0.0 && f_trial <= fx + cfg.sufficient_decrease * taken) {
        accepted = true;
        break;
      }
      alpha *= cfg.shrink;
    }
    if (!accepted) {
      out.status = BfgsStatus::LineSearchFailed;
      break;
    }

    const Vector s = trial - x;
    const Vector g_new = obj.grad(trial);
    const Vector y = g_new - g;
    x = trial;
    fx = f_trial;
    g = g_new;
    out.history.push_back(fx);
    out.iterations = iter + 1;
    if (cfg.on_accept) cfg.on_accept(out.iterations, x, fx);

    if (y.dot(s) > cfg.curvature_floor) {
      update_matrix(B, s, y, cfg.update);
    } else {
      ++out.skipped_updates;
    }
    if (s.norm() < cfg.step_tolerance) {
      out.status = BfgsStatus::StepTolerance;
      break;
    }
  }
  out.gradient_norm = free_part(g).norm();
  if (out.status == BfgsStatus::MaxIterations && out.gradient_norm < cfg.gradient_tolerance) {
    out.status = BfgsStatus::GradientTolerance;
  }
  out.x = x;
  return out;
}

void write_loss_history_csv(const std::vector<double>& history, std::ostream& out) {
  out << "step,loss\n";
  for (std::size_t n = 0; n < history.size(); ++n) {
    out << n << ',' << format_double(history[n]) << '\n';
  }
}

}  // namespace pps
