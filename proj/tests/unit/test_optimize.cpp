#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "pps/optimize.hpp"

using namespace pps;

namespace {

Objective rosenbrock() {
  Objective obj;
  obj.value = [](const Vector& v) {
    return 100.0 * std::pow(v[1] - v[0] * v[0], 2) + std::pow(1.0 - v[0], 2);
  };
  obj.gradient = [](const Vector& v) {
    Vector g(2);
    g[0] = -400.0 * v[0] * (v[1] - v[0] * v[0]) - 2.0 * (1.0 - v[0]);
    g[1] = 200.0 * (v[1] - v[0] * v[0]);
    return g;
  };
  return obj;
}

// f = 1/2 (x - c)^T A (x - c) with A symmetric positive definite.
struct Quadratic {
  Matrix A;
  Vector c;

  Objective objective() const {
    Objective obj;
    obj.value = [this](const Vector& x) { return 0.5 * (x - c).dot(A * (x - c)); };
    obj.gradient = [this](const Vector& x) -> Vector { return A * (x - c); };
    return obj;
  }
};

Quadratic random_quadratic(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix M(n, n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) M(r, k) = u(rng);
  Quadratic q;
  q.A = M * M.transpose() + 0.5 * Matrix::Identity(n, n);
  q.c = Vector(n);
  for (int r = 0; r < n; ++r) q.c[r] = u(rng);
  return q;
}

}  // namespace

TEST_CASE("adam step with zero gradient leaves theta alone") {
  AdamConfig cfg;
  auto state = AdamState::zeros(3);
  Vector theta = Vector::Constant(3, 0.7);
  adam_step(state, Vector::Zero(3), theta, cfg);
  CHECK(theta.isApprox(Vector::Constant(3, 0.7)));
  CHECK(state.t == 1);
}

TEST_CASE("adam first step has magnitude alpha") {
  AdamConfig cfg;
  cfg.alpha = 0.01;
  auto state = AdamState::zeros(2);
  Vector theta = Vector::Zero(2);
  Vector g(2);
  g << 3.0, -0.5;
  adam_step(state, g, theta, cfg);
  CHECK(theta[0] == doctest::Approx(-0.01 * 3.0 / std::sqrt(9.0 + 1e-8)));
  CHECK(theta[1] == doctest::Approx(0.01 * 0.5 / std::sqrt(0.25 + 1e-8)));

  // Odd symmetry: flipping the gradient reflects the update.
  auto s2 = AdamState::zeros(2);
  Vector t2 = Vector::Zero(2);
  adam_step(s2, -g, t2, cfg);
  CHECK(t2.isApprox(-theta));
}

TEST_CASE("adam stays finite") {
  AdamConfig cfg;
  auto state = AdamState::zeros(1);
  Vector theta = Vector::Zero(1);
  for (double g : {1e300, -1e-300, 0.0, 1e-20, 5.0}) {
    Vector grad = Vector::Constant(1, g);
    adam_step(state, grad, theta, cfg);
    CHECK(std::isfinite(theta[0]));
  }
}

TEST_CASE("adam on a scalar parabola") {
  Objective obj;
  obj.value = [](const Vector& v) { return v[0] * v[0]; };
  obj.gradient = [](const Vector& v) -> Vector { return 2.0 * v; };
  AdamConfig cfg;
  cfg.alpha = 0.1;
  cfg.num_steps = 100;
  const auto res = adam_run(obj, Vector::Ones(1), cfg);
  CHECK(std::abs(res.theta[0]) < 0.05);
  CHECK(res.history.size() == 100);
  CHECK_FALSE(res.failure);
}

TEST_CASE("adam on shifted quadratics") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n : {3, 14}) {
    for (int trial = 0; trial < 10; ++trial) {
      Vector c(n);
      for (int r = 0; r < n; ++r) c[r] = u(rng);
      Objective obj;
      obj.value = [&c](const Vector& x) { return (x - c).squaredNorm(); };
      obj.gradient = [&c](const Vector& x) -> Vector { return 2.0 * (x - c); };
      AdamConfig cfg;
      cfg.alpha = 0.05;
      cfg.num_steps = 200;
      const auto res = adam_run(obj, Vector::Zero(n), cfg);
      CHECK((res.theta - c).norm() < 0.1);
      for (double l : res.history) CHECK(std::isfinite(l));
    }
  }
}

TEST_CASE("adam with zero gradient objective") {
  Objective obj;
  obj.value = [](const Vector&) { return 1.0; };
  AdamConfig cfg;
  cfg.num_steps = 10;
  Vector x0(2);
  x0 << 0.3, -1.0;
  const auto res = adam_run(obj, x0, cfg);
  CHECK(res.theta.isApprox(x0));
}

TEST_CASE("adam aborts on a non-finite loss") {
  Objective obj;
  obj.value = [](const Vector& v) { return v[0] < -0.05 ? std::nan("") : v[0] * v[0]; };
  obj.gradient = [](const Vector&) -> Vector { return Vector::Ones(1); };
  AdamConfig cfg;
  cfg.alpha = 0.01;
  cfg.num_steps = 50;
  const auto res = adam_run(obj, Vector::Zero(1), cfg);
  REQUIRE(res.failure);
  CHECK(res.failure->code() == ErrorCode::NonFiniteLoss);
  CHECK(res.history.size() < 50);
}

TEST_CASE("finite-difference gradient") {
  const auto obj = rosenbrock();
  Vector x(2);
  x << -0.3, 0.8;
  const Vector fd = fd_gradient(obj.value, x);
  CHECK((fd - obj.gradient(x)).norm() < 1e-6);
}

TEST_CASE("bfgs on the unit quadratic takes one step") {
  Objective obj;
  obj.value = [](const Vector& x) { return 0.5 * x.squaredNorm(); };
  obj.gradient = [](const Vector& x) -> Vector { return x; };
  Vector x0(3);
  x0 << 1.0, -2.0, 0.5;
  for (auto update : {BfgsUpdate::Printed, BfgsUpdate::Inverse}) {
    BfgsConfig cfg;
    cfg.update = update;
    const auto res = bfgs_run(obj, x0, cfg);
    CHECK(res.iterations == 1);
    CHECK(res.x.norm() < 1e-14);
  }
}

TEST_CASE("bfgs at a stationary point returns immediately") {
  Objective obj;
  obj.value = [](const Vector& x) { return x.squaredNorm(); };
  obj.gradient = [](const Vector& x) -> Vector { return 2.0 * x; };
  const auto res = bfgs_run(obj, Vector::Zero(4), BfgsConfig{});
  CHECK(res.iterations == 0);
  CHECK(res.status == BfgsStatus::GradientTolerance);
  CHECK(res.history.size() == 1);
}

TEST_CASE("bfgs on random convex quadratics") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const auto q = random_quadratic(rng, 10);
    BfgsConfig cfg;
    cfg.max_iterations = 30;
    const auto res = bfgs_run(q.objective(), Vector::Zero(10), cfg);
    CHECK(res.gradient_norm < 1e-6);
    CHECK(res.iterations <= 30);
    for (std::size_t n = 1; n < res.history.size(); ++n) CHECK(res.history[n] <= res.history[n - 1]);
  }
}

TEST_CASE("bfgs on rosenbrock") {
  Vector x0(2);
  x0 << -1.2, 1.0;
  BfgsConfig cfg;
  const auto res = bfgs_run(rosenbrock(), x0, cfg);
  CHECK(res.iterations <= 200);
  CHECK(std::abs(res.x[0] - 1.0) < 1e-5);
  CHECK(std::abs(res.x[1] - 1.0) < 1e-5);
  for (std::size_t n = 1; n < res.history.size(); ++n) CHECK(res.history[n] <= res.history[n - 1]);

  // Finite-difference gradients reach the same point.
  Objective fd = rosenbrock();
  fd.gradient = nullptr;
  const auto res_fd = bfgs_run(fd, x0, cfg);
  CHECK(std::abs(res_fd.x[0] - 1.0) < 1e-5);
  CHECK(std::abs(res_fd.x[1] - 1.0) < 1e-5);
}

TEST_CASE("printed update keeps the matrix symmetric and descends") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const auto q = random_quadratic(rng, 6);
    BfgsConfig cfg;
    cfg.update = BfgsUpdate::Printed;
    cfg.max_iterations = 50;
    const auto res = bfgs_run(q.objective(), Vector::Zero(6), cfg);
    for (std::size_t n = 1; n < res.history.size(); ++n) CHECK(res.history[n] <= res.history[n - 1]);
    CHECK(res.history.back() < res.history.front());
  }
}

TEST_CASE("bfgs projection") {
  // Minimum of (x + 1)^2 lies below the floor; the projected iterate sits on it.
  Objective obj;
  obj.value = [](const Vector& x) { return std::pow(x[0] + 1.0, 2); };
  obj.gradient = [](const Vector& x) -> Vector { return Vector::Constant(1, 2.0 * (x[0] + 1.0)); };
  BfgsConfig cfg;
  cfg.project = [](Vector& x) { x = x.cwiseMax(1e-6); };
  const auto res = bfgs_run(obj, Vector::Constant(1, 2.0), cfg);
  CHECK(res.x[0] == doctest::Approx(1e-6));
}

TEST_CASE("bfgs line search failure is reported") {
  // Gradient points the wrong way, so no step decreases the value.
  Objective obj;
  obj.value = [](const Vector& x) { return x[0]; };
  obj.gradient = [](const Vector&) -> Vector { return Vector::Constant(1, -1.0); };
  const auto res = bfgs_run(obj, Vector::Zero(1), BfgsConfig{});
  CHECK(res.status == BfgsStatus::LineSearchFailed);
  CHECK(res.x[0] == 0.0);
}

TEST_CASE("loss history csv") {
  std::ostringstream out;
  write_loss_history_csv({3.0, 2.5, 1.0}, out);
  CHECK(out.str() == "step,loss\n0,3\n1,2.5\n2,1\n");
}
