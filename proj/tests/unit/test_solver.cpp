#include <doctest.h>

#include <cmath>
#include <sstream>

#include "../common/fixtures.hpp"
#include "pps/error.hpp"
#include "pps/solver.hpp"

using namespace pps;

namespace {

SolverConfig rk45(double t_end) {
  SolverConfig cfg;
  cfg.t_end = t_end;
  return cfg;
}

SolverConfig rk4(double t_end, double step) {
  SolverConfig cfg;
  cfg.method = Method::RK4Fixed;
  cfg.step = step;
  cfg.t_end = t_end;
  return cfg;
}

double gap(const State& a, const State& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

}  // namespace

TEST_CASE("origin stays at origin") {
  for (auto cfg : {rk45(50.0), rk4(50.0, 0.1)}) {
    const auto traj = integrate(fixtures::settling(), State{}, cfg);
    for (const auto& s : traj.states) {
      CHECK(s.x == 0.0);
      CHECK(s.y == 0.0);
      CHECK(s.z == 0.0);
    }
  }
}

TEST_CASE("trajectory bookkeeping") {
  const auto traj = integrate(fixtures::settling(), fixtures::kThreeSpeciesStart, rk45(20.0));
  REQUIRE(traj.size() == traj.times.size());
  CHECK(traj.times.front() == 0.0);
  CHECK(traj.states.front().t == 0.0);
  CHECK(traj.times.back() == doctest::Approx(20.0));
  for (std::size_t n = 1; n < traj.size(); ++n) CHECK(traj.times[n] > traj.times[n - 1]);
  CHECK(traj.diagnostics.steps > 0);
}

TEST_CASE("decay set dies out") {
  const auto traj = integrate(fixtures::decay(), fixtures::kDecayStart, rk45(200.0),
                              Subsystem::PredScav);
  const auto& s = traj.back();
  CHECK(std::hypot(s.y, s.z) < 1e-3);
  CHECK(s.x == 0.0);
}

TEST_CASE("predator-prey set reaches the coexistence point") {
  const auto traj = integrate(fixtures::predprey(), fixtures::kPredPreyStart, rk45(500.0),
                              Subsystem::PredPrey);
  CHECK(gap(traj.back(), State{1.1547005, 0.4880339, 0.0}) < 1e-2);
  CHECK(traj.back().z == 0.0);
}

TEST_CASE("settling detection") {
  Trajectory constant;
  for (int n = 0; n <= 10; ++n) {
    constant.times.push_back(n);
    constant.states.push_back(State{1.0, 2.0, 3.0, double(n)});
  }
  const auto c = detect_settling(constant, 5.0, 1e-9);
  REQUIRE(c);
  CHECK(c->x == doctest::Approx(1.0));
  CHECK(c->z == doctest::Approx(3.0));

  const auto ex4 = integrate(fixtures::settling(), fixtures::kThreeSpeciesStart, rk45(500.0));
  const auto settled = detect_settling(ex4, 100.0, 1e-2);
  REQUIRE(settled);
  CHECK(gap(*settled, State{1.1331137, 0.33726859, 0.168040476}) < 1e-2);

  const auto ex3 = integrate(fixtures::oscillating(), fixtures::kThreeSpeciesStart, rk45(500.0));
  CHECK_FALSE(detect_settling(ex3, 100.0, 1e-2));
}

TEST_CASE("rk4 is fourth order") {
  const auto p = fixtures::predprey();
  auto endpoint = [&](double h) {
    return integrate(p, fixtures::kPredPreyStart, rk4(10.0, h), Subsystem::PredPrey).back();
  };
  const State a = endpoint(0.02), b = endpoint(0.01), c = endpoint(0.005);
  const double ratio = gap(a, b) / gap(b, c);
  CHECK(ratio == doctest::Approx(16.0).epsilon(0.1));
}

TEST_CASE("rk4 forward then backward") {
  const auto p = fixtures::predprey();
  State s = fixtures::kPredPreyStart;
  const double h = 1e-3;
  for (int n = 0; n < 1000; ++n) s = rk4_step(p, s, h, Subsystem::PredPrey);
  for (int n = 0; n < 1000; ++n) s = rk4_step(p, s, -h, Subsystem::PredPrey);
  CHECK(gap(s, fixtures::kPredPreyStart) < 1e-6);
}

TEST_CASE("adaptive and fixed methods agree") {
  struct Case {
    ModelParams p;
    State s0;
    Subsystem mask;
  };
  const Case cases[] = {
      {fixtures::decay(), fixtures::kDecayStart, Subsystem::PredScav},
      {fixtures::predprey(), fixtures::kPredPreyStart, Subsystem::PredPrey},
      {fixtures::oscillating(), fixtures::kThreeSpeciesStart, Subsystem::Full},
      {fixtures::settling(), fixtures::kThreeSpeciesStart, Subsystem::Full},
  };
  for (const auto& c : cases) {
    const auto a = integrate(c.p, c.s0, rk45(20.0), c.mask).back();
    const auto b = integrate(c.p, c.s0, rk4(20.0, 1e-3), c.mask).back();
    CHECK(gap(a, b) < 10 * 1e-9 * (1.0 + std::max({a.x, a.y, a.z})));
  }
}

TEST_CASE("integrate_at hits the requested times") {
  const std::vector<double> times = {0.0, 0.5, 1.25, 3.0};
  for (auto cfg : {rk45(1.0), rk4(1.0, 0.1)}) {
    const auto traj = integrate_at(fixtures::settling(), fixtures::kThreeSpeciesStart, times, cfg);
    REQUIRE(traj.size() == times.size());
    for (std::size_t n = 0; n < times.size(); ++n) {
      CHECK(traj.times[n] == times[n]);
      CHECK(traj.states[n].t == times[n]);
    }
  }
  const auto a = integrate_at(fixtures::settling(), fixtures::kThreeSpeciesStart, times, rk45(1.0));
  const auto b = integrate_at(fixtures::settling(), fixtures::kThreeSpeciesStart, times, rk4(1.0, 1e-3));
  CHECK(gap(a.back(), b.back()) < 1e-8);
}

TEST_CASE("overflow guard") {
  auto p = fixtures::settling();
  p.r = 1e9;
  try {
    integrate(p, fixtures::kThreeSpeciesStart, rk45(10.0));
    FAIL("expected overflow");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NumericalOverflow);
  }
}

TEST_CASE("negativity policies") {
  // A coarse RK4 step on this stiff-ish draw overshoots below zero.
  const auto p = parse_kv(
      "r=1.5117412787918507\nk=2.0570825865145315\na=1.2936004358856068\n"
      "a0=0.13754409157747438\nb=1.521056298947299\nb0=1.6196932634314465\n"
      "d=2.5821606021292465\ne=1.4357810566621312\nf=2.615086803512154\n"
      "g=1.4102630535451903\nh=0.42371578694138134\ni=2.663899855711881\n"
      "i0=0.2742292121131863\nj=2.91236564352682\n");
  const State s0{0.261894, 2.9613, 0.85611};
  auto cfg = rk4(10.0, 0.5);
  const auto diag = integrate(p, s0, cfg);
  CHECK(diag.diagnostics.went_negative);
  CHECK(diag.diagnostics.min_component < 0.0);
  CHECK(diag.diagnostics.clamp_events == 0);

  cfg.negativity = NegativityPolicy::Clamp;
  const auto clamped = integrate(p, s0, cfg);
  CHECK(clamped.diagnostics.clamp_events > 0);
  for (const auto& s : clamped.states) {
    CHECK(s.x >= 0.0);
    CHECK(s.y >= 0.0);
    CHECK(s.z >= 0.0);
  }
}

TEST_CASE("config validation") {
  SolverConfig cfg;
  cfg.step = 0.0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = SolverConfig{};
  cfg.t_end = cfg.t_start;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = SolverConfig{};
  cfg.abs_tol = -1.0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  CHECK_THROWS_AS(integrate(fixtures::settling(), State{-1.0, 0.0, 0.0}, SolverConfig{}), Error);
}

TEST_CASE("trajectory csv") {
  const auto traj = integrate(fixtures::settling(), fixtures::kThreeSpeciesStart, rk4(0.2, 0.1));
  std::ostringstream out;
  write_trajectory_csv(traj, out);
  const auto text = out.str();
  CHECK(text.rfind("t,x,y,z\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + static_cast<long>(traj.size()));
}
