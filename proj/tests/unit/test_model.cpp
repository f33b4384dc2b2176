#include <doctest.h>

#include <random>

#include "../common/fixtures.hpp"
#include "pps/error.hpp"
#include "pps/model.hpp"

using namespace pps;

TEST_CASE("holling3 values") {
  CHECK(holling3(0.0, 1.0, 0.25) == 0.0);
  CHECK(holling3(2.0, 1.0, 0.25) == doctest::Approx(2.0));
  CHECK(holling3(1e6, 1.0, 0.25) == doctest::Approx(4.0).epsilon(1e-6));
  double prev = 0.0;
  for (double u = 0.0; u < 50.0; u += 0.25) {
    const double v = holling3(u, 1.3, 0.7);
    CHECK(v >= prev);
    CHECK(v <= 1.3 / 0.7);
    prev = v;
  }
}

TEST_CASE("rhs vanishes at origin and carrying capacity") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 50; ++n) {
    const auto p = fixtures::random_params(rng);
    const auto d0 = rhs(State{}, p);
    CHECK(d0.dx == 0.0);
    CHECK(d0.dy == 0.0);
    CHECK(d0.dz == 0.0);
    const auto dk = rhs(State{p.k, 0.0, 0.0}, p);
    CHECK(dk.dx == 0.0);
    CHECK(dk.dy == 0.0);
    CHECK(dk.dz == 0.0);
  }
}

TEST_CASE("rhs near the predator-prey equilibrium of the predator-prey set") {
  const auto p = fixtures::predprey();
  const State s{1.1547, 0.4880, 0.0};
  const auto d = rhs(s, p);
  CHECK(std::abs(d.dx) < 1e-3);
  CHECK(std::abs(d.dy) < 1e-3);
  CHECK(d.dz == 0.0);
  const auto ds = rhs_subsystem(s, p, Subsystem::PredPrey);
  CHECK(std::abs(ds.dx) < 1e-3);
  CHECK(std::abs(ds.dy) < 1e-3);
}

TEST_CASE("rhs matches the written-out equations") {
  const auto p = fixtures::oscillating();
  const State s{1.5, 0.7, 0.3};
  const double x2 = s.x * s.x, z2 = s.z * s.z;
  const double dx = p.r * s.x * (1 - s.x / p.k) - p.a * x2 * s.y / (1 + p.a0 * x2) -
                    p.b * x2 * s.z / (1 + p.b0 * x2);
  const double dy = p.d * x2 * s.y / (1 + p.a0 * x2) + p.f * z2 * s.y / (1 + p.i0 * z2) - p.e * s.y;
  const double dz = p.g * x2 * s.z / (1 + p.b0 * x2) + p.h * s.y * s.z -
                    p.i * s.y * z2 / (1 + p.i0 * z2) - p.j * s.z;
  const auto d = rhs(s, p);
  CHECK(d.dx == doctest::Approx(dx).epsilon(1e-14));
  CHECK(d.dy == doctest::Approx(dy).epsilon(1e-14));
  CHECK(d.dz == doctest::Approx(dz).epsilon(1e-14));
}

TEST_CASE("subsystem masks") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  for (int n = 0; n < 100; ++n) {
    const auto p = fixtures::random_params(rng);
    const State full{u(rng), u(rng), u(rng)};
    const auto a = rhs(full, p);
    const auto b = rhs_subsystem(full, p, Subsystem::Full);
    CHECK(a.dx == b.dx);
    CHECK(a.dy == b.dy);
    CHECK(a.dz == b.dz);

    const State xz{full.x, 0.0, full.z};
    const auto d = rhs_subsystem(xz, p, Subsystem::ScavPrey);
    const double expected = p.g * xz.x * xz.x * xz.z / (1 + p.b0 * xz.x * xz.x) - p.j * xz.z;
    CHECK(d.dz == doctest::Approx(expected).epsilon(1e-13));
    CHECK(d.dy == 0.0);
  }
  const auto p1 = fixtures::decay();
  const auto d0 = rhs_subsystem(State{}, p1, Subsystem::PredScav);
  CHECK(d0.dx == 0.0);
  CHECK(d0.dy == 0.0);
  CHECK(d0.dz == 0.0);

  CHECK_THROWS_AS(rhs_subsystem(State{1.0, 1.0, 1.0}, p1, Subsystem::PredScav), Error);
  try {
    rhs_subsystem(State{0.0, 1.0, 0.5}, p1, Subsystem::PredPrey);
    FAIL("expected MaskViolation");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::MaskViolation);
  }
}

TEST_CASE("rhs overflow is reported") {
  auto p = fixtures::settling();
  p.r = 1e308;
  try {
    rhs(State{1e10, 0.0, 0.0}, p);
    FAIL("expected NumericalOverflow");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NumericalOverflow);
  }
}

TEST_CASE("parameter validation") {
  auto p = fixtures::settling();
  CHECK_NOTHROW(p.validate());
  p.k = 0.0;
  CHECK_THROWS_AS(p.validate(), Error);
  p = fixtures::settling();
  p.h = -1.0;
  CHECK_FALSE(p.is_valid());
  p.h = std::numeric_limits<double>::infinity();
  CHECK_FALSE(p.is_valid());
}

TEST_CASE("key-value round trip") {
  const auto p = fixtures::fitted();
  const auto text = to_kv(p);
  CHECK(parse_kv(text) == p);
  for (auto key : ModelParams::keys) {
    CHECK(text.find(std::string(key) + " = ") != std::string::npos);
  }
  CHECK(parse_kv("# header\nr: 1\nk=2\na=1\na0=1\nb=1\nb0=1\nd=1\ne=1\nf=1\ng=1\nh=1\ni=1\ni0=1\nj=1\n").k == 2.0);
}

TEST_CASE("key-value errors") {
  auto code_of = [](const std::string& text) {
    try {
      parse_kv(text);
    } catch (const Error& err) {
      return err.code();
    }
    return ErrorCode::IoError;
  };
  const std::string base = "r=1\nk=2\na=1\na0=1\nb=1\nb0=1\nd=1\ne=1\nf=1\ng=1\nh=1\ni=1\ni0=1\n";
  CHECK(code_of(base) == ErrorCode::ParseError);               // j missing
  CHECK(code_of(base + "j=1\nj=2\n") == ErrorCode::ParseError);  // duplicate
  CHECK(code_of(base + "j=abc\n") == ErrorCode::ParseError);
  CHECK(code_of(base + "j=1\nq=1\n") == ErrorCode::ParseError);
  CHECK(code_of(base + "j=-1\n") == ErrorCode::InvalidParams);
}

TEST_CASE("subsystem names") {
  CHECK(parse_subsystem("predscav") == Subsystem::PredScav);
  CHECK(parse_subsystem("full") == Subsystem::Full);
  CHECK(to_string(Subsystem::ScavPrey) == "scavprey");
  CHECK_THROWS_AS(parse_subsystem("bogus"), Error);
}
