#include <doctest.h>

#include <chrono>
#include <cmath>
#include <random>

#include "../common/fixtures.hpp"
#include "pps/equilibria.hpp"
#include "pps/roots.hpp"

using namespace pps;

namespace {

double residual(const ModelParams& p, const Equilibrium& eq) {
  const auto d = rhs_subsystem(eq.point, p, eq.subsystem);
  return std::sqrt(d.dx * d.dx + d.dy * d.dy + d.dz * d.dz);
}

void check_point(const State& s, double x, double y, double z, double tol) {
  CHECK(std::abs(s.x - x) < tol);
  CHECK(std::abs(s.y - y) < tol);
  CHECK(std::abs(s.z - z) < tol);
}

}  // namespace

TEST_CASE("predator-scavenger steady states of the decay set") {
  const auto eqs = predscav_equilibria(fixtures::decay());
  REQUIRE(eqs.size() == 2);
  CHECK(eqs[0].label == EquilibriumLabel::Origin);
  const auto& e3 = eqs[1];
  CHECK(e3.exists);
  REQUIRE(e3.z0);
  CHECK(*e3.z0 == doctest::Approx(1.1547005));
  CHECK(std::abs(e3.point.y - 22.3923) < 1e-3);
  CHECK(std::abs(e3.point.z - 1.1547) < 1e-3);
  CHECK(e3.point.x == 0.0);
  CHECK(e3.find_check("f - i0 e > 0")->value == doctest::Approx(0.375));
  CHECK(e3.find_check("h f z0 - i e > 0")->value == doctest::Approx(0.038675).epsilon(1e-4));
}

TEST_CASE("predator-scavenger boundary of existence") {
  auto p = fixtures::decay();
  p.f = p.i0 * p.e;
  const auto eqs = predscav_equilibria(p);
  CHECK_FALSE(eqs[1].exists);
  CHECK_FALSE(eqs[1].find_check("f - i0 e > 0")->satisfied);
  CHECK_FALSE(eqs[1].z0);
}

TEST_CASE("predator-prey steady states") {
  const auto eqs = predprey_equilibria(fixtures::predprey());
  REQUIRE(eqs.size() == 3);
  CHECK(eqs[1].point.x == 2.0);
  const auto& e4 = eqs[2];
  CHECK(e4.exists);
  CHECK(std::abs(e4.point.x - 1.1547) < 1e-3);
  CHECK(std::abs(e4.point.y - 0.4880) < 1e-3);
  CHECK(e4.point.z == 0.0);

  auto p = fixtures::predprey();
  p.d = p.a0 * p.e;
  CHECK_FALSE(predprey_equilibria(p)[2].exists);

  const auto t3 = predprey_equilibria(fixtures::fitted())[2];
  CHECK(t3.exists);
  CHECK(std::abs(t3.point.x - 10.582252) < 1e-5);
  CHECK(std::abs(t3.point.y - 6.2756) < 1e-4);
}

TEST_CASE("scavenger-prey steady states") {
  const auto t3 = scavprey_equilibria(fixtures::fitted())[2];
  CHECK(t3.exists);
  CHECK(std::abs(t3.point.x - 3.1103) < 1e-4);
  CHECK(std::abs(t3.point.z - 0.6819357) < 1e-6);
  CHECK(t3.point.y == 0.0);

  auto p = fixtures::fitted();
  p.g = p.b0 * p.j;
  CHECK_FALSE(scavprey_equilibria(p)[2].exists);
}

TEST_CASE("carrying capacity bound on the two-species interior points") {
  auto p = fixtures::predprey();
  p.k = 1.0;  // x0 = 1.1547 > k
  const auto e4 = predprey_equilibria(p)[2];
  CHECK_FALSE(e4.exists);
  CHECK(e4.find_check("d - a0 e > 0")->satisfied);
  CHECK_FALSE(e4.find_check("x0 < k")->satisfied);
}

TEST_CASE("random subsystem equilibria have small residuals") {
  std::mt19937_64 rng(2024);
  int existing = 0;
  for (int n = 0; n < 300; ++n) {
    const auto p = fixtures::random_params(rng, 0.05, 3.0);
    for (auto* fn : {&predscav_equilibria, &predprey_equilibria, &scavprey_equilibria}) {
      for (const auto& eq : fn(p)) {
        if (!eq.exists) continue;
        ++existing;
        CHECK(residual(p, eq) < 1e-8 * (1.0 + eq.point.y + eq.point.z));
        CHECK(eq.point.x >= 0.0);
        CHECK(eq.point.y >= 0.0);
        CHECK(eq.point.z >= 0.0);
      }
    }
  }
  CHECK(existing > 900);
}

TEST_CASE("direct interior solve") {
  struct Case {
    ModelParams p;
    double x, y, z, tol;
  };
  const Case cases[] = {
      {fixtures::settling(), 1.1331137, 0.33726859, 0.168040476, 1e-4},
      {fixtures::oscillating(), 1.951629, 0.470157934, 0.510619637, 1e-4},
      {fixtures::fitted(), 4.4984538, 1.161178, 0.38895175, 1e-3},
  };
  for (const auto& c : cases) {
    const auto start = std::chrono::steady_clock::now();
    const auto eq = interior_equilibrium_direct(c.p);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(secs < 1.0);
    CHECK(eq.exists);
    CHECK_FALSE(eq.multiple_roots);
    check_point(eq.point, c.x, c.y, c.z, c.tol);
    CHECK(residual(c.p, eq) < 1e-8);
  }
  const auto ex4 = interior_equilibrium_direct(fixtures::settling());
  CHECK(ex4.find_check("z* < r (1 + b0 x*^2)(k - x*) / (b x*)")->value ==
        doctest::Approx(1.01062).epsilon(1e-5));
  CHECK(ex4.find_check("z* < i e / (h f)")->value == doctest::Approx(4.0));
  const auto ex3 = interior_equilibrium_direct(fixtures::oscillating());
  CHECK(ex3.find_check("z* < r (1 + b0 x*^2)(k - x*) / (b x*)")->value ==
        doctest::Approx(98.0778).epsilon(1e-5));
  CHECK(ex3.find_check("z* < i e / (h f)")->value == doctest::Approx(10.0));
}

TEST_CASE("direct interior solve reports absence") {
  auto p = fixtures::settling();
  p.d = 0.1;  // z*^2 < 0 for every x
  p.f = 0.1;
  const auto eq = interior_equilibrium_direct(p);
  CHECK_FALSE(eq.exists);
  CHECK_FALSE(eq.find_check("single positive real root")->satisfied);
}

TEST_CASE("interior polynomial coefficients against the elimination oracle") {
  // Frozen from a computer-algebra elimination of y and z from the steady-state
  // equations, divided by -(1 + a0 X^2)^2.
  const double no_handling[13] = {3.75, -1.75, -3.8125, 2.0, -0.25, 0, 0, 0, 0, 0, 0, 0, 0};
  const double ex4[13] = {2.0625,         -0.5625,         1.78125,        -1.265625,
                          -0.64453125,    0.0859375,       -1.09765625,    0.826171875,
                          -0.502197265625, 0.328857421875, -0.1082763671875, 0.03631591796875,
                          -0.0090789794921875};
  const double generic[13] = {-0.0114251585,      2.328775862,        -2.9780790515,
                              1.396024406,        -1.99401941160625,  -2.714834564225,
                              1.424236668815625,  -1.1752687013375,   -1.8395363563049374,
                              -0.01938380473575,  0.01058462868757875, 0.013843512476955,
                              -0.001977644639565};
  // Zero handling times fall outside validate(); the coefficients are still defined.
  ModelParams reduced = fixtures::settling();
  reduced.a0 = reduced.b0 = reduced.i0 = 0.0;

  ModelParams odd;
  odd.r = 0.7;
  odd.k = 3.5;
  odd.a = 1.3;
  odd.a0 = 0.4;
  odd.b = 0.9;
  odd.b0 = 0.15;
  odd.d = 1.7;
  odd.e = 0.6;
  odd.f = 0.8;
  odd.g = 1.1;
  odd.h = 0.35;
  odd.i = 0.45;
  odd.i0 = 0.3;
  odd.j = 0.75;

  const auto c0 = interior_poly_coeffs(reduced);
  const auto c4 = interior_poly_coeffs(fixtures::settling());
  const auto cg = interior_poly_coeffs(odd);
  for (int n = 0; n < 13; ++n) {
    CAPTURE(n);
    CHECK(c0[n] == doctest::Approx(no_handling[n]).epsilon(1e-12));
    CHECK(c4[n] == doctest::Approx(ex4[n]).epsilon(1e-12));
    CHECK(cg[n] == doctest::Approx(generic[n]).epsilon(1e-12));
  }
}

TEST_CASE("interior polynomial agrees with the direct solve") {
  for (const auto& p : {fixtures::oscillating(), fixtures::settling(), fixtures::fitted()}) {
    const auto check = cross_check_interior(p);
    REQUIRE(check.direct_x);
    CHECK(check.poly_roots.size() == 1);
    CHECK(check.agrees);
    CHECK(check.relative_gap < 1e-6);
  }
}

TEST_CASE("all equilibria of the settling set") {
  const auto p = fixtures::settling();
  const auto eqs = all_equilibria(p);
  CHECK(eqs.size() == 6);
  int interior = 0;
  for (const auto& eq : eqs) {
    CHECK(eq.subsystem == Subsystem::Full);
    if (eq.label == EquilibriumLabel::PredScav) {
      CHECK_FALSE(eq.exists);
      CHECK(eq.find_check("h f z0 - i e > 0")->value < 0.0);
    }
    if (eq.label == EquilibriumLabel::Interior) {
      ++interior;
      CHECK(eq.exists);
    }
    if (eq.exists) CHECK(residual(p, eq) < 1e-8);
  }
  CHECK(interior == 1);
}

TEST_CASE("all equilibria of the oscillating set") {
  const auto eqs = all_equilibria(fixtures::oscillating());
  for (const auto& eq : eqs) {
    if (eq.label == EquilibriumLabel::PredScav) {
      CHECK_FALSE(eq.exists);
      CHECK(eq.find_check("f - i0 e > 0")->value == doctest::Approx(-0.15));
    }
    if (eq.label == EquilibriumLabel::Interior) CHECK(eq.exists);
  }
}

TEST_CASE("origin and prey-only state always present") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 50; ++n) {
    const auto p = fixtures::random_params(rng);
    const auto eqs = all_equilibria(p);
    REQUIRE(eqs.size() >= 2);
    CHECK(eqs[0].label == EquilibriumLabel::Origin);
    CHECK(eqs[0].exists);
    CHECK(eqs[1].label == EquilibriumLabel::PreyOnly);
    CHECK(eqs[1].point.x == p.k);
    for (const auto& eq : eqs) {
      if (eq.exists) CHECK(residual(p, eq) < 1e-8 * (1.0 + eq.point.x + eq.point.y + eq.point.z));
    }
  }
}

TEST_CASE("companion-matrix roots") {
  // (X - 1)(X - 2)(X + 3) = X^3 - 7X + 6
  const double c[] = {6.0, -7.0, 0.0, 1.0};
  const auto roots = positive_real_roots(c);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == doctest::Approx(1.0));
  CHECK(roots[1] == doctest::Approx(2.0));
  const auto all = polynomial_roots(c);
  CHECK(all.size() == 3);
  for (const auto& z : all) CHECK(std::abs(horner(c, z)) < 1e-10);
  // X^2 + 1 has no real roots; trailing zeros are ignored.
  const double q[] = {1.0, 0.0, 1.0, 0.0, 0.0};
  CHECK(positive_real_roots(q).empty());
  CHECK(polynomial_roots(q).size() == 2);
}
