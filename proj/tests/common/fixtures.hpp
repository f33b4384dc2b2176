#pragma once

#include <cmath>
#include <random>

#include "pps/model.hpp"

namespace fixtures {

inline pps::ModelParams decay() {
  pps::ModelParams p;  // unused prey-side parameters stay at 1
  p.e = 0.5;
  p.f = 0.5;
  p.h = 0.5;
  p.i = 0.5;
  p.i0 = 0.25;
  p.j = 1.5;
  return p;
}

inline pps::ModelParams predprey() {
  pps::ModelParams p;
  p.r = 1;
  p.k = 2;
  p.a = 1;
  p.a0 = 0.25;
  p.d = 1;
  p.e = 1;
  return p;
}

inline pps::ModelParams oscillating() {
  pps::ModelParams p;
  p.r = 0.5;
  p.k = 100;
  p.a = 0.5;
  p.a0 = 0.25;
  p.b = 0.5;
  p.b0 = 0.25;
  p.d = 0.5;
  p.e = 1;
  p.f = 0.1;
  p.g = 0.5;
  p.h = 0.1;
  p.i = 0.1;
  p.i0 = 0.25;
  p.j = 1;
  return p;
}

inline pps::ModelParams settling() {
  pps::ModelParams p;
  p.r = 1;
  p.k = 2;
  p.a = 1;
  p.a0 = 0.25;
  p.b = 1;
  p.b0 = 0.25;
  p.d = 1;
  p.e = 1;
  p.f = 1;
  p.g = 1;
  p.h = 0.25;
  p.i = 1;
  p.i0 = 0.25;
  p.j = 1;
  return p;
}

inline pps::ModelParams fitted() {
  pps::ModelParams p;
  p.r = 0.9701107742719246;
  p.k = 573.2545487545212544;
  p.a = 0.7668876233328743;
  p.a0 = 0.4686878655732233;
  p.b = 0.6893067418603573;
  p.b0 = 0.053266947840986595;
  p.d = 0.42441058569930494;
  p.e = 0.888598932493589;
  p.f = 0.46630691773424437;
  p.g = 0.08334616995047056;
  p.h = 0.16502232050920586;
  p.i = 1.05992612257741696;
  p.i0 = 0.105259076974745925;
  p.j = 0.5320956432008955;
  return p;
}

inline const pps::State kDecayStart{0.0, 4.0, 6.0, 0.0};
inline const pps::State kPredPreyStart{2.0, 4.0, 0.0, 0.0};
inline const pps::State kThreeSpeciesStart{4.0, 3.0, 2.0, 0.0};
inline const pps::State kFittedStart{4.991, 1.178, 0.577, 0.0};

inline pps::ModelParams random_params(std::mt19937_64& rng, double lo = 0.1, double hi = 2.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  pps::ModelParams p;
  auto values = p.to_array();
  for (double& v : values) v = u(rng);
  return pps::ModelParams::from_array(values);
}

inline double rel_close(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace fixtures

#include "pps/data.hpp"

namespace fixtures {

// 40 samples on t in [0, 10] (about one oscillation period) from the estimated
// parameters and their initial state; zero noise.
inline pps::Dataset synthetic_fixture(double noise = 0.0, std::uint64_t seed = 1) {
  return pps::synthesize(fitted(), kFittedStart, pps::uniform_grid(0.0, 10.0, 40), noise, seed);
}

}  // namespace fixtures
