#include <array>

#include "pps/equilibria.hpp"

namespace pps {

namespace {

// v_[n] = v^n for n = 0..3.
std::array<double, 4> powers(double v) { return {1.0, v, v * v, v * v * v}; }

}  // namespace

// Coefficients of the degree-12 polynomial whose positive root is the prey
// level of the coexistence equilibrium. It is the numerator left after
// eliminating z (from dy/dt = 0) and y (from dz/dt = 0) in dx/dt / x = 0 and
// squaring away the square root, divided by -(1 + a0 X^2)^2.
PolyCoeffs interior_poly_coeffs(const ModelParams& params) {
  const auto r_ = powers(params.r), k_ = powers(params.k), a_ = powers(params.a),
             a0_ = powers(params.a0), b_ = powers(params.b), b0_ = powers(params.b0),
             d_ = powers(params.d), e_ = powers(params.e), f_ = powers(params.f),
             g_ = powers(params.g), h_ = powers(params.h), i_ = powers(params.i),
             i0_ = powers(params.i0), j_ = powers(params.j);

  PolyCoeffs p{};
  p[0] =
      e_[3] * i_[2] * i0_[2] * k_[2] * r_[2]
      - 2.0 * e_[2] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      + e_[1] * f_[2] * h_[2] * i0_[1] * k_[2] * r_[2]
      + e_[1] * f_[2] * i_[2] * k_[2] * r_[2]
      - f_[3] * h_[2] * k_[2] * r_[2];

  p[1] =
      -2.0 * a_[1] * e_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[2] * r_[1]
      - 2.0 * e_[3] * i_[2] * i0_[2] * k_[1] * r_[2]
      + 2.0 * a_[1] * f_[3] * h_[1] * j_[1] * k_[2] * r_[1]
      + 4.0 * e_[2] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      - 2.0 * e_[1] * f_[2] * h_[2] * i0_[1] * k_[1] * r_[2]
      - 2.0 * e_[1] * f_[2] * i_[2] * k_[1] * r_[2]
      + 2.0 * f_[3] * h_[2] * k_[1] * r_[2];

  p[2] =
      3.0 * a0_[1] * e_[3] * i_[2] * i0_[2] * k_[2] * r_[2]
      + 2.0 * b0_[1] * e_[3] * i_[2] * i0_[2] * k_[2] * r_[2]
      - 6.0 * a0_[1] * e_[2] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      + 3.0 * a0_[1] * e_[1] * f_[2] * h_[2] * i0_[1] * k_[2] * r_[2]
      - 4.0 * b0_[1] * e_[2] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      + 2.0 * b0_[1] * e_[1] * f_[2] * h_[2] * i0_[1] * k_[2] * r_[2]
      - 3.0 * d_[1] * e_[2] * i_[2] * i0_[2] * k_[2] * r_[2]
      + a_[2] * e_[1] * f_[2] * i0_[1] * j_[2] * k_[2]
      - 2.0 * a_[1] * b_[1] * e_[2] * f_[1] * i_[1] * i0_[1] * j_[1] * k_[2]
      + 3.0 * a0_[1] * e_[1] * f_[2] * i_[2] * k_[2] * r_[2]
      - 3.0 * a0_[1] * f_[3] * h_[2] * k_[2] * r_[2]
      + b_[2] * e_[3] * i_[2] * i0_[1] * k_[2]
      + 2.0 * b0_[1] * e_[1] * f_[2] * i_[2] * k_[2] * r_[2]
      - 2.0 * b0_[1] * f_[3] * h_[2] * k_[2] * r_[2]
      + 4.0 * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      - d_[1] * f_[2] * h_[2] * i0_[1] * k_[2] * r_[2]
      - a_[2] * f_[3] * j_[2] * k_[2]
      + 2.0 * a_[1] * b_[1] * e_[1] * f_[2] * i_[1] * j_[1] * k_[2]
      + 2.0 * a_[1] * e_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[1] * r_[1]
      - b_[2] * e_[2] * f_[1] * i_[2] * k_[2]
      + b_[2] * e_[1] * f_[2] * h_[2] * k_[2]
      - d_[1] * f_[2] * i_[2] * k_[2] * r_[2]
      + e_[3] * i_[2] * i0_[2] * r_[2]
      - 2.0 * a_[1] * f_[3] * h_[1] * j_[1] * k_[1] * r_[1]
      - 2.0 * e_[2] * f_[1] * i_[2] * i0_[1] * r_[2]
      + e_[1] * f_[2] * h_[2] * i0_[1] * r_[2]
      + e_[1] * f_[2] * i_[2] * r_[2]
      - f_[3] * h_[2] * r_[2];

  p[3] =
      -4.0 * a_[1] * a0_[1] * e_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[2] * r_[1]
      - 4.0 * a_[1] * b0_[1] * e_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[2] * r_[1]
      - 6.0 * a0_[1] * e_[3] * i_[2] * i0_[2] * k_[1] * r_[2]
      - 4.0 * b0_[1] * e_[3] * i_[2] * i0_[2] * k_[1] * r_[2]
      + 4.0 * a_[1] * a0_[1] * f_[3] * h_[1] * j_[1] * k_[2] * r_[1]
      + 4.0 * a_[1] * b0_[1] * f_[3] * h_[1] * j_[1] * k_[2] * r_[1]
      + 2.0 * a_[1] * d_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[2] * r_[1]
      + 2.0 * a_[1] * e_[1] * f_[2] * g_[1] * h_[1] * i0_[1] * k_[2] * r_[1]
      + 12.0 * a0_[1] * e_[2] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      - 6.0 * a0_[1] * e_[1] * f_[2] * h_[2] * i0_[1] * k_[1] * r_[2]
      + 8.0 * b0_[1] * e_[2] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      - 4.0 * b0_[1] * e_[1] * f_[2] * h_[2] * i0_[1] * k_[1] * r_[2]
      + 6.0 * d_[1] * e_[2] * i_[2] * i0_[2] * k_[1] * r_[2]
      - 2.0 * a_[1] * f_[3] * g_[1] * h_[1] * k_[2] * r_[1]
      - 6.0 * a0_[1] * e_[1] * f_[2] * i_[2] * k_[1] * r_[2]
      + 6.0 * a0_[1] * f_[3] * h_[2] * k_[1] * r_[2]
      - 4.0 * b0_[1] * e_[1] * f_[2] * i_[2] * k_[1] * r_[2]
      + 4.0 * b0_[1] * f_[3] * h_[2] * k_[1] * r_[2]
      - 8.0 * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      + 2.0 * d_[1] * f_[2] * h_[2] * i0_[1] * k_[1] * r_[2]
      + 2.0 * d_[1] * f_[2] * i_[2] * k_[1] * r_[2];

  p[4] =
      3.0 * a0_[2] * e_[3] * i_[2] * i0_[2] * k_[2] * r_[2]
      + 6.0 * a0_[1] * b0_[1] * e_[3] * i_[2] * i0_[2] * k_[2] * r_[2]
      + b0_[2] * e_[3] * i_[2] * i0_[2] * k_[2] * r_[2]
      - 6.0 * a0_[2] * e_[2] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      + 3.0 * a0_[2] * e_[1] * f_[2] * h_[2] * i0_[1] * k_[2] * r_[2]
      - 12.0 * a0_[1] * b0_[1] * e_[2] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      + 6.0 * a0_[1] * b0_[1] * e_[1] * f_[2] * h_[2] * i0_[1] * k_[2] * r_[2]
      - 6.0 * a0_[1] * d_[1] * e_[2] * i_[2] * i0_[2] * k_[2] * r_[2]
      - 2.0 * b0_[2] * e_[2] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      + b0_[2] * e_[1] * f_[2] * h_[2] * i0_[1] * k_[2] * r_[2]
      - 6.0 * b0_[1] * d_[1] * e_[2] * i_[2] * i0_[2] * k_[2] * r_[2]
      + a_[2] * a0_[1] * e_[1] * f_[2] * i0_[1] * j_[2] * k_[2]
      + 2.0 * a_[2] * b0_[1] * e_[1] * f_[2] * i0_[1] * j_[2] * k_[2]
      - 4.0 * a_[1] * a0_[1] * b_[1] * e_[2] * f_[1] * i_[1] * i0_[1] * j_[1] * k_[2]
      - 2.0 * a_[1] * b_[1] * b0_[1] * e_[2] * f_[1] * i_[1] * i0_[1] * j_[1] * k_[2]
      + 3.0 * a0_[2] * e_[1] * f_[2] * i_[2] * k_[2] * r_[2]
      - 3.0 * a0_[2] * f_[3] * h_[2] * k_[2] * r_[2]
      + 3.0 * a0_[1] * b_[2] * e_[3] * i_[2] * i0_[1] * k_[2]
      + 6.0 * a0_[1] * b0_[1] * e_[1] * f_[2] * i_[2] * k_[2] * r_[2]
      - 6.0 * a0_[1] * b0_[1] * f_[3] * h_[2] * k_[2] * r_[2]
      + 8.0 * a0_[1] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      - 2.0 * a0_[1] * d_[1] * f_[2] * h_[2] * i0_[1] * k_[2] * r_[2]
      + b0_[2] * e_[1] * f_[2] * i_[2] * k_[2] * r_[2]
      - b0_[2] * f_[3] * h_[2] * k_[2] * r_[2]
      + 8.0 * b0_[1] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      - 2.0 * b0_[1] * d_[1] * f_[2] * h_[2] * i0_[1] * k_[2] * r_[2]
      + 3.0 * d_[2] * e_[1] * i_[2] * i0_[2] * k_[2] * r_[2]
      - a_[2] * a0_[1] * f_[3] * j_[2] * k_[2]
      - 2.0 * a_[2] * b0_[1] * f_[3] * j_[2] * k_[2]
      - a_[2] * d_[1] * f_[2] * i0_[1] * j_[2] * k_[2]
      - 2.0 * a_[2] * e_[1] * f_[2] * g_[1] * i0_[1] * j_[1] * k_[2]
      + 4.0 * a_[1] * a0_[1] * b_[1] * e_[1] * f_[2] * i_[1] * j_[1] * k_[2]
      + 4.0 * a_[1] * a0_[1] * e_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[1] * r_[1]
      + 2.0 * a_[1] * b_[1] * b0_[1] * e_[1] * f_[2] * i_[1] * j_[1] * k_[2]
      + 4.0 * a_[1] * b_[1] * d_[1] * e_[1] * f_[1] * i_[1] * i0_[1] * j_[1] * k_[2]
      + 2.0 * a_[1] * b_[1] * e_[2] * f_[1] * g_[1] * i_[1] * i0_[1] * k_[2]
      + 4.0 * a_[1] * b0_[1] * e_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[1] * r_[1]
      - 3.0 * a0_[1] * b_[2] * e_[2] * f_[1] * i_[2] * k_[2]
      + 3.0 * a0_[1] * b_[2] * e_[1] * f_[2] * h_[2] * k_[2]
      - 2.0 * a0_[1] * d_[1] * f_[2] * i_[2] * k_[2] * r_[2]
      + 3.0 * a0_[1] * e_[3] * i_[2] * i0_[2] * r_[2]
      - 3.0 * b_[2] * d_[1] * e_[2] * i_[2] * i0_[1] * k_[2]
      - 2.0 * b0_[1] * d_[1] * f_[2] * i_[2] * k_[2] * r_[2]
      + 2.0 * b0_[1] * e_[3] * i_[2] * i0_[2] * r_[2]
      - 2.0 * d_[2] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      + 2.0 * a_[2] * f_[3] * g_[1] * j_[1] * k_[2]
      - 4.0 * a_[1] * a0_[1] * f_[3] * h_[1] * j_[1] * k_[1] * r_[1]
      - 2.0 * a_[1] * b_[1] * d_[1] * f_[2] * i_[1] * j_[1] * k_[2]
      - 2.0 * a_[1] * b_[1] * e_[1] * f_[2] * g_[1] * i_[1] * k_[2]
      - 4.0 * a_[1] * b0_[1] * f_[3] * h_[1] * j_[1] * k_[1] * r_[1]
      - 2.0 * a_[1] * d_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[1] * r_[1]
      - 2.0 * a_[1] * e_[1] * f_[2] * g_[1] * h_[1] * i0_[1] * k_[1] * r_[1]
      - 6.0 * a0_[1] * e_[2] * f_[1] * i_[2] * i0_[1] * r_[2]
      + 3.0 * a0_[1] * e_[1] * f_[2] * h_[2] * i0_[1] * r_[2]
      + 2.0 * b_[2] * d_[1] * e_[1] * f_[1] * i_[2] * k_[2]
      - b_[2] * d_[1] * f_[2] * h_[2] * k_[2]
      - 4.0 * b0_[1] * e_[2] * f_[1] * i_[2] * i0_[1] * r_[2]
      + 2.0 * b0_[1] * e_[1] * f_[2] * h_[2] * i0_[1] * r_[2]
      - 3.0 * d_[1] * e_[2] * i_[2] * i0_[2] * r_[2]
      + 2.0 * a_[1] * f_[3] * g_[1] * h_[1] * k_[1] * r_[1]
      + 3.0 * a0_[1] * e_[1] * f_[2] * i_[2] * r_[2]
      - 3.0 * a0_[1] * f_[3] * h_[2] * r_[2]
      + 2.0 * b0_[1] * e_[1] * f_[2] * i_[2] * r_[2]
      - 2.0 * b0_[1] * f_[3] * h_[2] * r_[2]
      + 4.0 * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * r_[2]
      - d_[1] * f_[2] * h_[2] * i0_[1] * r_[2]
      - d_[1] * f_[2] * i_[2] * r_[2];

  p[5] =
      -2.0 * a_[1] * a0_[2] * e_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[2] * r_[1]
      - 8.0 * a_[1] * a0_[1] * b0_[1] * e_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[2] * r_[1]
      - 2.0 * a_[1] * b0_[2] * e_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[2] * r_[1]
      - 6.0 * a0_[2] * e_[3] * i_[2] * i0_[2] * k_[1] * r_[2]
      - 12.0 * a0_[1] * b0_[1] * e_[3] * i_[2] * i0_[2] * k_[1] * r_[2]
      - 2.0 * b0_[2] * e_[3] * i_[2] * i0_[2] * k_[1] * r_[2]
      + 2.0 * a_[1] * a0_[2] * f_[3] * h_[1] * j_[1] * k_[2] * r_[1]
      + 8.0 * a_[1] * a0_[1] * b0_[1] * f_[3] * h_[1] * j_[1] * k_[2] * r_[1]
      + 2.0 * a_[1] * a0_[1] * d_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[2] * r_[1]
      + 4.0 * a_[1] * a0_[1] * e_[1] * f_[2] * g_[1] * h_[1] * i0_[1] * k_[2] * r_[1]
      + 2.0 * a_[1] * b0_[2] * f_[3] * h_[1] * j_[1] * k_[2] * r_[1]
      + 4.0 * a_[1] * b0_[1] * d_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[2] * r_[1]
      + 2.0 * a_[1] * b0_[1] * e_[1] * f_[2] * g_[1] * h_[1] * i0_[1] * k_[2] * r_[1]
      + 12.0 * a0_[2] * e_[2] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      - 6.0 * a0_[2] * e_[1] * f_[2] * h_[2] * i0_[1] * k_[1] * r_[2]
      + 24.0 * a0_[1] * b0_[1] * e_[2] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      - 12.0 * a0_[1] * b0_[1] * e_[1] * f_[2] * h_[2] * i0_[1] * k_[1] * r_[2]
      + 12.0 * a0_[1] * d_[1] * e_[2] * i_[2] * i0_[2] * k_[1] * r_[2]
      + 4.0 * b0_[2] * e_[2] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      - 2.0 * b0_[2] * e_[1] * f_[2] * h_[2] * i0_[1] * k_[1] * r_[2]
      + 12.0 * b0_[1] * d_[1] * e_[2] * i_[2] * i0_[2] * k_[1] * r_[2]
      - 4.0 * a_[1] * a0_[1] * f_[3] * g_[1] * h_[1] * k_[2] * r_[1]
      - 2.0 * a_[1] * b0_[1] * f_[3] * g_[1] * h_[1] * k_[2] * r_[1]
      - 2.0 * a_[1] * d_[1] * f_[2] * g_[1] * h_[1] * i0_[1] * k_[2] * r_[1]
      - 6.0 * a0_[2] * e_[1] * f_[2] * i_[2] * k_[1] * r_[2]
      + 6.0 * a0_[2] * f_[3] * h_[2] * k_[1] * r_[2]
      - 12.0 * a0_[1] * b0_[1] * e_[1] * f_[2] * i_[2] * k_[1] * r_[2]
      + 12.0 * a0_[1] * b0_[1] * f_[3] * h_[2] * k_[1] * r_[2]
      - 16.0 * a0_[1] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      + 4.0 * a0_[1] * d_[1] * f_[2] * h_[2] * i0_[1] * k_[1] * r_[2]
      - 2.0 * b0_[2] * e_[1] * f_[2] * i_[2] * k_[1] * r_[2]
      + 2.0 * b0_[2] * f_[3] * h_[2] * k_[1] * r_[2]
      - 16.0 * b0_[1] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      + 4.0 * b0_[1] * d_[1] * f_[2] * h_[2] * i0_[1] * k_[1] * r_[2]
      - 6.0 * d_[2] * e_[1] * i_[2] * i0_[2] * k_[1] * r_[2]
      + 4.0 * a0_[1] * d_[1] * f_[2] * i_[2] * k_[1] * r_[2]
      + 4.0 * b0_[1] * d_[1] * f_[2] * i_[2] * k_[1] * r_[2]
      + 4.0 * d_[2] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2];

  p[6] =
      a0_[3] * e_[3] * i_[2] * i0_[2] * k_[2] * r_[2]
      + 6.0 * a0_[2] * b0_[1] * e_[3] * i_[2] * i0_[2] * k_[2] * r_[2]
      + 3.0 * a0_[1] * b0_[2] * e_[3] * i_[2] * i0_[2] * k_[2] * r_[2]
      - 2.0 * a0_[3] * e_[2] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      + a0_[3] * e_[1] * f_[2] * h_[2] * i0_[1] * k_[2] * r_[2]
      - 12.0 * a0_[2] * b0_[1] * e_[2] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      + 6.0 * a0_[2] * b0_[1] * e_[1] * f_[2] * h_[2] * i0_[1] * k_[2] * r_[2]
      - 3.0 * a0_[2] * d_[1] * e_[2] * i_[2] * i0_[2] * k_[2] * r_[2]
      - 6.0 * a0_[1] * b0_[2] * e_[2] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      + 3.0 * a0_[1] * b0_[2] * e_[1] * f_[2] * h_[2] * i0_[1] * k_[2] * r_[2]
      - 12.0 * a0_[1] * b0_[1] * d_[1] * e_[2] * i_[2] * i0_[2] * k_[2] * r_[2]
      - 3.0 * b0_[2] * d_[1] * e_[2] * i_[2] * i0_[2] * k_[2] * r_[2]
      + 2.0 * a_[2] * a0_[1] * b0_[1] * e_[1] * f_[2] * i0_[1] * j_[2] * k_[2]
      + a_[2] * b0_[2] * e_[1] * f_[2] * i0_[1] * j_[2] * k_[2]
      - 2.0 * a_[1] * a0_[2] * b_[1] * e_[2] * f_[1] * i_[1] * i0_[1] * j_[1] * k_[2]
      - 4.0 * a_[1] * a0_[1] * b_[1] * b0_[1] * e_[2] * f_[1] * i_[1] * i0_[1] * j_[1] * k_[2]
      + a0_[3] * e_[1] * f_[2] * i_[2] * k_[2] * r_[2]
      - a0_[3] * f_[3] * h_[2] * k_[2] * r_[2]
      + 3.0 * a0_[2] * b_[2] * e_[3] * i_[2] * i0_[1] * k_[2]
      + 6.0 * a0_[2] * b0_[1] * e_[1] * f_[2] * i_[2] * k_[2] * r_[2]
      - 6.0 * a0_[2] * b0_[1] * f_[3] * h_[2] * k_[2] * r_[2]
      + 4.0 * a0_[2] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      - a0_[2] * d_[1] * f_[2] * h_[2] * i0_[1] * k_[2] * r_[2]
      + 3.0 * a0_[1] * b0_[2] * e_[1] * f_[2] * i_[2] * k_[2] * r_[2]
      - 3.0 * a0_[1] * b0_[2] * f_[3] * h_[2] * k_[2] * r_[2]
      + 16.0 * a0_[1] * b0_[1] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      - 4.0 * a0_[1] * b0_[1] * d_[1] * f_[2] * h_[2] * i0_[1] * k_[2] * r_[2]
      + 3.0 * a0_[1] * d_[2] * e_[1] * i_[2] * i0_[2] * k_[2] * r_[2]
      + 4.0 * b0_[2] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      - b0_[2] * d_[1] * f_[2] * h_[2] * i0_[1] * k_[2] * r_[2]
      + 6.0 * b0_[1] * d_[2] * e_[1] * i_[2] * i0_[2] * k_[2] * r_[2]
      - 2.0 * a_[2] * a0_[1] * b0_[1] * f_[3] * j_[2] * k_[2]
      - 2.0 * a_[2] * a0_[1] * e_[1] * f_[2] * g_[1] * i0_[1] * j_[1] * k_[2]
      - a_[2] * b0_[2] * f_[3] * j_[2] * k_[2]
      - 2.0 * a_[2] * b0_[1] * d_[1] * f_[2] * i0_[1] * j_[2] * k_[2]
      - 2.0 * a_[2] * b0_[1] * e_[1] * f_[2] * g_[1] * i0_[1] * j_[1] * k_[2]
      + 2.0 * a_[1] * a0_[2] * b_[1] * e_[1] * f_[2] * i_[1] * j_[1] * k_[2]
      + 2.0 * a_[1] * a0_[2] * e_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[1] * r_[1]
      + 4.0 * a_[1] * a0_[1] * b_[1] * b0_[1] * e_[1] * f_[2] * i_[1] * j_[1] * k_[2]
      + 4.0 * a_[1] * a0_[1] * b_[1] * d_[1] * e_[1] * f_[1] * i_[1] * i0_[1] * j_[1] * k_[2]
      + 4.0 * a_[1] * a0_[1] * b_[1] * e_[2] * f_[1] * g_[1] * i_[1] * i0_[1] * k_[2]
      + 8.0 * a_[1] * a0_[1] * b0_[1] * e_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[1] * r_[1]
      + 4.0 * a_[1] * b_[1] * b0_[1] * d_[1] * e_[1] * f_[1] * i_[1] * i0_[1] * j_[1] * k_[2]
      + 2.0 * a_[1] * b0_[2] * e_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[1] * r_[1]
      - 3.0 * a0_[2] * b_[2] * e_[2] * f_[1] * i_[2] * k_[2]
      + 3.0 * a0_[2] * b_[2] * e_[1] * f_[2] * h_[2] * k_[2]
      - a0_[2] * d_[1] * f_[2] * i_[2] * k_[2] * r_[2]
      + 3.0 * a0_[2] * e_[3] * i_[2] * i0_[2] * r_[2]
      - 6.0 * a0_[1] * b_[2] * d_[1] * e_[2] * i_[2] * i0_[1] * k_[2]
      - 4.0 * a0_[1] * b0_[1] * d_[1] * f_[2] * i_[2] * k_[2] * r_[2]
      + 6.0 * a0_[1] * b0_[1] * e_[3] * i_[2] * i0_[2] * r_[2]
      - 2.0 * a0_[1] * d_[2] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      - b0_[2] * d_[1] * f_[2] * i_[2] * k_[2] * r_[2]
      + b0_[2] * e_[3] * i_[2] * i0_[2] * r_[2]
      - 4.0 * b0_[1] * d_[2] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      - d_[3] * i_[2] * i0_[2] * k_[2] * r_[2]
      + 2.0 * a_[2] * a0_[1] * f_[3] * g_[1] * j_[1] * k_[2]
      + 2.0 * a_[2] * b0_[1] * f_[3] * g_[1] * j_[1] * k_[2]
      + 2.0 * a_[2] * d_[1] * f_[2] * g_[1] * i0_[1] * j_[1] * k_[2]
      + a_[2] * e_[1] * f_[2] * g_[2] * i0_[1] * k_[2]
      - 2.0 * a_[1] * a0_[2] * f_[3] * h_[1] * j_[1] * k_[1] * r_[1]
      - 2.0 * a_[1] * a0_[1] * b_[1] * d_[1] * f_[2] * i_[1] * j_[1] * k_[2]
      - 4.0 * a_[1] * a0_[1] * b_[1] * e_[1] * f_[2] * g_[1] * i_[1] * k_[2]
      - 8.0 * a_[1] * a0_[1] * b0_[1] * f_[3] * h_[1] * j_[1] * k_[1] * r_[1]
      - 2.0 * a_[1] * a0_[1] * d_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[1] * r_[1]
      - 4.0 * a_[1] * a0_[1] * e_[1] * f_[2] * g_[1] * h_[1] * i0_[1] * k_[1] * r_[1]
      - 2.0 * a_[1] * b_[1] * b0_[1] * d_[1] * f_[2] * i_[1] * j_[1] * k_[2]
      - 2.0 * a_[1] * b_[1] * d_[2] * f_[1] * i_[1] * i0_[1] * j_[1] * k_[2]
      - 4.0 * a_[1] * b_[1] * d_[1] * e_[1] * f_[1] * g_[1] * i_[1] * i0_[1] * k_[2]
      - 2.0 * a_[1] * b0_[2] * f_[3] * h_[1] * j_[1] * k_[1] * r_[1]
      - 4.0 * a_[1] * b0_[1] * d_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[1] * r_[1]
      - 2.0 * a_[1] * b0_[1] * e_[1] * f_[2] * g_[1] * h_[1] * i0_[1] * k_[1] * r_[1]
      - 6.0 * a0_[2] * e_[2] * f_[1] * i_[2] * i0_[1] * r_[2]
      + 3.0 * a0_[2] * e_[1] * f_[2] * h_[2] * i0_[1] * r_[2]
      + 4.0 * a0_[1] * b_[2] * d_[1] * e_[1] * f_[1] * i_[2] * k_[2]
      - 2.0 * a0_[1] * b_[2] * d_[1] * f_[2] * h_[2] * k_[2]
      - 12.0 * a0_[1] * b0_[1] * e_[2] * f_[1] * i_[2] * i0_[1] * r_[2]
      + 6.0 * a0_[1] * b0_[1] * e_[1] * f_[2] * h_[2] * i0_[1] * r_[2]
      - 6.0 * a0_[1] * d_[1] * e_[2] * i_[2] * i0_[2] * r_[2]
      + 3.0 * b_[2] * d_[2] * e_[1] * i_[2] * i0_[1] * k_[2]
      - 2.0 * b0_[2] * e_[2] * f_[1] * i_[2] * i0_[1] * r_[2]
      + b0_[2] * e_[1] * f_[2] * h_[2] * i0_[1] * r_[2]
      - 6.0 * b0_[1] * d_[1] * e_[2] * i_[2] * i0_[2] * r_[2]
      - a_[2] * f_[3] * g_[2] * k_[2]
      + 4.0 * a_[1] * a0_[1] * f_[3] * g_[1] * h_[1] * k_[1] * r_[1]
      + 2.0 * a_[1] * b_[1] * d_[1] * f_[2] * g_[1] * i_[1] * k_[2]
      + 2.0 * a_[1] * b0_[1] * f_[3] * g_[1] * h_[1] * k_[1] * r_[1]
      + 2.0 * a_[1] * d_[1] * f_[2] * g_[1] * h_[1] * i0_[1] * k_[1] * r_[1]
      + 3.0 * a0_[2] * e_[1] * f_[2] * i_[2] * r_[2]
      - 3.0 * a0_[2] * f_[3] * h_[2] * r_[2]
      + 6.0 * a0_[1] * b0_[1] * e_[1] * f_[2] * i_[2] * r_[2]
      - 6.0 * a0_[1] * b0_[1] * f_[3] * h_[2] * r_[2]
      + 8.0 * a0_[1] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * r_[2]
      - 2.0 * a0_[1] * d_[1] * f_[2] * h_[2] * i0_[1] * r_[2]
      - b_[2] * d_[2] * f_[1] * i_[2] * k_[2]
      + b0_[2] * e_[1] * f_[2] * i_[2] * r_[2]
      - b0_[2] * f_[3] * h_[2] * r_[2]
      + 8.0 * b0_[1] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * r_[2]
      - 2.0 * b0_[1] * d_[1] * f_[2] * h_[2] * i0_[1] * r_[2]
      + 3.0 * d_[2] * e_[1] * i_[2] * i0_[2] * r_[2]
      - 2.0 * a0_[1] * d_[1] * f_[2] * i_[2] * r_[2]
      - 2.0 * b0_[1] * d_[1] * f_[2] * i_[2] * r_[2]
      - 2.0 * d_[2] * f_[1] * i_[2] * i0_[1] * r_[2];

  p[7] =
      -4.0 * a_[1] * a0_[2] * b0_[1] * e_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[2] * r_[1]
      - 4.0 * a_[1] * a0_[1] * b0_[2] * e_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[2] * r_[1]
      - 2.0 * a0_[3] * e_[3] * i_[2] * i0_[2] * k_[1] * r_[2]
      - 12.0 * a0_[2] * b0_[1] * e_[3] * i_[2] * i0_[2] * k_[1] * r_[2]
      - 6.0 * a0_[1] * b0_[2] * e_[3] * i_[2] * i0_[2] * k_[1] * r_[2]
      + 4.0 * a_[1] * a0_[2] * b0_[1] * f_[3] * h_[1] * j_[1] * k_[2] * r_[1]
      + 2.0 * a_[1] * a0_[2] * e_[1] * f_[2] * g_[1] * h_[1] * i0_[1] * k_[2] * r_[1]
      + 4.0 * a_[1] * a0_[1] * b0_[2] * f_[3] * h_[1] * j_[1] * k_[2] * r_[1]
      + 4.0 * a_[1] * a0_[1] * b0_[1] * d_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[2] * r_[1]
      + 4.0 * a_[1] * a0_[1] * b0_[1] * e_[1] * f_[2] * g_[1] * h_[1] * i0_[1] * k_[2] * r_[1]
      + 2.0 * a_[1] * b0_[2] * d_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[2] * r_[1]
      + 4.0 * a0_[3] * e_[2] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      - 2.0 * a0_[3] * e_[1] * f_[2] * h_[2] * i0_[1] * k_[1] * r_[2]
      + 24.0 * a0_[2] * b0_[1] * e_[2] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      - 12.0 * a0_[2] * b0_[1] * e_[1] * f_[2] * h_[2] * i0_[1] * k_[1] * r_[2]
      + 6.0 * a0_[2] * d_[1] * e_[2] * i_[2] * i0_[2] * k_[1] * r_[2]
      + 12.0 * a0_[1] * b0_[2] * e_[2] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      - 6.0 * a0_[1] * b0_[2] * e_[1] * f_[2] * h_[2] * i0_[1] * k_[1] * r_[2]
      + 24.0 * a0_[1] * b0_[1] * d_[1] * e_[2] * i_[2] * i0_[2] * k_[1] * r_[2]
      + 6.0 * b0_[2] * d_[1] * e_[2] * i_[2] * i0_[2] * k_[1] * r_[2]
      - 2.0 * a_[1] * a0_[2] * f_[3] * g_[1] * h_[1] * k_[2] * r_[1]
      - 4.0 * a_[1] * a0_[1] * b0_[1] * f_[3] * g_[1] * h_[1] * k_[2] * r_[1]
      - 2.0 * a_[1] * a0_[1] * d_[1] * f_[2] * g_[1] * h_[1] * i0_[1] * k_[2] * r_[1]
      - 2.0 * a_[1] * b0_[1] * d_[1] * f_[2] * g_[1] * h_[1] * i0_[1] * k_[2] * r_[1]
      - 2.0 * a0_[3] * e_[1] * f_[2] * i_[2] * k_[1] * r_[2]
      + 2.0 * a0_[3] * f_[3] * h_[2] * k_[1] * r_[2]
      - 12.0 * a0_[2] * b0_[1] * e_[1] * f_[2] * i_[2] * k_[1] * r_[2]
      + 12.0 * a0_[2] * b0_[1] * f_[3] * h_[2] * k_[1] * r_[2]
      - 8.0 * a0_[2] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      + 2.0 * a0_[2] * d_[1] * f_[2] * h_[2] * i0_[1] * k_[1] * r_[2]
      - 6.0 * a0_[1] * b0_[2] * e_[1] * f_[2] * i_[2] * k_[1] * r_[2]
      + 6.0 * a0_[1] * b0_[2] * f_[3] * h_[2] * k_[1] * r_[2]
      - 32.0 * a0_[1] * b0_[1] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      + 8.0 * a0_[1] * b0_[1] * d_[1] * f_[2] * h_[2] * i0_[1] * k_[1] * r_[2]
      - 6.0 * a0_[1] * d_[2] * e_[1] * i_[2] * i0_[2] * k_[1] * r_[2]
      - 8.0 * b0_[2] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      + 2.0 * b0_[2] * d_[1] * f_[2] * h_[2] * i0_[1] * k_[1] * r_[2]
      - 12.0 * b0_[1] * d_[2] * e_[1] * i_[2] * i0_[2] * k_[1] * r_[2]
      + 2.0 * a0_[2] * d_[1] * f_[2] * i_[2] * k_[1] * r_[2]
      + 8.0 * a0_[1] * b0_[1] * d_[1] * f_[2] * i_[2] * k_[1] * r_[2]
      + 4.0 * a0_[1] * d_[2] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      + 2.0 * b0_[2] * d_[1] * f_[2] * i_[2] * k_[1] * r_[2]
      + 8.0 * b0_[1] * d_[2] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      + 2.0 * d_[3] * i_[2] * i0_[2] * k_[1] * r_[2];

  p[8] =
      2.0 * a0_[3] * b0_[1] * e_[3] * i_[2] * i0_[2] * k_[2] * r_[2]
      + 3.0 * a0_[2] * b0_[2] * e_[3] * i_[2] * i0_[2] * k_[2] * r_[2]
      - 4.0 * a0_[3] * b0_[1] * e_[2] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      + 2.0 * a0_[3] * b0_[1] * e_[1] * f_[2] * h_[2] * i0_[1] * k_[2] * r_[2]
      - 6.0 * a0_[2] * b0_[2] * e_[2] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      + 3.0 * a0_[2] * b0_[2] * e_[1] * f_[2] * h_[2] * i0_[1] * k_[2] * r_[2]
      - 6.0 * a0_[2] * b0_[1] * d_[1] * e_[2] * i_[2] * i0_[2] * k_[2] * r_[2]
      - 6.0 * a0_[1] * b0_[2] * d_[1] * e_[2] * i_[2] * i0_[2] * k_[2] * r_[2]
      + a_[2] * a0_[1] * b0_[2] * e_[1] * f_[2] * i0_[1] * j_[2] * k_[2]
      - 2.0 * a_[1] * a0_[2] * b_[1] * b0_[1] * e_[2] * f_[1] * i_[1] * i0_[1] * j_[1] * k_[2]
      + a0_[3] * b_[2] * e_[3] * i_[2] * i0_[1] * k_[2]
      + 2.0 * a0_[3] * b0_[1] * e_[1] * f_[2] * i_[2] * k_[2] * r_[2]
      - 2.0 * a0_[3] * b0_[1] * f_[3] * h_[2] * k_[2] * r_[2]
      + 3.0 * a0_[2] * b0_[2] * e_[1] * f_[2] * i_[2] * k_[2] * r_[2]
      - 3.0 * a0_[2] * b0_[2] * f_[3] * h_[2] * k_[2] * r_[2]
      + 8.0 * a0_[2] * b0_[1] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      - 2.0 * a0_[2] * b0_[1] * d_[1] * f_[2] * h_[2] * i0_[1] * k_[2] * r_[2]
      + 8.0 * a0_[1] * b0_[2] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      - 2.0 * a0_[1] * b0_[2] * d_[1] * f_[2] * h_[2] * i0_[1] * k_[2] * r_[2]
      + 6.0 * a0_[1] * b0_[1] * d_[2] * e_[1] * i_[2] * i0_[2] * k_[2] * r_[2]
      + 3.0 * b0_[2] * d_[2] * e_[1] * i_[2] * i0_[2] * k_[2] * r_[2]
      - a_[2] * a0_[1] * b0_[2] * f_[3] * j_[2] * k_[2]
      - 2.0 * a_[2] * a0_[1] * b0_[1] * e_[1] * f_[2] * g_[1] * i0_[1] * j_[1] * k_[2]
      - a_[2] * b0_[2] * d_[1] * f_[2] * i0_[1] * j_[2] * k_[2]
      + 2.0 * a_[1] * a0_[2] * b_[1] * b0_[1] * e_[1] * f_[2] * i_[1] * j_[1] * k_[2]
      + 2.0 * a_[1] * a0_[2] * b_[1] * e_[2] * f_[1] * g_[1] * i_[1] * i0_[1] * k_[2]
      + 4.0 * a_[1] * a0_[2] * b0_[1] * e_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[1] * r_[1]
      + 4.0 * a_[1] * a0_[1] * b_[1] * b0_[1] * d_[1] * e_[1] * f_[1] * i_[1] * i0_[1] * j_[1] * k_[2]
      + 4.0 * a_[1] * a0_[1] * b0_[2] * e_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[1] * r_[1]
      - a0_[3] * b_[2] * e_[2] * f_[1] * i_[2] * k_[2]
      + a0_[3] * b_[2] * e_[1] * f_[2] * h_[2] * k_[2]
      + a0_[3] * e_[3] * i_[2] * i0_[2] * r_[2]
      - 3.0 * a0_[2] * b_[2] * d_[1] * e_[2] * i_[2] * i0_[1] * k_[2]
      - 2.0 * a0_[2] * b0_[1] * d_[1] * f_[2] * i_[2] * k_[2] * r_[2]
      + 6.0 * a0_[2] * b0_[1] * e_[3] * i_[2] * i0_[2] * r_[2]
      - 2.0 * a0_[1] * b0_[2] * d_[1] * f_[2] * i_[2] * k_[2] * r_[2]
      + 3.0 * a0_[1] * b0_[2] * e_[3] * i_[2] * i0_[2] * r_[2]
      - 4.0 * a0_[1] * b0_[1] * d_[2] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      - 2.0 * b0_[2] * d_[2] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      - 2.0 * b0_[1] * d_[3] * i_[2] * i0_[2] * k_[2] * r_[2]
      + 2.0 * a_[2] * a0_[1] * b0_[1] * f_[3] * g_[1] * j_[1] * k_[2]
      + a_[2] * a0_[1] * e_[1] * f_[2] * g_[2] * i0_[1] * k_[2]
      + 2.0 * a_[2] * b0_[1] * d_[1] * f_[2] * g_[1] * i0_[1] * j_[1] * k_[2]
      - 2.0 * a_[1] * a0_[2] * b_[1] * e_[1] * f_[2] * g_[1] * i_[1] * k_[2]
      - 4.0 * a_[1] * a0_[2] * b0_[1] * f_[3] * h_[1] * j_[1] * k_[1] * r_[1]
      - 2.0 * a_[1] * a0_[2] * e_[1] * f_[2] * g_[1] * h_[1] * i0_[1] * k_[1] * r_[1]
      - 2.0 * a_[1] * a0_[1] * b_[1] * b0_[1] * d_[1] * f_[2] * i_[1] * j_[1] * k_[2]
      - 4.0 * a_[1] * a0_[1] * b_[1] * d_[1] * e_[1] * f_[1] * g_[1] * i_[1] * i0_[1] * k_[2]
      - 4.0 * a_[1] * a0_[1] * b0_[2] * f_[3] * h_[1] * j_[1] * k_[1] * r_[1]
      - 4.0 * a_[1] * a0_[1] * b0_[1] * d_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[1] * r_[1]
      - 4.0 * a_[1] * a0_[1] * b0_[1] * e_[1] * f_[2] * g_[1] * h_[1] * i0_[1] * k_[1] * r_[1]
      - 2.0 * a_[1] * b_[1] * b0_[1] * d_[2] * f_[1] * i_[1] * i0_[1] * j_[1] * k_[2]
      - 2.0 * a_[1] * b0_[2] * d_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[1] * r_[1]
      - 2.0 * a0_[3] * e_[2] * f_[1] * i_[2] * i0_[1] * r_[2]
      + a0_[3] * e_[1] * f_[2] * h_[2] * i0_[1] * r_[2]
      + 2.0 * a0_[2] * b_[2] * d_[1] * e_[1] * f_[1] * i_[2] * k_[2]
      - a0_[2] * b_[2] * d_[1] * f_[2] * h_[2] * k_[2]
      - 12.0 * a0_[2] * b0_[1] * e_[2] * f_[1] * i_[2] * i0_[1] * r_[2]
      + 6.0 * a0_[2] * b0_[1] * e_[1] * f_[2] * h_[2] * i0_[1] * r_[2]
      - 3.0 * a0_[2] * d_[1] * e_[2] * i_[2] * i0_[2] * r_[2]
      + 3.0 * a0_[1] * b_[2] * d_[2] * e_[1] * i_[2] * i0_[1] * k_[2]
      - 6.0 * a0_[1] * b0_[2] * e_[2] * f_[1] * i_[2] * i0_[1] * r_[2]
      + 3.0 * a0_[1] * b0_[2] * e_[1] * f_[2] * h_[2] * i0_[1] * r_[2]
      - 12.0 * a0_[1] * b0_[1] * d_[1] * e_[2] * i_[2] * i0_[2] * r_[2]
      - 3.0 * b0_[2] * d_[1] * e_[2] * i_[2] * i0_[2] * r_[2]
      - a_[2] * a0_[1] * f_[3] * g_[2] * k_[2]
      - a_[2] * d_[1] * f_[2] * g_[2] * i0_[1] * k_[2]
      + 2.0 * a_[1] * a0_[2] * f_[3] * g_[1] * h_[1] * k_[1] * r_[1]
      + 2.0 * a_[1] * a0_[1] * b_[1] * d_[1] * f_[2] * g_[1] * i_[1] * k_[2]
      + 4.0 * a_[1] * a0_[1] * b0_[1] * f_[3] * g_[1] * h_[1] * k_[1] * r_[1]
      + 2.0 * a_[1] * a0_[1] * d_[1] * f_[2] * g_[1] * h_[1] * i0_[1] * k_[1] * r_[1]
      + 2.0 * a_[1] * b_[1] * d_[2] * f_[1] * g_[1] * i_[1] * i0_[1] * k_[2]
      + 2.0 * a_[1] * b0_[1] * d_[1] * f_[2] * g_[1] * h_[1] * i0_[1] * k_[1] * r_[1]
      + a0_[3] * e_[1] * f_[2] * i_[2] * r_[2]
      - a0_[3] * f_[3] * h_[2] * r_[2]
      + 6.0 * a0_[2] * b0_[1] * e_[1] * f_[2] * i_[2] * r_[2]
      - 6.0 * a0_[2] * b0_[1] * f_[3] * h_[2] * r_[2]
      + 4.0 * a0_[2] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * r_[2]
      - a0_[2] * d_[1] * f_[2] * h_[2] * i0_[1] * r_[2]
      - a0_[1] * b_[2] * d_[2] * f_[1] * i_[2] * k_[2]
      + 3.0 * a0_[1] * b0_[2] * e_[1] * f_[2] * i_[2] * r_[2]
      - 3.0 * a0_[1] * b0_[2] * f_[3] * h_[2] * r_[2]
      + 16.0 * a0_[1] * b0_[1] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * r_[2]
      - 4.0 * a0_[1] * b0_[1] * d_[1] * f_[2] * h_[2] * i0_[1] * r_[2]
      + 3.0 * a0_[1] * d_[2] * e_[1] * i_[2] * i0_[2] * r_[2]
      - b_[2] * d_[3] * i_[2] * i0_[1] * k_[2]
      + 4.0 * b0_[2] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * r_[2]
      - b0_[2] * d_[1] * f_[2] * h_[2] * i0_[1] * r_[2]
      + 6.0 * b0_[1] * d_[2] * e_[1] * i_[2] * i0_[2] * r_[2]
      - a0_[2] * d_[1] * f_[2] * i_[2] * r_[2]
      - 4.0 * a0_[1] * b0_[1] * d_[1] * f_[2] * i_[2] * r_[2]
      - 2.0 * a0_[1] * d_[2] * f_[1] * i_[2] * i0_[1] * r_[2]
      - b0_[2] * d_[1] * f_[2] * i_[2] * r_[2]
      - 4.0 * b0_[1] * d_[2] * f_[1] * i_[2] * i0_[1] * r_[2]
      - d_[3] * i_[2] * i0_[2] * r_[2];

  p[9] =
      -2.0 * a_[1] * a0_[2] * b0_[2] * e_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[2] * r_[1]
      - 4.0 * a0_[3] * b0_[1] * e_[3] * i_[2] * i0_[2] * k_[1] * r_[2]
      - 6.0 * a0_[2] * b0_[2] * e_[3] * i_[2] * i0_[2] * k_[1] * r_[2]
      + 2.0 * a_[1] * a0_[2] * b0_[2] * f_[3] * h_[1] * j_[1] * k_[2] * r_[1]
      + 2.0 * a_[1] * a0_[2] * b0_[1] * e_[1] * f_[2] * g_[1] * h_[1] * i0_[1] * k_[2] * r_[1]
      + 2.0 * a_[1] * a0_[1] * b0_[2] * d_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[2] * r_[1]
      + 8.0 * a0_[3] * b0_[1] * e_[2] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      - 4.0 * a0_[3] * b0_[1] * e_[1] * f_[2] * h_[2] * i0_[1] * k_[1] * r_[2]
      + 12.0 * a0_[2] * b0_[2] * e_[2] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      - 6.0 * a0_[2] * b0_[2] * e_[1] * f_[2] * h_[2] * i0_[1] * k_[1] * r_[2]
      + 12.0 * a0_[2] * b0_[1] * d_[1] * e_[2] * i_[2] * i0_[2] * k_[1] * r_[2]
      + 12.0 * a0_[1] * b0_[2] * d_[1] * e_[2] * i_[2] * i0_[2] * k_[1] * r_[2]
      - 2.0 * a_[1] * a0_[2] * b0_[1] * f_[3] * g_[1] * h_[1] * k_[2] * r_[1]
      - 2.0 * a_[1] * a0_[1] * b0_[1] * d_[1] * f_[2] * g_[1] * h_[1] * i0_[1] * k_[2] * r_[1]
      - 4.0 * a0_[3] * b0_[1] * e_[1] * f_[2] * i_[2] * k_[1] * r_[2]
      + 4.0 * a0_[3] * b0_[1] * f_[3] * h_[2] * k_[1] * r_[2]
      - 6.0 * a0_[2] * b0_[2] * e_[1] * f_[2] * i_[2] * k_[1] * r_[2]
      + 6.0 * a0_[2] * b0_[2] * f_[3] * h_[2] * k_[1] * r_[2]
      - 16.0 * a0_[2] * b0_[1] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      + 4.0 * a0_[2] * b0_[1] * d_[1] * f_[2] * h_[2] * i0_[1] * k_[1] * r_[2]
      - 16.0 * a0_[1] * b0_[2] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      + 4.0 * a0_[1] * b0_[2] * d_[1] * f_[2] * h_[2] * i0_[1] * k_[1] * r_[2]
      - 12.0 * a0_[1] * b0_[1] * d_[2] * e_[1] * i_[2] * i0_[2] * k_[1] * r_[2]
      - 6.0 * b0_[2] * d_[2] * e_[1] * i_[2] * i0_[2] * k_[1] * r_[2]
      + 4.0 * a0_[2] * b0_[1] * d_[1] * f_[2] * i_[2] * k_[1] * r_[2]
      + 4.0 * a0_[1] * b0_[2] * d_[1] * f_[2] * i_[2] * k_[1] * r_[2]
      + 8.0 * a0_[1] * b0_[1] * d_[2] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      + 4.0 * b0_[2] * d_[2] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      + 4.0 * b0_[1] * d_[3] * i_[2] * i0_[2] * k_[1] * r_[2];

  p[10] =
      a0_[3] * b0_[2] * e_[3] * i_[2] * i0_[2] * k_[2] * r_[2]
      - 2.0 * a0_[3] * b0_[2] * e_[2] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      + a0_[3] * b0_[2] * e_[1] * f_[2] * h_[2] * i0_[1] * k_[2] * r_[2]
      - 3.0 * a0_[2] * b0_[2] * d_[1] * e_[2] * i_[2] * i0_[2] * k_[2] * r_[2]
      + a0_[3] * b0_[2] * e_[1] * f_[2] * i_[2] * k_[2] * r_[2]
      - a0_[3] * b0_[2] * f_[3] * h_[2] * k_[2] * r_[2]
      + 4.0 * a0_[2] * b0_[2] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      - a0_[2] * b0_[2] * d_[1] * f_[2] * h_[2] * i0_[1] * k_[2] * r_[2]
      + 3.0 * a0_[1] * b0_[2] * d_[2] * e_[1] * i_[2] * i0_[2] * k_[2] * r_[2]
      + 2.0 * a_[1] * a0_[2] * b0_[2] * e_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[1] * r_[1]
      + 2.0 * a0_[3] * b0_[1] * e_[3] * i_[2] * i0_[2] * r_[2]
      - a0_[2] * b0_[2] * d_[1] * f_[2] * i_[2] * k_[2] * r_[2]
      + 3.0 * a0_[2] * b0_[2] * e_[3] * i_[2] * i0_[2] * r_[2]
      - 2.0 * a0_[1] * b0_[2] * d_[2] * f_[1] * i_[2] * i0_[1] * k_[2] * r_[2]
      - b0_[2] * d_[3] * i_[2] * i0_[2] * k_[2] * r_[2]
      - 2.0 * a_[1] * a0_[2] * b0_[2] * f_[3] * h_[1] * j_[1] * k_[1] * r_[1]
      - 2.0 * a_[1] * a0_[2] * b0_[1] * e_[1] * f_[2] * g_[1] * h_[1] * i0_[1] * k_[1] * r_[1]
      - 2.0 * a_[1] * a0_[1] * b0_[2] * d_[1] * f_[2] * h_[1] * i0_[1] * j_[1] * k_[1] * r_[1]
      - 4.0 * a0_[3] * b0_[1] * e_[2] * f_[1] * i_[2] * i0_[1] * r_[2]
      + 2.0 * a0_[3] * b0_[1] * e_[1] * f_[2] * h_[2] * i0_[1] * r_[2]
      - 6.0 * a0_[2] * b0_[2] * e_[2] * f_[1] * i_[2] * i0_[1] * r_[2]
      + 3.0 * a0_[2] * b0_[2] * e_[1] * f_[2] * h_[2] * i0_[1] * r_[2]
      - 6.0 * a0_[2] * b0_[1] * d_[1] * e_[2] * i_[2] * i0_[2] * r_[2]
      - 6.0 * a0_[1] * b0_[2] * d_[1] * e_[2] * i_[2] * i0_[2] * r_[2]
      + 2.0 * a_[1] * a0_[2] * b0_[1] * f_[3] * g_[1] * h_[1] * k_[1] * r_[1]
      + 2.0 * a_[1] * a0_[1] * b0_[1] * d_[1] * f_[2] * g_[1] * h_[1] * i0_[1] * k_[1] * r_[1]
      + 2.0 * a0_[3] * b0_[1] * e_[1] * f_[2] * i_[2] * r_[2]
      - 2.0 * a0_[3] * b0_[1] * f_[3] * h_[2] * r_[2]
      + 3.0 * a0_[2] * b0_[2] * e_[1] * f_[2] * i_[2] * r_[2]
      - 3.0 * a0_[2] * b0_[2] * f_[3] * h_[2] * r_[2]
      + 8.0 * a0_[2] * b0_[1] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * r_[2]
      - 2.0 * a0_[2] * b0_[1] * d_[1] * f_[2] * h_[2] * i0_[1] * r_[2]
      + 8.0 * a0_[1] * b0_[2] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * r_[2]
      - 2.0 * a0_[1] * b0_[2] * d_[1] * f_[2] * h_[2] * i0_[1] * r_[2]
      + 6.0 * a0_[1] * b0_[1] * d_[2] * e_[1] * i_[2] * i0_[2] * r_[2]
      + 3.0 * b0_[2] * d_[2] * e_[1] * i_[2] * i0_[2] * r_[2]
      - 2.0 * a0_[2] * b0_[1] * d_[1] * f_[2] * i_[2] * r_[2]
      - 2.0 * a0_[1] * b0_[2] * d_[1] * f_[2] * i_[2] * r_[2]
      - 4.0 * a0_[1] * b0_[1] * d_[2] * f_[1] * i_[2] * i0_[1] * r_[2]
      - 2.0 * b0_[2] * d_[2] * f_[1] * i_[2] * i0_[1] * r_[2]
      - 2.0 * b0_[1] * d_[3] * i_[2] * i0_[2] * r_[2];

  p[11] =
      -2.0 * a0_[3] * b0_[2] * e_[3] * i_[2] * i0_[2] * k_[1] * r_[2]
      + 4.0 * a0_[3] * b0_[2] * e_[2] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      - 2.0 * a0_[3] * b0_[2] * e_[1] * f_[2] * h_[2] * i0_[1] * k_[1] * r_[2]
      + 6.0 * a0_[2] * b0_[2] * d_[1] * e_[2] * i_[2] * i0_[2] * k_[1] * r_[2]
      - 2.0 * a0_[3] * b0_[2] * e_[1] * f_[2] * i_[2] * k_[1] * r_[2]
      + 2.0 * a0_[3] * b0_[2] * f_[3] * h_[2] * k_[1] * r_[2]
      - 8.0 * a0_[2] * b0_[2] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      + 2.0 * a0_[2] * b0_[2] * d_[1] * f_[2] * h_[2] * i0_[1] * k_[1] * r_[2]
      - 6.0 * a0_[1] * b0_[2] * d_[2] * e_[1] * i_[2] * i0_[2] * k_[1] * r_[2]
      + 2.0 * a0_[2] * b0_[2] * d_[1] * f_[2] * i_[2] * k_[1] * r_[2]
      + 4.0 * a0_[1] * b0_[2] * d_[2] * f_[1] * i_[2] * i0_[1] * k_[1] * r_[2]
      + 2.0 * b0_[2] * d_[3] * i_[2] * i0_[2] * k_[1] * r_[2];

  p[12] =
      a0_[3] * b0_[2] * e_[3] * i_[2] * i0_[2] * r_[2]
      - 2.0 * a0_[3] * b0_[2] * e_[2] * f_[1] * i_[2] * i0_[1] * r_[2]
      + a0_[3] * b0_[2] * e_[1] * f_[2] * h_[2] * i0_[1] * r_[2]
      - 3.0 * a0_[2] * b0_[2] * d_[1] * e_[2] * i_[2] * i0_[2] * r_[2]
      + a0_[3] * b0_[2] * e_[1] * f_[2] * i_[2] * r_[2]
      - a0_[3] * b0_[2] * f_[3] * h_[2] * r_[2]
      + 4.0 * a0_[2] * b0_[2] * d_[1] * e_[1] * f_[1] * i_[2] * i0_[1] * r_[2]
      - a0_[2] * b0_[2] * d_[1] * f_[2] * h_[2] * i0_[1] * r_[2]
      + 3.0 * a0_[1] * b0_[2] * d_[2] * e_[1] * i_[2] * i0_[2] * r_[2]
      - a0_[2] * b0_[2] * d_[1] * f_[2] * i_[2] * r_[2]
      - 2.0 * a0_[1] * b0_[2] * d_[2] * f_[1] * i_[2] * i0_[1] * r_[2]
      - b0_[2] * d_[3] * i_[2] * i0_[2] * r_[2];
  return p;
}

}  // namespace pps
