#pragma once

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

namespace pps {

inline constexpr std::size_t kParamCount = 14;

// The fourteen rates of the predator (y), prey (x), scavenger (z) system.
// Conversion factors are already folded into d, f and g.
struct ModelParams {
  double r = 1.0;   // prey logistic growth rate
  double k = 1.0;   // prey carrying capacity
  double a = 1.0;   // prey discovery rate, predator
  double a0 = 1.0;  // prey handling time, predator
  double b = 1.0;   // prey discovery rate, scavenger
  double b0 = 1.0;  // prey handling time, scavenger
  double d = 1.0;   // predator growth from prey
  double e = 1.0;   // predator natural death rate
  double f = 1.0;   // predator growth from scavenger
  double g = 1.0;   // scavenger growth from prey
  double h = 1.0;   // scavenge factor
  double i = 1.0;   // scavenger discovery rate, predator
  double i0 = 1.0;  // scavenger handling time, predator
  double j = 1.0;   // scavenger natural death rate

  // Fixed key order used by the text format, the parameter vector and the network.
  static constexpr std::array<std::string_view, kParamCount> keys = {
      "r", "k", "a", "a0", "b", "b0", "d", "e", "f", "g", "h", "i", "i0", "j"};

  std::array<double, kParamCount> to_array() const;
  static ModelParams from_array(std::span<const double> values);

  // Throws InvalidParams unless every field is finite and strictly positive.
  void validate() const;
  bool is_valid() const noexcept;

  bool operator==(const ModelParams&) const = default;
};

struct State {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double t = 0.0;

  std::array<double, 3> values() const { return {x, y, z}; }
};

struct Derivative {
  double dx = 0.0;
  double dy = 0.0;
  double dz = 0.0;

  std::array<double, 3> values() const { return {dx, dy, dz}; }
};

enum class Subsystem { Full, PredPrey, PredScav, ScavPrey };

std::string_view to_string(Subsystem s);
Subsystem parse_subsystem(std::string_view name);

// Holling type III response with exponent 2: rate u^2 / (1 + handle u^2).
double holling3(double u, double rate, double handle);

// Right-hand side of the full three-species system. Autonomous; s.t is ignored.
// Throws NumericalOverflow if any component is non-finite.
Derivative rhs(const State& s, const ModelParams& p);

// Reduced system with one species removed. The removed component of s must be
// exactly zero (MaskViolation otherwise) and its derivative is reported as 0.
Derivative rhs_subsystem(const State& s, const ModelParams& p, Subsystem mask);

// Flat "key = value" text, one parameter per line; '#' starts a comment.
std::string to_kv(const ModelParams& p);
ModelParams parse_kv(std::string_view text);
ModelParams load_params(const std::filesystem::path& path);
void save_params(const ModelParams& p, const std::filesystem::path& path);

}  // namespace pps
