#include "pps/model.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "pps/error.hpp"
#include "pps/format.hpp"

namespace pps {

namespace {

double* field(ModelParams& p, std::size_t idx) {
  double* fields[kParamCount] = {&p.r, &p.k,  &p.a, &p.a0, &p.b, &p.b0, &p.d,
                                 &p.e, &p.f,  &p.g, &p.h,  &p.i, &p.i0, &p.j};
  return fields[idx];
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::array<double, kParamCount> ModelParams::to_array() const {
  return {r, k, a, a0, b, b0, d, e, f, g, h, i, i0, j};
}

ModelParams ModelParams::from_array(std::span<const double> values) {
  if (values.size() != kParamCount) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected 14 parameter values, got " + std::to_string(values.size()));
  }
  ModelParams p;
  for (std::size_t n = 0; n < kParamCount; ++n) *field(p, n) = values[n];
  return p;
}

bool ModelParams::is_valid() const noexcept {
  for (double v : to_array()) {
    if (!std::isfinite(v) || !(v > 0.0)) return false;
  }
  return true;
}

void ModelParams::validate() const {
  const auto values = to_array();
  for (std::size_t n = 0; n < kParamCount; ++n) {
    if (!std::isfinite(values[n]) || !(values[n] > 0.0)) {
      throw Error(ErrorCode::InvalidParams,
                  "parameter '" + std::string(keys[n]) + "' must be finite and > 0, got " +
                      format_double(values[n]));
    }
  }
}

std::string_view to_string(Subsystem s) {
  switch (s) {
    case Subsystem::Full: return "full";
    case Subsystem::PredPrey: return "predprey";
    case Subsystem::PredScav: return "predscav";
    case Subsystem::ScavPrey: return "scavprey";
  }
  return "full";
}

Subsystem parse_subsystem(std::string_view name) {
  if (name == "full") return Subsystem::Full;
  if (name == "predprey") return Subsystem::PredPrey;
  if (name == "predscav") return Subsystem::PredScav;
  if (name == "scavprey") return Subsystem::ScavPrey;
  throw Error(ErrorCode::ParseError, "unknown subsystem '" + std::string(name) + "'");
}

double holling3(double u, double rate, double handle) {
  const double u2 = u * u;
  return rate * u2 / (1.0 + handle * u2);
}

Derivative rhs(const State& s, const ModelParams& p) {
  const double x = s.x, y = s.y, z = s.z;
  const double pred_on_prey = holling3(x, 1.0, p.a0);  // x^2 / (1 + a0 x^2)
  const double scav_on_prey = holling3(x, 1.0, p.b0);
  const double pred_on_scav = holling3(z, 1.0, p.i0);

  Derivative out;
  out.dx = p.r * x * (1.0 - x / p.k) - p.a * pred_on_prey * y - p.b * scav_on_prey * z;
  out.dy = p.d * pred_on_prey * y + p.f * pred_on_scav * y - p.e * y;
  out.dz = p.g * scav_on_prey * z + p.h * y * z - p.i * y * pred_on_scav - p.j * z;

  if (!std::isfinite(out.dx) || !std::isfinite(out.dy) || !std::isfinite(out.dz)) {
    throw Error(ErrorCode::NumericalOverflow, "non-finite right-hand side");
  }
  return out;
}

Derivative rhs_subsystem(const State& s, const ModelParams& p, Subsystem mask) {
  auto require_zero = [](double v, const char* name) {
    if (v != 0.0) {
      throw Error(ErrorCode::MaskViolation,
                  std::string(name) + " must be 0 in this subsystem, got " + format_double(v));
    }
  };
  switch (mask) {
    case Subsystem::Full:
      break;
    case Subsystem::PredPrey:
      require_zero(s.z, "z");
      break;
    case Subsystem::PredScav:
      require_zero(s.x, "x");
      break;
    case Subsystem::ScavPrey:
      require_zero(s.y, "y");
      break;
  }
  // With the absent species at zero every coupling term through it vanishes,
  // so the full right-hand side reduces to the subsystem exactly.
  return rhs(s, p);
}

std::string to_kv(const ModelParams& p) {
  std::string out;
  const auto values = p.to_array();
  for (std::size_t n = 0; n < kParamCount; ++n) {
    out += std::string(ModelParams::keys[n]) + " = " + format_double(values[n]) + "\n";
  }
  return out;
}

ModelParams parse_kv(std::string_view text) {
  ModelParams p;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find_first_of("=:");
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view val = trim(line.substr(eq + 1));

    std::size_t idx = kParamCount;
    for (std::size_t n = 0; n < kParamCount; ++n) {
      if (ModelParams::keys[n] == key) idx = n;
    }
    if (idx == kParamCount) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
    if (!seen.insert(std::string(key)).second) {
      throw Error(ErrorCode::ParseError, "duplicate key '" + std::string(key) + "'");
    }
    double v = 0.0;
    const auto res = std::from_chars(val.data(), val.data() + val.size(), v);
    if (res.ec != std::errc{} || res.ptr != val.data() + val.size()) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad number '" +
                                             std::string(val) + "'");
    }
    *field(p, idx) = v;
  }
  for (auto key : ModelParams::keys) {
    if (!seen.contains(key)) {
      throw Error(ErrorCode::ParseError, "missing key '" + std::string(key) + "'");
    }
  }
  p.validate();
  return p;
}

ModelParams load_params(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open parameter file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_kv(buf.str());
}

void save_params(const ModelParams& p, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << to_kv(p);
}

}  // namespace pps
