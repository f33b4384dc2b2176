#include "pps/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "pps/error.hpp"
#include "pps/format.hpp"

namespace pps {

namespace {

nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

nlohmann::json checks_json(const std::vector<ConditionCheck>& checks) {
  auto out = nlohmann::json::array();
  for (const auto& c : checks)
    out.push_back({{"name", c.name}, {"satisfied", c.satisfied}, {"value", number(c.value)}});
  return out;
}

std::string fixed(double v, int digits = 6) {
  if (!std::isfinite(v)) return "-";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

nlohmann::json to_json(const Equilibrium& eq) {
  nlohmann::json j{{"label", std::string(to_string(eq.label))},
                   {"subsystem", std::string(to_string(eq.subsystem))},
                   {"point", {number(eq.point.x), number(eq.point.y), number(eq.point.z)}},
                   {"exists", eq.exists},
                   {"existence", checks_json(eq.existence)},
                   {"multiple_roots", eq.multiple_roots}};
  if (eq.x0) j["x0"] = number(*eq.x0);
  if (eq.z0) j["z0"] = number(*eq.z0);
  return j;
}

nlohmann::json to_json(const StabilityVerdict& v) {
  auto eig = nlohmann::json::array();
  for (const auto& l : v.eigenvalues) eig.push_back({number(l.real()), number(l.imag())});
  auto jac = nlohmann::json::array();
  for (Eigen::Index r = 0; r < v.jacobian.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < v.jacobian.cols(); ++c) row.push_back(number(v.jacobian(r, c)));
    jac.push_back(row);
  }
  return {{"classification", std::string(to_string(v.classification))},
          {"dimension", v.dimension},
          {"m1", number(v.m1)},
          {"m2", number(v.m2)},
          {"m3", number(v.m3)},
          {"m1m2_minus_m3", number(v.m1 * v.m2 - v.m3)},
          {"eigenvalues", eig},
          {"criteria", checks_json(v.criteria)},
          {"criteria_disagree", v.criteria_disagree},
          {"jacobian", jac}};
}

bool Analysis::multiple_roots() const {
  for (const auto& e : entries)
    if (e.equilibrium.multiple_roots) return true;
  return false;
}

nlohmann::json Analysis::to_json() const {
  nlohmann::json params_json = nlohmann::json::object();
  const auto values = params.to_array();
  for (std::size_t n = 0; n < kParamCount; ++n)
    params_json[std::string(ModelParams::keys[n])] = values[n];

  auto list = nlohmann::json::array();
  for (const auto& e : entries) {
    auto j = pps::to_json(e.equilibrium);
    if (e.verdict) j["stability"] = pps::to_json(*e.verdict);
    if (!e.verdict_error.empty()) j["stability_error"] = e.verdict_error;
    list.push_back(std::move(j));
  }

  nlohmann::json cc{{"poly_roots", cross_check.poly_roots},
                    {"direct_x", cross_check.direct_x ? number(*cross_check.direct_x) : nullptr},
                    {"relative_gap", number(cross_check.relative_gap)},
                    {"agrees", cross_check.agrees}};
  return {{"params", params_json},
          {"equilibria", list},
          {"interior_cross_check", cc},
          {"multiple_roots", multiple_roots()}};
}

std::string Analysis::table() const {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-10s %-9s %-12s %-12s %-12s %-7s %s\n", "label", "system", "x",
                "y", "z", "exists", "verdict");
  out << line;
  for (const auto& e : entries) {
    const auto& eq = e.equilibrium;
    std::string verdict = "-";
    if (e.verdict) {
      verdict = std::string(to_string(e.verdict->classification));
      if (e.verdict->dimension == 3)
        verdict += " (m1=" + fixed(e.verdict->m1) + " m2=" + fixed(e.verdict->m2) +
                   " m3=" + fixed(e.verdict->m3) +
                   " m1m2-m3=" + fixed(e.verdict->m1 * e.verdict->m2 - e.verdict->m3) + ")";
      if (e.verdict->criteria_disagree) verdict += " [criteria disagree]";
    } else if (!e.verdict_error.empty()) {
      verdict = e.verdict_error;
    }
    std::snprintf(line, sizeof line, "%-10s %-9s %-12s %-12s %-12s %-7s ",
                  std::string(to_string(eq.label)).c_str(),
                  std::string(to_string(eq.subsystem)).c_str(), fixed(eq.point.x).c_str(),
                  fixed(eq.point.y).c_str(), fixed(eq.point.z).c_str(), eq.exists ? "yes" : "no");
    out << line << verdict << '\n';
    for (const auto& c : eq.existence)
      out << "    existence: " << c.name << " -> " << (c.satisfied ? "holds" : "fails")
          << " (value " << format_double(c.value) << ")\n";
    if (e.verdict)
      for (const auto& c : e.verdict->criteria)
        out << "    stability: " << c.name << " -> " << (c.satisfied ? "holds" : "fails")
            << " (value " << format_double(c.value) << ")\n";
    if (eq.multiple_roots) out << "    warning: multiple admissible interior roots\n";
  }
  out << "interior polynomial cross-check: ";
  if (cross_check.agrees) {
    out << "agrees (relative gap " << format_double(cross_check.relative_gap) << ")\n";
  } else {
    out << "does not agree (" << cross_check.poly_roots.size() << " positive roots)\n";
  }
  return out.str();
}

Analysis analyze(const ModelParams& p) {
  Analysis a;
  a.params = p;
  std::vector<Equilibrium> points = all_equilibria(p);
  for (auto* family : {&predscav_equilibria, &predprey_equilibria, &scavprey_equilibria})
    for (auto& eq : (*family)(p)) points.push_back(std::move(eq));
  for (auto& eq : points) {
    AnalysisEntry entry{std::move(eq), std::nullopt, {}};
    if (entry.equilibrium.exists) {
      try {
        entry.verdict = classify(p, entry.equilibrium);
      } catch (const Error& err) {
        entry.verdict_error = err.what();
      }
    }
    a.entries.push_back(std::move(entry));
  }
  a.cross_check = cross_check_interior(p);
  return a;
}

}  // namespace pps
