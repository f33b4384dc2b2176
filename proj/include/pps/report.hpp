#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pps/equilibria.hpp"
#include "pps/stability.hpp"

namespace pps {

struct AnalysisEntry {
  Equilibrium equilibrium;
  std::optional<StabilityVerdict> verdict;  // only for existing points
  std::string verdict_error;                // set if classification threw
};

struct Analysis {
  ModelParams params;
  std::vector<AnalysisEntry> entries;
  InteriorCrossCheck cross_check;

  bool multiple_roots() const;
  nlohmann::json to_json() const;
  // Fixed-width table: point, existence checks with values, verdict.
  std::string table() const;
};

// Every steady state of the full system and of the three two-species
// subsystems, each classified in the system it lives in.
Analysis analyze(const ModelParams& p);

nlohmann::json to_json(const Equilibrium& eq);
nlohmann::json to_json(const StabilityVerdict& v);

}  // namespace pps
