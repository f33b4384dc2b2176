#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pps/model.hpp"

namespace pps {

enum class Group { Predator, Prey, Scavenger };

std::string_view to_string(Group g);
Group parse_group(std::string_view name);

using SpeciesMap = std::map<std::string, Group, std::less<>>;

// {"species": "predator" | "prey" | "scavenger"}
SpeciesMap parse_species_map(std::string_view json_text);
SpeciesMap load_species_map(const std::filesystem::path& path);

struct ColumnRange {
  double min = 0.0;
  double max = 1.0;

  double normalize(double raw) const { return (raw - min) / (max - min); }
  double denormalize(double unit) const { return min + unit * (max - min); }
};

struct Provenance {
  ColumnRange t, x, y, z;
  std::string source = "series";  // ingest | synthesize | series
  nlohmann::json generator = nlohmann::json::object();
};

// Normalized observations: times and every species group in [0, 1].
struct Dataset {
  std::vector<double> times;
  std::vector<State> observations;  // observation.t == times[n]
  Provenance provenance;

  std::size_t size() const { return observations.size(); }

  // Wraps already-normalized series with identity ranges. Checks the shape
  // invariants (>= 3 samples, increasing times, values in [0, 1]).
  static Dataset from_series(std::vector<double> times, std::vector<State> observations);

  // Min-max normalizes raw series, recording the ranges. Throws ConstantColumn.
  static Dataset from_raw(std::span<const double> raw_times, std::span<const State> raw_states,
                          std::string source = "series");
};

// Parses `year,<species>...` rows, sums species within each group and
// normalizes. Throws MissingColumn, NonNumericCell, UnmappedSpecies, EmptyGroup,
// ConstantColumn or TooFewSamples.
Dataset ingest(std::istream& csv, const SpeciesMap& map);
Dataset ingest_file(const std::filesystem::path& csv, const SpeciesMap& map);

// Integrates the full system from s0 on the raw grid, adds N(0, sigma) noise
// scaled by each column's range, clamps at 0 and normalizes.
Dataset synthesize(const ModelParams& p, const State& s0, std::span<const double> raw_grid,
                   double noise_sigma, std::uint64_t seed);

std::vector<double> uniform_grid(double t0, double t1, std::size_t points);

State denormalize(const Dataset& ds, const State& unit);
State normalize(const Dataset& ds, const State& raw);

// CSV `t,x,y,z` plus `<stem>.provenance.json` next to it.
void write_dataset(const Dataset& ds, const std::filesystem::path& csv_path);
// Reads the CSV and, if present, its provenance sidecar.
Dataset read_dataset(const std::filesystem::path& csv_path);
std::filesystem::path provenance_path(const std::filesystem::path& csv_path);

nlohmann::json to_json(const Provenance& prov);
Provenance provenance_from_json(const nlohmann::json& j);

}  // namespace pps
