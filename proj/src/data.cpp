#include "pps/data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "pps/error.hpp"
#include "pps/format.hpp"
#include "pps/solver.hpp"

namespace pps {

namespace {

constexpr std::size_t kMinSamples = 3;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_cell(std::string_view cell, std::size_t row, std::string_view column) {
  double v = 0.0;
  const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (cell.empty() || res.ec != std::errc{} || res.ptr != cell.data() + cell.size() ||
      !std::isfinite(v)) {
    throw Error(ErrorCode::NonNumericCell, "row " + std::to_string(row) + ", column '" +
                                               std::string(column) + "': '" + std::string(cell) +
                                               "' is not a number");
  }
  return v;
}

ColumnRange range_of(std::span<const double> values, const char* name) {
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (!(*hi > *lo)) {
    throw Error(ErrorCode::ConstantColumn,
                std::string("column ") + name + " is constant; min-max scaling is undefined");
  }
  return {*lo, *hi};
}

void check_shape(std::span<const double> times, std::size_t states) {
  if (times.size() != states) {
    throw Error(ErrorCode::DimensionMismatch, "times and observations differ in length");
  }
  if (times.size() < kMinSamples) {
    throw Error(ErrorCode::TooFewSamples, "need at least 3 samples, got " +
                                              std::to_string(times.size()));
  }
  for (std::size_t n = 1; n < times.size(); ++n) {
    if (!(times[n] > times[n - 1])) {
      throw Error(ErrorCode::ParseError, "times must be strictly increasing");
    }
  }
}

}  // namespace

std::string_view to_string(Group g) {
  switch (g) {
    case Group::Predator: return "predator";
    case Group::Prey: return "prey";
    case Group::Scavenger: return "scavenger";
  }
  return "prey";
}

Group parse_group(std::string_view name) {
  if (name == "predator") return Group::Predator;
  if (name == "prey") return Group::Prey;
  if (name == "scavenger") return Group::Scavenger;
  throw Error(ErrorCode::ParseError, "unknown species group '" + std::string(name) + "'");
}

SpeciesMap parse_species_map(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("species map: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "species map must be a JSON object");
  SpeciesMap map;
  for (const auto& [name, group] : j.items()) {
    if (!group.is_string()) {
      throw Error(ErrorCode::ParseError, "species map: group of '" + name + "' must be a string");
    }
    map.emplace(name, parse_group(group.get<std::string>()));
  }
  return map;
}

SpeciesMap load_species_map(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open species map " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_species_map(buf.str());
}

Dataset Dataset::from_series(std::vector<double> times, std::vector<State> observations) {
  check_shape(times, observations.size());
  for (std::size_t n = 0; n < observations.size(); ++n) {
    for (double v : {times[n], observations[n].x, observations[n].y, observations[n].z}) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw Error(ErrorCode::InvalidConfig, "normalized dataset values must lie in [0, 1]");
      }
    }
    observations[n].t = times[n];
  }
  Dataset ds;
  ds.times = std::move(times);
  ds.observations = std::move(observations);
  return ds;
}

Dataset Dataset::from_raw(std::span<const double> raw_times, std::span<const State> raw_states,
                          std::string source) {
  check_shape(raw_times, raw_states.size());
  const std::size_t n = raw_states.size();
  std::vector<double> xs(n), ys(n), zs(n);
  for (std::size_t r = 0; r < n; ++r) {
    xs[r] = raw_states[r].x;
    ys[r] = raw_states[r].y;
    zs[r] = raw_states[r].z;
  }
  Dataset ds;
  ds.provenance.t = range_of(raw_times, "t");
  ds.provenance.x = range_of(xs, "x (prey)");
  ds.provenance.y = range_of(ys, "y (predator)");
  ds.provenance.z = range_of(zs, "z (scavenger)");
  ds.provenance.source = std::move(source);
  ds.times.resize(n);
  ds.observations.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    const State raw{xs[r], ys[r], zs[r], raw_times[r]};
    ds.observations[r] = normalize(ds, raw);
    ds.times[r] = ds.observations[r].t;
  }
  return ds;
}

Dataset ingest(std::istream& csv, const SpeciesMap& map) {
  std::string line;
  if (!std::getline(csv, line)) throw Error(ErrorCode::MissingColumn, "empty CSV: no header row");
  const auto header = split_csv(line);
  if (header.empty() || header[0] != "year") {
    throw Error(ErrorCode::MissingColumn, "first column must be 'year'");
  }
  if (header.size() < 2) throw Error(ErrorCode::MissingColumn, "no species columns");

  std::vector<Group> groups;
  bool seen[3] = {false, false, false};
  for (std::size_t c = 1; c < header.size(); ++c) {
    const auto it = map.find(header[c]);
    if (it == map.end()) {
      throw Error(ErrorCode::UnmappedSpecies,
                  "species '" + std::string(header[c]) + "' has no group in the species map");
    }
    groups.push_back(it->second);
    seen[static_cast<int>(it->second)] = true;
  }
  for (Group g : {Group::Predator, Group::Prey, Group::Scavenger}) {
    if (!seen[static_cast<int>(g)]) {
      throw Error(ErrorCode::EmptyGroup,
                  "no species column maps to group '" + std::string(to_string(g)) + "'");
    }
  }

  std::vector<double> years;
  std::vector<State> sums;
  std::size_t row = 1;
  while (std::getline(csv, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != header.size()) {
      throw Error(ErrorCode::MissingColumn, "row " + std::to_string(row) + " has " +
                                                std::to_string(cells.size()) + " cells, expected " +
                                                std::to_string(header.size()));
    }
    years.push_back(parse_cell(cells[0], row, "year"));
    State s;
    for (std::size_t c = 1; c < cells.size(); ++c) {
      const double v = parse_cell(cells[c], row, header[c]);
      switch (groups[c - 1]) {
        case Group::Prey: s.x += v; break;
        case Group::Predator: s.y += v; break;
        case Group::Scavenger: s.z += v; break;
      }
    }
    sums.push_back(s);
  }
  if (years.size() < kMinSamples) {
    throw Error(ErrorCode::TooFewSamples,
                "need at least 3 rows, got " + std::to_string(years.size()));
  }
  return Dataset::from_raw(years, sums, "ingest");
}

Dataset ingest_file(const std::filesystem::path& csv, const SpeciesMap& map) {
  std::ifstream in(csv);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + csv.string());
  return ingest(in, map);
}

std::vector<double> uniform_grid(double t0, double t1, std::size_t points) {
  if (points < 2 || !(t1 > t0)) throw Error(ErrorCode::InvalidConfig, "grid needs t1 > t0 and >= 2 points");
  std::vector<double> grid(points);
  const double step = (t1 - t0) / static_cast<double>(points - 1);
  for (std::size_t n = 0; n < points; ++n) grid[n] = t0 + step * static_cast<double>(n);
  grid.back() = t1;
  return grid;
}

Dataset synthesize(const ModelParams& p, const State& s0, std::span<const double> raw_grid,
                   double noise_sigma, std::uint64_t seed) {
  p.validate();
  if (raw_grid.size() < kMinSamples) {
    throw Error(ErrorCode::TooFewSamples, "synthetic grid needs at least 3 points");
  }
  if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma)) {
    throw Error(ErrorCode::InvalidConfig, "noise sigma must be finite and >= 0");
  }
  State start = s0;
  start.t = raw_grid.front();
  SolverConfig cfg;
  cfg.t_start = raw_grid.front();
  cfg.t_end = raw_grid.back();
  Trajectory traj;
  try {
    traj = integrate_at(p, start, raw_grid, cfg);
  } catch (const Error& e) {
    throw Error(ErrorCode::IntegrationFailed, std::string("synthesize: ") + e.what());
  }

  std::vector<State> raw = traj.states;
  if (noise_sigma > 0.0) {
    std::vector<double> xs, ys, zs;
    for (const State& s : raw) {
      xs.push_back(s.x);
      ys.push_back(s.y);
      zs.push_back(s.z);
    }
    auto width = [](const std::vector<double>& v) {
      const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
      return *hi - *lo;
    };
    const double wx = width(xs), wy = width(ys), wz = width(zs);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, noise_sigma);
    for (State& s : raw) {
      s.x = std::max(0.0, s.x + wx * noise(rng));
      s.y = std::max(0.0, s.y + wy * noise(rng));
      s.z = std::max(0.0, s.z + wz * noise(rng));
    }
  }
  Dataset ds = Dataset::from_raw(raw_grid, raw, "synthesize");
  ds.provenance.generator = {
      {"params", nlohmann::json::object()},
      {"initial_state", {s0.x, s0.y, s0.z}},
      {"t_start", raw_grid.front()},
      {"t_end", raw_grid.back()},
      {"points", raw_grid.size()},
      {"noise_sigma", noise_sigma},
      {"seed", seed},
  };
  const auto values = p.to_array();
  for (std::size_t n = 0; n < kParamCount; ++n) {
    ds.provenance.generator["params"][std::string(ModelParams::keys[n])] = values[n];
  }
  return ds;
}

State denormalize(const Dataset& ds, const State& unit) {
  const Provenance& pr = ds.provenance;
  return State{pr.x.denormalize(unit.x), pr.y.denormalize(unit.y), pr.z.denormalize(unit.z),
               pr.t.denormalize(unit.t)};
}

State normalize(const Dataset& ds, const State& raw) {
  const Provenance& pr = ds.provenance;
  return State{pr.x.normalize(raw.x), pr.y.normalize(raw.y), pr.z.normalize(raw.z),
               pr.t.normalize(raw.t)};
}

std::filesystem::path provenance_path(const std::filesystem::path& csv_path) {
  auto out = csv_path;
  out.replace_filename(csv_path.stem().string() + ".provenance.json");
  return out;
}

nlohmann::json to_json(const Provenance& prov) {
  auto range = [](const ColumnRange& r) { return nlohmann::json{{"min", r.min}, {"max", r.max}}; };
  return nlohmann::json{{"source", prov.source}, {"t", range(prov.t)}, {"x", range(prov.x)},
                        {"y", range(prov.y)},    {"z", range(prov.z)}, {"generator", prov.generator}};
}

Provenance provenance_from_json(const nlohmann::json& j) {
  try {
    auto range = [&](const char* key) {
      return ColumnRange{j.at(key).at("min").get<double>(), j.at(key).at("max").get<double>()};
    };
    Provenance p;
    p.t = range("t");
    p.x = range("x");
    p.y = range("y");
    p.z = range("z");
    p.source = j.value("source", std::string("series"));
    if (j.contains("generator")) p.generator = j.at("generator");
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("provenance: ") + e.what());
  }
}

void write_dataset(const Dataset& ds, const std::filesystem::path& csv_path) {
  std::ofstream out(csv_path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + csv_path.string());
  out << "t,x,y,z\n";
  for (const State& s : ds.observations) {
    out << format_double(s.t) << ',' << format_double(s.x) << ',' << format_double(s.y) << ','
        << format_double(s.z) << '\n';
  }
  std::ofstream side(provenance_path(csv_path));
  if (!side) throw Error(ErrorCode::IoError, "cannot write " + provenance_path(csv_path).string());
  side << to_json(ds.provenance).dump(2) << '\n';
}

Dataset read_dataset(const std::filesystem::path& csv_path) {
  std::ifstream in(csv_path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + csv_path.string());
  std::string line;
  if (!std::getline(in, line) || split_csv(line) != std::vector<std::string_view>{"t", "x", "y", "z"}) {
    throw Error(ErrorCode::MissingColumn, csv_path.string() + ": header must be t,x,y,z");
  }
  std::vector<double> times;
  std::vector<State> obs;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != 4) {
      throw Error(ErrorCode::MissingColumn, "row " + std::to_string(row) + ": expected 4 cells");
    }
    const double t = parse_cell(cells[0], row, "t");
    times.push_back(t);
    obs.push_back(State{parse_cell(cells[1], row, "x"), parse_cell(cells[2], row, "y"),
                        parse_cell(cells[3], row, "z"), t});
  }
  Dataset ds = Dataset::from_series(std::move(times), std::move(obs));
  const auto side = provenance_path(csv_path);
  if (std::filesystem::exists(side)) {
    std::ifstream pin(side);
    try {
      ds.provenance = provenance_from_json(nlohmann::json::parse(pin));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, side.string() + ": " + e.what());
    }
  }
  return ds;
}

}  // namespace pps
