#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pps/data.hpp"
#include "pps/error.hpp"
#include "pps/format.hpp"
#include "pps/model.hpp"
#include "pps/pinn.hpp"
#include "pps/report.hpp"
#include "pps/solver.hpp"
#include "svg.hpp"

namespace fs = std::filesystem;
using namespace pps;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c"};
const char* const kSpecies[] = {"prey x", "predator y", "scavenger z"};

struct RunConfig {
  std::string params_path;
  std::string subsystem = "full";
  std::optional<std::string> analyze_only;
  std::string out_dir = ".";
  std::uint64_t seed = 1;
  std::optional<double> t_end;
  std::string dataset_path;
  std::string species_map_path;

  // simulate / synth
  std::vector<double> initial;
  std::string method = "rk45";
  double step = 1e-2;
  double tolerance = 1e-9;
  double settle_tolerance = 1e-2;
  double t_start = 0.0;
  std::size_t points = 40;
  double noise = 0.0;
  std::string name = "synthetic";

  // estimate
  std::size_t epochs = 100;
  std::size_t bfgs_iterations = 200;
};

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
}

fs::path prepare_out(const RunConfig& cfg) {
  fs::path dir(cfg.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
  return dir;
}

State initial_state(const RunConfig& cfg) {
  if (cfg.initial.size() != 3)
    throw Error(ErrorCode::InvalidConfig, "--initial needs three values x,y,z");
  return State{cfg.initial[0], cfg.initial[1], cfg.initial[2], 0.0};
}

svg::Series column(const std::vector<double>& xs, const std::vector<State>& states, int species,
                   const std::string& label, bool markers = false) {
  svg::Series s;
  s.label = label;
  s.xs = xs;
  for (const auto& st : states) s.ys.push_back(st.values()[species]);
  s.color = kColors[species];
  s.markers = markers;
  return s;
}

svg::Series phase(const std::vector<State>& states, int a, int b) {
  svg::Series s;
  for (const auto& st : states) {
    s.xs.push_back(st.values()[a]);
    s.ys.push_back(st.values()[b]);
  }
  s.color = "#444";
  return s;
}

int cmd_simulate(const RunConfig& cfg) {
  const ModelParams p = load_params(cfg.params_path);
  const Subsystem mask = parse_subsystem(cfg.subsystem);
  SolverConfig sc;
  sc.method = cfg.method == "rk4" ? Method::RK4Fixed : Method::RK45Adaptive;
  sc.step = cfg.step;
  sc.abs_tol = sc.rel_tol = cfg.tolerance;
  sc.t_end = cfg.t_end.value_or(100.0);
  const fs::path dir = prepare_out(cfg);

  const Trajectory traj = integrate(p, initial_state(cfg), sc, mask);
  {
    std::ofstream csv(dir / "trajectory.csv", std::ios::binary);
    write_trajectory_csv(traj, csv);
  }
  const std::vector<svg::Panel> series = {{"Populations over time", "t", "population",
                                           {column(traj.times, traj.states, 0, kSpecies[0]),
                                            column(traj.times, traj.states, 1, kSpecies[1]),
                                            column(traj.times, traj.states, 2, kSpecies[2])}}};
  write_text(dir / "timeseries.svg", svg::render(series));
  const std::vector<svg::Panel> portraits = {
      {"Phase projection (x, y)", "prey x", "predator y", {phase(traj.states, 0, 1)}},
      {"Phase projection (y, z)", "predator y", "scavenger z", {phase(traj.states, 1, 2)}}};
  write_text(dir / "phase.svg", svg::render(portraits));

  const auto settled = detect_settling(traj, 0.2 * (sc.t_end - sc.t_start), cfg.settle_tolerance);
  const State& last = traj.back();
  nlohmann::json summary{
      {"subsystem", std::string(to_string(mask))},
      {"t_end", sc.t_end},
      {"final_state", {last.x, last.y, last.z}},
      {"final_norm", std::sqrt(last.x * last.x + last.y * last.y + last.z * last.z)},
      {"settled", settled ? nlohmann::json{settled->x, settled->y, settled->z} : nlohmann::json()},
      {"diagnostics",
       {{"steps", traj.diagnostics.steps},
        {"rejected_steps", traj.diagnostics.rejected_steps},
        {"min_component", traj.diagnostics.min_component},
        {"went_negative", traj.diagnostics.went_negative}}}};
  write_text(dir / "simulate.json", summary.dump(2) + "\n");

  std::cout << "final state at t=" << format_double(last.t) << ": (" << format_double(last.x)
            << ", " << format_double(last.y) << ", " << format_double(last.z) << ")\n";
  if (settled)
    std::cout << "settled at (" << format_double(settled->x) << ", " << format_double(settled->y)
              << ", " << format_double(settled->z) << ")\n";
  else
    std::cout << "not settled over the final 20% of the run\n";
  if (traj.diagnostics.went_negative) std::cout << "warning: a component went negative\n";
  return kExitOk;
}

int cmd_analyze(const RunConfig& cfg) {
  const ModelParams p = load_params(cfg.params_path);
  Analysis a = analyze(p);
  if (cfg.analyze_only) {
    const Subsystem only = parse_subsystem(*cfg.analyze_only);
    std::erase_if(a.entries, [&](const AnalysisEntry& e) { return e.equilibrium.subsystem != only; });
  }
  const fs::path dir = prepare_out(cfg);
  write_text(dir / "analysis.json", a.to_json().dump(2) + "\n");
  std::cout << a.table();
  if (a.multiple_roots()) {
    std::cerr << "error: interior solve found multiple admissible roots (report written)\n";
    return kExitNumerical;
  }
  return kExitOk;
}

Dataset load_dataset(const RunConfig& cfg) {
  if (!cfg.species_map_path.empty())
    return ingest_file(cfg.dataset_path, load_species_map(cfg.species_map_path));
  return read_dataset(cfg.dataset_path);
}

int cmd_estimate(const RunConfig& cfg) {
  const Dataset ds = load_dataset(cfg);
  EstimateConfig ec;
  ec.train.epochs = cfg.epochs;
  ec.bfgs.max_iterations = cfg.bfgs_iterations;
  const fs::path dir = prepare_out(cfg);

  const EstimationReport rep = estimate(ds, cfg.seed, ec);
  write_text(dir / "estimate.json", rep.to_json().dump(2) + "\n");
  {
    std::ofstream csv(dir / "trace.csv", std::ios::binary);
    write_trace_csv(rep.trace, csv);
  }

  for (const auto& e : rep.stage_errors) std::cerr << "warning: " << e << '\n';
  if (!std::isfinite(rep.final_loss.total)) {
    std::cerr << "error: estimation pipeline failed";
    if (!rep.stage_errors.empty()) std::cerr << " (" << rep.stage_errors.back() << ")";
    std::cerr << '\n';
    return kExitNumerical;
  }

  const ModelParams fitted = params_from_vector(rep.final_params);
  write_text(dir / "estimate.params", to_kv(fitted));

  std::vector<svg::Series> lines;
  for (int s = 0; s < 3; ++s)
    lines.push_back(column(ds.times, ds.observations, s, std::string(kSpecies[s]) + " observed", true));
  try {
    std::vector<double> dense;
    const double t0 = ds.times.front(), t1 = ds.times.back();
    for (int n = 0; n <= 400; ++n) dense.push_back(t0 + (t1 - t0) * n / 400.0);
    dense.back() = t1;
    SolverConfig sc;
    sc.t_start = t0;
    sc.t_end = t1;
    State s0 = ds.observations.front();
    s0.t = t0;
    const Trajectory fit = integrate_at(fitted, s0, dense, sc);
    for (int s = 0; s < 3; ++s)
      lines.push_back(column(fit.times, fit.states, s, std::string(kSpecies[s]) + " fitted"));
  } catch (const Error& e) {
    std::cerr << "warning: fitted curve not drawn: " << e.what() << '\n';
  }
  write_text(dir / "fit.svg",
             svg::render({{"Observed vs fitted (normalized)", "t (normalized)", "population (normalized)",
                           lines}},
                         760, 440));

  std::cout << "seed " << rep.seed << ": total loss " << format_double(rep.initial_loss.total)
            << " -> " << format_double(rep.post_nn_loss.total) << " -> "
            << format_double(rep.final_loss.total) << '\n'
            << "mse " << format_double(rep.initial_loss.mse) << " -> "
            << format_double(rep.post_nn_loss.mse) << " -> " << format_double(rep.final_loss.mse)
            << " (bfgs minimizes mse only), bfgs " << rep.bfgs_status << " after "
            << rep.bfgs_iterations << " iterations\n";
  for (std::size_t n = 0; n < kParamCount; ++n)
    std::cout << "  " << ModelParams::keys[n] << " = " << format_double(rep.final_params[n]) << '\n';
  return kExitOk;
}

int cmd_synth(const RunConfig& cfg) {
  const ModelParams p = load_params(cfg.params_path);
  const double t_end = cfg.t_end.value_or(10.0);
  State s0 = initial_state(cfg);
  s0.t = cfg.t_start;
  const auto grid = uniform_grid(cfg.t_start, t_end, cfg.points);
  const Dataset ds = synthesize(p, s0, grid, cfg.noise, cfg.seed);
  const fs::path dir = prepare_out(cfg);
  const fs::path csv = dir / (cfg.name + ".csv");
  write_dataset(ds, csv);
  std::cout << "wrote " << ds.size() << " samples to " << csv.string() << '\n';
  return kExitOk;
}

void add_params(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--params", cfg.params_path, "Parameter file (key = value)")
      ->required()
      ->check(CLI::ExistingFile);
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--out", cfg.out_dir, "Output directory")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Predator, prey and scavenger model toolkit"};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  const auto subsystems = CLI::IsMember({"full", "predprey", "predscav", "scavprey"});

  auto* sim = app.add_subcommand("simulate", "Integrate a trajectory and plot it");
  add_params(sim, cfg);
  add_common(sim, cfg);
  sim->add_option("--initial", cfg.initial, "Initial state x,y,z")->required()->delimiter(',')->expected(3);
  sim->add_option("--subsystem", cfg.subsystem)->check(subsystems)->capture_default_str();
  sim->add_option("--t-end", cfg.t_end, "Final time (default 100)");
  sim->add_option("--method", cfg.method)->check(CLI::IsMember({"rk45", "rk4"}))->capture_default_str();
  sim->add_option("--step", cfg.step, "RK4 step or initial RK45 step")->capture_default_str();
  sim->add_option("--tol", cfg.tolerance, "RK45 absolute and relative tolerance")->capture_default_str();
  sim->add_option("--settle-tol", cfg.settle_tolerance, "Settling band")->capture_default_str();

  auto* ana = app.add_subcommand("analyze", "Report steady states and their stability");
  add_params(ana, cfg);
  add_common(ana, cfg);
  ana->add_option("--subsystem", cfg.analyze_only, "Restrict the report to one system")
      ->check(subsystems);

  auto* est = app.add_subcommand("estimate", "Fit parameters to a dataset");
  add_common(est, cfg);
  est->add_option("--dataset", cfg.dataset_path, "Normalized t,x,y,z CSV or raw year CSV")
      ->required()
      ->check(CLI::ExistingFile);
  est->add_option("--species-map", cfg.species_map_path, "JSON species-to-group map for raw data")
      ->check(CLI::ExistingFile);
  est->add_option("--seed", cfg.seed)->capture_default_str();
  est->add_option("--epochs", cfg.epochs)->capture_default_str();
  est->add_option("--bfgs-iterations", cfg.bfgs_iterations)->capture_default_str();

  auto* syn = app.add_subcommand("synth", "Generate a synthetic dataset");
  add_params(syn, cfg);
  add_common(syn, cfg);
  syn->add_option("--initial", cfg.initial, "Initial state x,y,z")->required()->delimiter(',')->expected(3);
  syn->add_option("--t-start", cfg.t_start)->capture_default_str();
  syn->add_option("--t-end", cfg.t_end, "Final time (default 10)");
  syn->add_option("--points", cfg.points)->capture_default_str();
  syn->add_option("--noise", cfg.noise, "Noise sigma as a fraction of each column's range")
      ->capture_default_str();
  syn->add_option("--seed", cfg.seed)->capture_default_str();
  syn->add_option("--name", cfg.name, "Output file stem")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sim->parsed()) return cmd_simulate(cfg);
    if (ana->parsed()) return cmd_analyze(cfg);
    if (est->parsed()) return cmd_estimate(cfg);
    return cmd_synth(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_numerical(e.code()) ? kExitNumerical : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
