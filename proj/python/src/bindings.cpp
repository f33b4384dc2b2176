#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "pps/data.hpp"
#include "pps/equilibria.hpp"
#include "pps/error.hpp"
#include "pps/optimize.hpp"
#include "pps/pinn.hpp"
#include "pps/report.hpp"
#include "pps/solver.hpp"
#include "pps/stability.hpp"

namespace py = pybind11;
using namespace pps;

namespace {

using StateArray = Eigen::Matrix<double, Eigen::Dynamic, 3, Eigen::RowMajor>;

State to_state(const std::array<double, 3>& v, double t = 0.0) { return State{v[0], v[1], v[2], t}; }

StateArray to_array(const std::vector<State>& states) {
  StateArray out(static_cast<Eigen::Index>(states.size()), 3);
  for (std::size_t n = 0; n < states.size(); ++n) {
    const auto i = static_cast<Eigen::Index>(n);
    out(i, 0) = states[n].x;
    out(i, 1) = states[n].y;
    out(i, 2) = states[n].z;
  }
  return out;
}

std::vector<State> from_array(const StateArray& a, const std::vector<double>& times) {
  if (static_cast<std::size_t>(a.rows()) != times.size())
    throw Error(ErrorCode::DimensionMismatch, "times and states differ in length");
  std::vector<State> out;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    out.push_back(State{a(i, 0), a(i, 1), a(i, 2), times[static_cast<std::size_t>(i)]});
  return out;
}

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict loss_dict(const LossBreakdown& l) {
  py::dict d;
  d["total"] = l.total;
  d["mse"] = l.mse;
  d["pie"] = l.pie;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Predator, prey and scavenger model: simulation, steady states and estimation";

  static py::handle error_type = py::exception<Error>(m, "PpsError", PyExc_RuntimeError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error_type(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init<>())
      .def(py::init([](py::kwargs kw) {
        ModelParams p;
        auto values = p.to_array();
        for (auto [key, value] : kw) {
          const auto name = key.cast<std::string>();
          const auto it = std::find(ModelParams::keys.begin(), ModelParams::keys.end(), name);
          if (it == ModelParams::keys.end())
            throw Error(ErrorCode::ParseError, "unknown parameter '" + name + "'");
          values[static_cast<std::size_t>(it - ModelParams::keys.begin())] = value.cast<double>();
        }
        return ModelParams::from_array(values);
      }))
      .def_readwrite("r", &ModelParams::r)
      .def_readwrite("k", &ModelParams::k)
      .def_readwrite("a", &ModelParams::a)
      .def_readwrite("a0", &ModelParams::a0)
      .def_readwrite("b", &ModelParams::b)
      .def_readwrite("b0", &ModelParams::b0)
      .def_readwrite("d", &ModelParams::d)
      .def_readwrite("e", &ModelParams::e)
      .def_readwrite("f", &ModelParams::f)
      .def_readwrite("g", &ModelParams::g)
      .def_readwrite("h", &ModelParams::h)
      .def_readwrite("i", &ModelParams::i)
      .def_readwrite("i0", &ModelParams::i0)
      .def_readwrite("j", &ModelParams::j)
      .def("to_dict",
           [](const ModelParams& p) {
             py::dict d;
             const auto values = p.to_array();
             for (std::size_t n = 0; n < kParamCount; ++n) d[py::str(ModelParams::keys[n])] = values[n];
             return d;
           })
      .def("to_vector", [](const ModelParams& p) { return params_to_vector(p); })
      .def_static("from_vector", [](const Vector& v) { return params_from_vector(v); })
      .def("__eq__", [](const ModelParams& a, const ModelParams& b) { return a == b; })
      .def("__repr__", [](const ModelParams& p) { return "ModelParams(\n" + to_kv(p) + ")"; });

  m.def("load_params", [](const std::filesystem::path& path) { return load_params(path); });
  m.def("parse_params", [](const std::string& text) { return parse_kv(text); });
  m.def("format_params", &to_kv);
  m.def(
      "rhs",
      [](const ModelParams& p, const std::array<double, 3>& s, const std::string& subsystem) {
        return rhs_subsystem(to_state(s), p, parse_subsystem(subsystem)).values();
      },
      py::arg("params"), py::arg("state"), py::arg("subsystem") = "full");

  m.def(
      "simulate",
      [](const ModelParams& p, const std::array<double, 3>& initial, double t_end,
         const std::string& subsystem, const std::string& method, double step, double tol) {
        SolverConfig cfg;
        cfg.t_end = t_end;
        cfg.method = method == "rk4" ? Method::RK4Fixed : Method::RK45Adaptive;
        if (method != "rk4" && method != "rk45")
          throw Error(ErrorCode::InvalidConfig, "method must be rk4 or rk45");
        cfg.step = step;
        cfg.abs_tol = cfg.rel_tol = tol;
        const auto traj = integrate(p, to_state(initial), cfg, parse_subsystem(subsystem));
        Vector times = Eigen::Map<const Vector>(traj.times.data(), static_cast<Eigen::Index>(traj.times.size()));
        return py::make_tuple(times, to_array(traj.states));
      },
      py::arg("params"), py::arg("initial"), py::arg("t_end"), py::arg("subsystem") = "full",
      py::arg("method") = "rk45", py::arg("step") = 1e-2, py::arg("tol") = 1e-9,
      "Returns (times, states) with states shaped (n, 3).");

  m.def(
      "interior_equilibrium",
      [](const ModelParams& p) -> std::optional<std::array<double, 3>> {
        const auto eq = interior_equilibrium_direct(p);
        if (!eq.exists) return std::nullopt;
        return eq.point.values();
      },
      "Coexistence steady state (x, y, z), or None when it does not exist.");
  m.def("interior_poly_coeffs", &interior_poly_coeffs);
  m.def("interior_poly_roots", &interior_poly_positive_roots);
  m.def("_analyze_json", [](const ModelParams& p) { return analyze(p).to_json().dump(); });
  m.def("analysis_table", [](const ModelParams& p) { return analyze(p).table(); });

  m.def(
      "jacobian",
      [](const ModelParams& p, const std::array<double, 3>& s, const std::string& subsystem) {
        return jacobian(p, to_state(s), parse_subsystem(subsystem));
      },
      py::arg("params"), py::arg("state"), py::arg("subsystem") = "full");
  m.def("routh_hurwitz", [](double m1, double m2, double m3) {
    const auto v = routh_hurwitz_cubic(m1, m2, m3);
    py::dict d;
    d["classification"] = std::string(to_string(v.classification));
    d["hurwitz"] = m1 * m2 - m3;
    d["eigenvalues"] = v.eigenvalues;
    return d;
  });

  py::class_<Dataset>(m, "Dataset")
      .def_static(
          "from_series",
          [](std::vector<double> times, const StateArray& obs) {
            auto states = from_array(obs, times);
            return Dataset::from_series(std::move(times), std::move(states));
          },
          py::arg("times"), py::arg("observations"))
      .def_static("read", [](const std::filesystem::path& p) { return read_dataset(p); })
      .def_static(
          "ingest",
          [](const std::filesystem::path& csv, const std::map<std::string, std::string>& groups) {
            SpeciesMap map;
            for (const auto& [species, group] : groups) map.emplace(species, parse_group(group));
            return ingest_file(csv, map);
          },
          py::arg("csv"), py::arg("species_map"))
      .def("write", [](const Dataset& ds, const std::filesystem::path& p) { write_dataset(ds, p); })
      .def_property_readonly("times", [](const Dataset& ds) { return ds.times; })
      .def_property_readonly("observations", [](const Dataset& ds) { return to_array(ds.observations); })
      .def_property_readonly("provenance", [](const Dataset& ds) { return json_to_py(to_json(ds.provenance)); })
      .def("denormalize",
           [](const Dataset& ds) {
             std::vector<State> raw;
             for (const auto& s : ds.observations) raw.push_back(denormalize(ds, s));
             std::vector<double> t;
             for (const auto& s : raw) t.push_back(s.t);
             return py::make_tuple(t, to_array(raw));
           })
      .def("__len__", &Dataset::size);

  m.def(
      "synthesize",
      [](const ModelParams& p, const std::array<double, 3>& initial, double t_end, std::size_t points,
         double noise, std::uint64_t seed, double t_start) {
        return synthesize(p, to_state(initial, t_start), uniform_grid(t_start, t_end, points), noise, seed);
      },
      py::arg("params"), py::arg("initial"), py::arg("t_end") = 10.0, py::arg("points") = 40,
      py::arg("noise") = 0.0, py::arg("seed") = 1, py::arg("t_start") = 0.0);

  m.def(
      "total_loss",
      [](const ModelParams& p, const Dataset& ds, bool pie_at_observed) {
        LossOptions opt;
        opt.pie_at_observed = pie_at_observed;
        return loss_dict(total_loss(p, ds, opt));
      },
      py::arg("params"), py::arg("dataset"), py::arg("pie_at_observed") = true);
  m.def("init_params", &init_params, py::arg("seed"));
  m.def(
      "_estimate_json",
      [](const Dataset& ds, std::uint64_t seed, std::size_t epochs, std::size_t bfgs_iterations) {
        EstimateConfig cfg;
        cfg.train.epochs = epochs;
        cfg.bfgs.max_iterations = bfgs_iterations;
        EstimationReport rep;
        {
          py::gil_scoped_release release;
          rep = estimate(ds, seed, cfg);
        }
        return rep.to_json().dump();
      },
      py::arg("dataset"), py::arg("seed") = 1, py::arg("epochs") = 100, py::arg("bfgs_iterations") = 200);

  m.def(
      "bfgs",
      [](std::function<double(const Vector&)> f, const Vector& x0,
         std::optional<std::function<Vector(const Vector&)>> grad, std::size_t max_iterations,
         double gradient_tolerance) {
        Objective obj;
        obj.value = std::move(f);
        if (grad) obj.gradient = *grad;
        BfgsConfig cfg;
        cfg.max_iterations = max_iterations;
        cfg.gradient_tolerance = gradient_tolerance;
        const auto res = bfgs_run(obj, x0, cfg);
        py::dict d;
        d["x"] = res.x;
        d["history"] = res.history;
        d["iterations"] = res.iterations;
        d["gradient_norm"] = res.gradient_norm;
        return d;
      },
      py::arg("f"), py::arg("x0"), py::arg("grad") = py::none(), py::arg("max_iterations") = 200,
      py::arg("gradient_tolerance") = 1e-6);
  m.def(
      "adam",
      [](std::function<double(const Vector&)> f, std::function<Vector(const Vector&)> grad,
         const Vector& x0, double alpha, std::size_t num_steps) {
        Objective obj;
        obj.value = std::move(f);
        obj.gradient = std::move(grad);
        AdamConfig cfg;
        cfg.alpha = alpha;
        cfg.num_steps = num_steps;
        const auto res = adam_run(obj, x0, cfg);
        if (res.failure) throw *res.failure;
        py::dict d;
        d["x"] = res.theta;
        d["history"] = res.history;
        return d;
      },
      py::arg("f"), py::arg("grad"), py::arg("x0"), py::arg("alpha") = 1e-3, py::arg("num_steps") = 100);
}
