#include "pps/pinn.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "pps/error.hpp"
#include "pps/format.hpp"
#include "pps/solver.hpp"

namespace pps {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sigmoid(double u) {
  if (u >= 0.0) return 1.0 / (1.0 + std::exp(-u));
  const double e = std::exp(u);
  return e / (1.0 + e);
}

double swish_slope(double u) {
  const double s = sigmoid(u);
  return s + u * s * (1.0 - s);
}

std::uint64_t weight_seed(std::uint64_t seed) { return seed ^ 0x9E3779B97F4A7C15ull; }

Vector floored(const Vector& v) { return v.cwiseMax(kParamFloor); }

double squared(const State& a, const State& b) {
  const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return dx * dx + dy * dy + dz * dz;
}

double squared(const Derivative& a, const Derivative& b) {
  const double dx = a.dx - b.dx, dy = a.dy - b.dy, dz = a.dz - b.dz;
  return dx * dx + dy * dy + dz * dz;
}

std::string describe(const ModelParams& p) {
  std::string out = "p = {";
  const auto v = p.to_array();
  for (std::size_t n = 0; n < kParamCount; ++n) {
    if (n) out += ", ";
    out += std::string(ModelParams::keys[n]) + "=" + format_double(v[n]);
  }
  return out + "}";
}

}  // namespace

double swish(double u) { return u * sigmoid(u); }

Mlp Mlp::zeros(std::vector<int> sizes) {
  if (sizes.size() < 2) throw Error(ErrorCode::InvalidConfig, "mlp needs at least two layers");
  Mlp net;
  net.sizes = std::move(sizes);
  for (std::size_t l = 0; l + 1 < net.sizes.size(); ++l) {
    net.weights.push_back(Matrix::Zero(net.sizes[l + 1], net.sizes[l]));
    net.biases.push_back(Vector::Zero(net.sizes[l + 1]));
  }
  return net;
}

Mlp Mlp::initialize(std::vector<int> sizes, std::uint64_t seed, const Vector& output_bias) {
  Mlp net = zeros(std::move(sizes));
  if (output_bias.size() != net.sizes.back()) {
    throw Error(ErrorCode::DimensionMismatch, "output bias does not match the last layer");
  }
  std::mt19937_64 rng(weight_seed(seed));
  for (std::size_t l = 0; l + 1 < net.weights.size(); ++l) {
    const double limit = std::sqrt(6.0 / (net.sizes[l] + net.sizes[l + 1]));
    std::uniform_real_distribution<double> u(-limit, limit);
    Matrix& w = net.weights[l];
    for (Eigen::Index c = 0; c < w.cols(); ++c)
      for (Eigen::Index r = 0; r < w.rows(); ++r) w(r, c) = u(rng);
  }
  net.biases.back() = output_bias;
  return net;
}

Vector Mlp::forward(const Vector& input) const {
  Vector a = input;
  const std::size_t layers = weights.size();
  for (std::size_t l = 0; l < layers; ++l) {
    Vector z = weights[l] * a + biases[l];
    if (l + 1 < layers) {
      a = z.unaryExpr([](double u) { return swish(u); });
    } else {
      a = z.cwiseMax(0.0);
    }
  }
  return a;
}

Eigen::Index Mlp::parameter_count() const {
  Eigen::Index n = 0;
  for (std::size_t l = 0; l < weights.size(); ++l) n += weights[l].size() + biases[l].size();
  return n;
}

Vector Mlp::flatten() const {
  Vector theta(parameter_count());
  Eigen::Index at = 0;
  for (std::size_t l = 0; l < weights.size(); ++l) {
    theta.segment(at, weights[l].size()) = Eigen::Map<const Vector>(weights[l].data(), weights[l].size());
    at += weights[l].size();
    theta.segment(at, biases[l].size()) = biases[l];
    at += biases[l].size();
  }
  return theta;
}

void Mlp::unflatten(const Vector& theta) {
  if (theta.size() != parameter_count()) {
    throw Error(ErrorCode::DimensionMismatch, "theta length does not match the network");
  }
  Eigen::Index at = 0;
  for (std::size_t l = 0; l < weights.size(); ++l) {
    Eigen::Map<Vector>(weights[l].data(), weights[l].size()) = theta.segment(at, weights[l].size());
    at += weights[l].size();
    biases[l] = theta.segment(at, biases[l].size());
    at += biases[l].size();
  }
}

Vector Mlp::backprop(const Vector& input, const Vector& grad_output) const {
  const std::size_t layers = weights.size();
  std::vector<Vector> acts{input};
  std::vector<Vector> pre;
  for (std::size_t l = 0; l < layers; ++l) {
    pre.push_back(weights[l] * acts.back() + biases[l]);
    if (l + 1 < layers) {
      acts.push_back(pre.back().unaryExpr([](double u) { return swish(u); }));
    } else {
      acts.push_back(pre.back().cwiseMax(0.0));
    }
  }

  std::vector<Matrix> dW(layers);
  std::vector<Vector> db(layers);
  Vector delta = grad_output.cwiseProduct(
      pre.back().unaryExpr([](double u) { return u > 0.0 ? 1.0 : 0.0; }));
  for (std::size_t l = layers; l-- > 0;) {
    dW[l] = delta * acts[l].transpose();
    db[l] = delta;
    if (l > 0) {
      delta = (weights[l].transpose() * delta)
                  .cwiseProduct(pre[l - 1].unaryExpr([](double u) { return swish_slope(u); }));
    }
  }

  Vector grad(parameter_count());
  Eigen::Index at = 0;
  for (std::size_t l = 0; l < layers; ++l) {
    grad.segment(at, dW[l].size()) = Eigen::Map<const Vector>(dW[l].data(), dW[l].size());
    at += dW[l].size();
    grad.segment(at, db[l].size()) = db[l];
    at += db[l].size();
  }
  return grad;
}

Vector init_params(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector p(kParamCount);
  for (Eigen::Index n = 0; n < p.size(); ++n) p[n] = std::exp(normal(rng));
  return p;
}

std::vector<Derivative> data_derivative(const Dataset& ds) {
  const std::size_t n = ds.size();
  if (n < 3) throw Error(ErrorCode::TooFewSamples, "derivative estimate needs at least 3 samples");
  const double h = (ds.times.back() - ds.times.front()) / static_cast<double>(n - 1);
  for (std::size_t k = 1; k < n; ++k) {
    if (std::abs((ds.times[k] - ds.times[k - 1]) - h) > 1e-6 * h) {
      throw Error(ErrorCode::NonUniformGrid, "sample times are not uniformly spaced");
    }
  }
  const auto& o = ds.observations;
  auto combine = [](const State& a, double ca, const State& b, double cb, const State& c, double cc,
                    double scale) {
    return Derivative{(ca * a.x + cb * b.x + cc * c.x) / scale, (ca * a.y + cb * b.y + cc * c.y) / scale,
                      (ca * a.z + cb * b.z + cc * c.z) / scale};
  };
  std::vector<Derivative> out(n);
  out[0] = combine(o[0], -3.0, o[1], 4.0, o[2], -1.0, 2.0 * h);
  for (std::size_t k = 1; k + 1 < n; ++k) out[k] = combine(o[k + 1], 1.0, o[k - 1], -1.0, o[k], 0.0, 2.0 * h);
  out[n - 1] = combine(o[n - 1], 3.0, o[n - 2], -4.0, o[n - 3], 1.0, 2.0 * h);
  return out;
}

ModelParams params_from_vector(const Vector& v) {
  return ModelParams::from_array(std::span<const double>(v.data(), static_cast<std::size_t>(v.size())));
}

Vector params_to_vector(const ModelParams& p) {
  const auto a = p.to_array();
  return Eigen::Map<const Vector>(a.data(), static_cast<Eigen::Index>(a.size()));
}

Trajectory predict(const ModelParams& p, const Dataset& ds, const LossOptions& opt) {
  p.validate();
  if (ds.size() < 2) throw Error(ErrorCode::TooFewSamples, "prediction needs at least 2 samples");
  SolverConfig cfg;
  cfg.method = Method::RK4Fixed;
  cfg.t_start = ds.times.front();
  cfg.t_end = ds.times.back();
  cfg.step = (ds.times[1] - ds.times[0]) / static_cast<double>(std::max<std::size_t>(opt.substeps, 1));
  try {
    return integrate_at(p, ds.observations.front(), ds.times, cfg);
  } catch (const Error& e) {
    throw Error(ErrorCode::IntegrationFailed, std::string(e.what()) + " with " + describe(p));
  }
}

LossBreakdown total_loss(const ModelParams& p, const Dataset& ds, const LossOptions& opt) {
  return total_loss(p, ds, data_derivative(ds), opt);
}

LossBreakdown total_loss(const ModelParams& p, const Dataset& ds,
                         const std::vector<Derivative>& derivative, const LossOptions& opt) {
  if (derivative.size() != ds.size()) {
    throw Error(ErrorCode::DimensionMismatch, "derivative estimates do not match the dataset");
  }
  const Trajectory pred = predict(p, ds, opt);
  const double td = static_cast<double>(ds.size());
  LossBreakdown out;
  for (std::size_t n = 0; n < ds.size(); ++n) {
    out.mse += squared(ds.observations[n], pred.states[n]);
    const State& at = opt.pie_at_observed ? ds.observations[n] : pred.states[n];
    Derivative f;
    try {
      f = rhs(at, p);
    } catch (const Error& e) {
      throw Error(ErrorCode::IntegrationFailed, std::string(e.what()) + " with " + describe(p));
    }
    out.pie += squared(derivative[n], f);
  }
  out.mse /= td;
  out.pie /= td;
  out.total = out.mse + out.pie;
  return out;
}

Vector relative_fd_gradient(const std::function<double(const Vector&)>& f, const Vector& p,
                            double relative) {
  Vector g = Vector::Zero(p.size());
  const double f0 = f(p);
  Vector probe = p;
  for (Eigen::Index n = 0; n < p.size(); ++n) {
    const double h = relative * (p[n] != 0.0 ? std::abs(p[n]) : 1.0);
    probe[n] = p[n] + h;
    const double up = f(probe);
    probe[n] = p[n] - h;
    const double down = f(probe);
    probe[n] = p[n];
    const bool up_ok = std::isfinite(up), down_ok = std::isfinite(down);
    if (up_ok && down_ok) {
      g[n] = (up - down) / (2.0 * h);
    } else if (up_ok && std::isfinite(f0)) {
      g[n] = (up - f0) / h;
    } else if (down_ok && std::isfinite(f0)) {
      g[n] = (f0 - down) / h;
    }
  }
  return g;
}

TrainResult train_pinn(const Dataset& ds, std::uint64_t seed, const TrainConfig& cfg) {
  cfg.adam.validate();
  const auto derivative = data_derivative(ds);
  TrainResult out;
  out.input = init_params(seed);
  out.net = Mlp::initialize(kPinnLayers, seed, out.input);

  auto loss_at = [&](const Vector& p) -> double {
    try {
      return total_loss(params_from_vector(p), ds, derivative, cfg.loss).total;
    } catch (const Error&) {
      return kInf;
    }
  };

  Vector theta = out.net.flatten();
  AdamState state = AdamState::zeros(theta.size());
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    const Vector raw = out.net.forward(out.input);
    const Vector p = floored(raw);
    LossBreakdown loss;
    try {
      loss = total_loss(params_from_vector(p), ds, derivative, cfg.loss);
    } catch (const Error& e) {
      out.failure = Error(ErrorCode::NonFiniteLoss,
                          "epoch " + std::to_string(epoch) + ": " + e.what());
      break;
    }
    if (!std::isfinite(loss.total)) {
      out.failure = Error(ErrorCode::NonFiniteLoss, "epoch " + std::to_string(epoch) + ": loss is not finite");
      break;
    }
    out.trace.push_back({"pinn", epoch, loss});

    Vector grad_p = relative_fd_gradient(loss_at, p, cfg.outer_fd_step);
    // Components held at the floor do not respond to the network output.
    for (Eigen::Index n = 0; n < raw.size(); ++n) {
      if (raw[n] < kParamFloor) grad_p[n] = 0.0;
    }
    const Vector grad_theta = out.net.backprop(out.input, grad_p);
    adam_step(state, grad_theta, theta, cfg.adam);
    out.net.unflatten(theta);
  }
  out.params = floored(out.net.forward(out.input));
  return out;
}

EstimationReport estimate(const Dataset& ds, std::uint64_t seed, const EstimateConfig& cfg) {
  const auto derivative = data_derivative(ds);
  const LossOptions& opt = cfg.train.loss;
  auto safe_loss = [&](const Vector& p) {
    try {
      return total_loss(params_from_vector(p), ds, derivative, opt);
    } catch (const Error&) {
      return LossBreakdown{kInf, kInf, kInf};
    }
  };

  EstimationReport report;
  report.seed = seed;
  TrainResult train = train_pinn(ds, seed, cfg.train);
  report.initial_params = train.input;
  report.initial_loss = safe_loss(floored(train.input));
  report.trace = train.trace;
  if (train.failure) report.stage_errors.push_back(std::string("pinn: ") + train.failure->what());
  report.post_nn_params = train.params;
  report.post_nn_loss = safe_loss(train.params);
  report.final_params = report.post_nn_params;
  report.final_loss = report.post_nn_loss;
  report.bfgs_status = "skipped";
  if (!std::isfinite(report.post_nn_loss.mse)) {
    report.stage_errors.push_back("bfgs: post-network parameters do not integrate");
    return report;
  }

  Objective mse;
  mse.value = [&](const Vector& p) {
    for (Eigen::Index n = 0; n < p.size(); ++n) {
      if (!(p[n] > 0.0)) return kInf;
    }
    return safe_loss(p).mse;
  };
  mse.gradient = [&](const Vector& p) { return relative_fd_gradient(mse.value, p, 1e-6); };

  BfgsConfig bcfg = cfg.bfgs;
  bcfg.project = [](Vector& x) { x = floored(x); };
  bcfg.lower_bound = kParamFloor;
  std::vector<TraceEntry> bfgs_trace{{"bfgs", 0, report.post_nn_loss}};
  bcfg.on_accept = [&](std::size_t iter, const Vector& x, double) {
    bfgs_trace.push_back({"bfgs", iter, safe_loss(x)});
  };
  try {
    const BfgsResult res = bfgs_run(mse, report.post_nn_params, bcfg);
    report.bfgs_status = std::string(to_string(res.status));
    report.bfgs_iterations = res.iterations;
    const LossBreakdown fin = safe_loss(res.x);
    if (fin.mse <= report.post_nn_loss.mse) {
      report.final_params = res.x;
      report.final_loss = fin;
    }
  } catch (const Error& e) {
    report.bfgs_status = "failed";
    report.stage_errors.push_back(std::string("bfgs: ") + e.what());
  }
  report.trace.insert(report.trace.end(), bfgs_trace.begin(), bfgs_trace.end());
  return report;
}

namespace {

nlohmann::json params_json(const Vector& v) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t n = 0; n < kParamCount && static_cast<Eigen::Index>(n) < v.size(); ++n) {
    j[std::string(ModelParams::keys[n])] = v[static_cast<Eigen::Index>(n)];
  }
  return j;
}

nlohmann::json loss_json(const LossBreakdown& l) {
  return {{"total", l.total}, {"mse", l.mse}, {"pie", l.pie}};
}

}  // namespace

nlohmann::json EstimationReport::to_json() const {
  nlohmann::json trace_json = nlohmann::json::array();
  for (const auto& t : trace) {
    trace_json.push_back({{"stage", t.stage}, {"step", t.step}, {"total", t.loss.total},
                          {"mse", t.loss.mse}, {"pie", t.loss.pie}});
  }
  return {
      {"seed", seed},
      {"initial_params", params_json(initial_params)},
      {"post_nn_params", params_json(post_nn_params)},
      {"final_params", params_json(final_params)},
      {"initial_loss", loss_json(initial_loss)},
      {"post_nn_loss", loss_json(post_nn_loss)},
      {"final_loss", loss_json(final_loss)},
      {"final_mse", final_loss.mse},
      {"final_pie", final_loss.pie},
      {"bfgs", {{"status", bfgs_status}, {"iterations", bfgs_iterations}}},
      {"stage_errors", stage_errors},
      {"trace", trace_json},
  };
}

void write_trace_csv(const std::vector<TraceEntry>& trace, std::ostream& out) {
  out << "stage,step,total,mse,pie\n";
  for (const auto& t : trace) {
    out << t.stage << ',' << t.step << ',' << format_double(t.loss.total) << ','
        << format_double(t.loss.mse) << ',' << format_double(t.loss.pie) << '\n';
  }
}

}  // namespace pps
