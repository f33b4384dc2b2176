#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pps/data.hpp"
#include "pps/model.hpp"
#include "pps/optimize.hpp"
#include "pps/solver.hpp"

namespace pps {

inline constexpr double kParamFloor = 1e-6;

// Dense network with swish hidden layers and a rectified output layer.
struct Mlp {
  std::vector<int> sizes;
  std::vector<Matrix> weights;  // weights[l] is sizes[l + 1] x sizes[l]
  std::vector<Vector> biases;

  static Mlp zeros(std::vector<int> sizes);
  // Glorot-uniform hidden weights. The output layer starts with zero weights
  // and bias equal to `output_bias`, so the untrained net returns that vector
  // for any input once it is nonnegative.
  static Mlp initialize(std::vector<int> sizes, std::uint64_t seed, const Vector& output_bias);

  Vector forward(const Vector& input) const;
  Eigen::Index parameter_count() const;
  Vector flatten() const;
  void unflatten(const Vector& theta);

  // dL/dTheta (flattened like flatten()) given dL/d(output) at `input`.
  Vector backprop(const Vector& input, const Vector& grad_output) const;
};

inline const std::vector<int> kPinnLayers = {14, 32, 32, 32, 14};

double swish(double u);

// exp(N(0, 1)) per component.
Vector init_params(std::uint64_t seed);

// Central differences inside, second-order one-sided differences at the ends.
// Throws TooFewSamples or NonUniformGrid.
std::vector<Derivative> data_derivative(const Dataset& ds);

struct LossOptions {
  // RK4 substeps per sample interval for the predicted trajectory.
  std::size_t substeps = 20;
  // Evaluate the model right-hand side at the observed states; when false, at
  // the predicted states.
  bool pie_at_observed = true;
};

struct LossBreakdown {
  double total = 0.0;
  double mse = 0.0;
  double pie = 0.0;
};

// Prediction from the first observation. Throws IntegrationFailed.
Trajectory predict(const ModelParams& p, const Dataset& ds, const LossOptions& opt = {});

LossBreakdown total_loss(const ModelParams& p, const Dataset& ds, const LossOptions& opt = {});
LossBreakdown total_loss(const ModelParams& p, const Dataset& ds,
                         const std::vector<Derivative>& derivative, const LossOptions& opt);

ModelParams params_from_vector(const Vector& v);
Vector params_to_vector(const ModelParams& p);

// Central differences of f with step relative * |p_i|. If one probe is not
// finite the one-sided difference is used; if both are not, the component is 0.
Vector relative_fd_gradient(const std::function<double(const Vector&)>& f, const Vector& p,
                            double relative);

struct TraceEntry {
  std::string stage;  // "pinn" or "bfgs"
  std::size_t step = 0;
  LossBreakdown loss;
};

struct TrainConfig {
  std::size_t epochs = 100;
  AdamConfig adam{};
  double outer_fd_step = 1e-4;
  LossOptions loss{};
};

struct TrainResult {
  Mlp net;
  Vector input;
  Vector params;  // forward(net, input) floored at kParamFloor
  std::vector<TraceEntry> trace;  // one entry per epoch, loss before the update
  std::optional<Error> failure;
};

TrainResult train_pinn(const Dataset& ds, std::uint64_t seed, const TrainConfig& cfg = {});

struct EstimateConfig {
  TrainConfig train{};
  BfgsConfig bfgs = [] {
    BfgsConfig c;
    c.max_iterations = 200;
    return c;
  }();
};

struct EstimationReport {
  std::uint64_t seed = 0;
  Vector initial_params;
  Vector post_nn_params;
  Vector final_params;
  LossBreakdown initial_loss;
  LossBreakdown post_nn_loss;
  LossBreakdown final_loss;
  std::vector<TraceEntry> trace;
  std::string bfgs_status;
  std::size_t bfgs_iterations = 0;
  std::vector<std::string> stage_errors;

  nlohmann::json to_json() const;
};

EstimationReport estimate(const Dataset& ds, std::uint64_t seed, const EstimateConfig& cfg = {});

// CSV `stage,step,total,mse,pie`.
void write_trace_csv(const std::vector<TraceEntry>& trace, std::ostream& out);

}  // namespace pps
