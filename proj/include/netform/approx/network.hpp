#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "netform/core/random.hpp"

namespace netform::approx {

/// Layered feed-forward shape: tanh hidden layers, linear output with one
/// unit per discrete action. An empty hidden list gives a single affine map.
struct NetworkSpec {
  std::size_t input_dim = 1;
  std::vector<std::size_t> hidden_layers;
  std::size_t output_dim = 1;

  /// Throws std::invalid_argument on a zero dimension.
  void validate() const;
  std::size_t layer_count() const { return hidden_layers.size() + 1; }
  std::size_t fan_in(std::size_t layer) const;
  std::size_t fan_out(std::size_t layer) const;
  std::size_t parameter_count() const;

  bool operator==(const NetworkSpec&) const = default;
};

/// Scratch buffers reused across forward/backward passes.
struct Workspace {
  std::vector<std::vector<double>> activations;
  std::vector<double> delta;
  std::vector<double> delta_prev;
};

/// Parameters of a NetworkSpec, stored flat. For each layer the weights come
/// first in row-major (fan_out x fan_in) order, followed by the biases.
class Network {
 public:
  /// All parameters zero.
  explicit Network(NetworkSpec spec);
  Network(NetworkSpec spec, std::vector<double> params);

  /// Weights and hidden biases uniform in [-scale, scale]; output biases set
  /// to `output_bias` so the untrained net predicts roughly that value.
  static Network init(const NetworkSpec& spec, double scale, double output_bias, Rng& rng);

  const NetworkSpec& spec() const { return spec_; }
  std::span<const double> params() const { return params_; }
  std::span<double> params() { return params_; }

  std::span<const double> weights(std::size_t layer) const;
  std::span<const double> biases(std::size_t layer) const;

  std::vector<double> forward(std::span<const double> input) const;
  /// Output stays valid until the workspace is reused.
  std::span<const double> forward(std::span<const double> input, Workspace& ws) const;

  /// Gradient of 0.5 * (target - Q(input)[action])^2 with the target held
  /// constant.
  std::vector<double> td_gradient(std::span<const double> input, std::size_t action,
                                  double target) const;
  /// Adds `weight` times the TD gradient into `grad`.
  void accumulate_td_gradient(std::span<const double> input, std::size_t action, double target,
                              double weight, std::span<double> grad, Workspace& ws) const;

  /// params -= learning_rate * gradient. Throws std::domain_error on a
  /// non-finite gradient.
  void apply_update(std::span<const double> gradient, double learning_rate);

  bool all_finite() const;

 private:
  std::size_t weight_offset(std::size_t layer) const { return offsets_[layer]; }
  std::size_t bias_offset(std::size_t layer) const {
    return offsets_[layer] + spec_.fan_in(layer) * spec_.fan_out(layer);
  }
  void check_input(std::span<const double> input) const;

  NetworkSpec spec_;
  std::vector<double> params_;
  std::vector<std::size_t> offsets_;
};

}  // namespace netform::approx
