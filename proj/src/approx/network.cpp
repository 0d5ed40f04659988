#include "netform/approx/network.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace netform::approx {

void NetworkSpec::validate() const {
  if (input_dim < 1) throw std::invalid_argument("input_dim must be >= 1");
  if (output_dim < 1) throw std::invalid_argument("output_dim must be >= 1");
  for (auto w : hidden_layers)
    if (w < 1) throw std::invalid_argument("hidden layer widths must be >= 1");
}

std::size_t NetworkSpec::fan_in(std::size_t layer) const {
  return layer == 0 ? input_dim : hidden_layers[layer - 1];
}

std::size_t NetworkSpec::fan_out(std::size_t layer) const {
  return layer < hidden_layers.size() ? hidden_layers[layer] : output_dim;
}

std::size_t NetworkSpec::parameter_count() const {
  std::size_t n = 0;
  for (std::size_t l = 0; l < layer_count(); ++l) n += (fan_in(l) + 1) * fan_out(l);
  return n;
}

Network::Network(NetworkSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  params_.assign(spec_.parameter_count(), 0.0);
  std::size_t off = 0;
  for (std::size_t l = 0; l < spec_.layer_count(); ++l) {
    offsets_.push_back(off);
    off += (spec_.fan_in(l) + 1) * spec_.fan_out(l);
  }
}

Network::Network(NetworkSpec spec, std::vector<double> params) : Network(std::move(spec)) {
  if (params.size() != params_.size())
    throw std::invalid_argument("expected " + std::to_string(params_.size()) +
                                " parameters, got " + std::to_string(params.size()));
  params_ = std::move(params);
}

Network Network::init(const NetworkSpec& spec, double scale, double output_bias, Rng& rng) {
  if (!(scale >= 0.0)) throw std::invalid_argument("init scale must be >= 0");
  Network net(spec);
  for (std::size_t l = 0; l < spec.layer_count(); ++l) {
    auto w = net.params_.begin() + static_cast<std::ptrdiff_t>(net.weight_offset(l));
    const auto n_w = spec.fan_in(l) * spec.fan_out(l);
    for (std::size_t k = 0; k < n_w; ++k) w[k] = uniform_real(rng, -scale, scale);
    auto b = net.params_.begin() + static_cast<std::ptrdiff_t>(net.bias_offset(l));
    const bool output = l + 1 == spec.layer_count();
    for (std::size_t k = 0; k < spec.fan_out(l); ++k)
      b[k] = output ? output_bias : uniform_real(rng, -scale, scale);
  }
  return net;
}

std::span<const double> Network::weights(std::size_t layer) const {
  return std::span<const double>(params_).subspan(weight_offset(layer),
                                                  spec_.fan_in(layer) * spec_.fan_out(layer));
}

std::span<const double> Network::biases(std::size_t layer) const {
  return std::span<const double>(params_).subspan(bias_offset(layer), spec_.fan_out(layer));
}

void Network::check_input(std::span<const double> input) const {
  if (input.size() != spec_.input_dim)
    throw std::invalid_argument("network expects " + std::to_string(spec_.input_dim) +
                                " inputs, got " + std::to_string(input.size()));
}

std::vector<double> Network::forward(std::span<const double> input) const {
  Workspace ws;
  auto out = forward(input, ws);
  return {out.begin(), out.end()};
}

std::span<const double> Network::forward(std::span<const double> input, Workspace& ws) const {
  check_input(input);
  const auto layers = spec_.layer_count();
  ws.activations.resize(layers + 1);
  ws.activations[0].assign(input.begin(), input.end());
  for (std::size_t l = 0; l < layers; ++l) {
    const auto n_in = spec_.fan_in(l);
    const auto n_out = spec_.fan_out(l);
    const double* w = params_.data() + weight_offset(l);
    const double* b = params_.data() + bias_offset(l);
    const auto& x = ws.activations[l];
    auto& y = ws.activations[l + 1];
    y.resize(n_out);
    const bool hidden = l + 1 < layers;
    for (std::size_t o = 0; o < n_out; ++o) {
      double z = b[o];
      const double* row = w + o * n_in;
      for (std::size_t i = 0; i < n_in; ++i) z += row[i] * x[i];
      y[o] = hidden ? std::tanh(z) : z;
    }
  }
  return ws.activations[layers];
}

std::vector<double> Network::td_gradient(std::span<const double> input, std::size_t action,
                                         double target) const {
  std::vector<double> grad(params_.size(), 0.0);
  Workspace ws;
  accumulate_td_gradient(input, action, target, 1.0, grad, ws);
  return grad;
}

void Network::accumulate_td_gradient(std::span<const double> input, std::size_t action,
                                     double target, double weight, std::span<double> grad,
                                     Workspace& ws) const {
  if (action >= spec_.output_dim)
    throw std::invalid_argument("action index " + std::to_string(action) + " out of range");
  if (grad.size() != params_.size()) throw std::invalid_argument("gradient buffer size mismatch");
  auto q = forward(input, ws);

  // dL/dq_a = -(target - q_a); all other outputs carry no error.
  const auto layers = spec_.layer_count();
  ws.delta.assign(spec_.output_dim, 0.0);
  ws.delta[action] = -(target - q[action]) * weight;

  for (std::size_t l = layers; l-- > 0;) {
    const auto n_in = spec_.fan_in(l);
    const auto n_out = spec_.fan_out(l);
    const double* w = params_.data() + weight_offset(l);
    double* gw = grad.data() + weight_offset(l);
    double* gb = grad.data() + bias_offset(l);
    const auto& x = ws.activations[l];
    for (std::size_t o = 0; o < n_out; ++o) {
      const double d = ws.delta[o];
      if (d == 0.0) continue;
      gb[o] += d;
      double* grow = gw + o * n_in;
      for (std::size_t i = 0; i < n_in; ++i) grow[i] += d * x[i];
    }
    if (l == 0) break;
    // Back through W and the tanh of the layer below: tanh' = 1 - y^2.
    ws.delta_prev.assign(n_in, 0.0);
    for (std::size_t o = 0; o < n_out; ++o) {
      const double d = ws.delta[o];
      if (d == 0.0) continue;
      const double* row = w + o * n_in;
      for (std::size_t i = 0; i < n_in; ++i) ws.delta_prev[i] += row[i] * d;
    }
    for (std::size_t i = 0; i < n_in; ++i) ws.delta_prev[i] *= 1.0 - x[i] * x[i];
    std::swap(ws.delta, ws.delta_prev);
  }
}

void Network::apply_update(std::span<const double> gradient, double learning_rate) {
  if (!(learning_rate > 0.0)) throw std::invalid_argument("learning rate must be > 0");
  if (gradient.size() != params_.size()) throw std::invalid_argument("gradient size mismatch");
  for (double g : gradient)
    if (!std::isfinite(g)) throw std::domain_error("non-finite gradient");
  for (std::size_t k = 0; k < params_.size(); ++k) params_[k] -= learning_rate * gradient[k];
}

bool Network::all_finite() const {
  for (double p : params_)
    if (!std::isfinite(p)) return false;
  return true;
}

}  // namespace netform::approx
