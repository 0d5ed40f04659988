#include <sstream>
#include <stdexcept>

#include "netform/levelk/policy.hpp"

namespace netform::levelk {

QPolicy::QPolicy(approx::Network network, double epsilon, FeatureEncoder encoder)
    : network_(std::move(network)), epsilon_(0.0), encoder_(std::move(encoder)) {
  set_epsilon(epsilon);
  if (!encoder_) throw std::invalid_argument("QPolicy needs a feature encoder");
}

void QPolicy::set_epsilon(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon must lie in [0, 1]");
  epsilon_ = epsilon;
}

std::vector<double> QPolicy::q_values(std::span<const double> features) const {
  return network_.forward(features);
}

std::size_t QPolicy::act(std::span<const double> memory, Rng& rng) const {
  auto features = encoder_(memory);
  return select_action(*this, features, rng);
}

std::string QPolicy::describe() const {
  std::ostringstream out;
  out << "q-policy(" << network_.spec().input_dim << "->";
  for (auto w : network_.spec().hidden_layers) out << w << "->";
  out << action_count() << ", eps=" << epsilon_ << ")";
  return out.str();
}

std::size_t argmax(std::span<const double> values) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k] > values[best]) best = k;
  return best;
}

std::size_t select_action(const QPolicy& policy, std::span<const double> features, Rng& rng) {
  if (policy.epsilon() > 0.0 && uniform01(rng) < policy.epsilon())
    return uniform_index(rng, policy.action_count());
  return argmax(policy.q_values(features));
}

}  // namespace netform::levelk
