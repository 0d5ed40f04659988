#include "netform/grid/params.hpp"

#include <cmath>
#include <stdexcept>

namespace netform::grid {

void GridParams::validate() const {
  for (double v : {r1, r2, x1, x2, v0, delta_v, v_min, v_max, eps, theta_a, q3_max, p3, p2_lo,
                   p2_hi, q2_factor, v1_initial})
    if (!std::isfinite(v)) throw std::invalid_argument("grid parameters must be finite");
  if (!(v_min < v_max)) throw std::invalid_argument("v_min must be below v_max");
  if (!(delta_v > 0.0)) throw std::invalid_argument("delta_v must be > 0");
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
  if (!(theta_a > eps)) throw std::invalid_argument("theta_a must exceed eps");
  if (!(q3_max >= 0.0)) throw std::invalid_argument("q3_max must be >= 0");
  if (!(p2_lo <= p2_hi)) throw std::invalid_argument("p2 range is empty");
  if (!(v0 > 0.0)) throw std::invalid_argument("v0 must be > 0");
  if (memory_window < 1) throw std::invalid_argument("memory window must be >= 1");
  if (!(v1_initial >= v_min && v1_initial <= v_max))
    throw std::invalid_argument("initial V1 outside the transformer range");
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
}

}  // namespace netform::grid
