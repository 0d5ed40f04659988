#include "netform/core/variable_space.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace netform::core {

VariableSpace VariableSpace::finite_discrete(std::int64_t cardinality) {
  if (cardinality < 1) throw std::invalid_argument("cardinality must be >= 1");
  VariableSpace s;
  s.kind_ = Kind::kFiniteDiscrete;
  s.cardinality_ = cardinality;
  return s;
}

VariableSpace VariableSpace::bounded_real(double lo, double hi) {
  if (!(lo <= hi)) throw std::invalid_argument("bounded real space needs lo <= hi");
  VariableSpace s;
  s.kind_ = Kind::kBoundedReal;
  s.lo_ = lo;
  s.hi_ = hi;
  return s;
}

VariableSpace VariableSpace::real_vector(std::size_t dim) {
  if (dim < 1) throw std::invalid_argument("vector dimension must be >= 1");
  VariableSpace s;
  s.kind_ = Kind::kRealVector;
  s.dim_ = dim;
  return s;
}

bool VariableSpace::contains(const Value& value) const {
  switch (kind_) {
    case Kind::kFiniteDiscrete: {
      const auto* v = std::get_if<std::int64_t>(&value);
      return v != nullptr && *v >= 0 && *v < cardinality_;
    }
    case Kind::kBoundedReal: {
      const auto* v = std::get_if<double>(&value);
      return v != nullptr && std::isfinite(*v) && *v >= lo_ && *v <= hi_;
    }
    case Kind::kRealVector: {
      const auto* v = std::get_if<std::vector<double>>(&value);
      if (v == nullptr || v->size() != dim_) return false;
      for (double x : *v)
        if (!std::isfinite(x)) return false;
      return true;
    }
  }
  return false;
}

std::string VariableSpace::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::kFiniteDiscrete:
      out << "FiniteDiscrete(" << cardinality_ << ")";
      break;
    case Kind::kBoundedReal:
      out << "BoundedReal(" << lo_ << ", " << hi_ << ")";
      break;
    case Kind::kRealVector:
      out << "RealVector(" << dim_ << ")";
      break;
  }
  return out.str();
}

std::string describe(const Value& value) {
  std::ostringstream out;
  if (const auto* i = std::get_if<std::int64_t>(&value)) {
    out << *i;
  } else if (const auto* d = std::get_if<double>(&value)) {
    out << *d;
  } else {
    const auto& v = std::get<std::vector<double>>(value);
    out << "[";
    for (std::size_t k = 0; k < v.size(); ++k) out << (k ? ", " : "") << v[k];
    out << "]";
  }
  return out.str();
}

}  // namespace netform::core
