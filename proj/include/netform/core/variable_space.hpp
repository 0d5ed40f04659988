#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace netform::core {

/// Value of a single node. Which alternative is legal is decided by the
/// node's VariableSpace.
using Value = std::variant<std::int64_t, double, std::vector<double>>;

/// The set of values a node may take.
class VariableSpace {
 public:
  enum class Kind { kFiniteDiscrete, kBoundedReal, kRealVector };

  /// Values {0, ..., cardinality-1}.
  static VariableSpace finite_discrete(std::int64_t cardinality);
  /// Finite reals in [lo, hi].
  static VariableSpace bounded_real(double lo, double hi);
  /// Finite real vectors of length dim.
  static VariableSpace real_vector(std::size_t dim);

  Kind kind() const { return kind_; }
  std::int64_t cardinality() const { return cardinality_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  std::size_t dim() const { return dim_; }

  bool contains(const Value& value) const;
  std::string describe() const;

  /// Exact match of kind and every parameter.
  bool operator==(const VariableSpace& other) const = default;

 private:
  VariableSpace() = default;

  Kind kind_ = Kind::kFiniteDiscrete;
  std::int64_t cardinality_ = 0;
  double lo_ = 0.0;
  double hi_ = 0.0;
  std::size_t dim_ = 0;
};

std::string describe(const Value& value);

}  // namespace netform::core
