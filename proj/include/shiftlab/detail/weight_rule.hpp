#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "shiftlab/rational.hpp"

namespace shiftlab {

using Index = std::int64_t;

/// Arithmetic certificate attached to a weight sequence.
///  - RationalSq:     a_j^2 is an exact rational for every j.
///  - RationalFourth: a_j^4 is an exact rational for every j (a_j^2 is the
///                    square root of a rational); arises from the half-Aluthge
///                    of a RationalSq sequence.
///  - FloatingOnly:   double evaluation only.
enum class Exactness { RationalSq, RationalFourth, FloatingOnly };

namespace detail {

/// Evaluation node behind a WeightSequence. Implementations are immutable and
/// pure; every accessor is safe for concurrent use.
class WeightRule {
 public:
  virtual ~WeightRule() = default;

  virtual double weight(Index j) const = 0;
  virtual double weight_sq(Index j) const {
    const double w = weight(j);
    return w * w;
  }

  virtual Exactness exactness() const = 0;

  /// a_j^2 as a rational. Only valid when exactness() == RationalSq.
  virtual Rational weight_sq_exact(Index) const {
    throw std::logic_error("weight_sq_exact: sequence is not RationalSq-exact");
  }
  /// a_j^4 as a rational. Valid when exactness() != FloatingOnly.
  virtual Rational weight_pow4_exact(Index j) const {
    const Rational s = weight_sq_exact(j);
    return s * s;
  }

  /// True when a_j itself is an exact rational for every j.
  virtual bool weights_rational() const { return false; }
  virtual Rational weight_exact(Index) const {
    throw std::logic_error("weight_exact: weights are not rational");
  }

  virtual bool strictly_positive() const = 0;
  /// Structural period, when the sequence is known to repeat.
  virtual std::optional<int> period() const { return std::nullopt; }
  /// Known-monotone certificate (used by the norm scanner: the sup of any
  /// window product is attained at j = 1).
  virtual bool nonincreasing() const { return false; }

  virtual std::string describe() const = 0;
};

using RulePtr = std::shared_ptr<const WeightRule>;

}  // namespace detail
}  // namespace shiftlab
