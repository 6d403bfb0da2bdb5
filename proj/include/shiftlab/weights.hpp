#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "shiftlab/detail/weight_rule.hpp"
#include "shiftlab/rational.hpp"

namespace shiftlab {

/// Tail rule of an explicit weight list: what a_j is for j past the list.
/// Every explicit sequence must declare one, since defect tests quantify over
/// all indices.
class Tail {
 public:
  enum class Kind { Constant, RepeatLast, TwoIsoExtend };

  static Tail constant(ExactReal c);
  static Tail repeat_last();
  /// Extends with the two-isometric family value at the same absolute index:
  /// a_j^2 = (j+1+a)/(j+a) for j beyond the list.
  static Tail two_iso_extend(ExactReal a);

  Kind kind() const { return kind_; }
  const ExactReal& param() const { return param_; }

 private:
  Tail(Kind k, ExactReal p) : kind_(k), param_(p) {}
  Kind kind_;
  ExactReal param_;
};

// --- construction descriptors (also the JSON schema backbone) -------------

struct ConstantSpec {
  ExactReal c;
};
struct PeriodicSpec {
  std::vector<ExactReal> weights;
};
struct TwoIsoSpec {
  ExactReal a;
};
struct PowerTowerSpec {
  double x;
  double lambda;
};
struct ExplicitSpec {
  std::vector<ExactReal> weights;
  Tail tail;
};

using FamilySpec =
    std::variant<ConstantSpec, PeriodicSpec, TwoIsoSpec, PowerTowerSpec, ExplicitSpec>;

/// One step applied on top of a family (transform or scalar scaling),
/// recorded so derived shifts can be serialized and rebuilt.
struct SequenceOp {
  enum class Type { Aluthge, Duggal, Mean, LambdaMean, Scale };
  Type type;
  ExactReal param;  // lambda for Aluthge/LambdaMean, factor for Scale; unused otherwise
};

struct SequenceSpec {
  FamilySpec family;
  std::vector<SequenceOp> ops;
};

/// A rule yielding the weight a_j >= 0 for every index j >= 1, together with
/// its arithmetic certificate. Values are immutable; copying is cheap.
class WeightSequence {
 public:
  static WeightSequence constant(ExactReal c);
  static WeightSequence periodic(std::vector<ExactReal> weights);
  /// Two-isometric family a_j = sqrt((j+1+a)/(j+a)), a > -1.
  static WeightSequence two_iso(ExactReal a);
  /// a_j = x^(((lambda-1)/lambda)^j), x > 0, lambda in (0,1). Construction
  /// rejects parameter combinations outside the contract (lambda < 1/2
  /// requires x < 1); evaluation is done in the log domain.
  static WeightSequence power_tower(double x, double lambda);
  static WeightSequence explicit_list(std::vector<ExactReal> weights, Tail tail);

  static WeightSequence from_spec(const SequenceSpec& spec);

  double weight(Index j) const;
  double weight_sq(Index j) const;

  Exactness exactness() const { return rule_->exactness(); }
  Rational weight_sq_exact(Index j) const;
  Rational weight_pow4_exact(Index j) const;
  bool weights_rational() const { return rule_->weights_rational(); }
  Rational weight_exact(Index j) const;

  bool strictly_positive() const { return rule_->strictly_positive(); }
  std::optional<int> period() const { return rule_->period(); }
  bool nonincreasing() const { return rule_->nonincreasing(); }

  std::string describe() const { return rule_->describe(); }
  const SequenceSpec& spec() const { return spec_; }

  /// Used by the transforms module to wrap this sequence in a derived rule.
  const detail::RulePtr& rule() const { return rule_; }
  WeightSequence derived(detail::RulePtr rule, SequenceOp op) const;

  /// Scalar-generic access to a_j^2, the quantity every defect formula
  /// consumes. Scalar is double or Rational.
  template <class Scalar>
  Scalar weight_sq_as(Index j) const;

 private:
  WeightSequence(SequenceSpec spec, detail::RulePtr rule)
      : spec_(std::move(spec)), rule_(std::move(rule)) {}

  SequenceSpec spec_;
  detail::RulePtr rule_;
};

template <>
inline double WeightSequence::weight_sq_as<double>(Index j) const {
  return weight_sq(j);
}
template <>
inline Rational WeightSequence::weight_sq_as<Rational>(Index j) const {
  return weight_sq_exact(j);
}

/// The unilateral weighted shift T e_j = zeta_j a_j e_{j+1}. Phases default
/// to 1; where a_j = 0 the phase is recorded as 0.
class WeightedShift {
 public:
  explicit WeightedShift(WeightSequence weights);
  WeightedShift(WeightSequence weights, std::vector<std::complex<double>> phases);

  const WeightSequence& weights() const { return weights_; }
  double weight(Index j) const { return weights_.weight(j); }

  bool has_phases() const { return !phases_.empty(); }
  const std::vector<std::complex<double>>& stored_phases() const { return phases_; }
  /// zeta_j: stored phase (or 1) where a_j > 0, and 0 where a_j = 0.
  std::complex<double> phase(Index j) const;
  /// The subdiagonal entry zeta_j a_j.
  std::complex<double> entry(Index j) const { return phase(j) * weight(j); }

  WeightedShift scaled(ExactReal alpha) const;

  /// Transform provenance and advisory notes accumulated by derived shifts.
  const std::vector<std::string>& notes() const { return notes_; }
  WeightedShift with_weights(WeightSequence w) const;
  WeightedShift with_note(std::string note) const;

  std::string describe() const { return weights_.describe(); }

 private:
  WeightSequence weights_;
  std::vector<std::complex<double>> phases_;
  std::vector<std::string> notes_;
};

/// A shift is an isometry iff every weight is 1 (1-isometries are exactly the
/// isometries). Checks |a_j - 1| <= tol for j <= n_max; on RationalSq
/// sequences the comparison a_j^2 == 1 is exact.
bool is_isometry(const WeightedShift& shift, Index n_max, double tol = 1e-9);

}  // namespace shiftlab
