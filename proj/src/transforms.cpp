#include "shiftlab/transforms.hpp"

#include <cmath>

namespace shiftlab {

namespace {

void check_lambda(const ExactReal& lambda) {
  const double v = lambda.value();
  if (!std::isfinite(v) || v < 0.0 || v > 1.0)
    throw std::domain_error("transform: lambda must lie in [0,1]");
}

// Shared floating evaluation of a^(1-lambda) * b^lambda in the log domain,
// so that inverse weight pairs (log a = -log b) cancel before exponentiation.
double aluthge_fp(double a, double b, double lambda) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return std::exp((1.0 - lambda) * std::log(a) + lambda * std::log(b));
}

class ShiftedRule final : public detail::WeightRule {
 public:
  explicit ShiftedRule(detail::RulePtr base) : base_(std::move(base)) {}
  double weight(Index j) const override { return base_->weight(j + 1); }
  double weight_sq(Index j) const override { return base_->weight_sq(j + 1); }
  Exactness exactness() const override { return base_->exactness(); }
  Rational weight_sq_exact(Index j) const override { return base_->weight_sq_exact(j + 1); }
  Rational weight_pow4_exact(Index j) const override { return base_->weight_pow4_exact(j + 1); }
  bool weights_rational() const override { return base_->weights_rational(); }
  Rational weight_exact(Index j) const override { return base_->weight_exact(j + 1); }
  bool strictly_positive() const override { return base_->strictly_positive(); }
  std::optional<int> period() const override { return base_->period(); }
  bool nonincreasing() const override { return base_->nonincreasing(); }
  std::string describe() const override { return "duggal(" + base_->describe() + ")"; }

 private:
  detail::RulePtr base_;
};

// Classical Aluthge (lambda = 1/2). On RationalSq input b_j^4 = a_j^2 a_{j+1}^2
// stays rational, and perfect squares collapse back to exact values, so e.g.
// inverse weight pairs give b_j = 1 bit-exactly.
class HalfAluthgeRule final : public detail::WeightRule {
 public:
  explicit HalfAluthgeRule(detail::RulePtr base)
      : base_(std::move(base)),
        exact_(base_->exactness() == Exactness::RationalSq) {}

  double weight(Index j) const override {
    if (exact_) {
      const Rational q4 = pow4(j);
      if (auto q2 = exact_sqrt(q4)) {
        if (auto q1 = exact_sqrt(*q2)) return to_double(*q1);
        return std::sqrt(to_double(*q2));
      }
      return std::sqrt(std::sqrt(to_double(q4)));
    }
    return aluthge_fp(base_->weight(j), base_->weight(j + 1), 0.5);
  }
  double weight_sq(Index j) const override {
    if (exact_) {
      const Rational q4 = pow4(j);
      if (auto q2 = exact_sqrt(q4)) return to_double(*q2);
      return std::sqrt(to_double(q4));
    }
    return aluthge_fp(base_->weight_sq(j), base_->weight_sq(j + 1), 0.5);
  }
  Exactness exactness() const override {
    return exact_ ? Exactness::RationalFourth : Exactness::FloatingOnly;
  }
  Rational weight_pow4_exact(Index j) const override {
    if (!exact_) throw std::logic_error("weight_pow4_exact: base is not RationalSq-exact");
    return pow4(j);
  }
  bool strictly_positive() const override { return base_->strictly_positive(); }
  std::optional<int> period() const override { return base_->period(); }
  bool nonincreasing() const override { return base_->nonincreasing(); }
  std::string describe() const override { return "aluthge[1/2](" + base_->describe() + ")"; }

 private:
  Rational pow4(Index j) const {
    return base_->weight_sq_exact(j) * base_->weight_sq_exact(j + 1);
  }
  detail::RulePtr base_;
  bool exact_;
};

class AluthgeRule final : public detail::WeightRule {
 public:
  AluthgeRule(detail::RulePtr base, double lambda) : base_(std::move(base)), lambda_(lambda) {}
  double weight(Index j) const override {
    return aluthge_fp(base_->weight(j), base_->weight(j + 1), lambda_);
  }
  double weight_sq(Index j) const override {
    return aluthge_fp(base_->weight_sq(j), base_->weight_sq(j + 1), lambda_);
  }
  Exactness exactness() const override { return Exactness::FloatingOnly; }
  bool strictly_positive() const override { return base_->strictly_positive(); }
  std::optional<int> period() const override { return base_->period(); }
  bool nonincreasing() const override { return base_->nonincreasing(); }
  std::string describe() const override {
    return "aluthge[" + format_double(lambda_) + "](" + base_->describe() + ")";
  }

 private:
  detail::RulePtr base_;
  double lambda_;
};

class MeanRule final : public detail::WeightRule {
 public:
  explicit MeanRule(detail::RulePtr base)
      : base_(std::move(base)), exact_(base_->weights_rational()) {}
  double weight(Index j) const override {
    if (exact_) return to_double(weight_exact(j));
    return 0.5 * (base_->weight(j) + base_->weight(j + 1));
  }
  Exactness exactness() const override {
    return exact_ ? Exactness::RationalSq : Exactness::FloatingOnly;
  }
  Rational weight_sq_exact(Index j) const override {
    const Rational m = weight_exact(j);
    return m * m;
  }
  bool weights_rational() const override { return exact_; }
  Rational weight_exact(Index j) const override {
    return (base_->weight_exact(j) + base_->weight_exact(j + 1)) / 2;
  }
  bool strictly_positive() const override { return base_->strictly_positive(); }
  std::optional<int> period() const override { return base_->period(); }
  bool nonincreasing() const override { return base_->nonincreasing(); }
  std::string describe() const override { return "mean(" + base_->describe() + ")"; }

 private:
  detail::RulePtr base_;
  bool exact_;
};

class LambdaMeanRule final : public detail::WeightRule {
 public:
  LambdaMeanRule(detail::RulePtr base, double lambda)
      : base_(std::move(base)), lambda_(lambda) {}
  double weight(Index j) const override {
    const double a = base_->weight(j), b = base_->weight(j + 1);
    return 0.5 * (aluthge_fp(a, b, 1.0 - lambda_) + aluthge_fp(a, b, lambda_));
  }
  Exactness exactness() const override { return Exactness::FloatingOnly; }
  bool strictly_positive() const override { return base_->strictly_positive(); }
  std::optional<int> period() const override { return base_->period(); }
  bool nonincreasing() const override { return base_->nonincreasing(); }
  std::string describe() const override {
    return "lambda-mean[" + format_double(lambda_) + "](" + base_->describe() + ")";
  }

 private:
  detail::RulePtr base_;
  double lambda_;
};

WeightSequence aluthge_seq(const WeightSequence& seq, ExactReal lambda, SequenceOp op) {
  check_lambda(lambda);
  const double v = lambda.value();
  detail::RulePtr rule;
  if (v == 0.0)
    rule = seq.rule();
  else if (v == 1.0)
    rule = std::make_shared<ShiftedRule>(seq.rule());
  else if (v == 0.5)
    rule = std::make_shared<HalfAluthgeRule>(seq.rule());
  else
    rule = std::make_shared<AluthgeRule>(seq.rule(), v);
  return seq.derived(std::move(rule), op);
}

WeightSequence mean_seq(const WeightSequence& seq, SequenceOp op) {
  return seq.derived(std::make_shared<MeanRule>(seq.rule()), op);
}

WeightSequence lambda_mean_seq(const WeightSequence& seq, ExactReal lambda, SequenceOp op) {
  check_lambda(lambda);
  if (!seq.strictly_positive())
    throw std::domain_error("lambda-mean transform requires strictly positive weights");
  const double v = lambda.value();
  if (v == 0.0 || v == 1.0) return mean_seq(seq, op);
  if (v == 0.5)
    return seq.derived(std::make_shared<HalfAluthgeRule>(seq.rule()), op);
  return seq.derived(std::make_shared<LambdaMeanRule>(seq.rule(), v), op);
}

}  // namespace

namespace detail {

WeightSequence apply_sequence_op(const WeightSequence& seq, const SequenceOp& op) {
  switch (op.type) {
    case SequenceOp::Type::Aluthge:
      return aluthge_seq(seq, op.param, op);
    case SequenceOp::Type::Duggal:
      return aluthge_seq(seq, ExactReal(Rational(1)), op);
    case SequenceOp::Type::Mean:
      return mean_seq(seq, op);
    case SequenceOp::Type::LambdaMean:
      return lambda_mean_seq(seq, op.param, op);
    case SequenceOp::Type::Scale:
      return WeightedShift(seq).scaled(op.param).weights();
  }
  throw std::logic_error("apply_sequence_op: unknown op");
}

}  // namespace detail

TransformKind TransformKind::aluthge(ExactReal lambda) {
  check_lambda(lambda);
  return TransformKind(Family::Aluthge, lambda);
}
TransformKind TransformKind::duggal() { return TransformKind(Family::Duggal, ExactReal(Rational(1))); }
TransformKind TransformKind::mean() { return TransformKind(Family::Mean, ExactReal(Rational(0))); }
TransformKind TransformKind::lambda_mean(ExactReal lambda) {
  check_lambda(lambda);
  return TransformKind(Family::LambdaMean, lambda);
}

std::string TransformKind::name() const {
  switch (family_) {
    case Family::Aluthge:
      return "aluthge";
    case Family::Duggal:
      return "duggal";
    case Family::Mean:
      return "mean";
    case Family::LambdaMean:
      return "lambda-mean";
  }
  return "?";
}

WeightedShift aluthge(const WeightedShift& shift, ExactReal lambda) {
  check_lambda(lambda);
  WeightedShift out = shift.with_weights(
      aluthge_seq(shift.weights(), lambda, SequenceOp{SequenceOp::Type::Aluthge, lambda}));
  const double v = lambda.value();
  if (v > 0.0 && v < 1.0 && !shift.weights().strictly_positive())
    out = out.with_note("aluthge: zero weights map to zero output weights");
  return out;
}

WeightedShift duggal(const WeightedShift& shift) {
  return shift.with_weights(aluthge_seq(shift.weights(), ExactReal(Rational(1)),
                                        SequenceOp{SequenceOp::Type::Duggal, ExactReal(Rational(1))}));
}

WeightedShift mean_transform(const WeightedShift& shift) {
  return shift.with_weights(
      mean_seq(shift.weights(), SequenceOp{SequenceOp::Type::Mean, ExactReal(Rational(0))}));
}

WeightedShift lambda_mean(const WeightedShift& shift, ExactReal lambda) {
  return shift.with_weights(lambda_mean_seq(
      shift.weights(), lambda, SequenceOp{SequenceOp::Type::LambdaMean, lambda}));
}

WeightedShift apply_transform(const WeightedShift& shift, const TransformKind& kind) {
  switch (kind.family()) {
    case TransformKind::Family::Aluthge:
      return aluthge(shift, kind.lambda());
    case TransformKind::Family::Duggal:
      return duggal(shift);
    case TransformKind::Family::Mean:
      return mean_transform(shift);
    case TransformKind::Family::LambdaMean:
      return lambda_mean(shift, kind.lambda());
  }
  throw std::logic_error("apply_transform: unknown kind");
}

}  // namespace shiftlab
