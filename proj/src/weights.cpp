#include "shiftlab/weights.hpp"

#include <cmath>
#include <sstream>

namespace shiftlab {

namespace detail {
// Implemented in transforms.cpp; declared here so from_spec can replay
// recorded ops without a header cycle.
WeightSequence apply_sequence_op(const WeightSequence& seq, const SequenceOp& op);
}  // namespace detail

namespace {

std::string fmt(const ExactReal& v) {
  return v.is_exact() ? format_rational(v.exact()) : format_double(v.value());
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

class ConstantRule final : public detail::WeightRule {
 public:
  explicit ConstantRule(ExactReal c) : c_(c) {
    require(std::isfinite(c.value()) && c.value() >= 0.0,
            "constant family: weight must be a finite nonnegative real");
  }
  double weight(Index) const override { return c_.value(); }
  double weight_sq(Index) const override { return c_.value() * c_.value(); }
  Exactness exactness() const override {
    return c_.is_exact() ? Exactness::RationalSq : Exactness::FloatingOnly;
  }
  Rational weight_sq_exact(Index) const override { return c_.exact() * c_.exact(); }
  bool weights_rational() const override { return c_.is_exact(); }
  Rational weight_exact(Index) const override { return c_.exact(); }
  bool strictly_positive() const override { return c_.value() > 0.0; }
  std::optional<int> period() const override { return 1; }
  bool nonincreasing() const override { return true; }
  std::string describe() const override { return "constant(" + fmt(c_) + ")"; }

 private:
  ExactReal c_;
};

class PeriodicRule final : public detail::WeightRule {
 public:
  explicit PeriodicRule(std::vector<ExactReal> w) : w_(std::move(w)) {
    require(!w_.empty(), "periodic family: weight list must be nonempty");
    for (const auto& v : w_)
      require(std::isfinite(v.value()) && v.value() > 0.0,
              "periodic family: weights must be positive reals");
    exact_ = true;
    for (const auto& v : w_) exact_ = exact_ && v.is_exact();
  }
  double weight(Index j) const override { return at(j).value(); }
  double weight_sq(Index j) const override {
    const double w = at(j).value();
    return w * w;
  }
  Exactness exactness() const override {
    return exact_ ? Exactness::RationalSq : Exactness::FloatingOnly;
  }
  Rational weight_sq_exact(Index j) const override {
    const Rational& w = at(j).exact();
    return w * w;
  }
  bool weights_rational() const override { return exact_; }
  Rational weight_exact(Index j) const override { return at(j).exact(); }
  bool strictly_positive() const override { return true; }
  std::optional<int> period() const override { return static_cast<int>(w_.size()); }
  std::string describe() const override {
    std::ostringstream os;
    os << "periodic(";
    for (std::size_t i = 0; i < w_.size(); ++i) os << (i ? "," : "") << fmt(w_[i]);
    os << ")";
    return os.str();
  }

 private:
  const ExactReal& at(Index j) const { return w_[static_cast<std::size_t>((j - 1) % static_cast<Index>(w_.size()))]; }
  std::vector<ExactReal> w_;
  bool exact_;
};

class TwoIsoRule final : public detail::WeightRule {
 public:
  explicit TwoIsoRule(ExactReal a) : a_(a) {
    const bool ok = a.is_exact() ? a.exact() > -1 : (std::isfinite(a.value()) && a.value() > -1.0);
    require(ok, "two-iso family: parameter a must satisfy a > -1");
  }
  double weight(Index j) const override { return std::sqrt(weight_sq(j)); }
  double weight_sq(Index j) const override {
    if (a_.is_exact()) return to_double(weight_sq_exact(j));
    const double a = a_.value();
    return (static_cast<double>(j) + 1.0 + a) / (static_cast<double>(j) + a);
  }
  Exactness exactness() const override {
    return a_.is_exact() ? Exactness::RationalSq : Exactness::FloatingOnly;
  }
  Rational weight_sq_exact(Index j) const override {
    const Rational& a = a_.exact();
    return (Rational(j + 1) + a) / (Rational(j) + a);
  }
  bool strictly_positive() const override { return true; }
  bool nonincreasing() const override { return true; }
  std::string describe() const override { return "two-iso(a=" + fmt(a_) + ")"; }

 private:
  ExactReal a_;
};

class PowerTowerRule final : public detail::WeightRule {
 public:
  PowerTowerRule(double x, double lambda) : x_(x), lambda_(lambda) {
    require(std::isfinite(x) && x > 0.0, "power-tower family: x must be positive");
    require(lambda > 0.0 && lambda < 1.0, "power-tower family: lambda must lie in (0,1)");
    require(lambda >= 0.5 || x < 1.0,
            "power-tower family: unbounded parameters (lambda < 1/2 requires 0 < x < 1)");
    ratio_ = (lambda - 1.0) / lambda;
    log_x_ = std::log(x);
  }
  double weight(Index j) const override { return std::exp(log_weight(j)); }
  double weight_sq(Index j) const override { return std::exp(2.0 * log_weight(j)); }
  Exactness exactness() const override { return Exactness::FloatingOnly; }
  bool strictly_positive() const override { return true; }
  std::string describe() const override {
    return "power-tower(x=" + format_double(x_) + ",lambda=" + format_double(lambda_) + ")";
  }
  double log_weight(Index j) const {
    return std::pow(ratio_, static_cast<double>(j)) * log_x_;
  }

 private:
  double x_, lambda_, ratio_, log_x_;
};

class ExplicitRule final : public detail::WeightRule {
 public:
  ExplicitRule(std::vector<ExactReal> w, Tail tail) : w_(std::move(w)), tail_(tail) {
    require(!w_.empty(), "explicit family: weight list must be nonempty");
    for (const auto& v : w_)
      require(std::isfinite(v.value()) && v.value() >= 0.0,
              "explicit family: weights must be nonnegative reals");
    switch (tail_.kind()) {
      case Tail::Kind::Constant:
        require(std::isfinite(tail_.param().value()) && tail_.param().value() >= 0.0,
                "explicit family: constant tail must be nonnegative");
        break;
      case Tail::Kind::RepeatLast:
        break;
      case Tail::Kind::TwoIsoExtend: {
        const auto& a = tail_.param();
        const bool ok = a.is_exact() ? a.exact() > -1 : a.value() > -1.0;
        require(ok, "explicit family: two-iso-extend tail requires a > -1");
        break;
      }
    }
    exact_ = true;
    for (const auto& v : w_) exact_ = exact_ && v.is_exact();
    if (tail_.kind() != Tail::Kind::RepeatLast) exact_ = exact_ && tail_.param().is_exact();
    rational_weights_ = exact_ && tail_.kind() != Tail::Kind::TwoIsoExtend;
  }

  double weight(Index j) const override {
    const Index n = static_cast<Index>(w_.size());
    if (j <= n) return w_[static_cast<std::size_t>(j - 1)].value();
    switch (tail_.kind()) {
      case Tail::Kind::Constant:
        return tail_.param().value();
      case Tail::Kind::RepeatLast:
        return w_.back().value();
      case Tail::Kind::TwoIsoExtend: {
        const double a = tail_.param().value();
        return std::sqrt((static_cast<double>(j) + 1.0 + a) / (static_cast<double>(j) + a));
      }
    }
    return 0.0;  // unreachable
  }
  Exactness exactness() const override {
    return exact_ ? Exactness::RationalSq : Exactness::FloatingOnly;
  }
  Rational weight_sq_exact(Index j) const override {
    const Index n = static_cast<Index>(w_.size());
    if (j <= n) {
      const Rational& w = w_[static_cast<std::size_t>(j - 1)].exact();
      return w * w;
    }
    switch (tail_.kind()) {
      case Tail::Kind::Constant: {
        const Rational& c = tail_.param().exact();
        return c * c;
      }
      case Tail::Kind::RepeatLast: {
        const Rational& w = w_.back().exact();
        return w * w;
      }
      case Tail::Kind::TwoIsoExtend: {
        const Rational& a = tail_.param().exact();
        return (Rational(j + 1) + a) / (Rational(j) + a);
      }
    }
    return Rational(0);  // unreachable
  }
  bool weights_rational() const override { return rational_weights_; }
  Rational weight_exact(Index j) const override {
    if (!rational_weights_)
      throw std::logic_error("weight_exact: extended-family tail weights are irrational");
    const Index n = static_cast<Index>(w_.size());
    if (j <= n) return w_[static_cast<std::size_t>(j - 1)].exact();
    return tail_.kind() == Tail::Kind::Constant ? tail_.param().exact() : w_.back().exact();
  }
  bool strictly_positive() const override {
    for (const auto& v : w_)
      if (v.value() <= 0.0) return false;
    switch (tail_.kind()) {
      case Tail::Kind::Constant:
        return tail_.param().value() > 0.0;
      case Tail::Kind::RepeatLast:
        return w_.back().value() > 0.0;
      case Tail::Kind::TwoIsoExtend:
        return true;
    }
    return false;  // unreachable
  }
  std::string describe() const override {
    std::ostringstream os;
    os << "explicit(";
    for (std::size_t i = 0; i < w_.size(); ++i) os << (i ? "," : "") << fmt(w_[i]);
    os << ";tail=";
    switch (tail_.kind()) {
      case Tail::Kind::Constant:
        os << "constant(" << fmt(tail_.param()) << ")";
        break;
      case Tail::Kind::RepeatLast:
        os << "repeat-last";
        break;
      case Tail::Kind::TwoIsoExtend:
        os << "two-iso-extend(a=" << fmt(tail_.param()) << ")";
        break;
    }
    os << ")";
    return os.str();
  }

 private:
  std::vector<ExactReal> w_;
  Tail tail_;
  bool exact_;
  bool rational_weights_;
};

class ScaledRule final : public detail::WeightRule {
 public:
  ScaledRule(detail::RulePtr base, ExactReal alpha) : base_(std::move(base)), alpha_(alpha) {
    require(std::isfinite(alpha.value()) && alpha.value() > 0.0,
            "scale: factor must be a positive real");
  }
  double weight(Index j) const override { return alpha_.value() * base_->weight(j); }
  double weight_sq(Index j) const override {
    return alpha_.value() * alpha_.value() * base_->weight_sq(j);
  }
  Exactness exactness() const override {
    if (!alpha_.is_exact()) return Exactness::FloatingOnly;
    return base_->exactness();
  }
  Rational weight_sq_exact(Index j) const override {
    return alpha_.exact() * alpha_.exact() * base_->weight_sq_exact(j);
  }
  Rational weight_pow4_exact(Index j) const override {
    const Rational a2 = alpha_.exact() * alpha_.exact();
    return a2 * a2 * base_->weight_pow4_exact(j);
  }
  bool weights_rational() const override {
    return alpha_.is_exact() && base_->weights_rational();
  }
  Rational weight_exact(Index j) const override {
    return alpha_.exact() * base_->weight_exact(j);
  }
  bool strictly_positive() const override { return base_->strictly_positive(); }
  std::optional<int> period() const override { return base_->period(); }
  bool nonincreasing() const override { return base_->nonincreasing(); }
  std::string describe() const override {
    return "scale[" + fmt(alpha_) + "](" + base_->describe() + ")";
  }

 private:
  detail::RulePtr base_;
  ExactReal alpha_;
};

}  // namespace

Tail Tail::constant(ExactReal c) { return Tail(Kind::Constant, c); }
Tail Tail::repeat_last() { return Tail(Kind::RepeatLast, ExactReal(0.0)); }
Tail Tail::two_iso_extend(ExactReal a) { return Tail(Kind::TwoIsoExtend, a); }

WeightSequence WeightSequence::constant(ExactReal c) {
  return WeightSequence({ConstantSpec{c}, {}}, std::make_shared<ConstantRule>(c));
}
WeightSequence WeightSequence::periodic(std::vector<ExactReal> weights) {
  auto rule = std::make_shared<PeriodicRule>(weights);
  return WeightSequence({PeriodicSpec{std::move(weights)}, {}}, std::move(rule));
}
WeightSequence WeightSequence::two_iso(ExactReal a) {
  return WeightSequence({TwoIsoSpec{a}, {}}, std::make_shared<TwoIsoRule>(a));
}
WeightSequence WeightSequence::power_tower(double x, double lambda) {
  return WeightSequence({PowerTowerSpec{x, lambda}, {}},
                        std::make_shared<PowerTowerRule>(x, lambda));
}
WeightSequence WeightSequence::explicit_list(std::vector<ExactReal> weights, Tail tail) {
  auto rule = std::make_shared<ExplicitRule>(weights, tail);
  return WeightSequence({ExplicitSpec{std::move(weights), tail}, {}}, std::move(rule));
}

WeightSequence WeightSequence::from_spec(const SequenceSpec& spec) {
  WeightSequence seq = std::visit(
      [](const auto& fam) -> WeightSequence {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, ConstantSpec>) return constant(fam.c);
        if constexpr (std::is_same_v<T, PeriodicSpec>) return periodic(fam.weights);
        if constexpr (std::is_same_v<T, TwoIsoSpec>) return two_iso(fam.a);
        if constexpr (std::is_same_v<T, PowerTowerSpec>) return power_tower(fam.x, fam.lambda);
        if constexpr (std::is_same_v<T, ExplicitSpec>) return explicit_list(fam.weights, fam.tail);
      },
      spec.family);
  for (const auto& op : spec.ops) seq = detail::apply_sequence_op(seq, op);
  return seq;
}

WeightSequence WeightSequence::derived(detail::RulePtr rule, SequenceOp op) const {
  SequenceSpec spec = spec_;
  spec.ops.push_back(op);
  return WeightSequence(std::move(spec), std::move(rule));
}

double WeightSequence::weight(Index j) const {
  if (j < 1) throw std::out_of_range("weight index must satisfy j >= 1");
  return rule_->weight(j);
}
double WeightSequence::weight_sq(Index j) const {
  if (j < 1) throw std::out_of_range("weight index must satisfy j >= 1");
  return rule_->weight_sq(j);
}
Rational WeightSequence::weight_sq_exact(Index j) const {
  if (j < 1) throw std::out_of_range("weight index must satisfy j >= 1");
  return rule_->weight_sq_exact(j);
}
Rational WeightSequence::weight_pow4_exact(Index j) const {
  if (j < 1) throw std::out_of_range("weight index must satisfy j >= 1");
  return rule_->weight_pow4_exact(j);
}
Rational WeightSequence::weight_exact(Index j) const {
  if (j < 1) throw std::out_of_range("weight index must satisfy j >= 1");
  return rule_->weight_exact(j);
}

WeightedShift::WeightedShift(WeightSequence weights) : weights_(std::move(weights)) {}

WeightedShift::WeightedShift(WeightSequence weights, std::vector<std::complex<double>> phases)
    : weights_(std::move(weights)), phases_(std::move(phases)) {
  for (std::size_t i = 0; i < phases_.size(); ++i) {
    const Index j = static_cast<Index>(i) + 1;
    if (weights_.weight(j) == 0.0) {
      phases_[i] = 0.0;  // Lemma-2.1 convention: zeta_j = 0 where a_j = 0
    } else if (std::abs(std::abs(phases_[i]) - 1.0) > 1e-12) {
      throw std::invalid_argument("phase sequence: |zeta_j| must be 1 where a_j > 0");
    }
  }
}

std::complex<double> WeightedShift::phase(Index j) const {
  if (j >= 1 && static_cast<std::size_t>(j) <= phases_.size())
    return phases_[static_cast<std::size_t>(j - 1)];
  return weights_.weight(j) > 0.0 ? std::complex<double>(1.0, 0.0)
                                  : std::complex<double>(0.0, 0.0);
}

WeightedShift WeightedShift::scaled(ExactReal alpha) const {
  auto rule = std::make_shared<ScaledRule>(weights_.rule(), alpha);
  WeightedShift out = *this;
  out.weights_ =
      weights_.derived(std::move(rule), SequenceOp{SequenceOp::Type::Scale, alpha});
  return out;
}

WeightedShift WeightedShift::with_weights(WeightSequence w) const {
  WeightedShift out = *this;
  out.weights_ = std::move(w);
  return out;
}

WeightedShift WeightedShift::with_note(std::string note) const {
  WeightedShift out = *this;
  out.notes_.push_back(std::move(note));
  return out;
}

bool is_isometry(const WeightedShift& shift, Index n_max, double tol) {
  if (n_max < 1) throw std::invalid_argument("is_isometry: n_max must be >= 1");
  const WeightSequence& w = shift.weights();
  if (w.exactness() == Exactness::RationalSq) {
    for (Index j = 1; j <= n_max; ++j)
      if (w.weight_sq_exact(j) != 1) return false;
    return true;
  }
  for (Index j = 1; j <= n_max; ++j)
    if (std::abs(w.weight(j) - 1.0) > tol) return false;
  return true;
}

}  // namespace shiftlab
