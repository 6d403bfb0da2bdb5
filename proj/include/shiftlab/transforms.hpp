#pragma once

#include <string>

#include "shiftlab/weights.hpp"

namespace shiftlab {

/// Transform selector with the alias structure Duggal = Aluthge(1),
/// classical Aluthge = Aluthge(1/2), Mean = LambdaMean(0).
class TransformKind {
 public:
  enum class Family { Aluthge, Duggal, Mean, LambdaMean };

  static TransformKind aluthge(ExactReal lambda);
  static TransformKind duggal();
  static TransformKind mean();
  static TransformKind lambda_mean(ExactReal lambda);

  Family family() const { return family_; }
  const ExactReal& lambda() const { return lambda_; }
  bool has_lambda() const {
    return family_ == Family::Aluthge || family_ == Family::LambdaMean;
  }
  std::string name() const;

 private:
  TransformKind(Family f, ExactReal lambda) : family_(f), lambda_(lambda) {}
  Family family_;
  ExactReal lambda_;
};

/// Delta_lambda(T): weights b_j = a_j^(1-lambda) a_{j+1}^lambda, phases kept.
/// lambda = 0 returns the input weights, lambda = 1 the Duggal weights; a
/// zero weight with lambda in (0,1) yields b_j = 0 and a metadata note on the
/// result. For lambda = 1/2 on a RationalSq sequence the output carries a
/// RationalFourth certificate (b_j^4 stays rational).
WeightedShift aluthge(const WeightedShift& shift, ExactReal lambda);

/// Duggal transform: weights a_{j+1} (Aluthge at lambda = 1).
WeightedShift duggal(const WeightedShift& shift);

/// Mean transform: weights m_j = (a_j + a_{j+1})/2, phases kept. Exact when
/// the input weights are themselves rational.
WeightedShift mean_transform(const WeightedShift& shift);

/// Generalized lambda-mean: m_{lambda,j} = (a_j^lambda a_{j+1}^(1-lambda)
/// + a_j^(1-lambda) a_{j+1}^lambda)/2. Requires strictly positive weights.
/// lambda = 0 or 1 reproduces the mean transform, lambda = 1/2 the classical
/// Aluthge transform.
WeightedShift lambda_mean(const WeightedShift& shift, ExactReal lambda);

WeightedShift apply_transform(const WeightedShift& shift, const TransformKind& kind);

}  // namespace shiftlab
