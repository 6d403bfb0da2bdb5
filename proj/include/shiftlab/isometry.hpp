#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shiftlab/weights.hpp"

namespace shiftlab {

/// Exact binomial coefficients C(m,0..m). Rejects m > 64 (C(64,32) is the
/// largest row that fits in 64-bit integers).
std::vector<std::int64_t> binomial_row(int m);

/// Default relative tolerance for floating comparisons: products of <= 20
/// weights at double precision stay well inside it.
inline constexpr double kDefaultTol = 1e-9;

enum class DefectMode { ExactRational, Floating };

/// D_m(n) = 1 + sum_{k=1}^m (-1)^k C(m,k) prod_{j=0}^{k-1} a_{n+j}^2,
/// the m-isometry defect of the shift at basis vector e_n. Scalar is double
/// (floating path) or Rational (exact path; requires a RationalSq sequence).
template <class Scalar>
Scalar defect_value(const WeightSequence& weights, int m, Index n);

double defect(const WeightedShift& shift, int m, Index n);
Rational defect_exact(const WeightedShift& shift, int m, Index n);

struct DefectWitness {
  Index n;  // least violating index
  double value;
  std::optional<Rational> exact;
};

struct DefectReport {
  int m = 1;
  Index n_lo = 1, n_hi = 1;
  DefectMode mode = DefectMode::Floating;
  double tol = kDefaultTol;  // base tolerance; floating checks scale it per n
  std::vector<double> values;
  bool all_zero = false;
  std::optional<DefectWitness> witness;
};

/// Evaluates the defect for n = 1..n_max. Mode defaults to exact rational
/// arithmetic whenever the sequence certificate allows it. In floating mode
/// the per-n threshold is tol * max(1, sum_k C(m,k) s_k(n)), so large weight
/// products do not produce spurious nonzero verdicts.
DefectReport is_m_isometry(const WeightedShift& shift, int m, Index n_max,
                           std::optional<double> tol = std::nullopt,
                           std::optional<DefectMode> mode = std::nullopt);

/// The two-isometric family a_j = sqrt((j+1+a)/(j+a)); the only non-isometric
/// weighted shifts that are 2-isometries.
WeightSequence two_iso_weights(ExactReal a);

struct TwoIsoFit {
  std::optional<double> a_hat;
  std::optional<Rational> a_hat_exact;  // present on the exact path
  std::vector<double> residuals;        // |a_j^2 - (j+1+a_hat)/(j+a_hat)|, j = 1..j_max
  bool consistent = false;
  bool isometry = false;  // all weights equal to 1
};

/// Inverts u_j = 1/(a_j^2 - 1) = j + a from the first weight, then validates
/// the remaining residuals. A unit first weight with non-unit later weights is
/// degenerate (one unit weight forces an isometry) and throws
/// std::domain_error.
TwoIsoFit fit_two_iso(const WeightedShift& shift, Index j_max, double tol = kDefaultTol);

}  // namespace shiftlab
