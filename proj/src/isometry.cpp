#include "shiftlab/isometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace shiftlab {

std::vector<std::int64_t> binomial_row(int m) {
  if (m < 0 || m > 64)
    throw std::invalid_argument("binomial_row: m must lie in [0, 64]");
  std::vector<std::int64_t> row(static_cast<std::size_t>(m) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= m; ++i)
    for (int k = i; k >= 1; --k) row[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k - 1)];
  return row;
}

namespace {

void check_defect_args(int m, Index n) {
  if (m < 1) throw std::invalid_argument("defect: m must be >= 1");
  if (m > 64) throw std::invalid_argument("defect: m > 64 is not supported (exact binomials)");
  if (n < 1) throw std::invalid_argument("defect: n must be >= 1");
}

struct FpDefect {
  double value;
  double scale;  // max(1, sum_k C(m,k) s_k(n))
};

FpDefect defect_fp(const WeightSequence& w, int m, Index n) {
  const auto binom = binomial_row(m);
  double acc = 1.0;
  double mag = 1.0;
  double s = 1.0;
  for (int k = 1; k <= m; ++k) {
    s *= w.weight_sq(n + k - 1);
    const double term = static_cast<double>(binom[static_cast<std::size_t>(k)]) * s;
    acc += (k % 2 != 0) ? -term : term;
    mag += term;
  }
  return {acc, std::max(1.0, mag)};
}

}  // namespace

template <class Scalar>
Scalar defect_value(const WeightSequence& weights, int m, Index n) {
  check_defect_args(m, n);
  const auto binom = binomial_row(m);
  Scalar acc(1);
  Scalar s(1);
  for (int k = 1; k <= m; ++k) {
    s *= weights.weight_sq_as<Scalar>(n + k - 1);
    const Scalar term = Scalar(binom[static_cast<std::size_t>(k)]) * s;
    if (k % 2 != 0)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

template double defect_value<double>(const WeightSequence&, int, Index);
template Rational defect_value<Rational>(const WeightSequence&, int, Index);

double defect(const WeightedShift& shift, int m, Index n) {
  const double d = defect_value<double>(shift.weights(), m, n);
  if (!std::isfinite(d))
    throw std::range_error("defect: floating evaluation overflowed");
  return d;
}

Rational defect_exact(const WeightedShift& shift, int m, Index n) {
  if (shift.weights().exactness() != Exactness::RationalSq)
    throw std::invalid_argument("defect_exact: sequence carries no RationalSq certificate");
  return defect_value<Rational>(shift.weights(), m, n);
}

DefectReport is_m_isometry(const WeightedShift& shift, int m, Index n_max,
                           std::optional<double> tol, std::optional<DefectMode> mode) {
  check_defect_args(m, 1);
  if (n_max < 1) throw std::invalid_argument("is_m_isometry: n_max must be >= 1");

  const WeightSequence& w = shift.weights();
  const bool exact_capable = w.exactness() == Exactness::RationalSq;
  DefectMode use = mode.value_or(exact_capable ? DefectMode::ExactRational : DefectMode::Floating);
  if (use == DefectMode::ExactRational && !exact_capable)
    throw std::invalid_argument("is_m_isometry: exact mode requires a RationalSq sequence");

  DefectReport report;
  report.m = m;
  report.n_lo = 1;
  report.n_hi = n_max;
  report.mode = use;
  report.tol = tol.value_or(kDefaultTol);
  report.values.reserve(static_cast<std::size_t>(n_max));
  report.all_zero = true;

  if (use == DefectMode::ExactRational) {
    for (Index n = 1; n <= n_max; ++n) {
      const Rational d = defect_value<Rational>(w, m, n);
      report.values.push_back(to_double(d));
      if (d != 0 && !report.witness) {
        report.all_zero = false;
        report.witness = DefectWitness{n, to_double(d), d};
      }
    }
  } else {
    for (Index n = 1; n <= n_max; ++n) {
      const FpDefect d = defect_fp(w, m, n);
      if (!std::isfinite(d.value))
        throw std::range_error("is_m_isometry: floating evaluation overflowed at n=" +
                               std::to_string(n));
      report.values.push_back(d.value);
      const double threshold = tol ? *tol : kDefaultTol * d.scale;
      if (std::abs(d.value) > threshold && !report.witness) {
        report.all_zero = false;
        report.witness = DefectWitness{n, d.value, std::nullopt};
      }
    }
  }
  return report;
}

WeightSequence two_iso_weights(ExactReal a) { return WeightSequence::two_iso(a); }

TwoIsoFit fit_two_iso(const WeightedShift& shift, Index j_max, double tol) {
  if (j_max < 2) throw std::invalid_argument("fit_two_iso: j_max must be >= 2");
  const WeightSequence& w = shift.weights();
  TwoIsoFit fit;

  if (w.exactness() == Exactness::RationalSq) {
    bool first_unit = w.weight_sq_exact(1) == 1;
    bool all_unit = true;
    for (Index j = 1; j <= j_max && all_unit; ++j) all_unit = w.weight_sq_exact(j) == 1;
    if (all_unit) {
      fit.isometry = true;
      fit.consistent = true;
      fit.residuals.assign(static_cast<std::size_t>(j_max), 0.0);
      return fit;
    }
    if (first_unit)
      throw std::domain_error(
          "fit_two_iso: a_1 = 1 with non-unit weights later; one unit weight forces an isometry");
    const Rational a_hat = Rational(1) / (w.weight_sq_exact(1) - 1) - 1;
    fit.a_hat_exact = a_hat;
    fit.a_hat = to_double(a_hat);
    fit.consistent = a_hat > -1;
    for (Index j = 1; j <= j_max; ++j) {
      const Rational den = Rational(j) + a_hat;
      if (den == 0) {
        fit.residuals.push_back(std::numeric_limits<double>::infinity());
        fit.consistent = false;
        continue;
      }
      const Rational r = w.weight_sq_exact(j) - (Rational(j + 1) + a_hat) / den;
      fit.residuals.push_back(std::abs(to_double(r)));
      if (r != 0) fit.consistent = false;
    }
    return fit;
  }

  bool first_unit = std::abs(w.weight(1) - 1.0) <= tol;
  bool all_unit = true;
  for (Index j = 1; j <= j_max && all_unit; ++j) all_unit = std::abs(w.weight(j) - 1.0) <= tol;
  if (all_unit) {
    fit.isometry = true;
    fit.consistent = true;
    fit.residuals.assign(static_cast<std::size_t>(j_max), 0.0);
    return fit;
  }
  if (first_unit)
    throw std::domain_error(
        "fit_two_iso: a_1 = 1 with non-unit weights later; one unit weight forces an isometry");

  const double a_hat = 1.0 / (w.weight_sq(1) - 1.0) - 1.0;
  fit.a_hat = a_hat;
  fit.consistent = std::isfinite(a_hat) && a_hat > -1.0;
  for (Index j = 1; j <= j_max; ++j) {
    const double den = static_cast<double>(j) + a_hat;
    const double predicted = (static_cast<double>(j) + 1.0 + a_hat) / den;
    const double r = den == 0.0 ? std::numeric_limits<double>::infinity()
                                : std::abs(w.weight_sq(j) - predicted);
    fit.residuals.push_back(r);
    if (!(r <= tol)) fit.consistent = false;
  }
  return fit;
}

}  // namespace shiftlab
