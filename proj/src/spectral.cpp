#include "shiftlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace shiftlab {

namespace {

constexpr Index kDirectProductLimit = 64;

double window_product(const WeightSequence& w, Index start, Index count) {
  if (count <= kDirectProductLimit) {
    double p = 1.0;
    for (Index i = 0; i < count; ++i) p *= w.weight(start + i);
    return p;
  }
  double log_p = 0.0;
  for (Index i = 0; i < count; ++i) log_p += std::log(w.weight(start + i));
  return std::exp(log_p);
}

double periodic_norm(const WeightSequence& w, int p, Index n) {
  const Index period = p;
  double best = 0.0;
  if (n <= kDirectProductLimit) {
    for (Index o = 0; o < period; ++o) best = std::max(best, window_product(w, o + 1, n));
    return best;
  }
  double log_full = 0.0;
  for (Index i = 1; i <= period; ++i) log_full += std::log(w.weight(i));
  const Index q = n / period, r = n % period;
  double best_log = -std::numeric_limits<double>::infinity();
  for (Index o = 0; o < period; ++o) {
    double log_prefix = 0.0;
    for (Index i = 0; i < r; ++i) log_prefix += std::log(w.weight(o + 1 + i));
    best_log = std::max(best_log, static_cast<double>(q) * log_full + log_prefix);
  }
  return std::exp(best_log);
}

}  // namespace

double power_norm(const WeightedShift& shift, Index n, Index window) {
  if (n < 1) throw std::invalid_argument("power_norm: n must be >= 1");
  if (window < 1) throw std::invalid_argument("power_norm: window must be >= 1");
  const WeightSequence& w = shift.weights();

  if (auto p = w.period()) return periodic_norm(w, *p, n);
  if (w.nonincreasing()) return window_product(w, 1, n);

  // general scan over starting indices
  double best_log = -std::numeric_limits<double>::infinity();
  std::vector<double> logs(static_cast<std::size_t>(window + n));
  for (Index i = 0; i < window + n; ++i) logs[static_cast<std::size_t>(i)] = std::log(w.weight(i + 1));
  double sum = 0.0;
  for (Index i = 0; i < n; ++i) sum += logs[static_cast<std::size_t>(i)];
  best_log = sum;
  for (Index j = 1; j < window; ++j) {
    sum += logs[static_cast<std::size_t>(j + n - 1)] - logs[static_cast<std::size_t>(j - 1)];
    best_log = std::max(best_log, sum);
  }
  // zeros poison the sliding sum with NaN (inf - inf); rescan directly if so
  if (std::isnan(best_log)) {
    best_log = -std::numeric_limits<double>::infinity();
    for (Index j = 1; j <= window; ++j) {
      double s = 0.0;
      for (Index i = 0; i < n; ++i) s += logs[static_cast<std::size_t>(j - 1 + i)];
      best_log = std::max(best_log, s);
    }
  }
  return std::exp(best_log);
}

PowerNormTable power_norm_table(const WeightedShift& shift, Index n_max, Index window) {
  if (n_max < 1) throw std::invalid_argument("power_norm_table: n_max must be >= 1");
  PowerNormTable table;
  table.window_is_lower_bound = !shift.weights().period() && !shift.weights().nonincreasing();
  table.powers.reserve(static_cast<std::size_t>(n_max));
  for (Index n = 1; n <= n_max; ++n) {
    const double norm = power_norm(shift, n, window);
    table.powers.push_back(n);
    table.norms.push_back(norm);
    table.radius_estimates.push_back(std::pow(norm, 1.0 / static_cast<double>(n)));
  }
  return table;
}

SpectralRadiusResult spectral_radius(const WeightedShift& shift, Index max_power) {
  if (max_power < 2) throw std::invalid_argument("spectral_radius: max_power must be >= 2");
  SpectralRadiusResult res;
  const WeightSequence& w = shift.weights();
  if (auto p = w.period()) {
    double prod = 1.0;
    for (Index i = 1; i <= *p; ++i) prod *= w.weight(i);
    res.value = std::pow(prod, 1.0 / static_cast<double>(*p));
    res.exact = true;
    return res;
  }
  res.exact = false;
  const Index lo = std::max<Index>(2, max_power - 3);
  for (Index n = lo; n <= max_power; ++n) {
    const double est = std::pow(power_norm(shift, n), 1.0 / static_cast<double>(n));
    res.estimates.emplace_back(n, est);
  }
  res.value = res.estimates.back().second;
  return res;
}

ProbeVerdict power_bounded_probe(const WeightedShift& shift, ExactReal alpha, Index n_max,
                                 double bound) {
  if (n_max < 1) throw std::invalid_argument("power_bounded_probe: n_max must be >= 1");
  if (!(bound > 0.0)) throw std::invalid_argument("power_bounded_probe: bound must be positive");
  const WeightedShift scaled = shift.scaled(alpha);
  ProbeVerdict verdict;
  verdict.bound = bound;
  for (Index n = 1; n <= n_max; ++n) {
    const double norm = power_norm(scaled, n);
    if (norm > bound) {
      verdict.growth = true;
      verdict.witness_n = n;
      verdict.witness_norm = norm;
      verdict.n_checked = n;
      return verdict;
    }
  }
  verdict.n_checked = n_max;
  return verdict;
}

}  // namespace shiftlab
