#pragma once

#include <utility>
#include <vector>

#include "shiftlab/weights.hpp"

namespace shiftlab {

/// ||T^n|| = sup_j prod_{i=0}^{n-1} a_{j+i} for shifts with nonnegative
/// weights. Exact (window ignored) for periodic sequences, where the sup is
/// attained within one period of starting offsets, and for nonincreasing
/// sequences, where it is attained at j = 1. Otherwise the sup is scanned
/// over j in [1, window] and is a lower bound on the true norm. Products of
/// more than 64 weights are accumulated in the log domain.
double power_norm(const WeightedShift& shift, Index n, Index window = 4096);

struct PowerNormTable {
  std::vector<Index> powers;
  std::vector<double> norms;
  std::vector<double> radius_estimates;  // ||T^n||^(1/n)
  bool window_is_lower_bound = false;
};

PowerNormTable power_norm_table(const WeightedShift& shift, Index n_max, Index window = 4096);

struct SpectralRadiusResult {
  double value = 0.0;
  bool exact = false;  // periodic/constant closed form
  std::vector<std::pair<Index, double>> estimates;
};

/// Spectral radius rho(T) = lim ||T^n||^(1/n). Periodic weights give the
/// geometric mean of one period exactly; otherwise the result is the
/// max_power-th root estimate with trailing estimates attached for
/// convergence assessment.
SpectralRadiusResult spectral_radius(const WeightedShift& shift, Index max_power = 256);

struct ProbeVerdict {
  bool growth = false;  // false: bounded-so-far
  Index witness_n = 0;
  double witness_norm = 0.0;
  Index n_checked = 0;
  double bound = 0.0;
};

/// Evaluates ||(alpha T)^n|| for n = 1..n_max and reports the first n whose
/// norm exceeds the declared bound.
ProbeVerdict power_bounded_probe(const WeightedShift& shift, ExactReal alpha, Index n_max,
                                 double bound = 1e6);

}  // namespace shiftlab
