#include "shiftlab/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>
#include <sstream>

#include "shiftlab/isometry.hpp"
#include "shiftlab/oracle.hpp"
#include "shiftlab/spectral.hpp"
#include "shiftlab/transforms.hpp"

namespace shiftlab {

namespace {

// High-precision reference values, frozen from 50-digit evaluation of the
// closed forms they annotate.
constexpr double kHalfAluthgeDefect = -0.014611872354576489;  // 1 - 2*sqrt3 + sqrt6
constexpr double kMeanDefect = -0.017733610654209644;  // (m1 m2)^2 - 2 m1^2 + 1, two-iso(0)
constexpr double kMisprintedMeanFraction = -1.3825005552609677;
constexpr double kUAtHalf = 10.392304845413264;  // 6*sqrt3
constexpr double kUAtZero = 10.428203230275509;  // 7/2 + 4*sqrt3

std::string fmt(double v) { return format_double(v); }

// short form for check names and grid tags
std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return std::string(buf);
}

TheoremCheck verdict_check(std::string name, std::string expected, std::string observed,
                           bool pass) {
  return {std::move(name), std::move(expected), std::move(observed), pass};
}

TheoremCheck approx_check(std::string name, double expected, double observed, double tol) {
  const bool pass = std::isfinite(observed) && std::abs(observed - expected) <= tol;
  return {std::move(name), fmt(expected), fmt(observed), pass};
}

// relative to max(1, |expected|)
TheoremCheck approx_rel_check(std::string name, double expected, double observed, double rel) {
  const bool pass = std::isfinite(observed) &&
                    std::abs(observed - expected) <= rel * std::max(1.0, std::abs(expected));
  return {std::move(name), fmt(expected), fmt(observed), pass};
}

WeightedShift two_iso_shift(const Rational& a) {
  return WeightedShift(WeightSequence::two_iso(ExactReal(a)));
}

std::string grid_note(Index n_max) {
  return "all-n claims are verified for n <= " + std::to_string(n_max) +
         " as a desk-scale proxy for every index";
}

// max deviation |w_j - 1| over j = 1..j_max
double max_unit_deviation(const WeightSequence& w, Index j_max) {
  double dev = 0.0;
  for (Index j = 1; j <= j_max; ++j) dev = std::max(dev, std::abs(w.weight(j) - 1.0));
  return dev;
}

double interior_subdiag_deviation(const TruncatedMatrix& m, const WeightSequence& closed_form,
                                  int j_hi) {
  double dev = 0.0;
  for (int j = 1; j <= j_hi; ++j)
    dev = std::max(dev, std::abs(m.entries(j, j - 1) - std::complex<double>(closed_form.weight(j))));
  return dev;
}

}  // namespace

TheoremVerdict run_thm_2_6(const RunnerOptions& opts) {
  TheoremVerdict v;
  v.id = "2.6";
  v.title = "non-isometric 2-isometric shifts are exactly the family a_j=sqrt((j+1+a)/(j+a))";
  for (const Rational& a : opts.a_grid) {
    const std::string tag = " [a=" + format_rational(a) + "]";
    WeightedShift T = two_iso_shift(a);

    const DefectReport rep = is_m_isometry(T, 2, opts.n_max);
    v.checks.push_back(verdict_check("exact D_2(n)=0 for n<=" + std::to_string(opts.n_max) + tag,
                                     "all-zero (exact-rational)",
                                     rep.all_zero ? "all-zero" : "nonzero witness",
                                     rep.all_zero && rep.mode == DefectMode::ExactRational));

    const TwoIsoFit fit = fit_two_iso(T, 16);
    const bool fit_ok = fit.consistent && fit.a_hat_exact && *fit.a_hat_exact == a;
    v.checks.push_back(verdict_check("parameter fit round-trip" + tag, format_rational(a),
                                     fit.a_hat_exact ? format_rational(*fit.a_hat_exact) : "n/a",
                                     fit_ok));

    // bump one weight by 1e-3: the defect must pick it up
    std::vector<ExactReal> head;
    for (Index j = 1; j <= 6; ++j)
      head.emplace_back(T.weight(j) + (j == 3 ? 1e-3 : 0.0));
    WeightedShift perturbed(WeightSequence::explicit_list(
        std::move(head), Tail::two_iso_extend(ExactReal(a))));
    const DefectReport prep = is_m_isometry(perturbed, 2, opts.n_max);
    v.checks.push_back(verdict_check("perturbed weight breaks the defect" + tag,
                                     "nonzero-witness",
                                     prep.all_zero ? "all-zero" : "nonzero-witness",
                                     !prep.all_zero));

    const TruncatedMatrix trunc = truncate(T, opts.oracle_dim);
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n) worst = std::max(worst, std::abs(oracle_defect(trunc, 2, n)));
    v.checks.push_back(verdict_check("matrix oracle defect" + tag, "|D| <= 1e-10", fmt(worst),
                                     worst <= 1e-10));
  }
  v.notes.push_back(grid_note(opts.n_max));
  return v;
}

TheoremVerdict run_thm_3_1(const RunnerOptions& opts) {
  TheoremVerdict v;
  v.id = "3.1";
  v.title = "a shift that is no m-isometry for any m, with isometric Aluthge transform";
  WeightedShift T(WeightSequence::periodic({ExactReal(Rational(1, 2)), ExactReal(Rational(2))}));

  const WeightedShift AT = aluthge(T, ExactReal(Rational(1, 2)));
  double dev = 0.0;
  bool bitwise_unit = true;
  for (Index j = 1; j <= 64; ++j) {
    bitwise_unit = bitwise_unit && AT.weight(j) == 1.0;
    dev = std::max(dev, std::abs(AT.weight(j) - 1.0));
  }
  v.checks.push_back(verdict_check("Aluthge weights are exactly 1 (j<=64)", "1",
                                   bitwise_unit ? "1 (bit-exact)" : fmt(1.0 + dev), bitwise_unit));

  const int m_hi = std::max(opts.m_max, 10);
  bool all_match = true;
  bool all_positive = true;
  std::string first_mismatch;
  for (int m = 1; m <= m_hi; ++m) {
    const Rational d = defect_value<Rational>(T.weights(), m, 1);
    const Rational expected = Rational(3 * (BigInt(1) << m), 8);
    if (d != expected && first_mismatch.empty())
      first_mismatch = "m=" + std::to_string(m) + ": " + format_rational(d);
    all_match = all_match && d == expected;
    all_positive = all_positive && d > 0;
  }
  v.checks.push_back(verdict_check("exact D_m(1) = 3*2^(m-3), m=1.." + std::to_string(m_hi),
                                   "3*2^(m-3) for every m",
                                   all_match ? "exact match" : first_mismatch, all_match));
  v.checks.push_back(verdict_check("D_m(1) > 0 for m=1.." + std::to_string(m_hi),
                                   "positive (no m-isometry)", all_positive ? "positive" : "sign flip",
                                   all_positive));
  v.checks.push_back(verdict_check("spot value D_2(1)", "3/2",
                                   format_rational(defect_value<Rational>(T.weights(), 2, 1)),
                                   defect_value<Rational>(T.weights(), 2, 1) == Rational(3, 2)));

  const TruncatedMatrix trunc = truncate(T, opts.oracle_dim);
  const TruncatedMatrix mat = matrix_aluthge(trunc, 0.5);
  const double idev = interior_subdiag_deviation(mat, AT.weights(), opts.oracle_dim - 2);
  v.checks.push_back(
      verdict_check("matrix oracle: interior Aluthge weights", "|b_j - 1| <= 1e-10", fmt(idev),
                    idev <= 1e-10));
  v.checks.push_back(approx_check("matrix oracle: D_2(1)", 1.5, oracle_defect(trunc, 2, 1), 1e-10));

  v.notes.push_back(
      "often-quoted defect constant 2^(m-2) corresponds to weights (1/sqrt2, sqrt2); with "
      "weights (1/2, 2) and a_1 = 1/2 the odd partial products are 1/4 and the exact defect is "
      "3*2^(m-3), positive either way");
  v.notes.push_back("weight convention: odd indices carry 1/2, so a_1 = 1/2");
  return v;
}

TheoremVerdict run_thm_3_2(const RunnerOptions& opts) {
  TheoremVerdict v;
  v.id = "3.2";
  v.title = "for each lambda, a non-2-isometry whose lambda-Aluthge transform is an isometry";
  for (double lam : opts.lambda_grid) {
    const std::string tag = " [lambda=" + fmt6(lam) + "]";
    const double r = (lam - 1.0) / lam;

    std::vector<double> xs;
    for (int i = 1; i <= opts.x_scan; ++i)
      xs.push_back(static_cast<double>(i) / (opts.x_scan + 1));
    if (lam >= 0.5) {
      xs.push_back(1.25);
      xs.push_back(1.5);
      xs.push_back(2.0);
      xs.push_back(4.0);
    }
    // prefer the witness closest to the isometry point x = 1, where the
    // tower weights stay moderate
    std::sort(xs.begin(), xs.end(),
              [](double p, double q) { return std::abs(p - 1.0) < std::abs(q - 1.0); });

    auto f_of = [&](double x) { return 2.0 * std::exp(2.0 * r * std::log(x)); };
    auto g_of = [&](double x) {
      return 1.0 + std::exp(2.0 * r * (1.0 + r) * std::log(x));
    };

    double x_star = 0.0, gap = 0.0;
    for (double x : xs) {
      gap = g_of(x) - f_of(x);
      if (std::abs(gap) > 1e-6) {
        x_star = x;
        break;
      }
    }
    if (x_star == 0.0) {
      v.checks.push_back(verdict_check("witness x with f(x) != g(x)" + tag, "found",
                                       "no witness on grid", false));
      continue;
    }

    WeightedShift B(WeightSequence::power_tower(x_star, lam));
    const double d2 = defect(B, 2, 1);
    TheoremCheck c = approx_rel_check("D_2(B_x,1) = g(x)-f(x) at x=" + fmt(x_star) + tag, gap,
                                      d2, 1e-10);
    v.checks.push_back(c);

    // index window where a_j, a_{j+1} and their squares stay representable
    // (the oracle forms the Gram matrix, so the budget covers |log a_j^2|)
    Index j_hi = 0;
    for (Index j = 1; j <= 32; ++j) {
      if (std::abs(std::pow(r, static_cast<double>(j + 1)) * std::log(x_star)) > 300.0) break;
      j_hi = j;
    }
    const WeightedShift AB = aluthge(B, lam);
    const double dev = max_unit_deviation(AB.weights(), std::max<Index>(j_hi, 1));
    v.checks.push_back(verdict_check("lambda-Aluthge weights are 1 (j<=" + std::to_string(j_hi) +
                                         ")" + tag,
                                     "|b_j - 1| <= 1e-12", fmt(dev), dev <= 1e-12));

    const int safe_dim = static_cast<int>(std::clamp<Index>(j_hi + 2, 3, opts.oracle_dim));
    const TruncatedMatrix mat = matrix_aluthge(truncate(B, safe_dim), lam);
    const double idev = interior_subdiag_deviation(mat, AB.weights(), safe_dim - 2);
    v.checks.push_back(verdict_check("matrix oracle: interior weights (N=" +
                                         std::to_string(safe_dim) + ")" + tag,
                                     "|b_j - 1| <= 1e-10", fmt(idev), idev <= 1e-10));
  }
  v.notes.push_back("x = 1 is the isometry point of every tower family and is excluded as witness");
  v.notes.push_back(
      "tower weights with lambda < 1/2 grow beyond double range at large odd indices; checks "
      "use the representable index window");
  return v;
}

TheoremVerdict run_thm_3_3(const RunnerOptions& opts) {
  TheoremVerdict v;
  v.id = "3.3";
  v.title = "a 2-isometry whose lambda-Aluthge transform is no m-isometry for any m, lambda";
  WeightedShift T = two_iso_shift(Rational(0));

  const DefectReport base = is_m_isometry(T, 2, opts.n_max);
  v.checks.push_back(verdict_check("base shift is an exact 2-isometry", "all-zero",
                                   base.all_zero ? "all-zero" : "nonzero witness", base.all_zero));

  for (double lam : opts.lambda_grid) {
    const WeightedShift AT = aluthge(T, lam);
    bool all_witnessed = true;
    Index worst_n = 0;
    for (int m = 2; m <= opts.m_max; ++m) {
      const DefectReport rep = is_m_isometry(AT, m, opts.n_max);
      if (rep.all_zero) {
        all_witnessed = false;
        break;
      }
      worst_n = std::max(worst_n, rep.witness->n);
    }
    v.checks.push_back(verdict_check(
        "defect witness for m=2.." + std::to_string(opts.m_max) + " [lambda=" + fmt6(lam) + "]",
        "nonzero-witness for every m",
        all_witnessed ? "witnesses found (max n=" + std::to_string(worst_n) + ")" : "missing witness",
        all_witnessed));
  }

  const double d_half = defect(aluthge(T, ExactReal(Rational(1, 2))), 2, 1);
  v.checks.push_back(
      approx_check("classical Aluthge defect D_2(1) = 1-2*sqrt3+sqrt6", kHalfAluthgeDefect,
                   d_half, 1e-12));

  const TruncatedMatrix mat = matrix_aluthge(truncate(T, opts.oracle_dim), 0.5);
  v.checks.push_back(
      approx_check("matrix oracle: D_2(1) of the transform", kHalfAluthgeDefect,
                   oracle_defect(mat, 2, 1), 1e-10));

  v.notes.push_back("the all-m, all-lambda claim rests on a holomorphic argument; the grid above "
                    "is what is verified numerically");
  v.notes.push_back(grid_note(opts.n_max));
  return v;
}

TheoremVerdict run_thm_4_1(const RunnerOptions& opts) {
  TheoremVerdict v;
  v.id = "4.1";
  v.title = "a shift that is no m-isometry (radius sqrt3/2) whose mean transform is the shift S";
  WeightedShift T(WeightSequence::periodic({ExactReal(Rational(1, 2)), ExactReal(Rational(3, 2))}));

  const WeightedShift MT = mean_transform(T);
  bool bitwise_unit = true;
  for (Index j = 1; j <= 64; ++j) bitwise_unit = bitwise_unit && MT.weight(j) == 1.0;
  v.checks.push_back(verdict_check("mean weights are exactly 1 (j<=64)", "1",
                                   bitwise_unit ? "1 (bit-exact)" : fmt(MT.weight(1)),
                                   bitwise_unit));

  const SpectralRadiusResult rho = spectral_radius(T);
  v.checks.push_back(approx_check("spectral radius = sqrt3/2", std::sqrt(3.0) / 2.0, rho.value,
                                  1e-12));
  v.checks.push_back(verdict_check("radius from the exact periodic formula", "exact",
                                   rho.exact ? "exact" : "estimate", rho.exact));

  const double t2 = power_norm(T, 2);
  v.checks.push_back(verdict_check("||T^2|| = 3/4 exactly", "0.75", fmt(t2), t2 == 0.75));

  bool all_witnessed = true;
  for (int m = 1; m <= opts.m_max && all_witnessed; ++m)
    all_witnessed = !is_m_isometry(T, m, opts.n_max).all_zero;
  v.checks.push_back(verdict_check("exact defect witness for m=1.." + std::to_string(opts.m_max),
                                   "nonzero-witness for every m",
                                   all_witnessed ? "witnesses found" : "missing witness",
                                   all_witnessed));
  v.checks.push_back(verdict_check("spot value D_2(1)", "17/16",
                                   format_rational(defect_value<Rational>(T.weights(), 2, 1)),
                                   defect_value<Rational>(T.weights(), 2, 1) == Rational(17, 16)));

  const TruncatedMatrix trunc = truncate(T, opts.oracle_dim);
  const TruncatedMatrix mat = matrix_mean(trunc);
  const double idev = interior_subdiag_deviation(mat, MT.weights(), opts.oracle_dim - 2);
  v.checks.push_back(verdict_check("matrix oracle: interior mean weights", "|m_j - 1| <= 1e-10",
                                   fmt(idev), idev <= 1e-10));
  v.checks.push_back(
      approx_check("matrix oracle: D_2(1)", 17.0 / 16.0, oracle_defect(trunc, 2, 1), 1e-10));

  v.notes.push_back("an m-isometry has spectral radius 1; radius sqrt3/2 < 1 already rules every "
                    "m out (the defect witnesses above make it quantitative)");
  return v;
}

TheoremVerdict run_cor_4_2(const RunnerOptions& opts) {
  TheoremVerdict v;
  v.id = "4.2";
  v.title = "mean transform does not preserve power boundedness";
  const double alpha = opts.alpha;
  const double alpha_hi = 2.0 / std::sqrt(3.0);
  const bool alpha_ok = alpha > 1.0 && alpha < alpha_hi;
  v.checks.push_back(verdict_check("alpha inside (1, 2/sqrt3)",
                                   "1 < alpha < " + fmt(alpha_hi), fmt(alpha), alpha_ok));
  if (!alpha_ok) return v;

  WeightedShift T(WeightSequence::periodic({ExactReal(Rational(1, 2)), ExactReal(Rational(3, 2))}));
  const Index n_probe = 320;

  const ProbeVerdict scaled_probe = power_bounded_probe(T, alpha, n_probe);
  v.checks.push_back(verdict_check("alpha*T stays bounded to n=" + std::to_string(n_probe),
                                   "bounded-so-far",
                                   scaled_probe.growth
                                       ? "growth at n=" + std::to_string(scaled_probe.witness_n)
                                       : "bounded-so-far",
                                   !scaled_probe.growth));

  const WeightedShift scaled = T.scaled(ExactReal(alpha));
  const double decay_ratio = alpha * alpha * 0.75;
  bool even_match = true;
  for (Index k : {Index(1), Index(10), Index(60)}) {
    const double norm = power_norm(scaled, 2 * k);
    const double expected = std::pow(decay_ratio, static_cast<double>(k));
    even_match = even_match && std::abs(norm - expected) <= 1e-9 * std::max(1.0, expected);
  }
  v.checks.push_back(verdict_check("||(aT)^{2k}|| = (a^2*3/4)^k (k=1,10,60)", "relative 1e-9",
                                   even_match ? "match" : "mismatch", even_match));

  double envelope_excess = 0.0;
  for (Index n = 1; n <= 121; n += 2) {
    const double norm = power_norm(scaled, n);
    const double envelope =
        1.5 * alpha * std::pow(decay_ratio, static_cast<double>(n / 2));
    envelope_excess = std::max(envelope_excess, norm / envelope - 1.0);
  }
  v.checks.push_back(verdict_check("odd-power envelope (3/2)*a*(a^2*3/4)^floor(n/2)",
                                   "excess <= 1e-9", fmt(envelope_excess),
                                   envelope_excess <= 1e-9));

  const double tail_norm = power_norm(scaled, 120);
  const double tail_expected = std::pow(decay_ratio, 60.0);
  v.checks.push_back(verdict_check("||(aT)^120|| = (a^2*3/4)^60, decaying",
                                   fmt(tail_expected), fmt(tail_norm),
                                   std::abs(tail_norm - tail_expected) <= 1e-9 * tail_expected &&
                                       tail_norm < 1.0));

  const WeightedShift MT = mean_transform(scaled);
  const ProbeVerdict mean_probe = power_bounded_probe(MT, ExactReal(1.0), n_probe);
  Index expected_witness = 1;
  {
    double p = alpha;
    while (p <= mean_probe.bound && expected_witness < n_probe) {
      ++expected_witness;
      p *= alpha;
    }
  }
  v.checks.push_back(verdict_check(
      "mean transform of alpha*T grows past 1e6", "witness n=" + std::to_string(expected_witness),
      mean_probe.growth ? "witness n=" + std::to_string(mean_probe.witness_n) : "bounded-so-far",
      mean_probe.growth && mean_probe.witness_n == expected_witness));

  bool power_match = true;
  for (Index n : {Index(1), Index(50), expected_witness}) {
    const double norm = power_norm(MT, n);
    const double expected = std::pow(alpha, static_cast<double>(n));
    power_match = power_match && std::abs(norm - expected) <= 1e-9 * std::max(1.0, expected);
  }
  v.checks.push_back(verdict_check("||M(aT)^n|| = a^n", "relative 1e-9",
                                   power_match ? "match" : "mismatch", power_match));

  const TruncatedMatrix mat = matrix_mean(truncate(scaled, opts.oracle_dim));
  const double idev = interior_subdiag_deviation(mat, MT.weights(), opts.oracle_dim - 2);
  v.checks.push_back(verdict_check("matrix oracle: interior mean weights = alpha",
                                   "deviation <= 1e-10", fmt(idev), idev <= 1e-10));
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(opts.oracle_dim);
  y(0) = 1.0;
  for (int k = 0; k < 16; ++k) y = mat.entries * y;
  v.checks.push_back(approx_rel_check("matrix oracle: ||M(aT)^16 e_1|| = alpha^16",
                                      std::pow(alpha, 16.0), y.norm(), 1e-10));

  v.notes.push_back("similarity to a contraction and the polynomial-boundedness consequences are "
                    "not numerically decidable; the probe checks norm growth directly");
  v.notes.push_back("norm growth is probed to n = " + std::to_string(n_probe));
  return v;
}

TheoremVerdict run_thm_4_3(const RunnerOptions& opts) {
  TheoremVerdict v;
  v.id = "4.3";
  v.title = "no lambda-mean transform of the two-iso(0) shift is a 2-isometry";
  WeightedShift T = two_iso_shift(Rational(0));

  std::set<double> lambda_set(opts.lambda_grid.begin(), opts.lambda_grid.end());
  lambda_set.insert(0.0);
  lambda_set.insert(0.5);
  lambda_set.insert(1.0);

  for (double lam : lambda_set) {
    const WeightedShift ML = lambda_mean(T, lam);
    const DefectReport rep = is_m_isometry(ML, 2, opts.n_max);
    v.checks.push_back(verdict_check(
        "D_2 witness for lambda-mean [lambda=" + fmt6(lam) + "]", "nonzero-witness",
        rep.all_zero ? "all-zero"
                     : "n=" + std::to_string(rep.witness->n) + ", D=" + fmt(rep.witness->value),
        !rep.all_zero));
  }

  const double mean_defect = defect(mean_transform(T), 2, 1);
  v.checks.push_back(approx_check("mean-transform defect D_2(1), direct evaluation", kMeanDefect,
                                  mean_defect, 1e-10));

  auto u_of = [](double s) {
    return std::pow(2.0, 2.0 * s - 1.0) * std::pow(3.0, 1.0 - s) +
           std::pow(2.0, 1.0 - 2.0 * s) * std::pow(3.0, s) + 4.0 * std::sqrt(3.0);
  };
  v.checks.push_back(approx_check("u(1/2) = 6*sqrt3", kUAtHalf, u_of(0.5), 1e-12));
  v.checks.push_back(approx_check("u(0) = 7/2 + 4*sqrt3", kUAtZero, u_of(0.0), 1e-12));
  v.checks.push_back(approx_check("u(1) = u(0)", kUAtZero, u_of(1.0), 1e-12));

  double u_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 100; ++i) u_min = std::min(u_min, u_of(i / 100.0));
  for (double lam : lambda_set) u_min = std::min(u_min, u_of(lam));
  v.checks.push_back(verdict_check("min u over the s-grid", ">= 6*sqrt3 - 1e-9, > 8", fmt(u_min),
                                   u_min >= kUAtHalf - 1e-9 && u_min > 8.0));

  const TruncatedMatrix trunc = truncate(T, opts.oracle_dim);
  const TruncatedMatrix a03 = matrix_aluthge(trunc, 0.3);
  const TruncatedMatrix a07 = matrix_aluthge(trunc, 0.7);
  TruncatedMatrix ml{0.5 * (a03.entries + a07.entries), "matrix lambda-mean[0.3] of " + trunc.provenance};
  v.checks.push_back(approx_check("matrix oracle: lambda-mean defect [lambda=0.3]",
                                  defect(lambda_mean(T, 0.3), 2, 1), oracle_defect(ml, 2, 1),
                                  1e-10));

  v.notes.push_back(
      "classical closed form (48*sqrt6+68*sqrt3-108*sqrt2-337)/184 = " +
      fmt(kMisprintedMeanFraction) + " disagrees with the direct evaluation " + fmt(kMeanDefect) +
      " of (m1*m2)^2 - 2*m1^2 + 1; both are negative, which is all the argument needs");
  v.notes.push_back("the all-lambda claim is verified on the grid above");
  return v;
}

namespace {

TheoremVerdict run_simultaneous_two_iso(const RunnerOptions& opts, bool use_aluthge) {
  TheoremVerdict v;
  v.id = use_aluthge ? "5.1" : "5.2";
  v.title = std::string("a 2-isometric shift with 2-isometric ") +
            (use_aluthge ? "Aluthge" : "mean") + " transform is an isometry";

  for (const Rational& a : opts.a_grid) {
    const std::string tag = " [a=" + format_rational(a) + "]";
    WeightedShift T = two_iso_shift(a);
    const DefectReport base = is_m_isometry(T, 2, opts.n_max);
    v.checks.push_back(verdict_check("base shift is an exact 2-isometry" + tag, "all-zero",
                                     base.all_zero ? "all-zero" : "nonzero witness",
                                     base.all_zero));

    const WeightedShift F =
        use_aluthge ? aluthge(T, ExactReal(Rational(1, 2))) : mean_transform(T);
    const DefectReport rep = is_m_isometry(F, 2, opts.n_max);
    v.checks.push_back(verdict_check(
        "transform defect witness" + tag, "nonzero-witness",
        rep.all_zero ? "all-zero"
                     : "n=" + std::to_string(rep.witness->n) + ", D=" + fmt(rep.witness->value),
        !rep.all_zero));

    const TwoIsoFit fit = fit_two_iso(F, 16);
    v.checks.push_back(verdict_check("transform escapes the two-iso family" + tag,
                                     "inconsistent fit",
                                     fit.consistent ? "consistent" : "inconsistent",
                                     !fit.consistent && !fit.isometry));
  }

  // isometry case: fixed point of both transforms, all defects zero
  WeightedShift S(WeightSequence::constant(ExactReal(Rational(1))));
  const WeightedShift FS = use_aluthge ? aluthge(S, ExactReal(Rational(1, 2))) : mean_transform(S);
  bool fixed = true;
  for (Index j = 1; j <= 16; ++j) fixed = fixed && FS.weight(j) == 1.0;
  const bool s_zero = is_m_isometry(S, 2, opts.n_max).all_zero &&
                      is_m_isometry(FS, 2, opts.n_max).all_zero;
  v.checks.push_back(verdict_check("the shift S is fixed and stays a 2-isometry", "fixed, all-zero",
                                   fixed && s_zero ? "fixed, all-zero" : "changed", fixed && s_zero));

  WeightedShift T0 = two_iso_shift(Rational(0));
  const TruncatedMatrix trunc = truncate(T0, opts.oracle_dim);
  const TruncatedMatrix mat = use_aluthge ? matrix_aluthge(trunc, 0.5) : matrix_mean(trunc);
  v.checks.push_back(approx_check("matrix oracle: transform defect D_2(1) [a=0]",
                                  use_aluthge ? kHalfAluthgeDefect : kMeanDefect,
                                  oracle_defect(mat, 2, 1), 1e-10));

  v.notes.push_back("the coefficient-matching argument is replaced by numeric defect witnesses "
                    "and the inconsistent family fit");
  v.notes.push_back(grid_note(opts.n_max));
  return v;
}

}  // namespace

TheoremVerdict run_thm_5_1(const RunnerOptions& opts) { return run_simultaneous_two_iso(opts, true); }
TheoremVerdict run_thm_5_2(const RunnerOptions& opts) { return run_simultaneous_two_iso(opts, false); }

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {"2.6", "3.1", "3.2", "3.3", "4.1",
                                               "4.2", "4.3", "5.1", "5.2"};
  return ids;
}

TheoremVerdict run_theorem(const std::string& id, const RunnerOptions& opts) {
  if (id == "2.6") return run_thm_2_6(opts);
  if (id == "3.1") return run_thm_3_1(opts);
  if (id == "3.2") return run_thm_3_2(opts);
  if (id == "3.3") return run_thm_3_3(opts);
  if (id == "4.1") return run_thm_4_1(opts);
  if (id == "4.2") return run_cor_4_2(opts);
  if (id == "4.3") return run_thm_4_3(opts);
  if (id == "5.1") return run_thm_5_1(opts);
  if (id == "5.2") return run_thm_5_2(opts);
  throw std::invalid_argument("unknown theorem id \"" + id + "\"");
}

std::vector<TheoremVerdict> run_all(const RunnerOptions& opts) {
  const auto& ids = theorem_ids();
  std::vector<std::future<TheoremVerdict>> futures;
  futures.reserve(ids.size());
  for (const auto& id : ids)
    futures.push_back(std::async(std::launch::async, [&opts, id] { return run_theorem(id, opts); }));
  std::vector<TheoremVerdict> out;
  out.reserve(ids.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

}  // namespace shiftlab
