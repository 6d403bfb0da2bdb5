#pragma once

#include <string>
#include <vector>

#include "shiftlab/rational.hpp"
#include "shiftlab/weights.hpp"

namespace shiftlab {

struct TheoremCheck {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct TheoremVerdict {
  std::string id;     // "2.6", "3.1", ... "5.2"
  std::string title;  // what the runner establishes
  std::vector<TheoremCheck> checks;
  std::vector<std::string> notes;  // discrepancy and limitation annotations
  bool overall() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
};

/// Grids shared by the runners. Universally quantified claims are verified on
/// these grids only; each verdict says so in its notes.
struct RunnerOptions {
  std::vector<double> lambda_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<Rational> a_grid = {Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1),
                                  Rational(7)};
  int m_max = 8;
  Index n_max = 64;
  double alpha = 1.05;  // must lie in (1, 2/sqrt3) for the power-bounded probe
  int oracle_dim = 32;
  int x_scan = 19;  // grid resolution on (0,1) for the tower-family scan
};

TheoremVerdict run_thm_2_6(const RunnerOptions& opts = {});
TheoremVerdict run_thm_3_1(const RunnerOptions& opts = {});
TheoremVerdict run_thm_3_2(const RunnerOptions& opts = {});
TheoremVerdict run_thm_3_3(const RunnerOptions& opts = {});
TheoremVerdict run_thm_4_1(const RunnerOptions& opts = {});
TheoremVerdict run_cor_4_2(const RunnerOptions& opts = {});
TheoremVerdict run_thm_4_3(const RunnerOptions& opts = {});
TheoremVerdict run_thm_5_1(const RunnerOptions& opts = {});
TheoremVerdict run_thm_5_2(const RunnerOptions& opts = {});

const std::vector<std::string>& theorem_ids();
TheoremVerdict run_theorem(const std::string& id, const RunnerOptions& opts = {});
/// Runs every runner (concurrently) and returns verdicts ordered by id.
std::vector<TheoremVerdict> run_all(const RunnerOptions& opts = {});

}  // namespace shiftlab
