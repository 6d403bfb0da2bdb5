#pragma once

#include <Eigen/Dense>

#include <string>

#include "shiftlab/weights.hpp"

namespace shiftlab {

/// Dense truncations stay desk-scale by policy; the oracle trades speed for
/// being an independent check on the closed-form path.
inline constexpr int kOracleMaxDim = 128;

/// Dense N x N compression of a shift onto span{e_1..e_N}. A shift truncation
/// has entries only on the first subdiagonal: entry(j+1, j) = zeta_j a_j for
/// j < N; T e_N is truncated to 0, so quantities involving e_n with
/// n + k <= N are exact.
struct TruncatedMatrix {
  Eigen::MatrixXcd entries;
  std::string provenance;
  int dim() const { return static_cast<int>(entries.rows()); }
};

TruncatedMatrix truncate(const WeightedShift& shift, int n);

struct PolarFactors {
  TruncatedMatrix partial_isometry;  // V: subdiagonal zeta_j where a_j > 0
  TruncatedMatrix modulus;           // P = |T|: diag(|a_j|), last entry 0
};

/// Polar decomposition M = V P for shift-structured matrices (M*M diagonal).
/// General dense inputs are rejected with std::invalid_argument; no SVD is
/// involved, which keeps this path independent of everything closed-form.
PolarFactors polar_decompose(const TruncatedMatrix& m);

/// |T|^lambda V |T|^(1-lambda) assembled by dense multiplication. Interior
/// subdiagonal entries (j <= N-2) agree with the closed-form transform.
TruncatedMatrix matrix_aluthge(const TruncatedMatrix& m, double lambda);

/// (|T| V + V |T|)/2 by dense multiplication.
TruncatedMatrix matrix_mean(const TruncatedMatrix& m);

/// sum_{k=0}^m (-1)^k C(m,k) ||M^k e_n||^2 by repeated matrix-vector
/// products. Requires n + m <= N so no mass escapes the truncation.
double oracle_defect(const TruncatedMatrix& m, int defect_order, int n);

/// Row-major CSV, 17 significant digits, no header. Real matrices emit plain
/// decimals; complex entries use the form "re+imi".
std::string matrix_to_csv(const TruncatedMatrix& m);
TruncatedMatrix matrix_from_csv(const std::string& text,
                                std::string provenance = "csv import");

}  // namespace shiftlab
