#include "shiftlab/oracle.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "shiftlab/isometry.hpp"

namespace shiftlab {

namespace {

constexpr double kStructuralTol = 1e-12;

void check_dim(int n) {
  if (n < 2) throw std::invalid_argument("truncate: dimension must be >= 2");
  if (n > kOracleMaxDim)
    throw std::invalid_argument("truncate: dimension exceeds the oracle policy cap of 128");
}

// x^p with the functional-calculus convention 0^0 = 1, so |T|^0 acts as the
// identity and Delta_0(T) = T holds on every coordinate.
double diag_pow(double x, double p) {
  if (p == 0.0) return 1.0;
  if (x == 0.0) return 0.0;
  return std::pow(x, p);
}

}  // namespace

TruncatedMatrix truncate(const WeightedShift& shift, int n) {
  check_dim(n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 1; j < n; ++j) m(j, j - 1) = shift.entry(j);
  return {std::move(m), shift.describe() + " | " + std::to_string(n) +
                            "-dim truncation (column " + std::to_string(n) + " mapped to 0)"};
}

PolarFactors polar_decompose(const TruncatedMatrix& m) {
  const int n = m.dim();
  if (n < 2 || m.entries.cols() != n)
    throw std::invalid_argument("polar_decompose: matrix must be square with dim >= 2");
  const Eigen::MatrixXcd gram = m.entries.adjoint() * m.entries;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && std::abs(gram(i, j)) > kStructuralTol)
        throw std::invalid_argument(
            "polar_decompose: M*M is not diagonal; input is not a shift truncation");

  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const double pj = std::sqrt(std::max(0.0, gram(j, j).real()));
    p(j, j) = pj;
    if (pj > 0.0) v.col(j) = m.entries.col(j) / pj;
  }
  return {{std::move(v), "polar V of " + m.provenance},
          {std::move(p), "polar |T| of " + m.provenance}};
}

TruncatedMatrix matrix_aluthge(const TruncatedMatrix& m, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::domain_error("matrix_aluthge: lambda must lie in [0,1]");
  PolarFactors pf = polar_decompose(m);
  const int n = m.dim();
  Eigen::MatrixXcd p_left = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd p_right = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const double pj = pf.modulus.entries(j, j).real();
    p_left(j, j) = diag_pow(pj, lambda);
    p_right(j, j) = diag_pow(pj, 1.0 - lambda);
  }
  Eigen::MatrixXcd out = p_left * pf.partial_isometry.entries * p_right;
  return {std::move(out),
          "matrix aluthge[" + format_double(lambda) + "] of " + m.provenance};
}

TruncatedMatrix matrix_mean(const TruncatedMatrix& m) {
  PolarFactors pf = polar_decompose(m);
  Eigen::MatrixXcd out = 0.5 * (pf.modulus.entries * pf.partial_isometry.entries +
                                pf.partial_isometry.entries * pf.modulus.entries);
  return {std::move(out), "matrix mean of " + m.provenance};
}

double oracle_defect(const TruncatedMatrix& m, int defect_order, int n) {
  if (defect_order < 1) throw std::invalid_argument("oracle_defect: m must be >= 1");
  if (n < 1) throw std::invalid_argument("oracle_defect: n must be >= 1");
  if (n + defect_order > m.dim())
    throw std::out_of_range("oracle_defect: n + m exceeds the truncation dimension");
  const auto binom = binomial_row(defect_order);
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(m.dim());
  y(n - 1) = 1.0;
  double acc = 0.0;
  for (int k = 0; k <= defect_order; ++k) {
    const double term = static_cast<double>(binom[static_cast<std::size_t>(k)]) * y.squaredNorm();
    acc += (k % 2 != 0) ? -term : term;
    if (k < defect_order) y = m.entries * y;
  }
  return acc;
}

std::string matrix_to_csv(const TruncatedMatrix& m) {
  const bool real_only = (m.entries.imag().cwiseAbs().maxCoeff() == 0.0);
  std::ostringstream os;
  for (int i = 0; i < m.entries.rows(); ++i) {
    for (int j = 0; j < m.entries.cols(); ++j) {
      if (j) os << ",";
      const auto z = m.entries(i, j);
      if (real_only) {
        os << format_double(z.real());
      } else {
        os << format_double(z.real()) << (z.imag() < 0 ? "-" : "+")
           << format_double(std::abs(z.imag())) << "i";
      }
    }
    os << "\n";
  }
  return os.str();
}

TruncatedMatrix matrix_from_csv(const std::string& text, std::string provenance) {
  std::vector<std::vector<std::complex<double>>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::complex<double>> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      if (cell.empty()) throw std::invalid_argument("matrix_from_csv: empty cell");
      double re = 0.0, im = 0.0;
      if (cell.back() == 'i') {
        std::string body = cell.substr(0, cell.size() - 1);
        // split at the sign of the imaginary part (skip a leading sign and
        // any exponent signs)
        std::size_t split = std::string::npos;
        for (std::size_t k = body.size(); k-- > 1;) {
          if ((body[k] == '+' || body[k] == '-') &&
              body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
          }
        }
        if (split == std::string::npos)
          throw std::invalid_argument("matrix_from_csv: malformed complex cell '" + cell + "'");
        re = std::stod(body.substr(0, split));
        im = std::stod(body.substr(split));
      } else {
        re = std::stod(cell);
      }
      row.emplace_back(re, im);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("matrix_from_csv: no rows");
  const std::size_t n = rows.size();
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("matrix_from_csv: matrix must be square");
  Eigen::MatrixXcd m(static_cast<int>(n), static_cast<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return {std::move(m), std::move(provenance)};
}

}  // namespace shiftlab
