#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "shiftlab/isometry.hpp"
#include "shiftlab/oracle.hpp"
#include "shiftlab/transforms.hpp"

using namespace shiftlab;

namespace {

WeightedShift two_iso0() { return WeightedShift(WeightSequence::two_iso(ExactReal(Rational(0)))); }

std::vector<WeightedShift> corpus() {
  using namespace std::complex_literals;
  return {
      WeightedShift(WeightSequence::constant(ExactReal(Rational(1)))),
      WeightedShift(WeightSequence::constant(ExactReal(Rational(3, 2)))),
      WeightedShift(WeightSequence::periodic({ExactReal(Rational(1, 2)), ExactReal(Rational(2))})),
      WeightedShift(
          WeightSequence::periodic({ExactReal(Rational(1, 2)), ExactReal(Rational(3, 2))})),
      two_iso0(),
      WeightedShift(WeightSequence::two_iso(ExactReal(Rational(-1, 2)))),
      WeightedShift(WeightSequence::two_iso(ExactReal(Rational(7)))),
      WeightedShift(WeightSequence::power_tower(0.7, 0.6)),
      // a phased copy exercises the zeta factors through the matrix path
      WeightedShift(WeightSequence::two_iso(ExactReal(Rational(0))),
                    {std::polar(1.0, 0.4), std::polar(1.0, -1.1), 1.0 + 0i}),
  };
}

}  // namespace

TEST_CASE("truncation structure") {
  WeightedShift S(WeightSequence::constant(ExactReal(Rational(1))));
  const TruncatedMatrix m = truncate(S, 3);
  CHECK(m.dim() == 3);
  CHECK(m.entries(1, 0) == std::complex<double>(1.0));
  CHECK(m.entries(2, 1) == std::complex<double>(1.0));
  CHECK(m.entries(0, 0) == std::complex<double>(0.0));
  CHECK(m.entries(0, 2) == std::complex<double>(0.0));

  const TruncatedMatrix t = truncate(two_iso0(), 4);
  CHECK(t.entries(1, 0).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(t.entries(2, 1).real() == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
  CHECK(t.entries(3, 2).real() == doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-15));

  WeightedShift P(WeightSequence::periodic({ExactReal(Rational(1, 2)), ExactReal(Rational(2))}));
  const TruncatedMatrix p = truncate(P, 5);
  CHECK(p.entries(1, 0).real() == 0.5);
  CHECK(p.entries(2, 1).real() == 2.0);
  CHECK(p.entries(3, 2).real() == 0.5);
  CHECK(p.entries(4, 3).real() == 2.0);

  CHECK_THROWS_AS(truncate(S, 1), std::invalid_argument);
  CHECK_THROWS_AS(truncate(S, 129), std::invalid_argument);
}

TEST_CASE("polar decomposition of shift truncations") {
  WeightedShift S(WeightSequence::constant(ExactReal(Rational(1))));
  const PolarFactors pf = polar_decompose(truncate(S, 4));
  for (int j = 0; j < 3; ++j) {
    CHECK(pf.partial_isometry.entries(j + 1, j) == std::complex<double>(1.0));
    CHECK(pf.modulus.entries(j, j) == std::complex<double>(1.0));
  }
  CHECK(pf.modulus.entries(3, 3) == std::complex<double>(0.0));  // truncation edge

  const PolarFactors tf = polar_decompose(truncate(two_iso0(), 4));
  CHECK(tf.modulus.entries(0, 0).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(tf.modulus.entries(1, 1).real() == doctest::Approx(std::sqrt(1.5)).epsilon(1e-14));
  CHECK(tf.modulus.entries(2, 2).real() == doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-14));

  // a vanishing weight zeroes the corresponding zeta
  WeightedShift Z(WeightSequence::explicit_list(
      {ExactReal(Rational(1)), ExactReal(Rational(0)), ExactReal(Rational(1))},
      Tail::constant(ExactReal(Rational(1)))));
  const PolarFactors zf = polar_decompose(truncate(Z, 4));
  CHECK(zf.partial_isometry.entries(2, 1) == std::complex<double>(0.0));
  CHECK(zf.modulus.entries(1, 1) == std::complex<double>(0.0));
}

TEST_CASE("polar round-trip and the V*V projection") {
  for (const auto& s : corpus()) {
    const TruncatedMatrix m = truncate(s, 64);
    const PolarFactors pf = polar_decompose(m);
    const Eigen::MatrixXcd vp = pf.partial_isometry.entries * pf.modulus.entries;
    CHECK((vp - m.entries).cwiseAbs().maxCoeff() <= 1e-12);

    const Eigen::MatrixXcd vv =
        pf.partial_isometry.entries.adjoint() * pf.partial_isometry.entries;
    for (int j = 0; j < 64; ++j) {
      const double expected = pf.modulus.entries(j, j).real() > 0.0 ? 1.0 : 0.0;
      CHECK(std::abs(vv(j, j).real() - expected) <= 1e-12);
    }
  }
}

TEST_CASE("polar rejects non-shift inputs") {
  Eigen::MatrixXcd bad(2, 2);
  bad << 1.0, 1.0, 0.0, 1.0;  // columns not orthogonal
  CHECK_THROWS_AS(polar_decompose(TruncatedMatrix{bad, "ad-hoc"}), std::invalid_argument);
}

TEST_CASE("matrix Aluthge on reference shifts") {
  WeightedShift S(WeightSequence::constant(ExactReal(Rational(1))));
  for (double lam : {0.0, 0.3, 1.0}) {
    const TruncatedMatrix m = matrix_aluthge(truncate(S, 6), lam);
    for (int j = 1; j <= 4; ++j)
      CHECK(std::abs(m.entries(j, j - 1) - std::complex<double>(1.0)) <= 1e-14);
  }

  const TruncatedMatrix t = matrix_aluthge(truncate(two_iso0(), 16), 0.5);
  CHECK(t.entries(1, 0).real() == doctest::Approx(std::pow(3.0, 0.25)).epsilon(1e-10));

  WeightedShift P(WeightSequence::periodic({ExactReal(Rational(1, 2)), ExactReal(Rational(2))}));
  const TruncatedMatrix ap = matrix_aluthge(truncate(P, 16), 0.5);
  for (int j = 1; j <= 14; ++j)
    CHECK(std::abs(ap.entries(j, j - 1).real() - 1.0) <= 1e-12);

  CHECK_THROWS_AS(matrix_aluthge(truncate(S, 4), 1.5), std::domain_error);
}

TEST_CASE("matrix mean on reference shifts") {
  WeightedShift P(WeightSequence::periodic({ExactReal(Rational(1, 2)), ExactReal(Rational(3, 2))}));
  const TruncatedMatrix mp = matrix_mean(truncate(P, 16));
  for (int j = 1; j <= 14; ++j) CHECK(mp.entries(j, j - 1).real() == 1.0);

  WeightedShift C(WeightSequence::constant(ExactReal(Rational(2))));
  const TruncatedMatrix mc = matrix_mean(truncate(C, 8));
  for (int j = 1; j <= 6; ++j) CHECK(mc.entries(j, j - 1).real() == 2.0);

  const TruncatedMatrix mt = matrix_mean(truncate(two_iso0(), 8));
  CHECK(mt.entries(1, 0).real() == doctest::Approx(1.3194792168823420).epsilon(1e-10));
}

TEST_CASE("oracle defect by matrix powers") {
  WeightedShift S(WeightSequence::constant(ExactReal(Rational(1))));
  CHECK(oracle_defect(truncate(S, 8), 3, 2) == doctest::Approx(0.0).epsilon(1e-14));

  CHECK(std::abs(oracle_defect(truncate(two_iso0(), 16), 2, 5)) <= 1e-12);

  WeightedShift P(WeightSequence::periodic({ExactReal(Rational(1, 2)), ExactReal(Rational(2))}));
  CHECK(oracle_defect(truncate(P, 8), 2, 1) == doctest::Approx(1.5).epsilon(1e-12));

  CHECK_THROWS_AS(oracle_defect(truncate(S, 8), 4, 5), std::out_of_range);
  CHECK_THROWS_AS(oracle_defect(truncate(S, 8), 0, 1), std::invalid_argument);
}

TEST_CASE("matrix transforms agree with the closed-form weights") {
  for (const auto& s : corpus()) {
    const TruncatedMatrix trunc = truncate(s, 32);
    for (double lam : {0.0, 0.3, 0.5, 0.7, 1.0}) {
      const TruncatedMatrix mat = matrix_aluthge(trunc, lam);
      const WeightedShift closed = aluthge(s, ExactReal(lam));
      for (int j = 1; j <= 30; ++j)
        CHECK(std::abs(mat.entries(j, j - 1) - closed.entry(j)) <= 1e-10);
    }
    const TruncatedMatrix mat = matrix_mean(trunc);
    const WeightedShift closed = mean_transform(s);
    for (int j = 1; j <= 30; ++j)
      CHECK(std::abs(mat.entries(j, j - 1) - closed.entry(j)) <= 1e-10);
  }
}

TEST_CASE("oracle defect agrees with the closed-form defect") {
  for (const auto& s : corpus()) {
    const TruncatedMatrix trunc = truncate(s, 32);
    for (int m = 1; m <= 4; ++m)
      for (int n = 1; n <= 8; ++n)
        CHECK(std::abs(oracle_defect(trunc, m, n) - defect(s, m, n)) <= 1e-10);
  }
}

TEST_CASE("csv and json round-trips") {
  const TruncatedMatrix m = truncate(two_iso0(), 5);
  const TruncatedMatrix back = matrix_from_csv(matrix_to_csv(m));
  CHECK(back.dim() == 5);
  CHECK((back.entries - m.entries).cwiseAbs().maxCoeff() == 0.0);

  using namespace std::complex_literals;
  WeightedShift phased(WeightSequence::constant(ExactReal(Rational(1))), {1i, -1.0 + 0i});
  const TruncatedMatrix pm = truncate(phased, 4);
  const TruncatedMatrix pback = matrix_from_csv(matrix_to_csv(pm));
  CHECK((pback.entries - pm.entries).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(matrix_from_csv("1,2\n3\n"), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_csv(""), std::invalid_argument);
}
