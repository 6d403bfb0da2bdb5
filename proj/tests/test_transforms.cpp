#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "shiftlab/transforms.hpp"

using namespace shiftlab;

namespace {

WeightedShift two_iso0() { return WeightedShift(WeightSequence::two_iso(ExactReal(Rational(0)))); }

std::vector<WeightedShift> positive_corpus() {
  return {
      WeightedShift(WeightSequence::constant(ExactReal(Rational(1)))),
      WeightedShift(WeightSequence::constant(ExactReal(Rational(3, 2)))),
      WeightedShift(WeightSequence::periodic({ExactReal(Rational(1, 2)), ExactReal(Rational(2))})),
      two_iso0(),
      WeightedShift(WeightSequence::two_iso(ExactReal(Rational(-1, 2)))),
      WeightedShift(WeightSequence::power_tower(0.7, 0.6)),
  };
}

}  // namespace

TEST_CASE("half-Aluthge of the two-iso shift") {
  auto at = aluthge(two_iso0(), ExactReal(Rational(1, 2)));
  // b_1 = 3^(1/4), frozen from 50-digit evaluation
  CHECK(at.weight(1) == doctest::Approx(1.3160740129524925).epsilon(1e-15));
  CHECK(at.weights().exactness() == Exactness::RationalFourth);
  CHECK(at.weights().weight_pow4_exact(1) == Rational(3));
  CHECK(at.weights().weight_pow4_exact(2) == Rational(2));
  CHECK(at.weights().weight_sq(1) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-16));
}

TEST_CASE("Aluthge endpoints return input and Duggal weights") {
  auto s = two_iso0();
  auto a0 = aluthge(s, ExactReal(Rational(0)));
  auto a1 = aluthge(s, ExactReal(Rational(1)));
  auto dug = duggal(s);
  for (Index j = 1; j <= 20; ++j) {
    CHECK(a0.weight(j) == s.weight(j));
    CHECK(a1.weight(j) == s.weight(j + 1));
    CHECK(dug.weight(j) == a1.weight(j));
  }
  CHECK(a0.weights().exactness() == Exactness::RationalSq);
  CHECK(a1.weights().weight_sq_exact(1) == Rational(3, 2));
  CHECK_THROWS_AS(aluthge(s, ExactReal(1.0000001)), std::domain_error);
  CHECK_THROWS_AS(aluthge(s, ExactReal(-0.1)), std::domain_error);
}

TEST_CASE("the unilateral shift is fixed by every transform") {
  WeightedShift s(WeightSequence::constant(ExactReal(Rational(1))));
  for (double lam : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    CHECK(aluthge(s, ExactReal(lam)).weight(7) == 1.0);
    CHECK(lambda_mean(s, ExactReal(lam)).weight(7) == 1.0);
  }
  CHECK(mean_transform(s).weight(7) == 1.0);
  CHECK(duggal(s).weight(7) == 1.0);
}

TEST_CASE("tower family built for lambda is flattened by that Aluthge transform") {
  WeightedShift b(WeightSequence::power_tower(2.0, 0.7));
  auto at = aluthge(b, ExactReal(0.7));
  for (Index j = 1; j <= 16; ++j) CHECK(std::abs(at.weight(j) - 1.0) <= 1e-12);
}

TEST_CASE("mean transform examples") {
  WeightedShift p(WeightSequence::periodic({ExactReal(Rational(1, 2)), ExactReal(Rational(3, 2))}));
  auto mp = mean_transform(p);
  for (Index j = 1; j <= 32; ++j) CHECK(mp.weight(j) == 1.0);
  CHECK(mp.weights().weights_rational());
  CHECK(mp.weights().weight_sq_exact(3) == Rational(1));

  auto mt = mean_transform(two_iso0());
  // m_1 = (sqrt2 + sqrt(3/2))/2, frozen from 50-digit evaluation
  CHECK(mt.weight(1) == doctest::Approx(1.3194792168823420).epsilon(1e-15));
  CHECK(mt.weights().exactness() == Exactness::FloatingOnly);
}

TEST_CASE("lambda-mean examples and the lambda <-> 1-lambda symmetry") {
  auto s = two_iso0();
  auto m03 = lambda_mean(s, ExactReal(0.3));
  // frozen from 50-digit evaluation
  CHECK(m03.weight(1) == doctest::Approx(1.3166186483542401).epsilon(1e-14));

  // the two exponent multipliers lambda and 1-lambda round independently,
  // so the symmetry holds to the last ulp rather than bitwise
  for (double lam : {0.1, 0.25, 0.3, 0.45}) {
    auto lo = lambda_mean(s, ExactReal(lam));
    auto hi = lambda_mean(s, ExactReal(1.0 - lam));
    for (Index j = 1; j <= 16; ++j)
      CHECK(lo.weight(j) == doctest::Approx(hi.weight(j)).epsilon(1e-15));
  }

  WeightedShift c(WeightSequence::constant(ExactReal(Rational(5, 4))));
  for (double lam : {0.0, 0.3, 1.0}) CHECK(lambda_mean(c, ExactReal(lam)).weight(3) == 1.25);
}

TEST_CASE("alias identities hold pointwise") {
  for (const auto& s : positive_corpus()) {
    auto a_half = aluthge(s, ExactReal(Rational(1, 2)));
    auto lm_half = lambda_mean(s, ExactReal(Rational(1, 2)));
    auto lm_zero = lambda_mean(s, ExactReal(Rational(0)));
    auto m = mean_transform(s);
    auto a_zero = aluthge(s, ExactReal(Rational(0)));
    for (Index j = 1; j <= 12; ++j) {
      CHECK(a_half.weight(j) == lm_half.weight(j));
      CHECK(lm_zero.weight(j) == m.weight(j));
      CHECK(a_zero.weight(j) == s.weight(j));
    }
  }
}

TEST_CASE("geometric-arithmetic sandwich: b_j <= m_{lambda,j} <= m_j") {
  for (const auto& s : positive_corpus()) {
    auto b = aluthge(s, ExactReal(Rational(1, 2)));
    auto m = mean_transform(s);
    for (double lam : {0.05, 0.2, 0.35, 0.5, 0.8}) {
      auto ml = lambda_mean(s, ExactReal(lam));
      for (Index j = 1; j <= 20; ++j) {
        CHECK(b.weight(j) <= ml.weight(j) + 1e-12);
        CHECK(ml.weight(j) <= m.weight(j) + 1e-12);
      }
    }
  }
}

TEST_CASE("exactness propagation across transform kinds") {
  WeightedShift p(WeightSequence::periodic({ExactReal(Rational(1, 2)), ExactReal(Rational(2))}));
  CHECK(aluthge(p, ExactReal(Rational(0))).weights().exactness() == Exactness::RationalSq);
  CHECK(aluthge(p, ExactReal(Rational(1))).weights().exactness() == Exactness::RationalSq);
  CHECK(aluthge(p, ExactReal(Rational(1, 2))).weights().exactness() == Exactness::RationalFourth);
  CHECK(aluthge(p, ExactReal(0.3)).weights().exactness() == Exactness::FloatingOnly);
  CHECK(mean_transform(p).weights().exactness() == Exactness::RationalSq);
  CHECK(mean_transform(two_iso0()).weights().exactness() == Exactness::FloatingOnly);

  // inverse weight pairs collapse to exactly 1 through the fourth-power chain
  auto ap = aluthge(p, ExactReal(Rational(1, 2)));
  for (Index j = 1; j <= 64; ++j) CHECK(ap.weight(j) == 1.0);
}

TEST_CASE("zero weights: Aluthge maps them to zero, lambda-mean refuses") {
  WeightedShift z(WeightSequence::explicit_list(
      {ExactReal(Rational(1)), ExactReal(Rational(0)), ExactReal(Rational(2))},
      Tail::constant(ExactReal(Rational(1)))));
  auto az = aluthge(z, ExactReal(0.3));
  CHECK(az.weight(1) == 0.0);
  CHECK(az.weight(2) == 0.0);
  CHECK(az.weight(3) > 0.0);
  REQUIRE(!az.notes().empty());
  CHECK(az.notes().front().find("zero") != std::string::npos);
  CHECK_THROWS_AS(lambda_mean(z, ExactReal(0.3)), std::domain_error);
}

TEST_CASE("phases pass through unchanged") {
  using namespace std::complex_literals;
  WeightedShift s(WeightSequence::two_iso(ExactReal(Rational(0))), {1i, -1.0 + 0i});
  for (const auto& t : {aluthge(s, ExactReal(Rational(1, 2))), mean_transform(s),
                        lambda_mean(s, ExactReal(0.3))}) {
    CHECK(t.phase(1) == 1i);
    CHECK(t.phase(2) == -1.0 + 0i);
    CHECK(t.phase(5) == 1.0 + 0i);
  }
}

TEST_CASE("transform kinds resolve their aliases") {
  CHECK(TransformKind::duggal().name() == "duggal");
  CHECK(TransformKind::mean().name() == "mean");
  CHECK(TransformKind::aluthge(ExactReal(Rational(1, 2))).has_lambda());
  CHECK(!TransformKind::mean().has_lambda());
  auto s = two_iso0();
  auto via_kind = apply_transform(s, TransformKind::aluthge(ExactReal(Rational(1, 2))));
  auto direct = aluthge(s, ExactReal(Rational(1, 2)));
  for (Index j = 1; j <= 8; ++j) CHECK(via_kind.weight(j) == direct.weight(j));
  CHECK_THROWS_AS(TransformKind::aluthge(ExactReal(1.5)), std::domain_error);
}
