#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace shiftlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", integer, or finite-decimal text ("-3", "1/2", "0.25", "2e3")
/// into an exact rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0).
std::string format_rational(const Rational& q);

double to_double(const Rational& q);

/// Square root within the rationals, when one exists.
std::optional<Rational> exact_sqrt(const Rational& q);

/// A real number carried either as an exact rational or as a plain double.
/// Family parameters built from rationals keep exactness certificates alive;
/// doubles force the floating path.
class ExactReal {
 public:
  ExactReal(double v) : value_(v) {}  // NOLINT: implicit by design
  ExactReal(const Rational& q) : value_(to_double(q)), exact_(q) {}
  ExactReal(int v) : ExactReal(Rational(v)) {}

  double value() const { return value_; }
  bool is_exact() const { return exact_.has_value(); }
  const Rational& exact() const {
    if (!exact_) throw std::logic_error("ExactReal: no exact representation");
    return *exact_;
  }

  friend bool operator==(const ExactReal& a, const ExactReal& b) {
    if (a.is_exact() != b.is_exact()) return false;
    return a.is_exact() ? a.exact() == b.exact() : a.value() == b.value();
  }

 private:
  double value_;
  std::optional<Rational> exact_;
};

/// 17-significant-digit decimal form, the fixed width used by all CLI and
/// file output so cross-implementation diffs stay meaningful.
std::string format_double(double v);

}  // namespace shiftlab
