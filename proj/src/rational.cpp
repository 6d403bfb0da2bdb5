#include "shiftlab/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace shiftlab {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// cpp_int's string constructor follows C++ literal rules, so a leading zero
// would flip it into octal
BigInt parse_digits(const std::string& s) {
  std::size_t i = 0;
  while (i + 1 < s.size() && s[i] == '0') ++i;
  return BigInt(s.substr(i));
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    s.erase(s.begin());
  }
  if (s.empty()) throw std::invalid_argument("malformed rational literal: '" + text + "'");

  auto slash = s.find('/');
  Rational result;
  if (slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational literal: '" + text + "'");
    BigInt q = parse_digits(den);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    result = Rational(parse_digits(num), q);
  } else {
    // decimal: digits [. digits] [e[+-]digits]
    std::string mantissa = s;
    long exponent = 0;
    auto e = s.find_first_of("eE");
    if (e != std::string::npos) {
      mantissa = s.substr(0, e);
      const std::string es = s.substr(e + 1);
      std::string edigits = es;
      bool eneg = false;
      if (!edigits.empty() && (edigits[0] == '+' || edigits[0] == '-')) {
        eneg = edigits[0] == '-';
        edigits.erase(edigits.begin());
      }
      if (!all_digits(edigits) || edigits.size() > 6)
        throw std::invalid_argument("malformed exponent in '" + text + "'");
      exponent = std::stol(edigits);
      if (eneg) exponent = -exponent;
    }
    auto dot = mantissa.find('.');
    std::string digits = mantissa;
    long frac_len = 0;
    if (dot != std::string::npos) {
      digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
      frac_len = static_cast<long>(mantissa.size() - dot - 1);
    }
    if (!all_digits(digits))
      throw std::invalid_argument("malformed rational literal: '" + text + "'");
    BigInt n = parse_digits(digits);
    long net = exponent - frac_len;
    BigInt num = n, den = 1;
    if (net > 0)
      num *= boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(net));
    else if (net < 0)
      den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-net));
    result = Rational(num, den);
  }
  return negative ? Rational(-result) : result;
}

std::string format_rational(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  const BigInt rn = boost::multiprecision::sqrt(num);
  const BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

}  // namespace shiftlab
