#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dominator {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) { return Rational(BigInt(num), BigInt(den)); }

/// ceil(a / b) for b > 0.
inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

/// ceil(r * n) for non-negative r.
inline long long ceil_times(const Rational& r, long long n) {
  return static_cast<long long>(ceil_div(numerator(r) * n, denominator(r)));
}

inline std::string to_fraction(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Decimal expansion of a non-negative rational truncated to `digits`
/// places after the point.
inline std::string to_decimal(const Rational& r, int digits) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  std::string out = BigInt(num / den).str();
  BigInt rem = num % den;
  if (digits > 0) out.push_back('.');
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    out += static_cast<char>('0' + static_cast<int>(rem / den));
    rem %= den;
  }
  return out;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace dominator
