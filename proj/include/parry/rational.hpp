#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <iomanip>
#include <sstream>
#include <string>

namespace parry {

// Exact arithmetic backends. Every comparison and every reported value in
// this library is computed in BigInt/BigRational (or in Q(sqrt(D)) on top of
// them); DecFloat exists for display only and never feeds a decision.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using DecFloat = boost::multiprecision::cpp_dec_float_100;

inline BigInt floor_rational(const BigRational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (q * denominator(r) > numerator(r)) --q;
  return q;
}

inline int sign_of(const BigRational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

inline DecFloat to_dec_float(const BigRational& r) {
  return DecFloat(numerator(r)) / DecFloat(denominator(r));
}

inline std::string to_decimal_string(const BigRational& r, int digits = 30) {
  std::ostringstream os;
  os << std::setprecision(digits) << to_dec_float(r);
  return os.str();
}

inline std::string to_fraction_string(const BigRational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

}  // namespace parry
