#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "parry/rational.hpp"
#include "parry/words.hpp"

namespace parry {

// Exact element a + b*sqrt(d) of Q(sqrt(d)).
//
// Within one parameter context every value shares the literal
// d = (p+1)^2 - 4(p-q); d is deliberately not reduced to its square-free
// part, so comparisons always stay inside a single sqrt(d). Rational values
// carry d = 0 and mix freely with any context. All sign decisions are made
// by exact case analysis; no floating point is involved anywhere.
class QuadraticNumber {
 public:
  QuadraticNumber() : a_(0), b_(0), d_(0) {}
  QuadraticNumber(BigRational a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT
  QuadraticNumber(long long a) : a_(a), b_(0), d_(0) {}               // NOLINT

  QuadraticNumber(BigRational a, BigRational b, long long d)
      : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (b_ == 0) {
      d_ = 0;
    } else if (d_ <= 0) {
      throw std::invalid_argument("QuadraticNumber: d must be positive");
    }
  }

  const BigRational& rational_part() const { return a_; }
  const BigRational& sqrt_coefficient() const { return b_; }
  long long discriminant() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  const BigRational& rational_value() const {
    if (!is_rational())
      throw std::logic_error("QuadraticNumber: value is irrational");
    return a_;
  }

  QuadraticNumber conjugate() const { return {a_, -b_, b_ == 0 ? 1 : d_}; }

  // sign(a + b*sqrt(d)) by comparing a^2 with b^2 d when a and b disagree.
  int sign() const {
    int sa = sign_of(a_);
    int sb = sign_of(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    BigRational lhs = a_ * a_;
    BigRational rhs = b_ * b_ * d_;
    int c = lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
    return sa > 0 ? c : -c;
  }

  friend QuadraticNumber operator-(const QuadraticNumber& x) {
    return {-x.a_, -x.b_, x.b_ == 0 ? 1 : x.d_};
  }

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    long long d = merged_d(x, y);
    return {x.a_ + y.a_, x.b_ + y.b_, d == 0 ? 1 : d};
  }
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x + (-y);
  }
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    long long d = merged_d(x, y);
    return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_,
            d == 0 ? 1 : d};
  }
  friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
    long long d = merged_d(x, y);
    BigRational norm = y.a_ * y.a_ - y.b_ * y.b_ * d;
    if (norm == 0) throw std::domain_error("QuadraticNumber: division by zero");
    QuadraticNumber conj{y.a_, -y.b_, d == 0 ? 1 : d};
    QuadraticNumber prod = x * conj;
    return {prod.a_ / norm, prod.b_ / norm, d == 0 ? 1 : d};
  }

  QuadraticNumber pow(unsigned n) const {
    QuadraticNumber result{1};
    QuadraticNumber base = *this;
    while (n > 0) {
      if (n & 1u) result = result * base;
      base = base * base;
      n >>= 1u;
    }
    return result;
  }

  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
  }
  friend bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const QuadraticNumber& x, const QuadraticNumber& y) {
    return (x - y).sign() > 0;
  }
  friend bool operator<=(const QuadraticNumber& x, const QuadraticNumber& y) {
    return (x - y).sign() <= 0;
  }
  friend bool operator>=(const QuadraticNumber& x, const QuadraticNumber& y) {
    return (x - y).sign() >= 0;
  }

  DecFloat to_dec_float() const {
    DecFloat v = parry::to_dec_float(a_);
    if (b_ != 0) v += parry::to_dec_float(b_) * sqrt(DecFloat(d_));
    return v;
  }

  // Display only; never used in comparisons.
  std::string to_decimal_string(int digits = 30) const {
    std::ostringstream os;
    os << std::setprecision(digits) << to_dec_float();
    return os.str();
  }

 private:
  static long long merged_d(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0) return x.d_;
    if (x.d_ != y.d_)
      throw std::logic_error("QuadraticNumber: mixing distinct discriminants");
    return x.d_;
  }

  BigRational a_;
  BigRational b_;
  long long d_;  // 0 marks a plain rational
};

// The two roots of x^2 - (p+1)x + (p-q): beta = ((p+1)+sqrt(D))/2 first,
// its conjugate second. beta + beta' = p+1 and beta*beta' = p-q exactly.
inline std::pair<QuadraticNumber, QuadraticNumber> beta_roots(const ParryParams& params) {
  long long d = params.discriminant();
  BigRational half(1, 2);
  BigRational mid(params.p() + 1, 2);
  return {QuadraticNumber(mid, half, d), QuadraticNumber(mid, -half, d)};
}

// p + 1 + (2q+1-p)/(beta-1); the supremum of the witness index sequence.
inline QuadraticNumber limit_index(const ParryParams& params) {
  auto [beta, beta_conj] = beta_roots(params);
  (void)beta_conj;
  QuadraticNumber num{BigRational(2 * params.q() + 1 - params.p())};
  return QuadraticNumber(BigRational(params.p() + 1)) + num / (beta - QuadraticNumber(1));
}

}  // namespace parry
