#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "parry/quadratic.hpp"
#include "parry/rational.hpp"

namespace parry {

// Eventually periodic continued fraction [a0; a1, a2, ...] where the partial
// quotients past a0 repeat the periodic tail forever.
struct ContinuedFraction {
  long long head = 0;
  std::vector<long long> periodic_tail;

  long long quotient(std::size_t k) const {
    if (k == 0) return head;
    if (periodic_tail.empty())
      throw std::invalid_argument("ContinuedFraction: empty tail");
    return periodic_tail[(k - 1) % periodic_tail.size()];
  }

  // Value of the truncation [a0; a1, ..., ak].
  BigRational convergent(std::size_t k) const {
    BigInt p_prev = 1, p_cur = head;
    BigInt q_prev = 0, q_cur = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      BigInt a = quotient(i);
      BigInt p_next = a * p_cur + p_prev;
      BigInt q_next = a * q_cur + q_prev;
      p_prev = p_cur;
      p_cur = p_next;
      q_prev = q_cur;
      q_cur = q_next;
    }
    return BigRational(p_cur, q_cur);
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '[' << head << "; ";
    for (std::size_t i = 0; i < periodic_tail.size(); ++i) {
      if (i) os << ", ";
      os << periodic_tail[i];
    }
    os << ", ...]";
    return os.str();
  }
};

// Continued fraction of the slope alpha = 1 - 1/beta of the Sturmian case
// q = p-1: alpha = [0; 1, p-1, 1, p-1, ...].
inline ContinuedFraction slope_continued_fraction(long long p) {
  if (p < 2)
    throw std::invalid_argument("slope_continued_fraction: requires p >= 2");
  return {0, {1, p - 1}};
}

// Denominators q_0..q_nmax of the convergents of the slope above, via
// q_k = a_k q_{k-1} + q_{k-2} with a_odd = 1, a_even = p-1. Starts
// q_0 = 1, q_1 = 1, q_2 = p, q_3 = p+1.
inline std::vector<BigInt> convergent_denominators(long long p, int n_max) {
  if (p < 2) throw std::invalid_argument("convergent_denominators: requires p >= 2");
  if (n_max < 3) throw std::invalid_argument("convergent_denominators: requires n_max >= 3");
  std::vector<BigInt> q(static_cast<std::size_t>(n_max) + 1);
  q[0] = 1;
  q[1] = 1;
  for (int k = 2; k <= n_max; ++k) {
    BigInt a = (k % 2 == 0) ? BigInt(p - 1) : BigInt(1);
    q[static_cast<std::size_t>(k)] =
        a * q[static_cast<std::size_t>(k - 1)] + q[static_cast<std::size_t>(k - 2)];
  }
  return q;
}

// Closed forms for the same denominators in terms of beta and its conjugate:
// q_{2n-1} = (beta^n - beta'^n)/(beta - beta') and
// q_{2n} = ((1-beta')beta^{n+1} - (1-beta)beta'^{n+1})/(beta - beta').
inline BigInt convergent_denominator_closed(long long p, int k) {
  if (p < 2 || k < 0)
    throw std::invalid_argument("convergent_denominator_closed: bad arguments");
  if (k == 0) return 1;
  ParryParams params(p, p - 1);
  auto [beta, beta_conj] = beta_roots(params);
  QuadraticNumber diff = beta - beta_conj;
  QuadraticNumber value;
  if (k % 2 == 1) {
    unsigned n = static_cast<unsigned>((k + 1) / 2);
    value = (beta.pow(n) - beta_conj.pow(n)) / diff;
  } else {
    unsigned n = static_cast<unsigned>(k / 2);
    QuadraticNumber one{1};
    value = ((one - beta_conj) * beta.pow(n + 1) - (one - beta) * beta_conj.pow(n + 1)) / diff;
  }
  if (!value.is_rational() || denominator(value.rational_value()) != 1)
    throw std::logic_error("convergent_denominator_closed: non-integer value");
  return numerator(value.rational_value());
}

// Term a_{n+2} + 2 + (q_n - 2)/q_{n+1} of the Sturmian index formula at an
// even position n; odd positions carry partial quotient 1 and never attain
// the supremum, so they are excluded by contract.
inline BigRational sturmian_index_term(long long p, int n) {
  if (p < 2) throw std::invalid_argument("sturmian_index_term: requires p >= 2");
  if (n < 0 || n % 2 != 0)
    throw std::invalid_argument("sturmian_index_term: position must be even");
  auto q = convergent_denominators(p, n + 3 < 4 ? 4 : n + 3);
  BigInt qn = q[static_cast<std::size_t>(n)];
  BigInt qn1 = q[static_cast<std::size_t>(n) + 1];
  return BigRational(p - 1) + 2 + BigRational(qn - 2, qn1);
}

}  // namespace parry
