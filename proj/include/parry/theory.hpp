#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "parry/quadratic.hpp"
#include "parry/rational.hpp"
#include "parry/words.hpp"

namespace parry {

// Words beyond this length are tracked through abelian counts only; every
// index stays exact either way.
inline constexpr std::size_t kDefaultMaterializeCap = 10'000'000;

// w  |->  0^q 1 phi(w) 0^q.  Maps factors to factors, generates the
// bispecial factors containing a 1, and transports maximal powers.
inline BinaryWord bispecial_image(const ParryParams& params, const BinaryWord& w) {
  Morphism phi = make_parry_morphism(params);
  auto q = static_cast<std::size_t>(params.q());
  std::string out;
  BinaryWord img = phi.apply(w);
  out.reserve(2 * q + 1 + img.size());
  out.append(q, '0');
  out += '1';
  out += img.str();
  out.append(q, '0');
  return BinaryWord::unchecked(std::move(out));
}

// ---------------------------------------------------------------------------
// The witness families: words w(n) whose powers realize the index supremum,
// and their maximal powers v(n).
//   w(0) = 0,   w(n+1) = 0^q 1 phi(w(n)) (0^q 1)^{-1}
//   v(0) = 0^p, v(n+1) = 0^q 1 phi(v(n)) 0^q
// ---------------------------------------------------------------------------

inline AbelianVector witness_word_counts(const ParryParams& params, int n) {
  if (n < 0) throw std::invalid_argument("witness_word_counts: n >= 0");
  AbelianVector start{1, 0};
  return start * params.morphism_matrix().pow(static_cast<unsigned>(n));
}

// (p+1, (2q+1-p)/q) M^n - (1, (2q+1-p)/q), evaluated in rationals; the
// result must be a pair of integers or the formula was transcribed wrong.
inline AbelianVector witness_power_counts(const ParryParams& params, int n) {
  if (n < 0) throw std::invalid_argument("witness_power_counts: n >= 0");
  const long long p = params.p(), q = params.q();
  BigRational r(2 * q + 1 - p, q);
  MorphismMatrix m = params.morphism_matrix().pow(static_cast<unsigned>(n));
  BigRational c0 = BigRational(p + 1) * m.at(0, 0) + r * m.at(1, 0) - 1;
  BigRational c1 = BigRational(p + 1) * m.at(0, 1) + r * m.at(1, 1) - r;
  if (denominator(c0) != 1 || denominator(c1) != 1)
    throw std::logic_error("witness_power_counts: non-integer counts");
  return {numerator(c0), numerator(c1)};
}

namespace detail {

// Strips the suffix 0^q 1 after prepending it; a failure here is a logic
// error, not bad input.
inline BinaryWord conjugated_image_step(const ParryParams& params, const Morphism& phi,
                                        const BinaryWord& w) {
  auto q = static_cast<std::size_t>(params.q());
  std::string marker(q, '0');
  marker += '1';
  std::string s = marker + phi.apply(w).str();
  if (s.size() < marker.size() || s.compare(s.size() - marker.size(), marker.size(), marker) != 0)
    throw std::logic_error("witness step: 0^q 1 is not a suffix before stripping");
  s.resize(s.size() - marker.size());
  return BinaryWord::unchecked(std::move(s));
}

}  // namespace detail

struct WitnessPair {
  int n = 0;
  AbelianVector w_counts;
  AbelianVector v_counts;
  std::optional<BinaryWord> w_word;  // materialized iff length <= cap
  std::optional<BinaryWord> v_word;
};

inline WitnessPair witness_pair(const ParryParams& params, int n,
                                std::size_t cap = kDefaultMaterializeCap) {
  WitnessPair out;
  out.n = n;
  out.w_counts = witness_word_counts(params, n);
  out.v_counts = witness_power_counts(params, n);
  Morphism phi = make_parry_morphism(params);
  if (out.w_counts.length() <= cap) {
    BinaryWord w = BinaryWord::unchecked("0");
    for (int i = 0; i < n; ++i) w = detail::conjugated_image_step(params, phi, w);
    if (abelianize(w) != out.w_counts)
      throw std::logic_error("witness_pair: materialized w disagrees with counts");
    out.w_word = std::move(w);
  }
  if (out.v_counts.length() <= cap) {
    BinaryWord v = BinaryWord::zeros(static_cast<std::size_t>(params.p()));
    for (int i = 0; i < n; ++i) v = bispecial_image(params, v);
    if (abelianize(v) != out.v_counts)
      throw std::logic_error("witness_pair: materialized v disagrees with counts");
    out.v_word = std::move(v);
  }
  return out;
}

// ind(w(n)) = |v(n)| / |w(n)| as an exact rational, straight from counts.
inline BigRational witness_index(const ParryParams& params, int n) {
  BigInt num = witness_power_counts(params, n).length();
  BigInt den = witness_word_counts(params, n).length();
  return BigRational(num, den);
}

// Same value through the eigenvalue decomposition:
// p+1 + [ (2q+1-p)/q ((1-b')B - (1-b)B') - (3q+1-p)/q (b-b') ] / (B - B')
// with B = beta^{n+1}, B' = beta'^{n+1}. The sqrt(D) component must cancel.
inline BigRational witness_index_closed_form(const ParryParams& params, int n) {
  if (n < 0) throw std::invalid_argument("witness_index_closed_form: n >= 0");
  const long long p = params.p(), q = params.q();
  auto [beta, beta_conj] = beta_roots(params);
  QuadraticNumber big = beta.pow(static_cast<unsigned>(n) + 1);
  QuadraticNumber big_conj = beta_conj.pow(static_cast<unsigned>(n) + 1);
  QuadraticNumber one{1};
  QuadraticNumber num =
      QuadraticNumber(BigRational(2 * q + 1 - p, q)) *
          ((one - beta_conj) * big - (one - beta) * big_conj) -
      QuadraticNumber(BigRational(3 * q + 1 - p, q)) * (beta - beta_conj);
  QuadraticNumber value = QuadraticNumber(BigRational(p + 1)) + num / (big - big_conj);
  if (!value.is_rational())
    throw std::logic_error("witness_index_closed_form: sqrt(D) component did not cancel");
  return value.rational_value();
}

// A(n) = (2q+1-p) beta'^{n+1} - (3q+1-p): the sign of ind(w(n)) - limit.
inline QuadraticNumber index_gap_term(const ParryParams& params, int n) {
  if (n < 0) throw std::invalid_argument("index_gap_term: n >= 0");
  const long long p = params.p(), q = params.q();
  auto [beta, beta_conj] = beta_roots(params);
  (void)beta;
  return QuadraticNumber(BigRational(2 * q + 1 - p)) *
             beta_conj.pow(static_cast<unsigned>(n) + 1) -
         QuadraticNumber(BigRational(3 * q + 1 - p));
}

// ---------------------------------------------------------------------------
// The index of the infinite word
// ---------------------------------------------------------------------------

struct IndexVerdict {
  bool attained = false;
  std::optional<int> n0;  // smallest n with ind(w(n)) maximal, when attained
  std::variant<BigRational, QuadraticNumber> value;
  std::string certificate;
  int explored_up_to = 0;
};

inline const BigRational& verdict_rational(const IndexVerdict& v) {
  return std::get<BigRational>(v.value);
}
inline const QuadraticNumber& verdict_quadratic(const IndexVerdict& v) {
  return std::get<QuadraticNumber>(v.value);
}

// For p <= 3q+1 the sequence ind(w(n)) increases strictly to its limit and
// the supremum is not attained. Otherwise the terms eventually drop below
// the running maximum for good; the search stops once the certified bound
// limit + sqrt(D)(p-3q-1)/(q(beta^{m+1}-1)) for all m > n falls under the
// best value seen. All comparisons are exact.
inline IndexVerdict word_index(const ParryParams& params, int max_n = 10000) {
  const long long p = params.p(), q = params.q();
  QuadraticNumber limit = limit_index(params);
  if (p <= 3 * q + 1) {
    IndexVerdict v;
    v.attained = false;
    v.value = limit;
    v.certificate = "A(n) < 0 for all n; ind(w(n)) increases strictly to the limit";
    return v;
  }
  auto [beta, beta_conj] = beta_roots(params);
  QuadraticNumber sqrt_d = beta - beta_conj;
  BigRational best = witness_index(params, 0);
  int best_n = 0;
  for (int n = 1; n <= max_n; ++n) {
    BigRational ind = witness_index(params, n);
    if (ind > best) {
      best = ind;
      best_n = n;
    }
    QuadraticNumber tail_bound =
        limit + sqrt_d * QuadraticNumber(BigRational(p - 3 * q - 1)) /
                    (QuadraticNumber(BigRational(q)) *
                     (beta.pow(static_cast<unsigned>(n) + 2) - QuadraticNumber(1)));
    if (tail_bound < QuadraticNumber(best)) {
      IndexVerdict v;
      v.attained = true;
      v.n0 = best_n;
      v.value = best;
      v.certificate =
          "ind(w(m)) < limit + sqrt(D)(p-3q-1)/(q(beta^{m+1}-1)) < attained value for all m > " +
          std::to_string(n);
      v.explored_up_to = n;
      return v;
    }
  }
  throw std::logic_error("word_index: search did not terminate");
}

// Largest k with some nonempty factor power w^k in the infinite word:
// p+1 when p <= 2q, else p.
inline long long predicted_max_integer_power(const ParryParams& params) {
  return params.p() <= 2 * params.q() ? params.p() + 1 : params.p();
}

// ---------------------------------------------------------------------------
// The exceptional family for p = 3, q = 1
// ---------------------------------------------------------------------------
// A second witness family exists for these parameters only; its index
// supremum is beta = 2 + sqrt(2) < 4, so the generic verdict stands.

namespace detail {

inline void require_exceptional_params(const ParryParams& params) {
  if (params.p() != 3 || params.q() != 1)
    throw std::invalid_argument("exceptional witness family exists only for p=3, q=1");
}

}  // namespace detail

inline AbelianVector exceptional_witness_word_counts(const ParryParams& params, int n) {
  detail::require_exceptional_params(params);
  if (n < 0) throw std::invalid_argument("n >= 0");
  AbelianVector start{4, 2};  // counts of 01 phi(01) (01)^{-1} = 010001
  return start * params.morphism_matrix().pow(static_cast<unsigned>(n));
}

inline AbelianVector exceptional_witness_power_counts(const ParryParams& params, int n) {
  detail::require_exceptional_params(params);
  if (n < 0) throw std::invalid_argument("n >= 0");
  AbelianVector v{13, 6};  // counts of 0^q 1 phi(01010) 0^q
  MorphismMatrix m = params.morphism_matrix();
  for (int i = 0; i < n; ++i) {
    v = v * m;
    v.count0 += 2 * params.q();
    v.count1 += 1;
  }
  return v;
}

inline BigRational exceptional_witness_index(const ParryParams& params, int n) {
  BigInt num = exceptional_witness_power_counts(params, n).length();
  BigInt den = exceptional_witness_word_counts(params, n).length();
  return BigRational(num, den);
}

inline WitnessPair exceptional_witness_pair(const ParryParams& params, int n,
                                            std::size_t cap = kDefaultMaterializeCap) {
  detail::require_exceptional_params(params);
  WitnessPair out;
  out.n = n;
  out.w_counts = exceptional_witness_word_counts(params, n);
  out.v_counts = exceptional_witness_power_counts(params, n);
  Morphism phi = make_parry_morphism(params);
  if (out.w_counts.length() <= cap) {
    // 01 phi(01) (01)^{-1}, then the usual conjugated-image recursion
    std::string s = "01" + phi.apply(BinaryWord("01")).str();
    if (s.size() < 2 || s.compare(s.size() - 2, 2, "01") != 0)
      throw std::logic_error("exceptional witness seed: cannot strip 01");
    s.resize(s.size() - 2);
    BinaryWord w = BinaryWord::unchecked(std::move(s));
    for (int i = 0; i < n; ++i) w = detail::conjugated_image_step(params, phi, w);
    if (abelianize(w) != out.w_counts)
      throw std::logic_error("exceptional witness: materialized w disagrees with counts");
    out.w_word = std::move(w);
  }
  if (out.v_counts.length() <= cap) {
    BinaryWord v = bispecial_image(params, BinaryWord("01010"));
    for (int i = 0; i < n; ++i) v = bispecial_image(params, v);
    if (abelianize(v) != out.v_counts)
      throw std::logic_error("exceptional witness: materialized v disagrees with counts");
    out.v_word = std::move(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Desubstitution
// ---------------------------------------------------------------------------

struct Desubstitution {
  std::size_t k1 = 0;
  BinaryWord w;
  std::size_t k2 = 0;
};

// The unique decomposition v = 0^{k1} 1 phi(w) 0^{k2} with 0 <= k1, k2 <= p.
// Zero-blocks between consecutive 1s must have length p or q; anything else
// signals that v is not a factor.
inline Desubstitution desubstitute(const ParryParams& params, const BinaryWord& v) {
  const std::string& s = v.str();
  std::size_t first1 = s.find('1');
  if (first1 == std::string::npos)
    throw std::invalid_argument("desubstitute: word contains no 1");
  std::size_t last1 = s.rfind('1');
  auto p = static_cast<std::size_t>(params.p());
  auto q = static_cast<std::size_t>(params.q());
  std::size_t k1 = first1;
  std::size_t k2 = s.size() - 1 - last1;
  if (k1 > p || k2 > p)
    throw std::domain_error("desubstitute: margin of 0s longer than p; not a factor");
  std::string w;
  std::size_t pos = first1;
  while (pos < last1) {
    std::size_t next = s.find('1', pos + 1);
    std::size_t run = next - pos - 1;
    if (run == p)
      w += '0';
    else if (run == q)
      w += '1';
    else
      throw std::domain_error("desubstitute: zero-block of length neither p nor q; not a factor");
    pos = next;
  }
  return {k1, BinaryWord::unchecked(std::move(w)), k2};
}

// ---------------------------------------------------------------------------
// Bispecial generation
// ---------------------------------------------------------------------------

// All bispecial factors of length <= max_len: the all-zero bispecials are
// exactly 0^k for k <= p-1, and every bispecial containing a 1 is the image
// of a unique shorter bispecial under the map above. Sorted by length, then
// lexicographically.
inline std::vector<BinaryWord> generate_bispecials(const ParryParams& params,
                                                   std::size_t max_len) {
  std::vector<BinaryWord> out;
  std::vector<BinaryWord> frontier;
  for (std::size_t k = 0; k < static_cast<std::size_t>(params.p()); ++k) {
    if (k > max_len) break;
    frontier.push_back(BinaryWord::zeros(k));
  }
  out = frontier;
  while (!frontier.empty()) {
    std::vector<BinaryWord> next;
    for (const BinaryWord& w : frontier) {
      BinaryWord img = bispecial_image(params, w);
      if (img.size() <= max_len) next.push_back(std::move(img));
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const BinaryWord& a, const BinaryWord& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Beta-integer positions
// ---------------------------------------------------------------------------

// x_0 = 0 and x_{k+1} - x_k = 1 when the k-th letter is 0, beta - p when it
// is 1; exact quadratic values.
inline std::vector<QuadraticNumber> beta_integer_positions(const ParryParams& params,
                                                           std::size_t count) {
  if (count < 1) throw std::invalid_argument("beta_integer_positions: count >= 1");
  std::vector<QuadraticNumber> out;
  out.reserve(count);
  auto [beta, beta_conj] = beta_roots(params);
  (void)beta_conj;
  QuadraticNumber gap1 = beta - QuadraticNumber(BigRational(params.p()));
  QuadraticNumber x{0};
  out.push_back(x);
  if (count == 1) return out;
  BinaryWord prefix = fixed_point_prefix(params, count - 1);
  for (std::size_t i = 0; i + 1 < count; ++i) {
    x = x + (prefix.symbol(i) == '0' ? QuadraticNumber(1) : gap1);
    out.push_back(x);
  }
  return out;
}

}  // namespace parry
