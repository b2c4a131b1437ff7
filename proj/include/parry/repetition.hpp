#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "parry/detail/lcp_index.hpp"
#include "parry/rational.hpp"
#include "parry/words.hpp"

namespace parry {

// ---------------------------------------------------------------------------
// Occurrence machinery
// ---------------------------------------------------------------------------

// Start positions of all (possibly overlapping) occurrences, via KMP.
inline std::vector<std::size_t> occurrences(std::string_view text, std::string_view pat) {
  std::vector<std::size_t> out;
  const std::size_t n = text.size(), m = pat.size();
  if (m == 0 || m > n) return out;
  std::vector<std::size_t> pi(m, 0);
  for (std::size_t i = 1; i < m; ++i) {
    std::size_t j = pi[i - 1];
    while (j > 0 && pat[i] != pat[j]) j = pi[j - 1];
    if (pat[i] == pat[j]) ++j;
    pi[i] = j;
  }
  std::size_t j = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (j > 0 && text[i] != pat[j]) j = pi[j - 1];
    if (text[i] == pat[j]) ++j;
    if (j == m) {
      out.push_back(i + 1 - m);
      j = pi[j - 1];
    }
  }
  return out;
}

inline bool is_factor(const BinaryWord& prefix, const BinaryWord& w) {
  if (w.empty()) return true;
  return !occurrences(prefix.view(), w.view()).empty();
}

// ---------------------------------------------------------------------------
// Fractional powers
// ---------------------------------------------------------------------------

// w repeated floor(r) times followed by the prefix of w of length
// |w|*(r - floor(r)); r must be expressible with denominator |w|.
inline BinaryWord fractional_power(const BinaryWord& w, const BigRational& r) {
  if (w.empty()) throw std::invalid_argument("fractional_power: empty base word");
  if (r < 1) throw std::invalid_argument("fractional_power: exponent must be >= 1");
  BigInt k = floor_rational(r);
  BigRational tail_len = (r - BigRational(k)) * BigInt(w.size());
  if (denominator(tail_len) != 1)
    throw std::invalid_argument(
        "fractional_power: exponent not expressible with denominator |w|");
  if (k * BigInt(w.size()) + numerator(tail_len) > BigInt(kDefaultPrefixCap))
    throw std::length_error("fractional_power: result exceeds the prefix cap");
  auto copies = k.convert_to<std::size_t>();
  auto tail = numerator(tail_len).convert_to<std::size_t>();
  std::string out;
  out.reserve(copies * w.size() + tail);
  for (std::size_t i = 0; i < copies; ++i) out += w.str();
  out += w.str().substr(0, tail);
  return BinaryWord::unchecked(std::move(out));
}

// ---------------------------------------------------------------------------
// Index of a factor within a finite prefix
// ---------------------------------------------------------------------------

struct FactorIndexResult {
  BinaryWord factor;
  BigRational index;        // reduced; power_length / |factor| unreduced
  std::size_t witness_start = 0;
  std::size_t power_length = 0;  // length of the maximal power found
  bool lower_bound_only = true;  // finite prefixes only ever certify lower bounds
};

// Maximum r (denominator |w|) with w^r occurring in the prefix, plus the
// leftmost witness among the longest powers.
inline FactorIndexResult index_in_prefix(const BinaryWord& prefix, const BinaryWord& w) {
  if (w.empty()) throw std::invalid_argument("index_in_prefix: empty factor");
  const std::string& t = prefix.str();
  const std::string& pat = w.str();
  auto occ = occurrences(t, pat);
  if (occ.empty()) throw std::domain_error("index_in_prefix: word is not a factor of the prefix");
  const std::size_t m = pat.size();
  std::vector<char> occ_at(t.size() + 1, 0);
  for (std::size_t o : occ) occ_at[o] = 1;
  std::size_t best_len = 0, best_start = 0;
  for (std::size_t o : occ) {
    if (o >= m && occ_at[o - m]) continue;  // interior of a chain
    std::size_t k = 1;
    while (o + k * m + m <= t.size() && occ_at[o + k * m]) ++k;
    std::size_t tail_pos = o + k * m;
    std::size_t ext = 0;
    while (tail_pos + ext < t.size() && t[tail_pos + ext] == pat[ext]) ++ext;
    std::size_t len = k * m + ext;
    if (len > best_len) {
      best_len = len;
      best_start = o;
    }
  }
  return {w, BigRational(best_len, m), best_start, best_len, true};
}

// ---------------------------------------------------------------------------
// Maximal repetitions (runs)
// ---------------------------------------------------------------------------

struct Run {
  std::size_t start = 0;
  std::size_t period = 0;  // smallest period of the substring
  std::size_t length = 0;
  BigRational exponent;    // length / period, >= 2

  friend bool operator==(const Run&, const Run&) = default;
};

namespace detail {

// Candidate intervals per period are deduplicated into (start,end) -> min
// period; the minimum over detected periods is the smallest period of the
// interval, so exactly the genuine runs survive.
inline std::vector<Run> runs_from_candidates(
    const std::unordered_map<std::uint64_t, std::size_t>& best) {
  std::vector<Run> runs;
  runs.reserve(best.size());
  for (const auto& [key, per] : best) {
    auto s = static_cast<std::size_t>(key >> 32);
    auto e = static_cast<std::size_t>(key & 0xffffffffu);
    runs.push_back({s, per, e - s, BigRational(e - s, per)});
  }
  std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) {
    return a.start != b.start ? a.start < b.start : a.period < b.period;
  });
  return runs;
}

inline void record_candidate(std::unordered_map<std::uint64_t, std::size_t>& best,
                             std::size_t s, std::size_t e, std::size_t per) {
  std::uint64_t key = (static_cast<std::uint64_t>(s) << 32) | e;
  auto [it, inserted] = best.emplace(key, per);
  if (!inserted && per < it->second) it->second = per;
}

}  // namespace detail

// All maximal repetitions with exponent >= 2, found by anchored period
// scanning with O(1) extension queries; O(n log n) overall.
inline std::vector<Run> maximal_runs(const BinaryWord& prefix) {
  const std::size_t n = prefix.size();
  if (n < 2) return {};
  detail::BidirLce lce(prefix.view());
  std::unordered_map<std::uint64_t, std::size_t> best;
  for (std::size_t per = 1; 2 * per <= n; ++per)
    detail::for_each_periodic_interval(lce, per, [&](std::size_t s, std::size_t e) {
      detail::record_candidate(best, s, e, per);
    });
  return detail::runs_from_candidates(best);
}

// Reference implementation straight from the definition: for every period,
// locate maximal stretches of positions with word[i] == word[i+per].
// Quadratic; the extensional contract for maximal_runs.
inline std::vector<Run> maximal_runs_naive(const BinaryWord& prefix) {
  const std::string& t = prefix.str();
  const std::size_t n = t.size();
  std::unordered_map<std::uint64_t, std::size_t> best;
  for (std::size_t per = 1; 2 * per <= n; ++per) {
    std::size_t i = 0;
    while (i + per < n) {
      if (t[i] != t[i + per]) {
        ++i;
        continue;
      }
      std::size_t u = i;
      while (u + per < n && t[u] == t[u + per]) ++u;
      if (u + per - i >= 2 * per) detail::record_candidate(best, i, u + per, per);
      i = u + 1;
    }
  }
  return detail::runs_from_candidates(best);
}

struct MaxIntegerPower {
  std::uint64_t k = 1;
  BinaryWord witness;
  std::size_t witness_start = 0;
};

// Largest k with some nonempty w^k occurring in the prefix; ties broken by
// shortest witness, then leftmost.
inline MaxIntegerPower max_integer_power(const BinaryWord& prefix) {
  if (prefix.size() < 2)
    throw std::invalid_argument("max_integer_power: prefix of length >= 2 required");
  auto runs = maximal_runs(prefix);
  if (runs.empty()) return {1, prefix.substr(0, 1), 0};
  std::uint64_t k = 1;
  for (const Run& r : runs) k = std::max<std::uint64_t>(k, r.length / r.period);
  std::size_t best_per = SIZE_MAX, best_start = 0;
  for (const Run& r : runs) {
    if (r.length / r.period != k) continue;
    if (r.period < best_per || (r.period == best_per && r.start < best_start)) {
      best_per = r.period;
      best_start = r.start;
    }
  }
  return {k, prefix.substr(best_start, best_per), best_start};
}

// ---------------------------------------------------------------------------
// Factor complexity and special factors
// ---------------------------------------------------------------------------

struct ComplexityProfile {
  std::vector<std::uint64_t> counts;  // counts[n] = distinct factors of length n
  std::size_t saturated_up_to = 0;    // counts agree with the half prefix through here
};

namespace detail {

inline std::vector<std::uint64_t> distinct_factor_counts(std::string_view text,
                                                         std::size_t n_max) {
  const std::size_t len = text.size();
  std::vector<std::uint64_t> counts(n_max + 1, 0);
  counts[0] = 1;
  if (len == 0 || n_max == 0) return counts;
  LcpIndex idx(text);
  // #factors of length m = (len - m + 1) - #{adjacent suffix pairs with lcp >= m}
  std::vector<std::uint64_t> lcp_ge(n_max + 2, 0);
  for (int v : idx.lcp_array()) {
    std::size_t capped = std::min<std::size_t>(static_cast<std::size_t>(v), n_max);
    if (capped >= 1) ++lcp_ge[capped];
  }
  for (std::size_t m = n_max; m >= 1; --m) lcp_ge[m] += lcp_ge[m + 1];
  for (std::size_t m = 1; m <= std::min(n_max, len); ++m)
    counts[m] = (len - m + 1) - lcp_ge[m];
  return counts;
}

}  // namespace detail

// Exact distinct-factor counts for lengths <= n_max, plus the largest n whose
// counts agree with those of the half-length prefix (factor sets of a prefix
// only grow, so equal counts mean equal sets).
inline ComplexityProfile factor_complexity(const BinaryWord& prefix, std::size_t n_max) {
  if (n_max < 1) throw std::invalid_argument("factor_complexity: n_max >= 1 required");
  if (n_max > prefix.size())
    throw std::invalid_argument("factor_complexity: n_max exceeds prefix length");
  ComplexityProfile profile;
  profile.counts = detail::distinct_factor_counts(prefix.view(), n_max);
  const std::size_t half = prefix.size() / 2;
  auto half_counts =
      detail::distinct_factor_counts(prefix.view().substr(0, half), std::min(n_max, half));
  std::size_t sat = 0;
  for (std::size_t n = 1; n <= n_max && n < half_counts.size(); ++n) {
    if (profile.counts[n] != half_counts[n]) break;
    sat = n;
  }
  profile.saturated_up_to = sat;
  return profile;
}

struct SpecialFactors {
  std::vector<BinaryWord> left;
  std::vector<BinaryWord> right;
  std::vector<BinaryWord> bispecial;
};

// Left/right/bispecial factors of one length, by direct window scanning with
// extension masks. Requires the prefix to be saturated through n+2 so that
// the observed extensions are reliable.
inline SpecialFactors special_factors(const BinaryWord& prefix, std::size_t n,
                                      bool require_saturated = true) {
  const std::string& t = prefix.str();
  const std::size_t len = t.size();
  if (require_saturated) {
    if (n + 2 > len)
      throw std::runtime_error("special_factors: prefix shorter than n+2");
    auto profile = factor_complexity(prefix, n + 2);
    if (profile.saturated_up_to < n + 2)
      throw std::runtime_error("special_factors: prefix not saturated at length n+2");
  }
  SpecialFactors out;
  bool has0 = t.find('0') != std::string::npos;
  bool has1 = t.find('1') != std::string::npos;
  if (n == 0) {
    if (has0 && has1) {
      BinaryWord eps;
      out.left.push_back(eps);
      out.right.push_back(eps);
      out.bispecial.push_back(eps);
    }
    return out;
  }
  if (n >= len) return out;
  std::unordered_map<std::string_view, std::uint8_t> ext;
  for (std::size_t i = 0; i + n <= len; ++i) {
    std::uint8_t mask = 0;
    if (i > 0) mask |= (t[i - 1] == '0') ? 1 : 2;
    if (i + n < len) mask |= (t[i + n] == '0') ? 4 : 8;
    ext[std::string_view(t).substr(i, n)] |= mask;
  }
  for (const auto& [sv, mask] : ext) {
    bool left = (mask & 1) && (mask & 2);
    bool right = (mask & 4) && (mask & 8);
    if (left) out.left.emplace_back(BinaryWord::unchecked(std::string(sv)));
    if (right) out.right.emplace_back(BinaryWord::unchecked(std::string(sv)));
    if (left && right) out.bispecial.emplace_back(BinaryWord::unchecked(std::string(sv)));
  }
  std::sort(out.left.begin(), out.left.end());
  std::sort(out.right.begin(), out.right.end());
  std::sort(out.bispecial.begin(), out.bispecial.end());
  return out;
}

// Special factors for every length 0..n_max in one pass over the suffix
// arrays of the prefix and its reverse. A factor of length n is right
// special exactly when some adjacent suffix pair shares precisely its first
// n symbols and both continue.
inline std::vector<SpecialFactors> special_factor_profile(const BinaryWord& prefix,
                                                          std::size_t n_max) {
  const std::string& t = prefix.str();
  const std::size_t len = t.size();
  std::vector<std::set<std::string>> right(n_max + 1), left(n_max + 1);

  auto collect_right = [&](std::string_view text, std::vector<std::set<std::string>>& into) {
    if (text.size() < 2) return;
    detail::LcpIndex idx(text);
    const auto& sa = idx.suffix_array();
    const auto& lcp = idx.lcp_array();
    for (std::size_t k = 1; k < text.size(); ++k) {
      auto v = static_cast<std::size_t>(lcp[k]);
      if (v < 1 || v > n_max) continue;
      std::size_t i1 = static_cast<std::size_t>(sa[k - 1]);
      std::size_t i2 = static_cast<std::size_t>(sa[k]);
      if (i1 + v < text.size() && i2 + v < text.size())
        into[v].insert(std::string(text.substr(i2, v)));
    }
  };

  collect_right(t, right);
  std::string rev(t.rbegin(), t.rend());
  std::vector<std::set<std::string>> left_rev(n_max + 1);
  collect_right(rev, left_rev);
  for (std::size_t n = 1; n <= n_max; ++n)
    for (const std::string& s : left_rev[n]) left[n].insert(std::string(s.rbegin(), s.rend()));

  std::vector<SpecialFactors> out(n_max + 1);
  bool has0 = t.find('0') != std::string::npos;
  bool has1 = t.find('1') != std::string::npos;
  if (has0 && has1) {
    BinaryWord eps;
    out[0].left.push_back(eps);
    out[0].right.push_back(eps);
    out[0].bispecial.push_back(eps);
  }
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (const auto& s : left[n]) out[n].left.push_back(BinaryWord::unchecked(s));
    for (const auto& s : right[n]) {
      out[n].right.push_back(BinaryWord::unchecked(s));
      if (left[n].count(s)) out[n].bispecial.push_back(BinaryWord::unchecked(s));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bispecial power chains
// ---------------------------------------------------------------------------

inline bool is_bispecial_in(const BinaryWord& prefix, const BinaryWord& u) {
  const std::string& t = prefix.str();
  if (u.empty())
    return t.find('0') != std::string::npos && t.find('1') != std::string::npos;
  std::uint8_t mask = 0;
  for (std::size_t o : occurrences(t, u.view())) {
    if (o > 0) mask |= (t[o - 1] == '0') ? 1 : 2;
    if (o + u.size() < t.size()) mask |= (t[o + u.size()] == '0') ? 4 : 8;
    if (mask == 0xf) return true;
  }
  return mask == 0xf;
}

// True iff w', ww', ..., w^{k-1}w' are all bispecial in the prefix. The
// caller supplies a power w^k w' that actually occurs.
inline bool check_power_bispecial_chain(const BinaryWord& prefix, const BinaryWord& w,
                                        std::uint64_t k, const BinaryWord& w_prime) {
  if (w.empty() || k < 1)
    throw std::invalid_argument("check_power_bispecial_chain: need nonempty w and k >= 1");
  BinaryWord power = w.repeated(static_cast<std::size_t>(k)) + w_prime;
  if (!is_factor(prefix, power))
    throw std::invalid_argument("check_power_bispecial_chain: power does not occur in prefix");
  BinaryWord u = w_prime;
  for (std::uint64_t j = 0; j < k; ++j) {
    if (!is_bispecial_in(prefix, u)) return false;
    u = w + u;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Saturation protocol
// ---------------------------------------------------------------------------

// Doubles the prefix until factor counts through stat_len + 2 are stable
// under halving; the resulting prefix stands in for the infinite language at
// factor lengths <= stat_len.
inline BinaryWord saturated_prefix(const ParryParams& params, std::size_t stat_len,
                                   std::size_t start_len = std::size_t{1} << 14,
                                   std::size_t cap = kDefaultPrefixCap) {
  std::size_t want = stat_len + 2;
  for (std::size_t len = std::max(start_len, 4 * want); len <= cap; len *= 2) {
    BinaryWord w = fixed_point_prefix(params, len, true, cap);
    auto profile = factor_complexity(w, std::min(want, w.size()));
    if (profile.saturated_up_to >= want) return w;
  }
  throw std::length_error("saturated_prefix: cap exceeded before saturation");
}

// ---------------------------------------------------------------------------
// Structure censuses
// ---------------------------------------------------------------------------

// Distinct lengths of maximal 0-blocks lying strictly between two 1s.
inline std::vector<std::size_t> interior_zero_run_lengths(const BinaryWord& prefix) {
  const std::string& t = prefix.str();
  std::set<std::size_t> lengths;
  std::size_t first1 = t.find('1');
  std::size_t last1 = t.rfind('1');
  if (first1 == std::string::npos || first1 == last1) return {};
  std::size_t pos = first1;
  while (pos < last1) {
    std::size_t next = t.find('1', pos + 1);
    lengths.insert(next - pos - 1);
    pos = next;
  }
  return {lengths.begin(), lengths.end()};
}

// Occurrence of border (x sep)^ell x border; x may contain both letters.
struct ChainPattern {
  std::size_t start = 0;   // position of the leading border symbol
  std::size_t period = 0;  // |x| + 1
  std::size_t ell = 0;
  BinaryWord x;
};

// Finds every factor of the shape  border (x sep)^ell x border  with
// ell >= min_ell >= 2. The inner part (x sep)^ell x is a maximal interval of
// period |x|+1 (the borders mismatch the separator), so anchored period
// scanning enumerates all candidates.
inline std::vector<ChainPattern> scan_chain_patterns(const BinaryWord& prefix, char border,
                                                     char sep, std::size_t min_ell) {
  if (min_ell < 2)
    throw std::invalid_argument("scan_chain_patterns: handles ell >= 2 only");
  const std::string& t = prefix.str();
  const std::size_t n = t.size();
  std::vector<ChainPattern> hits;
  if (n < 4) return hits;
  detail::BidirLce lce(prefix.view());
  for (std::size_t per = 1; (min_ell + 1) * per - 1 + 2 <= n; ++per) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    detail::for_each_periodic_interval(lce, per, [&](std::size_t s, std::size_t e) {
      if (!seen.insert({s, e}).second) return;
      std::size_t inner = e - s;
      if ((inner + 1) % per != 0) return;
      std::size_t ell = (inner + 1) / per - 1;
      if (ell < min_ell) return;
      if (s == 0 || e >= n) return;
      if (t[s - 1] != border || t[e] != border) return;
      if (t[s + per - 1] != sep) return;
      hits.push_back({s - 1, per, ell, BinaryWord::unchecked(t.substr(s, per - 1))});
    });
  }
  std::sort(hits.begin(), hits.end(), [](const ChainPattern& a, const ChainPattern& b) {
    return a.start != b.start ? a.start < b.start : a.period < b.period;
  });
  return hits;
}

}  // namespace parry
