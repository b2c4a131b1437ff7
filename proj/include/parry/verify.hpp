#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "parry/continued_fraction.hpp"
#include "parry/quadratic.hpp"
#include "parry/repetition.hpp"
#include "parry/theory.hpp"
#include "parry/words.hpp"

namespace parry::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  bool pass = true;
};

struct Options {
  int p_max = 8;
  std::size_t power_prefix_len = 200000;
  int closed_form_n_max = 100;
  int monotone_n_max = 100;
  int sturmian_n_max = 20;
  int exceptional_n_max = 50;
  std::size_t complexity_n_max = 500;
  int random_cases = 500;
  std::size_t bispecial_len_max = 100;
  int runs_samples = 1000;
  std::size_t runs_word_len = 512;
  std::size_t saturation_cap = std::size_t{1} << 23;
  std::uint64_t seed = 0x7a22'0811;
  bool inject_fault = false;  // harness self-test: corrupts one computed value
};

inline std::vector<ParryParams> parameter_grid(int p_max) {
  std::vector<ParryParams> cells;
  for (long long p = 2; p <= p_max; ++p)
    for (long long q = 1; q < p; ++q) cells.emplace_back(p, q);
  return cells;
}

namespace detail {

inline std::string cell_tag(const ParryParams& params) {
  return "p=" + std::to_string(params.p()) + ",q=" + std::to_string(params.q());
}

inline void add(std::vector<Check>& checks, std::string name, bool pass,
                std::string detail = {}) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

inline BinaryWord random_factor(std::mt19937_64& rng, const BinaryWord& prefix,
                                std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
  std::size_t len = std::min(len_dist(rng), prefix.size());
  std::uniform_int_distribution<std::size_t> pos_dist(0, prefix.size() - len);
  return prefix.substr(pos_dist(rng), len);
}

}  // namespace detail

// 1. Largest integer power of any factor, brute force over a long prefix,
// against the predicted value p+1 (p <= 2q) / p (p > 2q).
inline CriterionResult criterion_max_integer_power(const Options& opts) {
  CriterionResult res{1, "maximal integer power over the grid"};
  bool first = true;
  for (const auto& params : parameter_grid(opts.p_max)) {
    BinaryWord prefix = fixed_point_prefix(params, opts.power_prefix_len);
    MaxIntegerPower found = max_integer_power(prefix);
    if (opts.inject_fault && first) found.k += 1;
    first = false;
    auto predicted = static_cast<std::uint64_t>(predicted_max_integer_power(params));
    std::ostringstream os;
    os << "k=" << found.k << " predicted=" << predicted << " witness=" << found.witness.str();
    detail::add(res.checks, "max-power " + detail::cell_tag(params), found.k == predicted,
                os.str());
  }
  return res;
}

// 2. ind(w(0)) = p and ind(w(1)) = p + (2q+1)/(p+1), exactly from counts and
// confirmed by the brute-force index of the materialized words.
inline CriterionResult criterion_base_indices(const Options& opts) {
  CriterionResult res{2, "witness indices at n = 0, 1: exact and brute-force confirmed"};
  for (const auto& params : parameter_grid(opts.p_max)) {
    const long long p = params.p(), q = params.q();
    BigRational exact0 = witness_index(params, 0);
    BigRational exact1 = witness_index(params, 1);
    BigRational want1 = BigRational(p) + BigRational(2 * q + 1, p + 1);
    BinaryWord prefix = fixed_point_prefix(params, opts.power_prefix_len);
    BigRational brute0 = index_in_prefix(prefix, BinaryWord("0")).index;
    WitnessPair pair1 = witness_pair(params, 1);
    BigRational brute1 = index_in_prefix(prefix, *pair1.w_word).index;
    bool ok = exact0 == BigRational(p) && exact1 == want1 && brute0 == exact0 &&
              brute1 == exact1;
    detail::add(res.checks, "base-index " + detail::cell_tag(params), ok,
                "ind(w0)=" + to_fraction_string(exact0) + " brute=" + to_fraction_string(brute0) +
                    " ind(w1)=" + to_fraction_string(exact1) +
                    " brute=" + to_fraction_string(brute1));
  }
  return res;
}

// 3. Counts-based index equals the eigenvalue closed form, n <= 100; the
// sqrt(D) component must cancel identically (checked inside).
inline CriterionResult criterion_closed_form(const Options& opts) {
  CriterionResult res{3, "counts-based index equals the closed form"};
  for (const auto& params : parameter_grid(opts.p_max)) {
    bool ok = true;
    std::string why;
    for (int n = 0; n <= opts.closed_form_n_max && ok; ++n) {
      BigRational lhs = witness_index(params, n);
      BigRational rhs = witness_index_closed_form(params, n);
      if (lhs != rhs) {
        ok = false;
        why = "mismatch at n=" + std::to_string(n);
      }
    }
    detail::add(res.checks, "closed-form " + detail::cell_tag(params), ok, why);
  }
  return res;
}

// 4. For p <= 3q+1: ind(w(n)) strictly increases, stays below the limit, and
// is within 10^-20 of it by n = 100.
inline CriterionResult criterion_monotone_limit(const Options& opts) {
  CriterionResult res{4, "index increases strictly to its limit when p <= 3q+1"};
  BigRational tol(BigInt(1), boost::multiprecision::pow(BigInt(10), 20));
  for (const auto& params : parameter_grid(opts.p_max)) {
    if (params.p() > 3 * params.q() + 1) continue;
    QuadraticNumber limit = limit_index(params);
    bool ok = true;
    std::string why;
    BigRational prev = witness_index(params, 0);
    if (!(QuadraticNumber(prev) < limit)) {
      ok = false;
      why = "term at n=0 not below limit";
    }
    for (int n = 1; n <= opts.monotone_n_max && ok; ++n) {
      BigRational cur = witness_index(params, n);
      if (!(cur > prev)) {
        ok = false;
        why = "not strictly increasing at n=" + std::to_string(n);
      } else if (!(QuadraticNumber(cur) < limit)) {
        ok = false;
        why = "term at n=" + std::to_string(n) + " not below limit";
      }
      prev = cur;
    }
    if (ok) {
      QuadraticNumber gap = limit - QuadraticNumber(prev);
      if (!(gap.sign() > 0 && gap < QuadraticNumber(tol))) {
        ok = false;
        why = "limit gap at n=" + std::to_string(opts.monotone_n_max) + " not below 10^-20";
      }
    }
    detail::add(res.checks, "monotone-limit " + detail::cell_tag(params), ok, why);
  }
  return res;
}

// 5. For p > 3q+1 the supremum is attained: finite n0 with a certified stop;
// for p=5,q=1 specifically n0=2, value 177/32, search done by n <= 10.
inline CriterionResult criterion_attained_verdicts(const Options& opts) {
  CriterionResult res{5, "attained index verdicts when p > 3q+1"};
  for (const auto& params : parameter_grid(opts.p_max)) {
    if (params.p() <= 3 * params.q() + 1) continue;
    IndexVerdict v = word_index(params);
    QuadraticNumber limit = limit_index(params);
    bool ok = v.attained && v.n0.has_value() &&
              QuadraticNumber(verdict_rational(v)) > limit;
    std::string why = ok ? "n0=" + std::to_string(*v.n0) + " value=" +
                               to_fraction_string(verdict_rational(v))
                         : "verdict not attained or not above limit";
    if (ok && params.p() == 5 && params.q() == 1) {
      ok = *v.n0 == 2 && verdict_rational(v) == BigRational(177, 32) &&
           v.explored_up_to <= 10;
      if (!ok) why = "expected n0=2, 177/32, stop by n<=10; certificate: " + v.certificate;
    }
    detail::add(res.checks, "attained " + detail::cell_tag(params), ok, why);
  }
  return res;
}

// 6. Sturmian cross-check for q = p-1: the even-position index-formula term
// equals ind(w(n)) exactly, and the supremum is beta+1 = limit.
inline CriterionResult criterion_sturmian(const Options& opts) {
  CriterionResult res{6, "Sturmian cross-check (q = p-1)"};
  for (long long p = 2; p <= opts.p_max; ++p) {
    ParryParams params(p, p - 1);
    auto [beta, beta_conj] = beta_roots(params);
    (void)beta_conj;
    QuadraticNumber limit = limit_index(params);
    bool ok = limit == beta + QuadraticNumber(1);
    std::string why = ok ? "" : "limit != beta+1";
    BigRational prev;
    for (int n = 0; n <= opts.sturmian_n_max && ok; ++n) {
      BigRational term = sturmian_index_term(p, 2 * n);
      if (term != witness_index(params, n)) {
        ok = false;
        why = "term mismatch at n=" + std::to_string(n);
      } else if (n > 0 && !(term > prev)) {
        ok = false;
        why = "terms not increasing at n=" + std::to_string(n);
      } else if (!(QuadraticNumber(term) < limit)) {
        ok = false;
        why = "term at n=" + std::to_string(n) + " not below beta+1";
      }
      prev = term;
    }
    detail::add(res.checks, "sturmian p=" + std::to_string(p), ok, why);
  }
  return res;
}

// 7. The exceptional family at p=3, q=1: base index 19/6, strictly
// increasing toward beta = 2+sqrt(2), always below 4; the generic verdict
// (limit 4, not attained) stands.
inline CriterionResult criterion_exceptional(const Options& opts) {
  CriterionResult res{7, "exceptional witness family at p=3, q=1"};
  ParryParams params(3, 1);
  auto [beta, beta_conj] = beta_roots(params);
  (void)beta_conj;
  bool ok = exceptional_witness_index(params, 0) == BigRational(19, 6);
  std::string why = ok ? "" : "base index is not 19/6";
  BigRational prev = exceptional_witness_index(params, 0);
  for (int n = 1; n <= opts.exceptional_n_max && ok; ++n) {
    BigRational cur = exceptional_witness_index(params, n);
    if (!(cur > prev)) {
      ok = false;
      why = "not increasing at n=" + std::to_string(n);
    } else if (!(QuadraticNumber(cur) < beta)) {
      ok = false;
      why = "term at n=" + std::to_string(n) + " not below beta";
    } else if (!(cur < BigRational(4))) {
      ok = false;
      why = "term at n=" + std::to_string(n) + " not below 4";
    }
    prev = cur;
  }
  if (ok) {
    QuadraticNumber gap = beta - QuadraticNumber(prev);
    BigRational tol(BigInt(1), boost::multiprecision::pow(BigInt(10), 9));
    if (!(gap.sign() > 0 && gap < QuadraticNumber(tol))) {
      ok = false;
      why = "sequence does not approach beta";
    }
  }
  if (ok) {
    IndexVerdict v = word_index(params);
    QuadraticNumber four{BigRational(4)};
    if (v.attained || !(verdict_quadratic(v) == four)) {
      ok = false;
      why = "word index verdict is not the unattained value 4";
    }
  }
  detail::add(res.checks, "exceptional p=3,q=1", ok, why);
  res.pass = ok;
  return res;
}

// Per-cell context shared by the saturated-prefix criteria.
struct CellContext {
  ParryParams params;
  BinaryWord sat;
  parry::detail::LcpIndex index;

  CellContext(const ParryParams& prm, std::size_t stat_len, std::size_t cap)
      : params(prm),
        sat(saturated_prefix(prm, stat_len, std::size_t{1} << 14, cap)),
        index(sat.view()) {}
};

// 8. Factor complexity: C(n) = n+1 in the Sturmian case, otherwise
// C(n+1) - C(n) in {1,2}, through n = 500 on a saturated prefix.
inline void criterion_complexity_cell(const Options& opts, const CellContext& ctx,
                                      CriterionResult& res) {
  auto profile = factor_complexity(ctx.sat, opts.complexity_n_max + 2);
  bool ok = profile.saturated_up_to >= opts.complexity_n_max + 2;
  std::string why = ok ? "" : "prefix not saturated";
  const bool sturmian = ctx.params.p() == ctx.params.q() + 1;
  for (std::size_t n = 1; n <= opts.complexity_n_max && ok; ++n) {
    if (sturmian) {
      if (profile.counts[n] != n + 1) {
        ok = false;
        why = "C(" + std::to_string(n) + ") != n+1";
      }
    } else {
      std::uint64_t diff = profile.counts[n] - profile.counts[n - 1];
      if (diff != 1 && diff != 2) {
        ok = false;
        why = "C(n+1)-C(n) outside {1,2} at n=" + std::to_string(n - 1);
      }
    }
  }
  detail::add(res.checks, "complexity " + detail::cell_tag(ctx.params), ok, why);
}

// 9. Properties of the bispecial-image map T(w) = 0^q 1 phi(w) 0^q:
// factor preservation, two-sided extension equivalence, prefix/suffix
// equivalence (randomized), and full agreement of generated bispecials with
// the brute-force enumeration through length 100.
inline void criterion_morphic_map_cell(const Options& opts, const CellContext& ctx,
                                       CriterionResult& res) {
  const auto& params = ctx.params;
  std::mt19937_64 rng(opts.seed ^ (static_cast<std::uint64_t>(params.p()) << 16) ^
                      static_cast<std::uint64_t>(params.q()));
  bool ok = true;
  std::string why;

  for (int c = 0; c < opts.random_cases && ok; ++c) {
    BinaryWord w = detail::random_factor(rng, ctx.sat, 0, 50);
    if (!ctx.index.contains(bispecial_image(params, w).view())) {
      ok = false;
      why = "image of a factor is not a factor (|w|=" + std::to_string(w.size()) + ")";
    }
  }
  for (int c = 0; c < opts.random_cases && ok; ++c) {
    BinaryWord w = detail::random_factor(rng, ctx.sat, 0, 50);
    char a = (rng() & 1) ? '1' : '0';
    char b = (rng() & 1) ? '1' : '0';
    std::string awb = std::string(1, a) + w.str() + std::string(1, b);
    std::string atb = std::string(1, a) + bispecial_image(params, w).str() + std::string(1, b);
    if (ctx.index.contains(awb) != ctx.index.contains(atb)) {
      ok = false;
      why = "two-sided extension equivalence failed for a=" + std::string(1, a) +
            " b=" + std::string(1, b) + " |w|=" + std::to_string(w.size());
    }
  }
  for (int c = 0; c < opts.random_cases && ok; ++c) {
    BinaryWord v = detail::random_factor(rng, ctx.sat, 1, 60);
    BinaryWord w = (rng() & 1)
                       ? v.substr(0, std::uniform_int_distribution<std::size_t>(0, v.size())(rng))
                       : detail::random_factor(rng, ctx.sat, 0, v.size());
    BinaryWord tw = bispecial_image(params, w);
    BinaryWord tv = bispecial_image(params, v);
    if (tv.starts_with(tw) != v.starts_with(w)) {
      ok = false;
      why = "prefix equivalence failed";
    }
  }
  for (int c = 0; c < opts.random_cases && ok; ++c) {
    BinaryWord v = detail::random_factor(rng, ctx.sat, 1, 60);
    BinaryWord w =
        (rng() & 1)
            ? v.substr(std::uniform_int_distribution<std::size_t>(0, v.size())(rng), v.size())
            : detail::random_factor(rng, ctx.sat, 0, v.size());
    BinaryWord tw = bispecial_image(params, w);
    BinaryWord tv = bispecial_image(params, v);
    if (tv.ends_with(tw) != v.ends_with(w)) {
      ok = false;
      why = "suffix equivalence failed";
    }
  }
  if (ok) {
    auto generated = generate_bispecials(params, opts.bispecial_len_max);
    auto profile = special_factor_profile(ctx.sat, opts.bispecial_len_max);
    std::vector<BinaryWord> brute;
    for (const auto& level : profile)
      brute.insert(brute.end(), level.bispecial.begin(), level.bispecial.end());
    std::sort(brute.begin(), brute.end(), [](const BinaryWord& a, const BinaryWord& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    if (generated != brute) {
      ok = false;
      why = "generated bispecials (" + std::to_string(generated.size()) +
            ") differ from brute force (" + std::to_string(brute.size()) + ")";
    }
  }
  detail::add(res.checks, "bispecial-map " + detail::cell_tag(params), ok, why);
}

// 10. Zero-run census: interior 0-blocks have length p or q only; no factor
// 0 (x1)^ell x 0 with ell >= 3; for ell = 2 the middle x is exactly 0^q.
inline void criterion_census_cell(const Options& opts, const CellContext& ctx,
                                  CriterionResult& res) {
  (void)opts;
  const auto& params = ctx.params;
  auto lengths = interior_zero_run_lengths(ctx.sat);
  bool ok = true;
  std::string why;
  for (std::size_t len : lengths) {
    if (len != static_cast<std::size_t>(params.p()) &&
        len != static_cast<std::size_t>(params.q())) {
      ok = false;
      why = "interior zero-run of length " + std::to_string(len);
    }
  }
  if (ok) {
    BinaryWord zq = BinaryWord::zeros(static_cast<std::size_t>(params.q()));
    for (const ChainPattern& hit : scan_chain_patterns(ctx.sat, '0', '1', 2)) {
      if (hit.ell >= 3) {
        ok = false;
        why = "chain pattern with ell=" + std::to_string(hit.ell) + " at " +
              std::to_string(hit.start);
        break;
      }
      if (hit.x != zq) {
        ok = false;
        why = "ell=2 chain pattern with x != 0^q at " + std::to_string(hit.start);
        break;
      }
    }
  }
  detail::add(res.checks, "census " + detail::cell_tag(params), ok, why);
}

// 11. The runs engine agrees with the naive definition checker on sampled
// fixed-point windows and uniform random words.
inline CriterionResult criterion_runs_oracle(const Options& opts) {
  CriterionResult res{11, "runs engine matches the naive definition checker"};
  std::mt19937_64 rng(opts.seed ^ 0xabcdefULL);
  auto grid = parameter_grid(opts.p_max);
  std::vector<BinaryWord> prefixes;
  prefixes.reserve(grid.size());
  for (const auto& params : grid)
    prefixes.push_back(fixed_point_prefix(params, 4096));
  int mismatches = 0;
  int half = opts.runs_samples / 2;
  for (int s = 0; s < opts.runs_samples; ++s) {
    BinaryWord w;
    if (s < half) {
      const BinaryWord& src = prefixes[static_cast<std::size_t>(s) % prefixes.size()];
      w = detail::random_factor(rng, src, 2, opts.runs_word_len);
    } else {
      std::uniform_int_distribution<std::size_t> len_dist(2, opts.runs_word_len);
      std::string t(len_dist(rng), '0');
      for (char& c : t) c = (rng() & 1) ? '1' : '0';
      w = BinaryWord::unchecked(std::move(t));
    }
    if (maximal_runs(w) != maximal_runs_naive(w)) ++mismatches;
  }
  detail::add(res.checks, "runs-oracle", mismatches == 0,
              std::to_string(opts.runs_samples) + " samples, " + std::to_string(mismatches) +
                  " discrepancies");
  res.pass = mismatches == 0;
  return res;
}

inline void finalize(CriterionResult& res) {
  res.pass = true;
  for (const Check& c : res.checks) res.pass = res.pass && c.pass;
}

// Runs every criterion on the grid 1 <= q < p <= p_max.
inline std::vector<CriterionResult> run_criteria(const Options& opts) {
  std::vector<CriterionResult> out;
  out.push_back(criterion_max_integer_power(opts));
  out.push_back(criterion_base_indices(opts));
  out.push_back(criterion_closed_form(opts));
  out.push_back(criterion_monotone_limit(opts));
  out.push_back(criterion_attained_verdicts(opts));
  out.push_back(criterion_sturmian(opts));
  out.push_back(criterion_exceptional(opts));

  CriterionResult complexity{8, "factor complexity growth on saturated prefixes"};
  CriterionResult morphic{9, "bispecial-image map property suite"};
  CriterionResult census{10, "zero-run and chain-pattern census"};
  for (const auto& params : parameter_grid(opts.p_max)) {
    CellContext ctx(params, opts.complexity_n_max, opts.saturation_cap);
    criterion_complexity_cell(opts, ctx, complexity);
    criterion_morphic_map_cell(opts, ctx, morphic);
    criterion_census_cell(opts, ctx, census);
  }
  out.push_back(std::move(complexity));
  out.push_back(std::move(morphic));
  out.push_back(std::move(census));

  out.push_back(criterion_runs_oracle(opts));
  for (auto& res : out) finalize(res);
  std::sort(out.begin(), out.end(),
            [](const CriterionResult& a, const CriterionResult& b) { return a.id < b.id; });
  return out;
}

inline bool all_pass(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace parry::verify
