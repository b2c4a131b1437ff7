// Command-line front end: generation, analysis, and the verification
// harness, with machine-readable JSON reports.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "parry/parry.hpp"

namespace {

using nlohmann::ordered_json;
using namespace parry;

std::size_t effective_prefix_cap() {
  if (const char* env = std::getenv("PARRY_MAX_PREFIX")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
    std::cerr << "warning: ignoring malformed PARRY_MAX_PREFIX\n";
  }
  return kDefaultPrefixCap;
}

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ordered_json json_rational(const BigRational& r) {
  return {{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

ordered_json json_quadratic(const QuadraticNumber& x) {
  return {{"a", json_rational(x.rational_part())},
          {"b", json_rational(x.sqrt_coefficient())},
          {"D", x.discriminant()},
          {"decimal", x.to_decimal_string()}};
}

ordered_json make_report(const std::string& command, std::optional<ParryParams> params,
                         ordered_json results) {
  ordered_json report;
  if (params)
    report["params"] = {{"p", params->p()}, {"q", params->q()}};
  else
    report["params"] = nullptr;
  report["command"] = command;
  report["results"] = std::move(results);
  report["provenance"] = {{"tool", std::string("parry ") + kVersion},
                          {"timestamp", iso_timestamp()}};
  return report;
}

void emit_report(const ordered_json& report, const std::string& json_path) {
  if (json_path.empty()) return;
  std::ofstream out(json_path);
  if (!out) throw std::runtime_error("cannot open " + json_path + " for writing");
  out << report.dump(2) << '\n';
}

BinaryWord read_word_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (!data.empty() && data.back() == '\n') data.pop_back();
  return BinaryWord(data);
}

void write_word_file(const std::string& path, const BinaryWord& w) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << w.str() << '\n';
}

int cmd_generate(long long p, long long q, std::size_t length, const std::string& out_path) {
  ParryParams params(p, q);
  BinaryWord w = fixed_point_prefix(params, length, true, effective_prefix_cap());
  write_word_file(out_path, w);
  AbelianVector counts = abelianize(w);
  std::cout << "length=" << w.size() << " count0=" << counts.count0
            << " count1=" << counts.count1 << '\n';
  return 0;
}

int cmd_index(long long p, long long q, std::optional<int> wn,
              const std::string& factor, std::size_t prefix_len,
              const std::string& json_path) {
  ParryParams params(p, q);
  const std::size_t cap = effective_prefix_cap();
  ordered_json results;
  if (wn) {
    if (*wn < 0) throw std::runtime_error("--wn must be nonnegative");
    WitnessPair pair = witness_pair(params, *wn);
    BigRational exact = witness_index(params, *wn);
    BigInt power_len = pair.v_counts.length();
    BigInt word_len = pair.w_counts.length();
    results["n"] = *wn;
    results["index"] = json_rational(exact);
    results["index_unreduced"] = {{"num", power_len.str()}, {"den", word_len.str()}};
    results["floor"] = floor_rational(exact).str();
    results["decimal"] = to_decimal_string(exact);
    results["word_length"] = word_len.str();
    results["power_length"] = power_len.str();
    std::string confirmation = "skipped (word too long to materialize)";
    if (pair.w_word) {
      confirmation = "not found within prefix cap";
      for (std::size_t len = prefix_len; len <= cap; len *= 2) {
        BinaryWord prefix = fixed_point_prefix(params, len, true, cap);
        if (!is_factor(prefix, *pair.w_word)) continue;
        BigRational brute = index_in_prefix(prefix, *pair.w_word).index;
        if (brute == exact) {
          confirmation = "confirmed by brute force on a prefix of length " + std::to_string(len);
          break;
        }
        if (2 * len > cap)
          confirmation = "brute-force lower bound " + to_fraction_string(brute) +
                         " at prefix cap";
      }
    }
    results["brute_force"] = confirmation;
    std::cout << "ind(w(" << *wn << ")) = " << to_fraction_string(exact) << " = "
              << to_decimal_string(exact, 15) << "  [" << confirmation << "]\n";
  } else {
    BinaryWord w(factor);
    if (w.empty()) throw std::runtime_error("--factor must be nonempty");
    std::size_t len = std::max<std::size_t>(prefix_len, 2 * w.size());
    BinaryWord prefix = fixed_point_prefix(params, len, true, cap);
    if (!is_factor(prefix, w)) {
      prefix = fixed_point_prefix(params, std::min(cap, 2 * len), true, cap);
      if (!is_factor(prefix, w))
        throw std::runtime_error("not a factor: \"" + factor + "\" does not occur in the first " +
                                 std::to_string(prefix.size()) + " symbols");
    }
    FactorIndexResult res = index_in_prefix(prefix, w);
    bool stable = false;
    while (2 * prefix.size() <= cap) {
      BinaryWord bigger = fixed_point_prefix(params, 2 * prefix.size(), true, cap);
      FactorIndexResult next = index_in_prefix(bigger, w);
      prefix = std::move(bigger);
      if (next.index == res.index) {
        res = next;
        stable = true;
        break;
      }
      res = next;
    }
    results["factor"] = w.str();
    results["index"] = json_rational(res.index);
    results["index_unreduced"] = {{"num", std::to_string(res.power_length)},
                                  {"den", std::to_string(w.size())}};
    results["decimal"] = to_decimal_string(res.index);
    results["witness_start"] = res.witness_start;
    results["power_length"] = res.power_length;
    results["lower_bound_only"] = res.lower_bound_only;
    results["stable_under_doubling"] = stable;
    results["prefix_length"] = prefix.size();
    std::cout << "ind(\"" << w.str() << "\") >= " << to_fraction_string(res.index) << " = "
              << to_decimal_string(res.index, 15) << "  (prefix of length " << prefix.size()
              << (stable ? ", stable under doubling" : ", not yet stable") << ")\n";
  }
  emit_report(make_report("index", params, results), json_path);
  return 0;
}

int cmd_powers(long long p, long long q, std::size_t prefix_len, const std::string& in_path,
               const std::string& json_path) {
  std::optional<ParryParams> params;
  BinaryWord prefix;
  if (!in_path.empty()) {
    prefix = read_word_file(in_path);
    if (p > 0 && q > 0) params = ParryParams(p, q);
  } else {
    params = ParryParams(p, q);
    prefix = fixed_point_prefix(*params, prefix_len, true, effective_prefix_cap());
  }
  MaxIntegerPower mp = max_integer_power(prefix);
  ordered_json results;
  results["prefix_length"] = prefix.size();
  results["k"] = mp.k;
  results["witness"] = mp.witness.str();
  results["witness_start"] = mp.witness_start;
  std::cout << "max integer power k=" << mp.k << " witness=\"" << mp.witness.str()
            << "\" at " << mp.witness_start;
  if (params) {
    long long predicted = predicted_max_integer_power(*params);
    results["predicted"] = predicted;
    results["matches_prediction"] = static_cast<long long>(mp.k) == predicted;
    std::cout << "  predicted=" << predicted;
  }
  std::cout << '\n';
  emit_report(make_report("powers", params, results), json_path);
  return 0;
}

int cmd_complexity(long long p, long long q, std::size_t max_n, std::size_t prefix_len,
                   const std::string& in_path, const std::string& json_path) {
  std::optional<ParryParams> params;
  BinaryWord prefix;
  if (!in_path.empty()) {
    prefix = read_word_file(in_path);
    if (p > 0 && q > 0) params = ParryParams(p, q);
  } else {
    params = ParryParams(p, q);
    prefix = prefix_len > 0
                 ? fixed_point_prefix(*params, prefix_len, true, effective_prefix_cap())
                 : saturated_prefix(*params, max_n, std::size_t{1} << 14,
                                    effective_prefix_cap());
  }
  ComplexityProfile profile = factor_complexity(prefix, max_n);
  ordered_json results;
  results["prefix_length"] = prefix.size();
  results["saturated_up_to"] = profile.saturated_up_to;
  results["counts"] = profile.counts;
  if (params) {
    bool sturmian = params->p() == params->q() + 1;
    results["sturmian"] = sturmian;
  }
  std::cout << "prefix length " << prefix.size() << ", saturated up to "
            << profile.saturated_up_to << "; C(1.." << max_n << ") =";
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 12); ++n)
    std::cout << ' ' << profile.counts[n];
  if (max_n > 12) std::cout << " ...";
  std::cout << '\n';
  emit_report(make_report("complexity", params, results), json_path);
  return 0;
}

int cmd_bispecials(long long p, long long q, std::size_t max_len,
                   const std::string& json_path) {
  ParryParams params(p, q);
  auto words = generate_bispecials(params, max_len);
  ordered_json results;
  results["max_length"] = max_len;
  results["count"] = words.size();
  ordered_json list = ordered_json::array();
  for (const BinaryWord& w : words) list.push_back(w.str());
  results["bispecials"] = std::move(list);
  for (const BinaryWord& w : words)
    std::cout << (w.empty() ? std::string("(empty)") : w.str()) << '\n';
  emit_report(make_report("bispecials", params, results), json_path);
  return 0;
}

int cmd_verify(int grid, bool inject_fault, const std::string& json_path) {
  verify::Options opts;
  opts.p_max = grid;
  opts.inject_fault = inject_fault;
  auto results = verify::run_criteria(opts);
  ordered_json jcriteria = ordered_json::array();
  for (const auto& res : results) {
    std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << res.id << ". " << res.title << '\n';
    ordered_json jchecks = ordered_json::array();
    for (const auto& c : res.checks) {
      if (!c.pass) std::cout << "       failed: " << c.name << "  " << c.detail << '\n';
      jchecks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    jcriteria.push_back(
        {{"id", res.id}, {"title", res.title}, {"pass", res.pass}, {"checks", jchecks}});
  }
  bool ok = verify::all_pass(results);
  std::cout << (ok ? "all criteria passed" : "verification FAILED") << '\n';
  ordered_json jresults;
  jresults["grid_p_max"] = grid;
  jresults["pass"] = ok;
  jresults["criteria"] = std::move(jcriteria);
  emit_report(make_report("verify", std::nullopt, jresults), json_path);
  return ok ? 0 : 1;
}

int cmd_sturmian_check(long long p, int max_n, const std::string& csv_path,
                       const std::string& json_path) {
  ParryParams params(p, p - 1);
  auto [beta, beta_conj] = beta_roots(params);
  (void)beta_conj;
  QuadraticNumber sup = beta + QuadraticNumber(1);
  QuadraticNumber limit = limit_index(params);
  auto dens = convergent_denominators(p, 2 * max_n + 1);
  ordered_json rows = ordered_json::array();
  std::ostringstream csv;
  csv << "n,q_2n,q_2n+1,term_num,term_den,ind_num,ind_den,equal\n";
  bool all_equal = true;
  std::cout << "  n  q_2n       q_2n+1     term                 ind(w(n))            equal\n";
  for (int n = 0; n <= max_n; ++n) {
    BigRational term = sturmian_index_term(p, 2 * n);
    BigRational ind = witness_index(params, n);
    bool equal = term == ind;
    all_equal = all_equal && equal;
    const BigInt& q2n = dens[static_cast<std::size_t>(2 * n)];
    const BigInt& q2n1 = dens[static_cast<std::size_t>(2 * n) + 1];
    rows.push_back({{"n", n},
                    {"q_2n", q2n.str()},
                    {"q_2n1", q2n1.str()},
                    {"term", json_rational(term)},
                    {"ind", json_rational(ind)},
                    {"equal", equal}});
    csv << n << ',' << q2n << ',' << q2n1 << ',' << numerator(term) << ','
        << denominator(term) << ',' << numerator(ind) << ',' << denominator(ind) << ','
        << (equal ? 1 : 0) << '\n';
    std::ostringstream line;
    line.width(3);
    line << n;
    std::cout << line.str() << "  ";
    auto pad = [](std::string s, std::size_t w) {
      if (s.size() < w) s.append(w - s.size(), ' ');
      return s;
    };
    std::cout << pad(q2n.str(), 11) << pad(q2n1.str(), 11)
              << pad(to_fraction_string(term), 21) << pad(to_fraction_string(ind), 21)
              << (equal ? "yes" : "NO") << '\n';
  }
  std::cout << "supremum beta+1 = " << sup.to_decimal_string(20)
            << (sup == limit ? " (equals the index limit)" : " (DIFFERS from the index limit)")
            << '\n';
  ordered_json results;
  results["rows"] = std::move(rows);
  results["all_equal"] = all_equal;
  results["supremum"] = json_quadratic(sup);
  results["limit_index"] = json_quadratic(limit);
  results["supremum_equals_limit"] = sup == limit;
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("cannot open " + csv_path + " for writing");
    out << csv.str();
  }
  emit_report(make_report("sturmian-check", params, results), json_path);
  return all_equal && sup == limit ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"words coding beta-integers for quadratic non-simple Parry numbers: "
               "generation, repetitions, indices, verification"};
  app.require_subcommand(1);

  long long p = 0, q = 0;
  std::size_t length = 0, prefix_len = 200000, max_n = 0;
  int wn = -1, grid = 0, sturmian_max_n = 20;
  std::string factor, out_path, in_path, json_path, csv_path;
  bool inject_fault = false;

  auto* generate = app.add_subcommand("generate", "write a prefix of the word to a file");
  generate->add_option("--p", p, "parameter p")->required();
  generate->add_option("--q", q, "parameter q")->required();
  generate->add_option("--length", length, "prefix length")->required();
  generate->add_option("--out", out_path, "output word file")->required();

  auto* index = app.add_subcommand("index", "index of a witness word or an explicit factor");
  index->add_option("--p", p, "parameter p")->required();
  index->add_option("--q", q, "parameter q")->required();
  auto* wn_opt = index->add_option("--wn", wn, "witness index n");
  auto* factor_opt = index->add_option("--factor", factor, "explicit factor over {0,1}");
  wn_opt->excludes(factor_opt);
  index->add_option("--prefix-len", prefix_len, "starting prefix length (default 200000)");
  index->add_option("--json", json_path, "write a JSON report here");

  auto* powers = app.add_subcommand("powers", "maximal integer power inside a prefix");
  powers->add_option("--p", p, "parameter p");
  powers->add_option("--q", q, "parameter q");
  powers->add_option("--prefix-len", prefix_len, "prefix length (default 200000)");
  powers->add_option("--in", in_path, "analyze this word file instead of generating");
  powers->add_option("--json", json_path, "write a JSON report here");

  auto* complexity = app.add_subcommand("complexity", "factor complexity profile");
  complexity->add_option("--p", p, "parameter p");
  complexity->add_option("--q", q, "parameter q");
  complexity->add_option("--max-n", max_n, "largest factor length (default 100)");
  complexity->add_option("--prefix-len", prefix_len, "fixed prefix length (default: saturate)");
  complexity->add_option("--in", in_path, "analyze this word file instead of generating");
  complexity->add_option("--json", json_path, "write a JSON report here");

  auto* bispecials = app.add_subcommand("bispecials", "bispecial factors up to a length");
  bispecials->add_option("--p", p, "parameter p")->required();
  bispecials->add_option("--q", q, "parameter q")->required();
  bispecials->add_option("--max-n", max_n, "largest factor length (default 50)");
  bispecials->add_option("--json", json_path, "write a JSON report here");

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite on a grid");
  verify_cmd->add_option("--grid", grid, "largest p; all 1 <= q < p <= grid")->required();
  verify_cmd->add_option("--json", json_path, "write a JSON report here");
  verify_cmd->add_flag("--inject-fault", inject_fault, "harness self-test: corrupt one value")
      ->group("");  // hidden

  auto* sturmian = app.add_subcommand("sturmian-check",
                                      "index-formula cross-check for the Sturmian case q=p-1");
  sturmian->add_option("--p", p, "parameter p (q is forced to p-1)")->required();
  sturmian->add_option("--max-n", sturmian_max_n, "rows to print (default 20)");
  sturmian->add_option("--csv", csv_path, "write the table as CSV here");
  sturmian->add_option("--json", json_path, "write a JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      if (length < 1) throw std::runtime_error("--length must be at least 1");
      return cmd_generate(p, q, length, out_path);
    }
    if (index->parsed()) {
      if (wn_opt->count() == 0 && factor_opt->count() == 0)
        throw std::runtime_error("index: pass exactly one of --wn or --factor");
      std::optional<int> wn_arg;
      if (wn_opt->count()) wn_arg = wn;
      return cmd_index(p, q, wn_arg, factor, prefix_len, json_path);
    }
    if (powers->parsed()) {
      if (in_path.empty() && (p == 0 || q == 0))
        throw std::runtime_error("powers: pass --p/--q or --in");
      return cmd_powers(p, q, prefix_len, in_path, json_path);
    }
    if (complexity->parsed()) {
      if (in_path.empty() && (p == 0 || q == 0))
        throw std::runtime_error("complexity: pass --p/--q or --in");
      if (max_n == 0) max_n = 100;
      bool fixed_len = complexity->count("--prefix-len") > 0;
      return cmd_complexity(p, q, max_n, fixed_len ? prefix_len : 0, in_path, json_path);
    }
    if (bispecials->parsed()) {
      if (max_n == 0) max_n = 50;
      return cmd_bispecials(p, q, max_n, json_path);
    }
    if (verify_cmd->parsed()) {
      if (grid < 2) throw std::runtime_error("verify: --grid must be at least 2");
      return cmd_verify(grid, inject_fault, json_path);
    }
    if (sturmian->parsed()) {
      if (p < 2) throw std::runtime_error("sturmian-check: --p must be at least 2");
      return cmd_sturmian_check(p, sturmian_max_n, csv_path, json_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
