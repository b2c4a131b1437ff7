// Small library walkthrough: build a prefix of the word, look at its
// repetitions, and compare brute force with the exact index machinery.

#include <iostream>

#include "parry/parry.hpp"

int main() {
  using namespace parry;

  ParryParams params(5, 1);
  std::cout << "parameters: p=5, q=1, Renyi expansion " << params.renyi_expansion() << "\n";

  auto [beta, beta_conj] = beta_roots(params);
  std::cout << "beta = " << beta.to_decimal_string(20) << ", conjugate "
            << beta_conj.to_decimal_string(20) << "\n\n";

  BinaryWord prefix = fixed_point_prefix(params, 200000);
  std::cout << "prefix starts: " << prefix.substr(0, 40).str() << "...\n";

  MaxIntegerPower mp = max_integer_power(prefix);
  std::cout << "largest integer power in the prefix: k=" << mp.k << " (witness \""
            << mp.witness.str() << "\"), predicted " << predicted_max_integer_power(params)
            << "\n\n";

  for (int n = 0; n <= 4; ++n) {
    BigRational exact = witness_index(params, n);
    WitnessPair pair = witness_pair(params, n);
    std::cout << "ind(w(" << n << ")) = " << to_fraction_string(exact);
    if (pair.w_word && is_factor(prefix, *pair.w_word)) {
      FactorIndexResult brute = index_in_prefix(prefix, *pair.w_word);
      std::cout << "  brute force: " << to_fraction_string(brute.index);
    }
    std::cout << "\n";
  }

  IndexVerdict verdict = word_index(params);
  std::cout << "\nindex of the infinite word: ";
  if (verdict.attained)
    std::cout << to_fraction_string(verdict_rational(verdict)) << " attained at n0="
              << *verdict.n0;
  else
    std::cout << verdict_quadratic(verdict).to_decimal_string(20) << " (supremum, not attained)";
  std::cout << "\n  certificate: " << verdict.certificate << "\n";
  return 0;
}
