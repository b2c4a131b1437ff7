#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "parry/repetition.hpp"
#include "parry/theory.hpp"

using namespace parry;

namespace {

std::vector<ParryParams> small_grid() {
  std::vector<ParryParams> cells;
  for (long long p = 2; p <= 8; ++p)
    for (long long q = 1; q < p; ++q) cells.emplace_back(p, q);
  return cells;
}

}  // namespace

TEST_CASE("bispecial image map") {
  CHECK(bispecial_image(ParryParams(2, 1), BinaryWord("")).str() == "010");
  CHECK(bispecial_image(ParryParams(2, 1), BinaryWord("0")).str() == "010010");
  CHECK(bispecial_image(ParryParams(3, 1), BinaryWord("000")).str() == "010001000100010");
}

TEST_CASE("witness pair words and counts") {
  SECTION("p=3, q=1 at n=1") {
    WitnessPair pair = witness_pair(ParryParams(3, 1), 1);
    REQUIRE(pair.w_word);
    REQUIRE(pair.v_word);
    CHECK(pair.w_word->str() == "0100");
    CHECK(pair.v_word->str() == "010001000100010");
  }
  SECTION("shape of the base witness word over the grid") {
    for (const auto& params : small_grid()) {
      WitnessPair pair = witness_pair(params, 1);
      REQUIRE(pair.w_word);
      std::string expect(static_cast<std::size_t>(params.q()), '0');
      expect += '1';
      expect.append(static_cast<std::size_t>(params.p() - params.q()), '0');
      CHECK(pair.w_word->str() == expect);
      CHECK(pair.w_counts.length() == params.p() + 1);
      CHECK(pair.v_counts.length() == params.p() * (params.p() + 1) + 2 * params.q() + 1);
    }
  }
  SECTION("abelian count examples") {
    ParryParams params(5, 1);
    CHECK(witness_word_counts(params, 0) == AbelianVector{1, 0});
    CHECK(witness_power_counts(params, 0) == AbelianVector{5, 0});
    CHECK(witness_word_counts(params, 2) == AbelianVector{26, 6});
    CHECK(witness_power_counts(params, 2) == AbelianVector{143, 34});
    WitnessPair pair = witness_pair(params, 2);
    REQUIRE(pair.v_word);
    CHECK(abelianize(*pair.v_word) == pair.v_counts);
  }
  SECTION("power counts satisfy the image recurrence") {
    for (const auto& params : small_grid()) {
      MorphismMatrix m = params.morphism_matrix();
      for (int n = 0; n < 20; ++n) {
        AbelianVector cur = witness_power_counts(params, n);
        AbelianVector next = cur * m;
        next.count0 += 2 * params.q();
        next.count1 += 1;
        CHECK(witness_power_counts(params, n + 1) == next);
      }
    }
  }
}

TEST_CASE("witness indices from counts") {
  for (const auto& params : small_grid()) {
    CHECK(witness_index(params, 0) == BigRational(params.p()));
    CHECK(witness_index(params, 1) ==
          BigRational(params.p()) + BigRational(2 * params.q() + 1, params.p() + 1));
  }
  CHECK(witness_index(ParryParams(5, 1), 2) == BigRational(177, 32));
  CHECK(witness_index(ParryParams(5, 1), 3) == BigRational(929, 168));
}

TEST_CASE("witness index brute-force cross-check") {
  ParryParams params(5, 1);
  BinaryWord prefix = fixed_point_prefix(params, 100000);
  WitnessPair pair = witness_pair(params, 2);
  REQUIRE(pair.w_word);
  FactorIndexResult res = index_in_prefix(prefix, *pair.w_word);
  CHECK(res.index == BigRational(177, 32));
}

TEST_CASE("closed form equals the counts-based index") {
  for (const auto& params : small_grid())
    for (int n = 0; n <= 40; ++n)
      CHECK(witness_index_closed_form(params, n) == witness_index(params, n));
}

TEST_CASE("witness indices approach the limit") {
  for (auto [p, q] : {std::pair<long long, long long>{2, 1}, {4, 2}}) {
    ParryParams params(p, q);
    QuadraticNumber limit = limit_index(params);
    BigRational tol(BigInt(1), boost::multiprecision::pow(BigInt(10), 10));
    QuadraticNumber gap = limit - QuadraticNumber(witness_index(params, 40));
    CHECK(gap.sign() > 0);
    CHECK(gap < QuadraticNumber(tol));
  }
}

TEST_CASE("gap term sign characterizes the two regimes") {
  for (const auto& params : small_grid()) {
    bool small_p = params.p() <= 3 * params.q() + 1;
    bool all_negative = true;
    bool eventually_positive = false;
    for (int n = 0; n <= 200; ++n) {
      int s = index_gap_term(params, n).sign();
      if (s >= 0) all_negative = false;
      if (n == 200 && s > 0) eventually_positive = true;
    }
    CHECK(all_negative == small_p);
    if (!small_p) CHECK(eventually_positive);
  }
}

TEST_CASE("witness indices increase strictly when p <= 3q+1") {
  for (const auto& params : small_grid()) {
    if (params.p() > 3 * params.q() + 1) continue;
    BigRational prev = witness_index(params, 0);
    for (int n = 1; n <= 40; ++n) {
      BigRational cur = witness_index(params, n);
      CHECK(cur > prev);
      prev = cur;
    }
  }
}

TEST_CASE("word index verdicts") {
  SECTION("p=4, q=2: supremum not attained") {
    IndexVerdict v = word_index(ParryParams(4, 2));
    CHECK_FALSE(v.attained);
    CHECK(verdict_quadratic(v) == limit_index(ParryParams(4, 2)));
  }
  SECTION("p=5, q=1: attained at n0=2 with value 177/32") {
    IndexVerdict v = word_index(ParryParams(5, 1));
    REQUIRE(v.attained);
    CHECK(*v.n0 == 2);
    CHECK(verdict_rational(v) == BigRational(177, 32));
    CHECK(QuadraticNumber(verdict_rational(v)) > limit_index(ParryParams(5, 1)));
    CHECK(v.explored_up_to <= 10);
  }
  SECTION("p=3, q=1: value 4, not attained") {
    IndexVerdict v = word_index(ParryParams(3, 1));
    CHECK_FALSE(v.attained);
    CHECK(verdict_quadratic(v).is_rational());
    CHECK(verdict_quadratic(v).rational_value() == 4);
  }
}

TEST_CASE("predicted maximal integer power") {
  CHECK(predicted_max_integer_power(ParryParams(3, 2)) == 4);
  CHECK(predicted_max_integer_power(ParryParams(4, 1)) == 4);
  CHECK(predicted_max_integer_power(ParryParams(4, 2)) == 5);   // p = 2q
  CHECK(predicted_max_integer_power(ParryParams(6, 3)) == 7);
  CHECK(predicted_max_integer_power(ParryParams(8, 3)) == 8);
}

TEST_CASE("exceptional family at p=3, q=1") {
  ParryParams params(3, 1);
  SECTION("base pair") {
    WitnessPair pair = exceptional_witness_pair(params, 0);
    REQUIRE(pair.w_word);
    REQUIRE(pair.v_word);
    CHECK(pair.w_word->str() == "010001");
    CHECK(pair.v_word->size() == 19);
    CHECK(exceptional_witness_index(params, 0) == BigRational(19, 6));
  }
  SECTION("iterates stay below beta and increase") {
    auto [beta, conj] = beta_roots(params);
    (void)conj;
    BigRational prev = exceptional_witness_index(params, 0);
    for (int n = 1; n <= 50; ++n) {
      BigRational cur = exceptional_witness_index(params, n);
      CHECK(cur > prev);
      CHECK(QuadraticNumber(cur) < beta);
      CHECK(cur < BigRational(4));
      prev = cur;
    }
  }
  SECTION("power iterates are the bispecial images of their predecessors") {
    WitnessPair a = exceptional_witness_pair(params, 1);
    WitnessPair b = exceptional_witness_pair(params, 2);
    REQUIRE(a.v_word);
    REQUIRE(b.v_word);
    CHECK(bispecial_image(params, *a.v_word) == *b.v_word);
  }
  SECTION("defined only for p=3, q=1") {
    CHECK_THROWS_AS(exceptional_witness_pair(ParryParams(2, 1), 0), std::invalid_argument);
    CHECK_THROWS_AS(exceptional_witness_index(ParryParams(4, 1), 0), std::invalid_argument);
  }
}

TEST_CASE("desubstitution") {
  ParryParams params(2, 1);
  SECTION("worked examples") {
    Desubstitution d = desubstitute(params, BinaryWord("00101"));
    CHECK(d.k1 == 2);
    CHECK(d.w.str() == "1");
    CHECK(d.k2 == 0);

    Desubstitution bare = desubstitute(params, BinaryWord("1"));
    CHECK(bare.k1 == 0);
    CHECK(bare.w.empty());
    CHECK(bare.k2 == 0);
  }
  SECTION("rejections") {
    CHECK_THROWS_AS(desubstitute(params, BinaryWord("0")), std::invalid_argument);
    CHECK_THROWS_AS(desubstitute(params, BinaryWord("0110")), std::domain_error);
    CHECK_THROWS_AS(desubstitute(params, BinaryWord("0001")), std::domain_error);
  }
  SECTION("round trip on random factors") {
    std::mt19937_64 rng(5150);
    for (auto [p, q] : {std::pair<long long, long long>{2, 1}, {5, 2}}) {
      ParryParams prm(p, q);
      Morphism phi = make_parry_morphism(prm);
      BinaryWord prefix = fixed_point_prefix(prm, 60000);
      for (int i = 0; i < 100; ++i) {
        std::uniform_int_distribution<std::size_t> len(1, 50);
        std::size_t l = len(rng);
        std::uniform_int_distribution<std::size_t> pos(0, prefix.size() - l);
        BinaryWord v = prefix.substr(pos(rng), l);
        if (v.str().find('1') == std::string::npos) continue;
        Desubstitution d = desubstitute(prm, v);
        BinaryWord rebuilt = BinaryWord::zeros(d.k1) + BinaryWord("1") + phi.apply(d.w) +
                             BinaryWord::zeros(d.k2);
        CHECK(rebuilt == v);
        CHECK(is_factor(prefix, d.w));
      }
    }
  }
}

TEST_CASE("bispecial generation") {
  SECTION("empty word is generated") {
    auto words = generate_bispecials(ParryParams(4, 2), 10);
    REQUIRE_FALSE(words.empty());
    CHECK(words[0].empty());
  }
  SECTION("generated bispecials with a 1 start with 0^q 1 and end with 1 0^q") {
    for (auto [p, q] : {std::pair<long long, long long>{3, 1}, {5, 2}}) {
      ParryParams prm(p, q);
      BinaryWord head = BinaryWord::zeros(static_cast<std::size_t>(q)) + BinaryWord("1");
      BinaryWord tail = BinaryWord("1") + BinaryWord::zeros(static_cast<std::size_t>(q));
      for (const BinaryWord& w : generate_bispecials(prm, 80)) {
        if (w.str().find('1') == std::string::npos) continue;
        CHECK(w.starts_with(head));
        CHECK(w.ends_with(tail));
      }
    }
  }
  SECTION("matches the brute-force enumeration") {
    for (auto [p, q] : {std::pair<long long, long long>{2, 1}, {3, 1}, {4, 2}}) {
      ParryParams prm(p, q);
      BinaryWord prefix = saturated_prefix(prm, 62);
      auto profile = special_factor_profile(prefix, 60);
      std::vector<BinaryWord> brute;
      for (const auto& level : profile)
        brute.insert(brute.end(), level.bispecial.begin(), level.bispecial.end());
      std::sort(brute.begin(), brute.end(), [](const BinaryWord& a, const BinaryWord& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      CHECK(generate_bispecials(prm, 60) == brute);
    }
  }
}

TEST_CASE("image map preserves factors and extensions") {
  std::mt19937_64 rng(8888);
  for (auto [p, q] : {std::pair<long long, long long>{3, 1}, {4, 3}}) {
    ParryParams params(p, q);
    BinaryWord prefix = saturated_prefix(params, 400);
    parry::detail::LcpIndex index(prefix.view());
    auto random_factor = [&](std::size_t max_len) {
      std::uniform_int_distribution<std::size_t> len(0, max_len);
      std::size_t l = len(rng);
      std::uniform_int_distribution<std::size_t> pos(0, prefix.size() - l);
      return prefix.substr(pos(rng), l);
    };
    for (int i = 0; i < 100; ++i) {
      BinaryWord w = random_factor(40);
      CHECK(index.contains(bispecial_image(params, w).view()));
      char a = (rng() & 1) ? '1' : '0';
      char b = (rng() & 1) ? '1' : '0';
      std::string awb = std::string(1, a) + w.str() + std::string(1, b);
      std::string atb = std::string(1, a) + bispecial_image(params, w).str() + std::string(1, b);
      CHECK(index.contains(awb) == index.contains(atb));
    }
    for (int i = 0; i < 100; ++i) {
      BinaryWord v = random_factor(50);
      BinaryWord w = (rng() & 1) ? v.substr(0, v.size() / 2) : random_factor(50);
      CHECK(bispecial_image(params, v).starts_with(bispecial_image(params, w)) ==
            v.starts_with(w));
      CHECK(bispecial_image(params, v).ends_with(bispecial_image(params, w)) == v.ends_with(w));
    }
  }
}

TEST_CASE("materialized power words are the brute-force maximal powers") {
  for (auto [p, q] : {std::pair<long long, long long>{3, 1}, {5, 2}}) {
    ParryParams params(p, q);
    std::size_t len = 1 << 15;
    for (int n = 0; n <= 3; ++n) {
      WitnessPair pair = witness_pair(params, n);
      REQUIRE(pair.w_word);
      REQUIRE(pair.v_word);
      BinaryWord prefix = fixed_point_prefix(params, len);
      while (!is_factor(prefix, *pair.v_word)) {
        len *= 2;
        REQUIRE(len <= (std::size_t{1} << 22));
        prefix = fixed_point_prefix(params, len);
      }
      FactorIndexResult res = index_in_prefix(prefix, *pair.w_word);
      CHECK(res.index == witness_index(params, n));
      CHECK(prefix.substr(res.witness_start, pair.v_word->size()) == *pair.v_word);
    }
  }
}

TEST_CASE("beta-integer positions") {
  SECTION("first positions for p=2, q=1") {
    auto xs = beta_integer_positions(ParryParams(2, 1), 3);
    REQUIRE(xs.size() == 3);
    CHECK(xs[0] == QuadraticNumber(0));
    CHECK(xs[1] == QuadraticNumber(1));
    CHECK(xs[2] == QuadraticNumber(2));
  }
  SECTION("count of one") {
    auto xs = beta_integer_positions(ParryParams(4, 1), 1);
    REQUIRE(xs.size() == 1);
    CHECK(xs[0] == QuadraticNumber(0));
  }
  SECTION("gaps and self-similarity") {
    for (auto [p, q] : {std::pair<long long, long long>{2, 1}, {5, 3}}) {
      ParryParams params(p, q);
      auto [beta, conj] = beta_roots(params);
      (void)conj;
      QuadraticNumber gap1 = beta - QuadraticNumber(BigRational(p));
      auto xs = beta_integer_positions(params, 900);
      for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
        QuadraticNumber d = xs[k + 1] - xs[k];
        CHECK((d == QuadraticNumber(1) || d == gap1));
      }
      for (std::size_t k = 0; k <= 50; ++k) {
        QuadraticNumber scaled = beta * xs[k];
        bool found = std::binary_search(
            xs.begin(), xs.end(), scaled,
            [](const QuadraticNumber& a, const QuadraticNumber& b) { return a < b; });
        CHECK(found);
      }
    }
  }
}
