#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <map>

#include "lgldpc/error.hpp"
#include "lgldpc/secrecy.hpp"
#include "support/oracles.hpp"

using namespace lgldpc;

namespace {

TannerGraph single_check_pair() {
  // H = [1 1]: C_perp = {00, 11} = C; one secret bit
  TannerBuilder tb(2, 1);
  tb.add_edge(0, 0);
  tb.add_edge(1, 0);
  return std::move(tb).build();
}

}  // namespace

TEST_CASE("coset code dimensions") {
  CosetCode code = CosetCode::from_tanner(single_check_pair());
  CHECK(code.block_length() == 2);
  CHECK(code.secret_bits() == 1);
  CHECK(code.generator().rows() == 1);
  CHECK(code.parity().rows() == 1);

  SUBCASE("rank-deficient check matrices just shrink the rank") {
    TannerBuilder tb(3, 2);  // two identical checks
    tb.add_edge(0, 0);
    tb.add_edge(1, 0);
    tb.add_edge(0, 1);
    tb.add_edge(1, 1);
    CosetCode dup = CosetCode::from_tanner(std::move(tb).build());
    CHECK(dup.secret_bits() == 2);  // rank 1, n = 3
  }
}

TEST_CASE("G H^T = 0 and encode/decode round trip") {
  Rng rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    TannerGraph tg = test::random_tanner(rng, 12, 8, 0.35);
    CosetCode code = CosetCode::from_tanner(tg);
    const auto& g = code.generator();
    const auto& h = code.parity();
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < h.rows(); ++j) {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < g.words_per_row(); ++w) acc ^= g.row(i)[w] & h.row(j)[w];
        CHECK(std::popcount(acc) % 2 == 0);
      }
    CHECK(g.rank() == g.rows());
    CHECK(h.rank() == h.rows());

    // exhaustive round trip over all secrets when small
    if (code.secret_bits() <= 8) {
      for (std::uint32_t s = 0; s < (1u << code.secret_bits()); ++s) {
        std::vector<std::uint8_t> secret(code.secret_bits());
        for (std::size_t b = 0; b < secret.size(); ++b) secret[b] = (s >> b) & 1;
        std::vector<std::uint8_t> word = code.encode(secret, rng);
        CHECK(code.decode(word) == secret);
      }
    }
  }
}

TEST_CASE("decode details") {
  CosetCode code = CosetCode::from_tanner(single_check_pair());
  Rng rng(7);
  std::vector<std::uint8_t> zero{0};
  std::vector<std::uint8_t> word = code.encode(zero, rng);
  CHECK(code.decode(word) == zero);  // codewords decode to 0
  std::vector<std::uint8_t> all_zero{0, 0};
  CHECK(code.decode(all_zero) == zero);
  std::vector<std::uint8_t> one{1};
  CHECK(code.decode(code.encode(one, rng)) == one);
}

TEST_CASE("flipping one bit of a codeword yields that column of H") {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    TannerGraph tg = test::random_tanner(rng, 10, 6, 0.4);
    CosetCode code = CosetCode::from_tanner(tg);
    std::vector<std::uint8_t> zero(code.secret_bits(), 0);
    std::vector<std::uint8_t> word = code.encode(zero, rng);
    for (std::size_t j = 0; j < code.block_length(); ++j) {
      std::vector<std::uint8_t> flipped = word;
      flipped[j] ^= 1;
      std::vector<std::uint8_t> syndrome = code.decode(flipped);
      for (std::size_t r = 0; r < code.parity().rows(); ++r)
        CHECK(syndrome[r] == code.parity().get(r, j));
    }
  }
}

TEST_CASE("encode with a fixed seed is reproducible") {
  CosetCode code = CosetCode::from_tanner(single_check_pair());
  Rng a(5), b(5);
  std::vector<std::uint8_t> s{1};
  CHECK(code.encode(s, a) == code.encode(s, b));
}

TEST_CASE("encoded words are uniform over the coset") {
  // 4 variables, 1 check -> dim C = 1, coset size 2; use a bigger code:
  TannerBuilder tb(4, 2);
  tb.add_edge(0, 0);
  tb.add_edge(1, 0);
  tb.add_edge(1, 1);
  tb.add_edge(2, 1);
  tb.add_edge(3, 1);
  CosetCode code = CosetCode::from_tanner(std::move(tb).build());
  REQUIRE(code.generator().rows() == 2);  // coset size 4
  std::vector<std::uint8_t> secret(code.secret_bits(), 1);
  std::map<std::vector<std::uint8_t>, int> counts;
  Rng rng(11);
  const int kSamples = 8000;
  for (int i = 0; i < kSamples; ++i) counts[code.encode(secret, rng)]++;
  REQUIRE(counts.size() == 4);
  double chi2 = 0.0;
  for (const auto& [word, count] : counts) {
    double expect = kSamples / 4.0;
    chi2 += (count - expect) * (count - expect) / expect;
    CHECK(code.decode(word) == secret);  // all land in the right coset
  }
  CHECK(chi2 < 16.27);  // chi-square 3 dof, p = 0.001
}

TEST_CASE("leakage bound endpoints") {
  CosetCode code = CosetCode::from_tanner(single_check_pair());
  CHECK(leakage_bound(code, 0.5, 0.0) == 0.0);
  CHECK(leakage_bound(code, 0.5, 1.0) == doctest::Approx(1.0));  // secret_bits
}

TEST_CASE("exact leakage on the two-bit repetition coset code") {
  CosetCode code = CosetCode::from_tanner(single_check_pair());
  // G = [1 1]; hand enumeration at xi = 0.5:
  // K = {}: 0, K = {1}: 0, K = {2}: 0, K = {1,2}: 2 - 1 = 1 -> 0.25 bits
  CHECK(exact_leakage(code, 0.5) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(exact_leakage(code, 1.0) == doctest::Approx(0.0));
  CHECK(exact_leakage(code, 0.0) == doctest::Approx(1.0));  // everything revealed
}

TEST_CASE("exact leakage properties") {
  Rng rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    TannerGraph tg = test::random_tanner(rng, 12, 8, 0.35);
    CosetCode code = CosetCode::from_tanner(tg);
    std::vector<double> profile = leakage_popcount_profile(code);
    double prev = static_cast<double>(code.secret_bits());
    for (int i = 0; i <= 10; ++i) {
      double xi = i / 10.0;
      double leak = leakage_from_profile(profile, xi);
      CHECK(leak >= -1e-12);
      CHECK(leak <= static_cast<double>(code.secret_bits()) + 1e-12);
      CHECK(leak <= prev + 1e-9);  // nonincreasing in xi
      prev = leak;
    }
  }
}

TEST_CASE("sampled leakage approaches the exhaustive value") {
  TannerBuilder tb(6, 3);
  tb.add_edge(0, 0);
  tb.add_edge(1, 0);
  tb.add_edge(2, 0);
  tb.add_edge(2, 1);
  tb.add_edge(3, 1);
  tb.add_edge(4, 2);
  tb.add_edge(5, 2);
  tb.add_edge(0, 2);
  CosetCode code = CosetCode::from_tanner(std::move(tb).build());
  double exact = exact_leakage(code, 0.4);
  double sampled = exact_leakage_sampled(code, 0.4, 20000, 42);
  CHECK(sampled == doctest::Approx(exact).epsilon(0.05));
  CHECK(exact_leakage_sampled(code, 0.4, 20000, 42, 3) == sampled);  // worker-independent
}

TEST_CASE("leakage chain: exact <= secret_bits * exhaustive MP block error") {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    TannerGraph tg = test::random_tanner(rng, 12, 8, 0.4);
    CosetCode code = CosetCode::from_tanner(tg);
    std::vector<double> leak_profile = leakage_popcount_profile(code);
    std::vector<double> fail_profile = test::block_error_popcount_profile(tg);
    for (int i = 1; i <= 9; ++i) {
      double xi = i / 10.0;
      double exact = leakage_from_profile(leak_profile, xi);
      double p_block = test::block_error_from_profile(fail_profile, 1.0 - xi);
      CHECK(exact <= leakage_bound(code, xi, p_block) + 1e-9);
    }
  }
}

TEST_CASE("exhaustive oracle size limit") {
  TannerBuilder tb(26, 1);
  for (std::uint32_t v = 0; v < 26; ++v) tb.add_edge(v, 0);
  CosetCode code = CosetCode::from_tanner(std::move(tb).build());
  CHECK_THROWS_AS(exact_leakage(code, 0.5), Error);
  try {
    exact_leakage(code, 0.5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::size_limit);
  }
}

TEST_CASE("secrecy report wiring") {
  TannerBuilder tb(4, 2);
  tb.add_edge(0, 0);
  tb.add_edge(1, 0);
  tb.add_edge(2, 1);
  tb.add_edge(3, 1);
  TannerGraph tg = std::move(tb).build();
  SecrecyReport report = make_secrecy_report(tg, 0.7, 500, 9, 1, true);
  CHECK(report.n == 4);
  CHECK(report.secret_bits == 2);
  CHECK(report.leakage_bound_bits == doctest::Approx(2.0 * report.block.block_rate));
  REQUIRE(report.exact_leakage_bits);
  CHECK(*report.exact_leakage_bits <= report.secret_bits);
}
