#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "lgldpc/builders.hpp"
#include "lgldpc/density_evolution.hpp"
#include "lgldpc/erasure_sim.hpp"
#include "lgldpc/error.hpp"
#include "support/oracles.hpp"

using namespace lgldpc;

namespace {

std::vector<std::uint8_t> mask_of_bits(std::uint32_t bits, std::uint32_t n) {
  std::vector<std::uint8_t> mask(n);
  for (std::uint32_t v = 0; v < n; ++v) mask[v] = (bits >> v) & 1;
  return mask;
}

std::uint32_t bits_of_mask(const std::vector<std::uint8_t>& mask) {
  std::uint32_t bits = 0;
  for (std::uint32_t v = 0; v < mask.size(); ++v)
    if (mask[v]) bits |= 1u << v;
  return bits;
}

}  // namespace

TEST_CASE("peel basics") {
  // single check over three variables
  TannerBuilder tb(3, 1);
  tb.add_edge(0, 0);
  tb.add_edge(1, 0);
  tb.add_edge(2, 0);
  TannerGraph tg = std::move(tb).build();

  CHECK(peel(tg, {0, 0, 0}, std::nullopt) == std::vector<std::uint8_t>{0, 0, 0});
  // everything erased: the check always sees three erasures, nothing resolves
  CHECK(peel(tg, {1, 1, 1}, std::nullopt) == std::vector<std::uint8_t>{1, 1, 1});
  // one erasure resolves in one round
  CHECK(peel(tg, {1, 0, 0}, std::nullopt) == std::vector<std::uint8_t>{0, 0, 0});
  CHECK(peel(tg, {1, 0, 0}, 0U) == std::vector<std::uint8_t>{1, 0, 0});  // cap 0: untouched
}

TEST_CASE("peel against the exhaustive stopping-set oracle") {
  Rng rng(808);
  for (int trial = 0; trial < 60; ++trial) {
    TannerGraph tg = test::random_tanner(rng, 12, 8, 0.3);
    const auto n = static_cast<std::uint32_t>(tg.variable_count());
    auto stopping = test::enumerate_stopping_sets(tg);
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      std::uint32_t residual = bits_of_mask(peel(tg, mask_of_bits(bits, n), std::nullopt));
      std::uint32_t expected = test::max_stopping_subset(stopping, bits);
      if (residual != expected) {
        CAPTURE(trial);
        CAPTURE(bits);
        REQUIRE(residual == expected);
      }
    }
  }
}

TEST_CASE("peeling is monotone in the erased set") {
  Rng rng(909);
  for (int trial = 0; trial < 50; ++trial) {
    TannerGraph tg = test::random_tanner(rng, 12, 9, 0.35);
    const auto n = static_cast<std::uint32_t>(tg.variable_count());
    std::uint32_t big = static_cast<std::uint32_t>(rng.next()) & ((1u << n) - 1);
    std::uint32_t small = big & static_cast<std::uint32_t>(rng.next());
    std::uint32_t r_small = bits_of_mask(peel(tg, mask_of_bits(small, n), std::nullopt));
    std::uint32_t r_big = bits_of_mask(peel(tg, mask_of_bits(big, n), std::nullopt));
    CHECK((r_small & r_big) == r_small);  // subset
  }
}

TEST_CASE("capped peeling is nonincreasing in the cap") {
  Rng rng(101);
  TannerGraph tg = test::random_tanner(rng, 12, 9, 0.3);
  const auto n = static_cast<std::uint32_t>(tg.variable_count());
  for (int trial = 0; trial < 30; ++trial) {
    std::uint32_t bits = static_cast<std::uint32_t>(rng.next()) & ((1u << n) - 1);
    std::size_t prev = n + 1;
    for (std::uint32_t cap = 0; cap <= 6; ++cap) {
      auto residual = peel(tg, mask_of_bits(bits, n), cap);
      std::size_t count = std::popcount(bits_of_mask(residual));
      CHECK(count <= prev);
      prev = count;
    }
    auto fixpoint = peel(tg, mask_of_bits(bits, n), std::nullopt);
    CHECK(std::popcount(bits_of_mask(fixpoint)) <= prev);
  }
}

TEST_CASE("simulate endpoints") {
  TannerBuild build = build_cd_regular(3, 6, QChoice::q(13), SplitMode::deterministic, 1);
  SUBCASE("epsilon 0") {
    TrialReport r = simulate(build.graph, 0.0, std::nullopt, 20, 3);
    CHECK(r.bit_rate == 0.0);
    CHECK(r.block_rate == 0.0);
  }
  SUBCASE("epsilon 1 on a graph with a cycle") {
    TrialReport r = simulate(build.graph, 1.0, std::nullopt, 5, 3);
    CHECK(r.block_rate == 1.0);
  }
}

TEST_CASE("simulate is reproducible and worker-count independent") {
  TannerBuild build = build_cd_regular(3, 6, QChoice::q(13), SplitMode::deterministic, 1);
  TrialReport a = simulate(build.graph, 0.35, 2U, 64, 99, 1);
  TrialReport b = simulate(build.graph, 0.35, 2U, 64, 99, 2);
  TrialReport c = simulate(build.graph, 0.35, 2U, 64, 99, 5);
  CHECK(a.bit_erasures == b.bit_erasures);
  CHECK(a.block_errors == b.block_errors);
  CHECK(a.bit_erasures == c.bit_erasures);
  CHECK(a.block_errors == c.block_errors);
  TrialReport d = simulate(build.graph, 0.35, 2U, 64, 100, 2);
  CHECK(a.bit_erasures != d.bit_erasures);  // seed matters
}

TEST_CASE("bit rate is nonincreasing in the iteration cap") {
  TannerBuild build = build_cd_regular(3, 6, QChoice::q(13), SplitMode::deterministic, 1);
  double prev = 1.0;
  for (std::uint32_t t : {1U, 2U, 3U, 5U, 8U}) {
    TrialReport r = simulate(build.graph, 0.4, t, 40, 5);
    CHECK(r.bit_rate <= prev + 1e-12);
    prev = r.bit_rate;
  }
}

TEST_CASE("wilson intervals") {
  WilsonInterval ci = wilson_interval(50, 100);
  CHECK(ci.lo == doctest::Approx(0.4038).epsilon(1e-2));
  CHECK(ci.hi == doctest::Approx(0.5962).epsilon(1e-2));
  WilsonInterval zero = wilson_interval(0, 100);
  CHECK(zero.lo == 0.0);
  CHECK(zero.hi > 0.0);
  CHECK(zero.hi < 0.05);
  WilsonInterval all = wilson_interval(100, 100);
  CHECK(all.hi == 1.0);
  CHECK(all.lo > 0.95);
}

TEST_CASE("regular empirical bit rate matches y_t on a tree-like budget") {
  TannerBuild build = build_cd_regular(3, 6, QChoice::q(13), SplitMode::deterministic, 1);
  auto ddp = DegreeDistributionPair::regular(3, 6);
  DeComparison cmp = compare_to_de(build.graph, ddp, 0.4, 1, 100, 1717, 2);
  CHECK(cmp.regular);
  CHECK(cmp.y_t == doctest::Approx(0.3137558676).epsilon(1e-9));
  CHECK(cmp.within_interval);
}

TEST_CASE("girth budget is enforced") {
  TannerBuild build = build_cd_regular(3, 6, QChoice::q(13), SplitMode::deterministic, 1);
  GirthReport gr = girth(build.graph.to_graph());
  REQUIRE(gr.girth);
  std::uint32_t too_deep = (*gr.girth - 2) / 4 + 1;
  auto ddp = DegreeDistributionPair::regular(3, 6);
  CHECK_THROWS_AS(compare_to_de(build.graph, ddp, 0.4, too_deep, 10, 1, 1), Error);
  try {
    compare_to_de(build.graph, ddp, 0.4, too_deep, 10, 1, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::girth_budget_exceeded);
  }
}
