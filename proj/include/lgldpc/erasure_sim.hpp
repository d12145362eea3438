#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lgldpc/degree_distribution.hpp"
#include "lgldpc/tanner.hpp"

namespace lgldpc {

struct WilsonInterval {
  double lo = 0.0;
  double hi = 0.0;

  double half_width() const { return 0.5 * (hi - lo); }
};

// 95% Wilson score interval by default.
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t samples, double z = 1.959963984540054);

// Synchronous peeling decoder on the BEC. One iteration is one round in
// which every check with exactly one erased neighbor (as of the round start)
// resolves that neighbor. With no iteration cap the residual is the unique
// maximal stopping set contained in the erased set.
std::vector<std::uint8_t> peel(const TannerGraph& tg, const std::vector<std::uint8_t>& erased,
                               std::optional<std::uint32_t> iteration_cap);

struct TrialReport {
  std::uint64_t trials = 0;
  std::optional<std::uint32_t> iters_cap;  // nullopt = run to the stopping set
  double bit_rate = 0.0;
  WilsonInterval bit_ci;
  double block_rate = 0.0;
  WilsonInterval block_ci;
  std::uint64_t seed = 0;
  double epsilon = 0.0;
  std::uint64_t bit_samples = 0;
  std::uint64_t bit_erasures = 0;
  std::uint64_t block_errors = 0;
};

// Monte Carlo over i.i.d. erasure masks. Each trial draws its RNG from
// (seed, trial index), so the report is byte-identical for any worker count.
TrialReport simulate(const TannerGraph& tg, double epsilon, std::optional<std::uint32_t> iters,
                     std::uint64_t trials, std::uint64_t seed, unsigned workers = 1);

struct DeComparison {
  double empirical = 0.0;
  double y_t = 0.0;
  bool regular = false;
  bool within_interval = false;
  WilsonInterval ci;       // on the empirical bit rate
  double slack = 0.0;      // 3 Wilson half-widths
  double delta = 0.1;      // irregular comparison: empirical <= y_t/(1-delta) + slack
};

// Compares the empirical bit-erasure rate after t iterations against the
// density-evolution value y_t. Requires girth >= 4t+2 so that depth-t
// neighborhoods are trees; regular graphs are tested for two-sided agreement,
// irregular ones for the one-sided bound.
DeComparison compare_to_de(const TannerGraph& tg, const DegreeDistributionPair& ddp,
                           double epsilon, std::uint32_t t, std::uint64_t trials,
                           std::uint64_t seed, unsigned workers = 1);

}  // namespace lgldpc
