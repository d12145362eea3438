#include "lgldpc/erasure_sim.hpp"

#include <cassert>
#include <cmath>
#include <thread>

#include "lgldpc/density_evolution.hpp"
#include "lgldpc/error.hpp"
#include "lgldpc/graph.hpp"
#include "lgldpc/rng.hpp"

namespace lgldpc {

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t samples, double z) {
  if (samples == 0) return {0.0, 1.0};
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  WilsonInterval ci{std::max(0.0, center - half), std::min(1.0, center + half)};
  if (successes == 0) ci.lo = 0.0;          // endpoints are exact at the boundary
  if (successes == samples) ci.hi = 1.0;
  return ci;
}

namespace {

// Peeling working state, reusable across trials.
struct PeelScratch {
  std::vector<std::uint32_t> erased_per_check;
  std::vector<std::uint32_t> current;  // checks to try this round
  std::vector<std::uint32_t> next;
  std::vector<std::uint32_t> resolve;

  explicit PeelScratch(const TannerGraph& tg)
      : erased_per_check(tg.check_count()) {}
};

// Runs peeling in place on `erased`; returns residual erasure count.
std::uint64_t peel_in_place(const TannerGraph& tg, std::vector<std::uint8_t>& erased,
                            std::optional<std::uint32_t> cap, PeelScratch& scratch) {
  auto& cnt = scratch.erased_per_check;
  std::fill(cnt.begin(), cnt.end(), 0);
  std::uint64_t remaining = 0;
  for (std::uint32_t v = 0; v < tg.variable_count(); ++v) {
    if (!erased[v]) continue;
    ++remaining;
    for (const HalfEdge& he : tg.variable_neighbors(v)) ++cnt[he.to];
  }

  auto& current = scratch.current;
  current.clear();
  for (std::uint32_t c = 0; c < tg.check_count(); ++c)
    if (cnt[c] == 1) current.push_back(c);

  std::uint32_t round = 0;
  while (!current.empty() && (!cap || round < *cap)) {
    ++round;
    // Phase 1: collect this round's resolutions against the round-start counts.
    auto& resolve = scratch.resolve;
    resolve.clear();
    for (std::uint32_t c : current) {
      if (cnt[c] != 1) continue;  // stale entry
      for (const HalfEdge& he : tg.check_neighbors(c)) {
        if (erased[he.to]) {
          if (erased[he.to] == 1) {
            resolve.push_back(he.to);
            erased[he.to] = 2;  // marked for this round
          }
          break;
        }
      }
    }
    // Phase 2: apply simultaneously.
    auto& next = scratch.next;
    next.clear();
    for (std::uint32_t v : resolve) {
      erased[v] = 0;
      --remaining;
      for (const HalfEdge& he : tg.variable_neighbors(v))
        if (--cnt[he.to] == 1) next.push_back(he.to);
    }
    current.swap(next);
  }

#ifndef NDEBUG
  if (!cap) {
    // Fixpoint residual must be a stopping set.
    for (std::uint32_t c = 0; c < tg.check_count(); ++c) assert(cnt[c] != 1);
  }
#endif
  return remaining;
}

}  // namespace

std::vector<std::uint8_t> peel(const TannerGraph& tg, const std::vector<std::uint8_t>& erased,
                               std::optional<std::uint32_t> iteration_cap) {
  if (erased.size() != tg.variable_count())
    raise(ErrorCode::invalid_argument, "erasure mask length differs from variable count");
  std::vector<std::uint8_t> residual = erased;
  for (auto& b : residual) b = b ? 1 : 0;
  PeelScratch scratch(tg);
  peel_in_place(tg, residual, iteration_cap, scratch);
  return residual;
}

TrialReport simulate(const TannerGraph& tg, double epsilon, std::optional<std::uint32_t> iters,
                     std::uint64_t trials, std::uint64_t seed, unsigned workers) {
  if (trials < 1) raise(ErrorCode::invalid_argument, "need at least one trial");
  if (epsilon < 0.0 || epsilon > 1.0) raise(ErrorCode::invalid_argument, "epsilon outside [0,1]");
  const std::size_t n = tg.variable_count();
  if (workers == 0) workers = 1;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));

  struct Tally {
    std::uint64_t bit_erasures = 0;
    std::uint64_t block_errors = 0;
  };
  std::vector<Tally> tallies(workers);

  auto run_range = [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    PeelScratch scratch(tg);
    std::vector<std::uint8_t> mask(n);
    Tally& tally = tallies[w];
    for (std::uint64_t trial = lo; trial < hi; ++trial) {
      Rng rng = Rng::stream(seed, trial);
      for (std::size_t v = 0; v < n; ++v) mask[v] = rng.bernoulli(epsilon) ? 1 : 0;
      std::uint64_t residual = peel_in_place(tg, mask, iters, scratch);
      tally.bit_erasures += residual;
      tally.block_errors += residual != 0;
    }
  };

  if (workers == 1) {
    run_range(0, 0, trials);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::uint64_t chunk = trials / workers, extra = trials % workers, lo = 0;
    for (unsigned w = 0; w < workers; ++w) {
      std::uint64_t hi = lo + chunk + (w < extra ? 1 : 0);
      pool.emplace_back(run_range, w, lo, hi);
      lo = hi;
    }
    for (auto& t : pool) t.join();
  }

  TrialReport report;
  report.trials = trials;
  report.iters_cap = iters;
  report.seed = seed;
  report.epsilon = epsilon;
  report.bit_samples = trials * n;
  for (const Tally& t : tallies) {
    report.bit_erasures += t.bit_erasures;
    report.block_errors += t.block_errors;
  }
  report.bit_rate = static_cast<double>(report.bit_erasures) / static_cast<double>(report.bit_samples);
  report.block_rate = static_cast<double>(report.block_errors) / static_cast<double>(trials);
  report.bit_ci = wilson_interval(report.bit_erasures, report.bit_samples);
  report.block_ci = wilson_interval(report.block_errors, trials);
  return report;
}

DeComparison compare_to_de(const TannerGraph& tg, const DegreeDistributionPair& ddp,
                           double epsilon, std::uint32_t t, std::uint64_t trials,
                           std::uint64_t seed, unsigned workers) {
  if (t < 1) raise(ErrorCode::invalid_argument, "iteration count must be >= 1");
  GirthReport gr = girth(tg.to_graph());
  if (!gr.acyclic() && *gr.girth < 4 * t + 2)
    raise(ErrorCode::girth_budget_exceeded,
          "girth " + std::to_string(*gr.girth) + " < 4t+2 = " + std::to_string(4 * t + 2) +
              "; depth-" + std::to_string(t) + " neighborhoods are not trees");

  DeTrace trace = de_trace(ddp, epsilon, t, 0.0);
  DeComparison cmp;
  cmp.y_t = trace.ys.at(t - 1);
  cmp.regular = ddp.is_regular();

  TrialReport report = simulate(tg, epsilon, t, trials, seed, workers);
  cmp.empirical = report.bit_rate;
  cmp.ci = report.bit_ci;
  cmp.slack = 3.0 * report.bit_ci.half_width();
  if (cmp.regular) {
    cmp.within_interval = std::abs(cmp.empirical - cmp.y_t) <= cmp.slack;
  } else {
    cmp.within_interval = cmp.empirical <= cmp.y_t / (1.0 - cmp.delta) + cmp.slack;
  }
  return cmp;
}

}  // namespace lgldpc
