#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lgldpc/degree_distribution.hpp"
#include "lgldpc/graph.hpp"
#include "lgldpc/lps.hpp"
#include "lgldpc/rational.hpp"
#include "lgldpc/tanner.hpp"
#include "lgldpc/transforms.hpp"

namespace lgldpc {

enum class BuildTarget { k_regular, cd_regular, ddp };

const char* build_target_name(BuildTarget t) noexcept;

// Either an explicit q or a minimum block length (variable count) that is
// translated into the smallest admissible q through the count formulas.
struct QChoice {
  std::optional<std::uint64_t> explicit_q;
  std::uint64_t min_n = 0;

  static QChoice q(std::uint64_t value) { return {value, 0}; }
  static QChoice min_block(std::uint64_t n) { return {std::nullopt, n}; }
};

struct BuildRecipe {
  BuildTarget target = BuildTarget::k_regular;
  std::uint32_t k = 0;  // target degree (k-regular) or LCM of the degrees
  std::uint32_t c = 0;
  std::uint32_t d = 0;
  std::optional<DegreeDistributionPair> ddp;
  std::uint64_t s = 0;
  std::uint64_t a = 1;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t seed = 0;
  SplitMode mode = SplitMode::deterministic;
};

struct BuildMetadata {
  BuildRecipe recipe;
  std::uint64_t n = 0;  // left/variable count
  std::uint64_t m = 0;  // right/check count
  double girth_lower_bound = 0.0;
  std::optional<std::uint32_t> girth_measured;
  bool connected = false;
  Rational rate{0};
};

// Smallest s >= 1 such that s*k - 1 is a prime = 1 (mod 4). Degrees with
// 4 | k admit no such s (s*k - 1 = 3 mod 4 throughout) and are rejected.
std::uint64_t find_s(std::uint64_t k);

// Smallest prime q = 1 (mod 4) with q >= max(min_q, floor(2*sqrt(p)) + 1)
// and q != p.
std::uint64_t find_q(std::uint64_t p, std::uint64_t min_q);

struct RegularBuild {
  Graph graph;
  std::vector<std::uint8_t> side;  // 0 = left, 1 = right
  BuildMetadata metadata;
};

struct TannerBuild {
  TannerGraph graph;
  BuildMetadata metadata;
};

// k-regular bipartite graph on s*q*(q^2-1) vertices: X^{p,q} with p = sk-1,
// double-covered when p is a quadratic residue mod q, then every vertex
// split into s.
RegularBuild build_k_regular(std::uint32_t k, const QChoice& qc, SplitMode mode, std::uint64_t seed);

// (c,d)-regular Tanner graph via the LCM graph: left side split k/c ways,
// right side k/d ways.
TannerBuild build_cd_regular(std::uint32_t c, std::uint32_t d, const QChoice& qc, SplitMode mode,
                             std::uint64_t seed);

// Irregular (lambda, rho) Tanner graph: (ak)-regular graph, split by a, then
// degree blocks assigned through seeded permutations sigma/pi and split
// deterministically. The seed only feeds sigma and pi.
TannerBuild build_irregular(const DegreeDistributionPair& ddp, const QChoice& qc, std::uint64_t seed);

// Relabels a bipartite graph as a Tanner graph: side-0 vertices become the
// variables (ascending), side-1 the checks.
TannerGraph bipartite_to_tanner(const Graph& g, std::span<const std::uint8_t> side);

// Edge-perspective pair recomputed from realized degrees, exact.
DegreeDistributionPair realized_ddp(const TannerGraph& tg);

}  // namespace lgldpc
