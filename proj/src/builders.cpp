#include "lgldpc/builders.hpp"

#include <algorithm>
#include <numeric>

#include "lgldpc/error.hpp"
#include "lgldpc/number_theory.hpp"
#include "lgldpc/rng.hpp"

namespace lgldpc {

namespace {

constexpr std::uint64_t kMaxSearchS = 1'000'000;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) raise(ErrorCode::size_limit, "count overflow");
  return a * b;
}

// Vertices of one X^{p,q}-derived bipartite graph, before any splitting.
std::uint64_t base_order(std::uint64_t s, std::uint64_t q) {
  return checked_mul(s, checked_mul(q, q * q - 1));
}

std::vector<std::uint8_t> sides_of_base_graph(const Graph& g, int residue) {
  if (residue == -1) {
    // X^{p,q} itself is bipartite and connected, so the 2-coloring rooted at
    // the identity vertex is canonical.
    auto side = bipartition(g);
    if (!side) raise(ErrorCode::internal_inconsistency, "expected bipartite Cayley graph");
    return std::move(*side);
  }
  // Double cover: copy-0 is the first half of the id space.
  std::vector<std::uint8_t> side(g.vertex_count(), 0);
  for (std::size_t v = g.vertex_count() / 2; v < g.vertex_count(); ++v) side[v] = 1;
  return side;
}

void require_counts(std::uint64_t got, std::uint64_t want, const char* what) {
  if (got != want)
    raise(ErrorCode::internal_inconsistency, std::string(what) + ": got " + std::to_string(got) +
                                                 ", expected " + std::to_string(want));
}

std::uint64_t rational_to_count(const Rational& r, const char* what) {
  if (!r.is_integer() || r.num() < 0)
    raise(ErrorCode::internal_inconsistency, std::string(what) + " is not a nonnegative integer: " + r.str());
  return static_cast<std::uint64_t>(r.num());
}

}  // namespace

const char* build_target_name(BuildTarget t) noexcept {
  switch (t) {
    case BuildTarget::k_regular: return "k-regular";
    case BuildTarget::cd_regular: return "cd-regular";
    case BuildTarget::ddp: return "ddp";
  }
  return "?";
}

std::uint64_t find_s(std::uint64_t k) {
  if (k < 2) raise(ErrorCode::invalid_argument, "degree k must be >= 2");
  if (k % 4 == 0)
    raise(ErrorCode::unsupported_degree_profile,
          "no prime p = 1 (mod 4) of the form s*k - 1 exists when 4 divides k = " + std::to_string(k));
  for (std::uint64_t s = 1; s <= kMaxSearchS; ++s) {
    std::uint64_t p = checked_mul(s, k) - 1;
    if (p % 4 == 1 && is_prime(p)) return s;
  }
  raise(ErrorCode::search_exhausted, "no admissible s found below " + std::to_string(kMaxSearchS));
}

std::uint64_t find_q(std::uint64_t p, std::uint64_t min_q) {
  std::uint64_t start = std::max(min_q, isqrt_u64(4 * p) + 1);
  for (std::uint64_t q = start;; ++q) {
    if (q % 4 == 1 && q != p && is_prime(q)) return q;
  }
}

RegularBuild build_k_regular(std::uint32_t k, const QChoice& qc, SplitMode mode,
                             std::uint64_t seed) {
  const std::uint64_t s = find_s(k);
  const std::uint64_t p = s * k - 1;

  std::uint64_t q;
  if (qc.explicit_q) {
    q = *qc.explicit_q;
  } else {
    q = find_q(p, 0);
    while (base_order(s, q) / 2 < qc.min_n) q = find_q(p, q + 1);
  }

  LpsParameters params = LpsParameters::create(p, q);
  Graph x = lps_graph(params);
  Graph base = params.residue == 1 ? bipartite_double(x) : std::move(x);
  std::vector<std::uint8_t> base_side = sides_of_base_graph(base, params.residue);

  Graph h = split_all(base, static_cast<std::uint32_t>(s), mode, seed);
  std::vector<std::uint8_t> side(h.vertex_count());
  for (std::size_t v = 0; v < h.vertex_count(); ++v) side[v] = base_side[v / s];

  const std::uint64_t order = base_order(s, q);
  require_counts(h.vertex_count(), order, "k-regular vertex count");
  for (std::uint32_t v = 0; v < h.vertex_count(); ++v)
    if (h.degree(v) != k) raise(ErrorCode::internal_inconsistency, "vertex degree != k after split");
  std::uint64_t left = std::count(side.begin(), side.end(), 0);
  require_counts(left, order / 2, "left side size");

  RegularBuild out{std::move(h), std::move(side), {}};
  out.metadata.recipe = {BuildTarget::k_regular, k, 0, 0, std::nullopt, s, 1, p, q, seed, mode};
  out.metadata.n = order / 2;
  out.metadata.m = order / 2;
  out.metadata.girth_lower_bound = params.girth_lower_bound;
  out.metadata.connected = is_connected(out.graph);
  out.metadata.rate = Rational(0);
  return out;
}

TannerGraph bipartite_to_tanner(const Graph& g, std::span<const std::uint8_t> side) {
  if (side.size() != g.vertex_count())
    raise(ErrorCode::invalid_argument, "side vector size mismatch");
  std::vector<std::uint32_t> index(g.vertex_count());
  std::uint32_t n = 0, m = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) index[v] = side[v] == 0 ? n++ : m++;

  TannerBuilder tb(n, m);
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    if (side[u] == side[v])
      raise(ErrorCode::validation_error, "edge does not cross the bipartition");
    if (side[u] != 0) std::swap(u, v);
    tb.add_edge(index[u], index[v]);
  }
  return std::move(tb).build();
}

namespace {

// Shared tail of the (c,d)-regular and irregular builds: split each vertex
// of a regular bipartite graph into its assigned number of parts, then
// relabel the result as a Tanner graph.
TannerGraph split_sides_to_tanner(const Graph& g, std::span<const std::uint8_t> side,
                                  const std::vector<std::uint32_t>& parts_per_vertex) {
  std::vector<std::vector<std::vector<std::uint32_t>>> plans(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    plans[v] = SplitPlan::deterministic(g, v, parts_per_vertex[v]).parts;
  Graph h = split_vertices(g, plans);

  std::vector<std::uint8_t> new_side;
  new_side.reserve(h.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    new_side.insert(new_side.end(), parts_per_vertex[v], side[v]);
  return bipartite_to_tanner(h, new_side);
}

}  // namespace

TannerBuild build_cd_regular(std::uint32_t c, std::uint32_t d, const QChoice& qc, SplitMode mode,
                             std::uint64_t seed) {
  if (c < 2 || d < 2) raise(ErrorCode::invalid_argument, "c and d must be >= 2");
  std::uint64_t k64 = lcm_u64_checked(c, d);
  if (k64 > (1ULL << 20)) raise(ErrorCode::size_limit, "LCM degree too large");
  const auto k = static_cast<std::uint32_t>(k64);

  const std::uint64_t s = find_s(k);
  const std::uint64_t p = s * k - 1;
  QChoice resolved = qc;
  if (!qc.explicit_q) {
    std::uint64_t q = find_q(p, 0);
    while (checked_mul(k / c, base_order(s, q) / 2) < qc.min_n) q = find_q(p, q + 1);
    resolved = QChoice::q(q);
  }

  RegularBuild reg = build_k_regular(k, resolved, mode, seed);
  const std::uint64_t q = reg.metadata.recipe.q;
  const std::uint64_t half = base_order(s, q) / 2;

  std::vector<std::uint32_t> parts(reg.graph.vertex_count());
  for (std::uint32_t v = 0; v < reg.graph.vertex_count(); ++v)
    parts[v] = reg.side[v] == 0 ? k / c : k / d;

  TannerGraph tg;
  if (mode == SplitMode::deterministic) {
    tg = split_sides_to_tanner(reg.graph, reg.side, parts);
  } else {
    Rng left_rng = Rng::stream(seed, stream_tag("split_left"));
    Rng right_rng = Rng::stream(seed, stream_tag("split_right"));
    std::vector<std::vector<std::vector<std::uint32_t>>> plans(reg.graph.vertex_count());
    for (std::uint32_t v = 0; v < reg.graph.vertex_count(); ++v) {
      Rng& rng = reg.side[v] == 0 ? left_rng : right_rng;
      plans[v] = SplitPlan::random(reg.graph, v, parts[v], rng).parts;
    }
    Graph h = split_vertices(reg.graph, plans);
    std::vector<std::uint8_t> new_side;
    new_side.reserve(h.vertex_count());
    for (std::uint32_t v = 0; v < reg.graph.vertex_count(); ++v)
      new_side.insert(new_side.end(), parts[v], reg.side[v]);
    tg = bipartite_to_tanner(h, new_side);
  }

  require_counts(tg.variable_count(), checked_mul(k / c, half), "variable count");
  require_counts(tg.check_count(), checked_mul(k / d, half), "check count");
  for (std::uint32_t v = 0; v < tg.variable_count(); ++v)
    if (tg.variable_degree(v) != c) raise(ErrorCode::internal_inconsistency, "variable degree != c");
  for (std::uint32_t ch = 0; ch < tg.check_count(); ++ch)
    if (tg.check_degree(ch) != d) raise(ErrorCode::internal_inconsistency, "check degree != d");

  TannerBuild out{std::move(tg), reg.metadata};
  out.metadata.recipe.target = BuildTarget::cd_regular;
  out.metadata.recipe.c = c;
  out.metadata.recipe.d = d;
  out.metadata.n = checked_mul(k / c, half);
  out.metadata.m = checked_mul(k / d, half);
  out.metadata.rate =
      Rational(1) - Rational(static_cast<std::int64_t>(out.metadata.m)) /
                        Rational(static_cast<std::int64_t>(out.metadata.n));
  out.metadata.connected = is_connected(out.graph.to_graph());
  return out;
}

TannerBuild build_irregular(const DegreeDistributionPair& ddp, const QChoice& qc,
                            std::uint64_t seed) {
  auto [k64, a64] = ddp.lcm_and_multiplier();
  std::uint64_t ak64 = checked_mul(a64, k64);
  if (k64 > (1ULL << 20) || ak64 > (1ULL << 20))
    raise(ErrorCode::size_limit, "a*k too large to build");
  const auto k = static_cast<std::uint32_t>(k64);
  const auto a = static_cast<std::uint32_t>(a64);
  const auto ak = static_cast<std::uint32_t>(ak64);

  const std::uint64_t s = find_s(ak);
  const std::uint64_t p = s * ak - 1;

  auto n0_of = [&](std::uint64_t q) { return checked_mul(a, base_order(s, q)) / 2; };
  auto n_of = [&](std::uint64_t q) {
    Rational n = Rational(static_cast<std::int64_t>(n0_of(q))) *
                 Rational(static_cast<std::int64_t>(k)) * ddp.integral_lambda();
    return rational_to_count(n, "variable count formula");
  };

  QChoice resolved = qc;
  if (!qc.explicit_q) {
    std::uint64_t q = find_q(p, 0);
    while (n_of(q) < qc.min_n) q = find_q(p, q + 1);
    resolved = QChoice::q(q);
  }

  RegularBuild reg = build_k_regular(ak, resolved, SplitMode::deterministic, seed);
  const std::uint64_t q = reg.metadata.recipe.q;

  Graph g = split_all(reg.graph, a, SplitMode::deterministic, 0);
  std::vector<std::uint8_t> side(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) side[v] = reg.side[v / a];

  const std::uint64_t n0 = n0_of(q);
  std::vector<std::uint32_t> left, right;
  left.reserve(n0);
  right.reserve(n0);
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    (side[v] == 0 ? left : right).push_back(v);
  require_counts(left.size(), n0, "left count before degree assignment");
  require_counts(right.size(), n0, "right count before degree assignment");

  // sigma and pi are the only randomness in the whole build.
  std::vector<std::uint32_t> sigma(n0), pi(n0);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::iota(pi.begin(), pi.end(), 0);
  {
    Rng rng_sigma = Rng::stream(seed, stream_tag("sigma"));
    rng_sigma.shuffle(sigma);
    Rng rng_pi = Rng::stream(seed, stream_tag("pi"));
    rng_pi.shuffle(pi);
  }

  std::vector<std::uint32_t> parts(g.vertex_count(), 0);
  auto assign_blocks = [&](const std::vector<std::uint32_t>& vertices,
                           const std::vector<std::uint32_t>& perm,
                           const DegreeDistributionPair::CoeffMap& coeffs, const char* what) {
    std::uint64_t cursor = 0;
    for (const auto& [degree, coeff] : coeffs) {  // ascending degree order
      std::uint64_t block =
          rational_to_count(Rational(static_cast<std::int64_t>(n0)) * coeff, what);
      for (std::uint64_t i = 0; i < block; ++i, ++cursor)
        parts[vertices[perm[cursor]]] = k / degree;
    }
    require_counts(cursor, n0, what);
  };
  assign_blocks(left, sigma, ddp.lambda(), "lambda block size");
  assign_blocks(right, pi, ddp.rho(), "rho block size");

  TannerGraph tg = split_sides_to_tanner(g, side, parts);

  const std::uint64_t n = n_of(q);
  const std::uint64_t m = rational_to_count(Rational(static_cast<std::int64_t>(n0)) *
                                                Rational(static_cast<std::int64_t>(k)) *
                                                ddp.integral_rho(),
                                            "check count formula");
  require_counts(tg.variable_count(), n, "variable count");
  require_counts(tg.check_count(), m, "check count");
  if (realized_ddp(tg) != ddp)
    raise(ErrorCode::internal_inconsistency, "realized degree distribution differs from request");

  TannerBuild out{std::move(tg), reg.metadata};
  out.metadata.recipe.target = BuildTarget::ddp;
  out.metadata.recipe.ddp = ddp;
  out.metadata.recipe.k = k;
  out.metadata.recipe.a = a;
  out.metadata.recipe.mode = SplitMode::deterministic;
  out.metadata.n = n;
  out.metadata.m = m;
  out.metadata.rate = ddp.design_rate();
  out.metadata.connected = is_connected(out.graph.to_graph());
  return out;
}

DegreeDistributionPair realized_ddp(const TannerGraph& tg) {
  std::map<std::uint32_t, std::uint64_t> vcount, ccount;
  for (std::uint32_t v = 0; v < tg.variable_count(); ++v) vcount[tg.variable_degree(v)]++;
  for (std::uint32_t c = 0; c < tg.check_count(); ++c) ccount[tg.check_degree(c)]++;
  const auto edges = static_cast<std::int64_t>(tg.edge_count());
  DegreeDistributionPair::CoeffMap lambda, rho;
  for (auto [deg, count] : vcount)
    lambda[deg] = Rational(static_cast<std::int64_t>(deg) * static_cast<std::int64_t>(count), edges);
  for (auto [deg, count] : ccount)
    rho[deg] = Rational(static_cast<std::int64_t>(deg) * static_cast<std::int64_t>(count), edges);
  return DegreeDistributionPair::create(std::move(lambda), std::move(rho));
}

}  // namespace lgldpc
