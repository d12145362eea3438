#include "lgldpc/lps.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "lgldpc/error.hpp"
#include "lgldpc/number_theory.hpp"

namespace lgldpc {

namespace {

// 2x2 matrix over Z_q, row-major. q < 2^16 so entries pack into a u64 key.
struct Mat2 {
  std::array<std::uint32_t, 4> m{};

  std::uint64_t key() const {
    return (std::uint64_t(m[0]) << 48) | (std::uint64_t(m[1]) << 32) |
           (std::uint64_t(m[2]) << 16) | m[3];
  }
};

std::uint32_t inv_mod(std::uint32_t a, std::uint64_t q) {
  // q prime, a != 0
  return static_cast<std::uint32_t>(powmod_u64(a, q - 2, q));
}

// Unique projective representative: scale so the first nonzero entry is 1.
Mat2 canonical(Mat2 a, std::uint64_t q) {
  for (std::uint32_t e : a.m) {
    if (e != 0) {
      if (e == 1) return a;
      std::uint64_t inv = inv_mod(e, q);
      for (auto& x : a.m) x = static_cast<std::uint32_t>((std::uint64_t(x) * inv) % q);
      return a;
    }
  }
  raise(ErrorCode::internal_inconsistency, "zero matrix is not projective");
}

Mat2 mul(const Mat2& a, const Mat2& b, std::uint64_t q) {
  auto at = [&](int r, int c) { return std::uint64_t(a.m[2 * r + c]); };
  auto bt = [&](int r, int c) { return std::uint64_t(b.m[2 * r + c]); };
  Mat2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      out.m[2 * r + c] =
          static_cast<std::uint32_t>((at(r, 0) * bt(0, c) + at(r, 1) * bt(1, c)) % q);
  return out;
}

// Projective inverse = adjugate (the determinant scalar cancels).
Mat2 projective_inverse(const Mat2& a, std::uint64_t q) {
  Mat2 out;
  out.m[0] = a.m[3];
  out.m[1] = static_cast<std::uint32_t>((q - a.m[1]) % q);
  out.m[2] = static_cast<std::uint32_t>((q - a.m[2]) % q);
  out.m[3] = a.m[0];
  return out;
}

std::uint32_t residue_of(std::int64_t v, std::uint64_t q) {
  std::int64_t r = v % static_cast<std::int64_t>(q);
  if (r < 0) r += static_cast<std::int64_t>(q);
  return static_cast<std::uint32_t>(r);
}

}  // namespace

LpsParameters LpsParameters::create(std::uint64_t p, std::uint64_t q) {
  if (!is_prime(p) || p % 4 != 1)
    raise(ErrorCode::invalid_parameters, "p must be a prime = 1 (mod 4), got " + std::to_string(p));
  if (!is_prime(q) || q % 4 != 1)
    raise(ErrorCode::invalid_parameters, "q must be a prime = 1 (mod 4), got " + std::to_string(q));
  if (q == p) raise(ErrorCode::invalid_parameters, "p and q must be distinct");
  if (q >= (1ULL << 16)) raise(ErrorCode::size_limit, "q too large for the packed matrix table");
  if (q * q <= 4 * p)
    raise(ErrorCode::invalid_parameters, "q must exceed 2*sqrt(p): q=" + std::to_string(q) +
                                             ", p=" + std::to_string(p));

  LpsParameters out;
  out.p = p;
  out.q = q;
  out.residue = legendre(static_cast<std::int64_t>(p), q);
  std::uint64_t pgl_order = q * (q * q - 1);
  out.expected_order = out.residue == 1 ? pgl_order / 2 : pgl_order;
  if (out.expected_order > std::numeric_limits<std::uint32_t>::max())
    raise(ErrorCode::size_limit, "graph order exceeds 32-bit vertex ids");
  double lp = std::log(static_cast<double>(p));
  double lq = std::log(static_cast<double>(q));
  out.girth_lower_bound =
      out.residue == 1 ? 2.0 * lq / lp : 4.0 * lq / lp - std::log(4.0) / lp;
  return out;
}

Graph lps_graph(const LpsParameters& params) {
  const LpsParameters checked = LpsParameters::create(params.p, params.q);
  if (checked.residue != params.residue || checked.expected_order != params.expected_order)
    raise(ErrorCode::invalid_parameters, "inconsistent LpsParameters");
  const std::uint64_t p = params.p, q = params.q;

  // Quaternion solution (a,b,c,d) -> [[a+bx, c+dx], [-c+dx, a-bx]] with
  // x^2 = -1 (mod q), then reduced to its projective representative.
  const std::uint64_t x = sqrt_minus_one(q);
  std::vector<QuaternionSolution> sols = quaternion_solutions(p);
  std::vector<Mat2> gens;
  gens.reserve(sols.size());
  for (const auto& s : sols) {
    Mat2 g;
    g.m[0] = residue_of(s.a + s.b * static_cast<std::int64_t>(x), q);
    g.m[1] = residue_of(s.c + s.d * static_cast<std::int64_t>(x), q);
    g.m[2] = residue_of(-s.c + s.d * static_cast<std::int64_t>(x), q);
    g.m[3] = residue_of(s.a - s.b * static_cast<std::int64_t>(x), q);
    gens.push_back(canonical(g, q));
  }

  const std::size_t degree = gens.size();  // p + 1
  std::unordered_map<std::uint64_t, std::uint32_t> gen_index;
  for (std::uint32_t i = 0; i < degree; ++i) gen_index.emplace(gens[i].key(), i);
  if (gen_index.size() != degree)
    raise(ErrorCode::internal_inconsistency, "generator matrices are not projectively distinct");
  for (const Mat2& g : gens)
    if (!gen_index.count(canonical(projective_inverse(g, q), q).key()))
      raise(ErrorCode::internal_inconsistency, "generator set is not closed under inverse");

  Mat2 identity;
  identity.m = {1, 0, 0, 1};
  if (gen_index.count(identity.key()))
    raise(ErrorCode::internal_inconsistency, "identity among generators (self-loop)");

  // BFS closure from the identity; vertex ids in discovery order.
  std::vector<Mat2> vertex_matrix;
  vertex_matrix.reserve(params.expected_order);
  std::unordered_map<std::uint64_t, std::uint32_t> vertex_id;
  vertex_id.reserve(2 * params.expected_order);
  std::vector<std::uint32_t> neighbor;  // flattened [vertex][generator]
  vertex_matrix.push_back(identity);
  vertex_id.emplace(identity.key(), 0);

  for (std::uint32_t u = 0; u < vertex_matrix.size(); ++u) {
    Mat2 mu = vertex_matrix[u];
    for (std::size_t gi = 0; gi < degree; ++gi) {
      Mat2 w = canonical(mul(gens[gi], mu, q), q);
      auto [it, inserted] = vertex_id.emplace(w.key(), static_cast<std::uint32_t>(vertex_matrix.size()));
      if (inserted) {
        vertex_matrix.push_back(w);
        if (vertex_matrix.size() > params.expected_order)
          raise(ErrorCode::internal_inconsistency, "BFS closure exceeded the expected group order");
      }
      neighbor.push_back(it->second);
    }
  }
  const std::size_t order = vertex_matrix.size();
  if (order != params.expected_order)
    raise(ErrorCode::internal_inconsistency,
          "realized order " + std::to_string(order) + " differs from expected " +
              std::to_string(params.expected_order));

  // No multi-edges or self-loops: the p+1 neighbors of each vertex must be
  // distinct and different from the vertex itself.
  std::vector<std::uint32_t> scratch(degree);
  for (std::uint32_t u = 0; u < order; ++u) {
    for (std::size_t gi = 0; gi < degree; ++gi) scratch[gi] = neighbor[u * degree + gi];
    std::sort(scratch.begin(), scratch.end());
    for (std::size_t i = 0; i + 1 < degree; ++i)
      if (scratch[i] == scratch[i + 1])
        raise(ErrorCode::internal_inconsistency, "multi-edge in Cayley graph");
    if (std::binary_search(scratch.begin(), scratch.end(), u))
      raise(ErrorCode::internal_inconsistency, "self-loop in Cayley graph");
  }

  // Canonical edge order: vertices in BFS order, generators in index order,
  // each undirected edge added at its first encounter.
  GraphBuilder gb(order);
  std::unordered_map<std::uint64_t, std::uint32_t> edge_of_pair;
  edge_of_pair.reserve(order * degree);
  for (std::uint32_t u = 0; u < order; ++u) {
    for (std::size_t gi = 0; gi < degree; ++gi) {
      std::uint32_t v = neighbor[u * degree + gi];
      std::uint64_t lo = std::min(u, v), hi = std::max(u, v);
      std::uint64_t key = (lo << 32) | hi;
      if (edge_of_pair.emplace(key, 0).second) gb.add_edge(u, v);
    }
  }
  Graph g = std::move(gb).build();
  if (g.edge_count() != order * degree / 2)
    raise(ErrorCode::internal_inconsistency, "edge count mismatch in Cayley graph");
  return g;
}

std::uint32_t girth_bound_ceiling(double bound) {
  return static_cast<std::uint32_t>(std::ceil(bound - 1e-9));
}

LpsReport verify_lps(const Graph& g, const LpsParameters& params) {
  LpsReport report;
  report.regular = true;
  report.degree_matches = g.vertex_count() > 0;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != g.degree(0)) report.regular = false;
    if (g.degree(v) != params.p + 1) report.degree_matches = false;
  }
  report.order_ok = g.vertex_count() == params.expected_order;
  report.bipartite_matches_residue = bipartition(g).has_value() == (params.residue == -1);
  report.connected = is_connected(g);
  GirthReport gr = girth(g);
  report.girth_measured = gr.girth;
  report.girth_bound_ok =
      gr.acyclic() || *gr.girth >= girth_bound_ceiling(params.girth_lower_bound);
  return report;
}

}  // namespace lgldpc
