#pragma once

#include <cstdint>
#include <optional>

#include "lgldpc/graph.hpp"

namespace lgldpc {

// Parameters of one X^{p,q} instance: p, q distinct primes = 1 (mod 4) with
// q > 2*sqrt(p). Whether p is a quadratic residue mod q decides the group
// (PSL vs PGL mod q), the vertex count and which girth bound applies:
//   residue +1: non-bipartite, q(q^2-1)/2 vertices, girth >= 2 log_p q
//   residue -1: bipartite,     q(q^2-1)   vertices, girth >= 4 log_p q - log_p 4
struct LpsParameters {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  int residue = 0;  // legendre(p, q)
  std::uint64_t expected_order = 0;
  double girth_lower_bound = 0.0;

  static LpsParameters create(std::uint64_t p, std::uint64_t q);
};

// (p+1)-regular Cayley graph: vertices are canonicalized projective 2x2
// matrices mod q discovered by BFS from the identity under left
// multiplication by the quaternion generator matrices; edge ids follow
// (vertex BFS order, generator index). Deterministic.
Graph lps_graph(const LpsParameters& params);

struct LpsReport {
  bool regular = false;         // uniform vertex degree
  bool degree_matches = false;  // that degree equals p + 1
  bool order_ok = false;
  bool bipartite_matches_residue = false;
  std::optional<std::uint32_t> girth_measured;
  bool girth_bound_ok = false;
  bool connected = false;

  bool all_ok() const {
    return regular && degree_matches && order_ok && bipartite_matches_residue && girth_bound_ok &&
           connected;
  }
};

LpsReport verify_lps(const Graph& g, const LpsParameters& params);

// Smallest integer >= the bound, with a small guard against the bound
// sitting a rounding error above an integer.
std::uint32_t girth_bound_ceiling(double bound);

}  // namespace lgldpc
