#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "lgldpc/error.hpp"
#include "lgldpc/lps.hpp"
#include "lgldpc/transforms.hpp"
#include "support/oracles.hpp"

using namespace lgldpc;

namespace {

Graph cycle_graph(std::uint32_t n) {
  GraphBuilder gb(n);
  for (std::uint32_t i = 0; i < n; ++i) gb.add_edge(i, (i + 1) % n);
  return std::move(gb).build();
}

Graph triangle() { return cycle_graph(3); }

std::uint32_t girth_or_huge(const Graph& g) {
  auto v = test::exhaustive_girth(g);
  return v ? *v : 0xffffffffu;
}

}  // namespace

TEST_CASE("double cover of a triangle is a 6-cycle") {
  Graph h = bipartite_double(triangle());
  CHECK(h.vertex_count() == 6);
  CHECK(h.edge_count() == 6);
  CHECK(is_connected(h));
  CHECK(bipartition(h).has_value());
  CHECK(test::exhaustive_girth(h) == 6);
}

TEST_CASE("double cover of a single edge") {
  GraphBuilder gb(2);
  gb.add_edge(0, 1);
  Graph h = bipartite_double(std::move(gb).build());
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge_count() == 2);
  CHECK_FALSE(is_connected(h));  // a0-b1 and b0-a1
  for (std::uint32_t v = 0; v < 4; ++v) CHECK(h.degree(v) == 1);
}

TEST_CASE("double cover of a bipartite graph splits into two copies") {
  Graph h = bipartite_double(cycle_graph(6));
  CHECK(h.vertex_count() == 12);
  CHECK_FALSE(is_connected(h));
  CHECK(test::exhaustive_girth(h) == 6);
}

TEST_CASE("deterministic split plan blocks ascending edge ids") {
  // star around vertex 0 with extra edges to shuffle edge ids
  GraphBuilder gb(7);
  gb.add_edge(1, 2);       // e0
  gb.add_edge(0, 3);       // e1
  gb.add_edge(4, 5);       // e2
  gb.add_edge(0, 6);       // e3
  gb.add_edge(0, 1);       // e4
  gb.add_edge(0, 2);       // e5
  Graph g = std::move(gb).build();
  SplitPlan plan = SplitPlan::deterministic(g, 0, 2);
  REQUIRE(plan.parts.size() == 2);
  CHECK(plan.parts[0] == std::vector<std::uint32_t>{1, 3});
  CHECK(plan.parts[1] == std::vector<std::uint32_t>{4, 5});
}

TEST_CASE("split_vertex conserves edges and degrees") {
  // degree-6 vertex split into two degree-3 vertices
  GraphBuilder gb(7);
  for (std::uint32_t v = 1; v <= 6; ++v) gb.add_edge(0, v);
  Graph g = std::move(gb).build();
  Graph h = split_vertex(g, SplitPlan::deterministic(g, 0, 2));
  CHECK(h.vertex_count() == 8);
  CHECK(h.edge_count() == 6);
  CHECK(h.degree(6) == 3);  // new vertices at the end of the id space
  CHECK(h.degree(7) == 3);
  std::uint32_t total = 0;
  for (std::uint32_t v = 0; v < h.vertex_count(); ++v) total += h.degree(v);
  CHECK(total == 12);
}

TEST_CASE("splitting a degree-2 vertex of a cycle breaks the cycle") {
  Graph g = cycle_graph(5);
  Graph h = split_vertex(g, SplitPlan::deterministic(g, 2, 2));
  CHECK(h.vertex_count() == 6);
  CHECK(h.edge_count() == 5);
  CHECK_FALSE(test::exhaustive_girth(h).has_value());  // acyclic >= old girth
}

TEST_CASE("invalid plans are rejected") {
  Graph g = cycle_graph(4);
  CHECK_THROWS_AS(SplitPlan::deterministic(g, 0, 3), Error);  // 2 edges, 3 parts
  SplitPlan bad{0, {{0}, {0}}};  // not a partition
  CHECK_THROWS_AS(split_vertex(g, bad), Error);
  CHECK_THROWS_AS(split_all(g, 3, SplitMode::deterministic, 0), Error);
}

TEST_CASE("split_all on a 6-regular graph") {
  // K7 is 6-regular
  GraphBuilder gb(7);
  for (std::uint32_t u = 0; u < 7; ++u)
    for (std::uint32_t v = u + 1; v < 7; ++v) gb.add_edge(u, v);
  Graph g = std::move(gb).build();
  Graph h = split_all(g, 2, SplitMode::deterministic, 0);
  CHECK(h.vertex_count() == 14);
  CHECK(h.edge_count() == g.edge_count());
  for (std::uint32_t v = 0; v < 14; ++v) CHECK(h.degree(v) == 3);
  CHECK(girth_or_huge(h) >= girth_or_huge(g));

  CHECK(split_all(g, 1, SplitMode::deterministic, 0) == g);

  Graph hr = split_all(g, 2, SplitMode::random, 77);
  CHECK(hr.vertex_count() == 14);
  for (std::uint32_t v = 0; v < 14; ++v) CHECK(hr.degree(v) == 3);
  CHECK(hr == split_all(g, 2, SplitMode::random, 77));   // reproducible
  CHECK(hr != split_all(g, 2, SplitMode::random, 78));   // seed matters
}

TEST_CASE("splitting the 6-regular Cayley graph halves the degrees") {
  Graph x = lps_graph(LpsParameters::create(5, 13));
  Graph h = split_all(x, 2, SplitMode::deterministic, 0);
  CHECK(h.vertex_count() == 4368);
  for (std::uint32_t v = 0; v < h.vertex_count(); ++v) CHECK(h.degree(v) == 3);
  GirthReport gr = girth(h);
  REQUIRE(gr.girth);
  CHECK(*gr.girth >= 6);
}

TEST_CASE("girth never decreases under the transforms") {
  Rng rng(1234);
  int split_checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = test::random_simple_graph(rng, 3, 12, 0.3);
    std::uint32_t g_girth = girth_or_huge(g);

    CHECK(girth_or_huge(bipartite_double(g)) >= g_girth);

    // random vertex with a divisor of its degree
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) >= 2) candidates.push_back(v);
    if (candidates.empty()) continue;
    std::uint32_t v = candidates[rng.below(candidates.size())];
    std::vector<std::uint32_t> divisors;
    for (std::uint32_t k = 2; k <= g.degree(v); ++k)
      if (g.degree(v) % k == 0) divisors.push_back(k);
    if (divisors.empty()) continue;
    std::uint32_t parts = divisors[rng.below(divisors.size())];
    Graph h = split_vertex(g, SplitPlan::random(g, v, parts, rng));
    CHECK(girth_or_huge(h) >= g_girth);
    CHECK(h.edge_count() == g.edge_count());
    ++split_checked;
  }
  CHECK(split_checked > 100);
}

TEST_CASE("double cover output is always two-colorable") {
  Rng rng(4321);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = test::random_simple_graph(rng, 3, 12, 0.4);
    CHECK(bipartition(bipartite_double(g)).has_value());
  }
}

TEST_CASE("transforms keep simple graphs simple") {
  auto is_simple = [](const Graph& g) {
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      std::set<std::uint32_t> seen;
      for (const HalfEdge& he : g.neighbors(v)) {
        if (he.to == v || !seen.insert(he.to).second) return false;
      }
    }
    return true;
  };
  Rng rng(555);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = test::random_simple_graph(rng, 3, 12, 0.4);
    CHECK(is_simple(bipartite_double(g)));
    std::vector<std::uint32_t> even_deg;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) >= 2 && g.degree(v) % 2 == 0) even_deg.push_back(v);
    if (even_deg.empty()) continue;
    std::uint32_t v = even_deg[rng.below(even_deg.size())];
    CHECK(is_simple(split_vertex(g, SplitPlan::random(g, v, 2, rng))));
  }
}
