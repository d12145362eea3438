#include "lgldpc/graph.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <string>

#include "lgldpc/error.hpp"

namespace lgldpc {

namespace {
constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
}

GraphBuilder::GraphBuilder(std::size_t vertex_count) {
  if (vertex_count > kUnset)
    raise(ErrorCode::size_limit, "graph too large for 32-bit vertex ids");
  g_.adjacency_.resize(vertex_count);
}

std::uint32_t GraphBuilder::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u >= g_.vertex_count() || v >= g_.vertex_count())
    raise(ErrorCode::invalid_argument, "edge endpoint out of range");
  if (u == v) raise(ErrorCode::invalid_argument, "self-loops are not allowed");
  auto id = static_cast<std::uint32_t>(g_.endpoints_.size());
  g_.endpoints_.emplace_back(u, v);
  g_.adjacency_[u].push_back({v, id});
  g_.adjacency_[v].push_back({u, id});
  return id;
}

Graph GraphBuilder::build() && { return std::move(g_); }

GirthReport girth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  GirthReport report;

  // Parallel edges are a length-2 cycle; the BFS below assumes they are gone.
  for (std::uint32_t v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i + 1 < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (nb[i].to == nb[j].to) {
          report.girth = 2;
          report.witness_cycle = {v, nb[i].to};
          return report;
        }
  }

  std::uint32_t best = kUnset;
  std::vector<std::uint32_t> dist(n, 0), parent_vertex(n, 0), parent_edge(n, 0);
  std::vector<std::uint32_t> stamp(n, kUnset), queue;
  queue.reserve(n);

  auto path_to_root = [&](std::uint32_t x, std::uint32_t root) {
    std::vector<std::uint32_t> path{x};
    while (x != root) {
      x = parent_vertex[x];
      path.push_back(x);
    }
    return path;
  };

  for (std::uint32_t root = 0; root < n; ++root) {
    if (best <= 3) break;  // nothing shorter exists in a simple graph
    queue.clear();
    queue.push_back(root);
    stamp[root] = root;
    dist[root] = 0;
    parent_edge[root] = kUnset;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::uint32_t u = queue[head];
      if (best != kUnset && 2 * dist[u] >= best) break;
      for (const HalfEdge& he : g.neighbors(u)) {
        if (he.edge == parent_edge[u]) continue;
        std::uint32_t w = he.to;
        if (stamp[w] != root) {
          stamp[w] = root;
          dist[w] = dist[u] + 1;
          parent_vertex[w] = u;
          parent_edge[w] = he.edge;
          queue.push_back(w);
        } else {
          std::uint64_t cand = std::uint64_t(dist[u]) + dist[w] + 1;
          if (cand < best) {
            // Trim the two root paths at their meeting point; the resulting
            // simple cycle can only be shorter than the candidate estimate.
            auto pu = path_to_root(u, root);
            auto pw = path_to_root(w, root);
            while (pu.size() >= 2 && pw.size() >= 2 &&
                   pu[pu.size() - 2] == pw[pw.size() - 2]) {
              pu.pop_back();
              pw.pop_back();
            }
            std::vector<std::uint32_t> cycle(pu.rbegin(), pu.rend());
            cycle.insert(cycle.end(), pw.begin(), pw.end() - 1);
            if (cycle.size() < best) {
              best = static_cast<std::uint32_t>(cycle.size());
              report.witness_cycle = std::move(cycle);
            }
          }
        }
      }
    }
  }

  if (best != kUnset) report.girth = best;
  return report;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<std::uint32_t> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const HalfEdge& he : g.neighbors(queue[head])) {
      if (!seen[he.to]) {
        seen[he.to] = 1;
        ++reached;
        queue.push_back(he.to);
      }
    }
  }
  return reached == n;
}

std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint8_t> color(n, 2);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (color[s] != 2) continue;
    color[s] = 0;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::uint32_t u = queue[head];
      for (const HalfEdge& he : g.neighbors(u)) {
        if (color[he.to] == 2) {
          color[he.to] = color[u] ^ 1;
          queue.push_back(he.to);
        } else if (color[he.to] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

}  // namespace lgldpc
