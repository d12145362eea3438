#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace lgldpc {

struct HalfEdge {
  std::uint32_t to = 0;
  std::uint32_t edge = 0;

  friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
};

// Immutable simple undirected graph with stable edge identities. Edge ids are
// dense (0..edge_count-1) in insertion order; per-vertex adjacency lists are
// ordered by ascending edge id because GraphBuilder appends incidences as
// edges are added. Transforms never mutate, they produce new graphs.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return endpoints_.size(); }

  std::span<const HalfEdge> neighbors(std::uint32_t v) const {
    return adjacency_[v];
  }
  std::uint32_t degree(std::uint32_t v) const {
    return static_cast<std::uint32_t>(adjacency_[v].size());
  }
  std::pair<std::uint32_t, std::uint32_t> endpoints(std::uint32_t edge) const {
    return endpoints_[edge];
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::vector<std::vector<HalfEdge>> adjacency_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> endpoints_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t vertex_count);

  // Self-loops are rejected; nothing in this artifact produces them.
  std::uint32_t add_edge(std::uint32_t u, std::uint32_t v);
  Graph build() &&;

 private:
  Graph g_;
};

struct GirthReport {
  // Empty for forests (the acyclic sentinel).
  std::optional<std::uint32_t> girth;
  // When finite: a simple cycle of exactly `girth` vertices.
  std::vector<std::uint32_t> witness_cycle;

  bool acyclic() const { return !girth.has_value(); }
};

// Exact girth: per-root BFS over parent edges, taking the best cycle closed
// by a non-tree edge; pruned by the best cycle found so far. O(V*E) worst
// case, far less in practice once a short cycle is known.
GirthReport girth(const Graph& g);

bool is_connected(const Graph& g);

// Two-coloring; nullopt when the graph has an odd cycle. Vertex 0 (and the
// least vertex of every component) gets side 0.
std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g);

}  // namespace lgldpc
