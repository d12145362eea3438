#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lgldpc/graph.hpp"

namespace lgldpc {

// Bipartite Tanner graph: n variable nodes on the left, m check nodes on the
// right. Edge ids are canonicalized at build time to variable-major order
// (variables ascending, each variable's neighbor list in insertion order),
// which makes the alist round trip an identity including edge numbering.
class TannerGraph {
 public:
  TannerGraph() = default;

  std::size_t variable_count() const { return var_adj_.size(); }
  std::size_t check_count() const { return chk_adj_.size(); }
  std::size_t edge_count() const { return edges_; }

  std::span<const HalfEdge> variable_neighbors(std::uint32_t v) const { return var_adj_[v]; }
  std::span<const HalfEdge> check_neighbors(std::uint32_t c) const { return chk_adj_[c]; }
  std::uint32_t variable_degree(std::uint32_t v) const {
    return static_cast<std::uint32_t>(var_adj_[v].size());
  }
  std::uint32_t check_degree(std::uint32_t c) const {
    return static_cast<std::uint32_t>(chk_adj_[c].size());
  }

  // Plain graph view: variables keep their ids, check c becomes n + c.
  Graph to_graph() const;

  friend bool operator==(const TannerGraph&, const TannerGraph&) = default;

 private:
  friend class TannerBuilder;
  friend TannerGraph tanner_from_adjacency(std::vector<std::vector<std::uint32_t>> var_nbrs,
                                           std::vector<std::vector<std::uint32_t>> chk_nbrs);
  std::vector<std::vector<HalfEdge>> var_adj_;  // .to is a check id
  std::vector<std::vector<HalfEdge>> chk_adj_;  // .to is a variable id
  std::size_t edges_ = 0;
};

// Builds from explicit per-side neighbor orderings; the two sides must
// describe the same incidence relation (validation error otherwise).
TannerGraph tanner_from_adjacency(std::vector<std::vector<std::uint32_t>> var_nbrs,
                                  std::vector<std::vector<std::uint32_t>> chk_nbrs);

class TannerBuilder {
 public:
  TannerBuilder(std::size_t variables, std::size_t checks);
  void add_edge(std::uint32_t variable, std::uint32_t check);
  TannerGraph build() &&;

 private:
  std::size_t n_, m_;
  std::vector<std::vector<std::uint32_t>> var_nbrs_;
  std::vector<std::vector<std::uint32_t>> chk_nbrs_;
};

// alist text format, bit-exact:
//   line 1: "n m"
//   line 2: "dvmax dcmax"
//   line 3: n variable degrees        line 4: m check degrees
//   then n lines of 1-indexed check neighbors, zero-padded to dvmax,
//   then m lines of 1-indexed variable neighbors, zero-padded to dcmax.
// Single-space separators, every line newline-terminated.
void write_alist(const TannerGraph& tg, std::ostream& out);
void write_alist_file(const TannerGraph& tg, const std::string& path);
TannerGraph read_alist(std::istream& in);
TannerGraph read_alist_file(const std::string& path);

// Depth-t decoding neighborhood of a variable node, described by the counts
// used in the tree-ensemble probability formula: root degree, internal
// (non-leaf) variable counts per degree, and check counts per degree.
struct NeighborhoodTree {
  std::uint32_t root_degree = 0;
  std::map<std::uint32_t, std::uint64_t> internal_variables;  // degree -> count
  std::map<std::uint32_t, std::uint64_t> checks;              // degree -> count
};

// nullopt means a vertex repeats inside the unrolled neighborhood (a cycle
// within 4t+2 of the root).
std::optional<NeighborhoodTree> neighborhood_tree(const TannerGraph& tg,
                                                  std::uint32_t root_variable,
                                                  std::uint32_t depth);

}  // namespace lgldpc
