#pragma once

#include <cstdint>
#include <vector>

#include "lgldpc/graph.hpp"
#include "lgldpc/rng.hpp"

namespace lgldpc {

enum class SplitMode { deterministic, random };

// Equal-sized partition of one vertex's incident edge ids. The deterministic
// flavor blocks the ids in ascending order; the random flavor shuffles them
// first (Fisher-Yates from the caller's RNG) and then blocks.
struct SplitPlan {
  std::uint32_t target = 0;
  std::vector<std::vector<std::uint32_t>> parts;

  static SplitPlan deterministic(const Graph& g, std::uint32_t v, std::uint32_t part_count);
  static SplitPlan random(const Graph& g, std::uint32_t v, std::uint32_t part_count, Rng& rng);
};

// Bipartite double cover B(G): two copies of the vertex set, each original
// edge {u, v} becomes {u, v'} and {v, u'}. Copy-0 keeps the original ids,
// copy-1 is offset by vertex_count. Girth never decreases.
Graph bipartite_double(const Graph& g);

// Replaces the target vertex by one new vertex per part, each inheriting
// exactly that part's edges. Surviving vertices keep their relative order
// (ids above the target shift down by one); the new vertices go at the end
// of the id space in part order. Edge ids are untouched. Girth never
// decreases; the output may be disconnected, which is fine.
Graph split_vertex(const Graph& g, const SplitPlan& plan);

// Splits every vertex into `factor` vertices of degree deg/factor. Vertex v's
// parts become ids v*factor .. v*factor+factor-1; edge ids are untouched.
// Equivalent to splitting each vertex in turn, up to this fixed relabeling.
Graph split_all(const Graph& g, std::uint32_t factor, SplitMode mode, std::uint64_t seed);

// General form used by the builders: one ordered partition per vertex (a
// single all-edges part means "leave this vertex alone"). New ids are
// assigned by scanning vertices in ascending order, parts in order.
Graph split_vertices(const Graph& g, const std::vector<std::vector<std::vector<std::uint32_t>>>& plans);

}  // namespace lgldpc
