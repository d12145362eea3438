#include "lgldpc/transforms.hpp"

#include <algorithm>
#include <string>

#include "lgldpc/error.hpp"

namespace lgldpc {

namespace {

std::vector<std::uint32_t> incident_edge_ids(const Graph& g, std::uint32_t v) {
  std::vector<std::uint32_t> ids;
  ids.reserve(g.degree(v));
  for (const HalfEdge& he : g.neighbors(v)) ids.push_back(he.edge);
  return ids;
}

std::vector<std::vector<std::uint32_t>> block_into_parts(std::vector<std::uint32_t> ids,
                                                         std::uint32_t part_count) {
  if (part_count == 0) raise(ErrorCode::invalid_plan, "zero parts");
  if (ids.size() % part_count != 0)
    raise(ErrorCode::invalid_plan, "degree " + std::to_string(ids.size()) +
                                       " not divisible into " + std::to_string(part_count) + " parts");
  const std::size_t part_size = ids.size() / part_count;
  std::vector<std::vector<std::uint32_t>> parts(part_count);
  for (std::uint32_t p = 0; p < part_count; ++p)
    parts[p].assign(ids.begin() + p * part_size, ids.begin() + (p + 1) * part_size);
  return parts;
}

void validate_partition(const Graph& g, std::uint32_t v,
                        const std::vector<std::vector<std::uint32_t>>& parts) {
  std::vector<std::uint32_t> incident = incident_edge_ids(g, v);
  std::sort(incident.begin(), incident.end());
  std::vector<std::uint32_t> claimed;
  std::size_t size0 = parts.empty() ? 0 : parts[0].size();
  for (const auto& part : parts) {
    if (part.size() != size0)
      raise(ErrorCode::invalid_plan, "split parts must have equal sizes");
    claimed.insert(claimed.end(), part.begin(), part.end());
  }
  std::sort(claimed.begin(), claimed.end());
  if (claimed != incident)
    raise(ErrorCode::invalid_plan,
          "split parts do not partition the incident edges of vertex " + std::to_string(v));
}

}  // namespace

SplitPlan SplitPlan::deterministic(const Graph& g, std::uint32_t v, std::uint32_t part_count) {
  std::vector<std::uint32_t> ids = incident_edge_ids(g, v);
  std::sort(ids.begin(), ids.end());
  return {v, block_into_parts(std::move(ids), part_count)};
}

SplitPlan SplitPlan::random(const Graph& g, std::uint32_t v, std::uint32_t part_count, Rng& rng) {
  std::vector<std::uint32_t> ids = incident_edge_ids(g, v);
  std::sort(ids.begin(), ids.end());
  rng.shuffle(ids);
  return {v, block_into_parts(std::move(ids), part_count)};
}

Graph bipartite_double(const Graph& g) {
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  GraphBuilder gb(2 * std::size_t(n));
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    gb.add_edge(u, n + v);
    gb.add_edge(v, n + u);
  }
  return std::move(gb).build();
}

Graph split_vertex(const Graph& g, const SplitPlan& plan) {
  if (plan.target >= g.vertex_count()) raise(ErrorCode::invalid_plan, "split target out of range");
  validate_partition(g, plan.target, plan.parts);

  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  std::vector<std::uint32_t> part_of(g.edge_count());
  for (std::uint32_t p = 0; p < plan.parts.size(); ++p)
    for (std::uint32_t e : plan.parts[p]) part_of[e] = p;

  auto remap = [&](std::uint32_t v, std::uint32_t edge) -> std::uint32_t {
    if (v < plan.target) return v;
    if (v > plan.target) return v - 1;
    return n - 1 + part_of[edge];
  };

  GraphBuilder gb(std::size_t(n) - 1 + plan.parts.size());
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    gb.add_edge(remap(u, e), remap(v, e));
  }
  return std::move(gb).build();
}

Graph split_all(const Graph& g, std::uint32_t factor, SplitMode mode, std::uint64_t seed) {
  if (factor == 0) raise(ErrorCode::invalid_factor, "split factor must be positive");
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % factor != 0)
      raise(ErrorCode::invalid_factor, "degree of vertex " + std::to_string(v) +
                                           " not divisible by " + std::to_string(factor));
  if (factor == 1) return g;

  Rng rng = Rng::stream(seed, stream_tag("split_all"));
  std::vector<std::vector<std::vector<std::uint32_t>>> plans(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::uint32_t> ids = incident_edge_ids(g, v);
    std::sort(ids.begin(), ids.end());
    if (mode == SplitMode::random) rng.shuffle(ids);
    plans[v] = block_into_parts(std::move(ids), factor);
  }
  return split_vertices(g, plans);
}

Graph split_vertices(const Graph& g,
                     const std::vector<std::vector<std::vector<std::uint32_t>>>& plans) {
  if (plans.size() != g.vertex_count())
    raise(ErrorCode::invalid_plan, "need one split plan per vertex");

  std::vector<std::uint32_t> offset(g.vertex_count() + 1, 0);
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    validate_partition(g, v, plans[v]);
    offset[v + 1] = offset[v] + static_cast<std::uint32_t>(plans[v].size());
  }

  std::vector<std::uint32_t> part_u(g.edge_count()), part_v(g.edge_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    for (std::uint32_t p = 0; p < plans[v].size(); ++p) {
      for (std::uint32_t e : plans[v][p]) {
        auto [a, b] = g.endpoints(e);
        if (a == v) part_u[e] = p;
        if (b == v) part_v[e] = p;
      }
    }
  }

  GraphBuilder gb(offset.back());
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    gb.add_edge(offset[u] + part_u[e], offset[v] + part_v[e]);
  }
  return std::move(gb).build();
}

}  // namespace lgldpc
