#include "lgldpc/tanner.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "lgldpc/error.hpp"

namespace lgldpc {

TannerBuilder::TannerBuilder(std::size_t variables, std::size_t checks)
    : n_(variables), m_(checks), var_nbrs_(variables), chk_nbrs_(checks) {
  if (variables > std::numeric_limits<std::uint32_t>::max() ||
      checks > std::numeric_limits<std::uint32_t>::max())
    raise(ErrorCode::size_limit, "tanner graph too large for 32-bit ids");
}

void TannerBuilder::add_edge(std::uint32_t variable, std::uint32_t check) {
  if (variable >= n_ || check >= m_)
    raise(ErrorCode::invalid_argument, "tanner edge endpoint out of range");
  var_nbrs_[variable].push_back(check);
  chk_nbrs_[check].push_back(variable);
}

TannerGraph TannerBuilder::build() && {
  return tanner_from_adjacency(std::move(var_nbrs_), std::move(chk_nbrs_));
}

TannerGraph tanner_from_adjacency(std::vector<std::vector<std::uint32_t>> var_nbrs,
                                  std::vector<std::vector<std::uint32_t>> chk_nbrs) {
  const std::size_t n = var_nbrs.size(), m = chk_nbrs.size();
  TannerGraph tg;
  tg.var_adj_.resize(n);
  tg.chk_adj_.resize(m);

  // Canonical edge ids: variable-major scan over the variable-side lists.
  std::uint32_t next_id = 0;
  std::unordered_map<std::uint64_t, std::uint32_t> pair_id;
  for (std::uint32_t v = 0; v < n; ++v) {
    tg.var_adj_[v].reserve(var_nbrs[v].size());
    for (std::uint32_t c : var_nbrs[v]) {
      if (c >= m) raise(ErrorCode::invalid_argument, "check id out of range");
      std::uint64_t key = (std::uint64_t(v) << 32) | c;
      if (!pair_id.emplace(key, next_id).second)
        raise(ErrorCode::validation_error, "parallel edge between variable " + std::to_string(v) +
                                               " and check " + std::to_string(c));
      tg.var_adj_[v].push_back({c, next_id});
      ++next_id;
    }
  }
  std::size_t matched = 0;
  for (std::uint32_t c = 0; c < m; ++c) {
    tg.chk_adj_[c].reserve(chk_nbrs[c].size());
    for (std::uint32_t v : chk_nbrs[c]) {
      if (v >= n) raise(ErrorCode::invalid_argument, "variable id out of range");
      auto it = pair_id.find((std::uint64_t(v) << 32) | c);
      if (it == pair_id.end())
        raise(ErrorCode::validation_error,
              "check " + std::to_string(c) + " lists variable " + std::to_string(v) +
                  " but the variable side disagrees");
      tg.chk_adj_[c].push_back({v, it->second});
      ++matched;
    }
    // duplicates on the check side would double-count `matched`
  }
  if (matched != pair_id.size())
    raise(ErrorCode::validation_error, "variable and check sides have different edge counts");
  for (std::uint32_t c = 0; c < m; ++c) {
    std::vector<std::uint32_t> ids;
    ids.reserve(tg.chk_adj_[c].size());
    for (const HalfEdge& he : tg.chk_adj_[c]) ids.push_back(he.edge);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
      raise(ErrorCode::validation_error, "duplicate neighbor for check " + std::to_string(c));
  }
  tg.edges_ = next_id;
  return tg;
}

Graph TannerGraph::to_graph() const {
  GraphBuilder gb(variable_count() + check_count());
  const auto n = static_cast<std::uint32_t>(variable_count());
  // Edge insertion in id order keeps the ids aligned between the two views.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> by_id(edges_);
  for (std::uint32_t v = 0; v < variable_count(); ++v)
    for (const HalfEdge& he : var_adj_[v]) by_id[he.edge] = {v, n + he.to};
  for (auto [u, w] : by_id) gb.add_edge(u, w);
  return std::move(gb).build();
}

namespace {

void write_padded_line(std::ostream& out, std::span<const HalfEdge> nbrs, std::size_t width) {
  for (std::size_t i = 0; i < width; ++i) {
    if (i) out << ' ';
    out << (i < nbrs.size() ? nbrs[i].to + 1 : 0);
  }
  out << '\n';
}

struct AlistScanner {
  std::istream& in;
  std::size_t line_no = 0;
  std::string line{};
  std::istringstream tokens{};

  void next_line() {
    ++line_no;
    if (!std::getline(in, line))
      raise(ErrorCode::parse_error, "alist: unexpected end of input at line " + std::to_string(line_no));
    tokens.clear();
    tokens.str(line);
  }

  std::uint64_t next_uint() {
    std::uint64_t v;
    if (!(tokens >> v))
      raise(ErrorCode::parse_error, "alist: expected integer on line " + std::to_string(line_no));
    return v;
  }

  void end_line() {
    std::string rest;
    if (tokens >> rest)
      raise(ErrorCode::parse_error,
            "alist: trailing token '" + rest + "' on line " + std::to_string(line_no));
  }
};

}  // namespace

void write_alist(const TannerGraph& tg, std::ostream& out) {
  const std::size_t n = tg.variable_count(), m = tg.check_count();
  std::size_t dvmax = 0, dcmax = 0;
  for (std::uint32_t v = 0; v < n; ++v) dvmax = std::max<std::size_t>(dvmax, tg.variable_degree(v));
  for (std::uint32_t c = 0; c < m; ++c) dcmax = std::max<std::size_t>(dcmax, tg.check_degree(c));

  out << n << ' ' << m << '\n';
  out << dvmax << ' ' << dcmax << '\n';
  for (std::uint32_t v = 0; v < n; ++v) out << (v ? " " : "") << tg.variable_degree(v);
  out << '\n';
  for (std::uint32_t c = 0; c < m; ++c) out << (c ? " " : "") << tg.check_degree(c);
  out << '\n';
  for (std::uint32_t v = 0; v < n; ++v) write_padded_line(out, tg.variable_neighbors(v), dvmax);
  for (std::uint32_t c = 0; c < m; ++c) write_padded_line(out, tg.check_neighbors(c), dcmax);
}

void write_alist_file(const TannerGraph& tg, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::io_error, "cannot open for writing: " + path);
  write_alist(tg, out);
  out.flush();
  if (!out) raise(ErrorCode::io_error, "write failed: " + path);
}

TannerGraph read_alist(std::istream& in) {
  AlistScanner sc{in};
  sc.next_line();
  std::uint64_t n = sc.next_uint(), m = sc.next_uint();
  sc.end_line();
  sc.next_line();
  std::uint64_t dvmax = sc.next_uint(), dcmax = sc.next_uint();
  sc.end_line();

  auto read_degrees = [&](std::uint64_t count, std::uint64_t dmax) {
    std::vector<std::uint32_t> degrees(count);
    sc.next_line();
    for (auto& d : degrees) {
      std::uint64_t val = sc.next_uint();
      if (val > dmax)
        raise(ErrorCode::validation_error,
              "alist: degree " + std::to_string(val) + " exceeds declared maximum on line " +
                  std::to_string(sc.line_no));
      d = static_cast<std::uint32_t>(val);
    }
    sc.end_line();
    return degrees;
  };
  std::vector<std::uint32_t> vdeg = read_degrees(n, dvmax);
  std::vector<std::uint32_t> cdeg = read_degrees(m, dcmax);

  auto read_neighbor_block = [&](std::uint64_t rows, const std::vector<std::uint32_t>& deg,
                                 std::uint64_t width, std::uint64_t peer_count) {
    std::vector<std::vector<std::uint32_t>> nbrs(rows);
    for (std::uint64_t r = 0; r < rows; ++r) {
      sc.next_line();
      nbrs[r].reserve(deg[r]);
      for (std::uint64_t i = 0; i < width; ++i) {
        std::uint64_t v = sc.next_uint();
        if (i < deg[r]) {
          if (v == 0)
            raise(ErrorCode::validation_error,
                  "alist: zero neighbor inside active prefix on line " + std::to_string(sc.line_no));
          if (v > peer_count)
            raise(ErrorCode::validation_error,
                  "alist: neighbor index out of range on line " + std::to_string(sc.line_no));
          nbrs[r].push_back(static_cast<std::uint32_t>(v - 1));
        } else if (v != 0) {
          raise(ErrorCode::validation_error,
                "alist: nonzero padding on line " + std::to_string(sc.line_no));
        }
      }
      sc.end_line();
    }
    return nbrs;
  };
  auto var_nbrs = read_neighbor_block(n, vdeg, dvmax, m);
  auto chk_nbrs = read_neighbor_block(m, cdeg, dcmax, n);
  return tanner_from_adjacency(std::move(var_nbrs), std::move(chk_nbrs));
}

TannerGraph read_alist_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::io_error, "cannot open for reading: " + path);
  return read_alist(in);
}

std::optional<NeighborhoodTree> neighborhood_tree(const TannerGraph& tg,
                                                  std::uint32_t root_variable,
                                                  std::uint32_t depth) {
  if (root_variable >= tg.variable_count())
    raise(ErrorCode::invalid_argument, "root variable out of range");

  constexpr std::uint32_t kNoEdge = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint8_t> var_seen(tg.variable_count(), 0), chk_seen(tg.check_count(), 0);

  NeighborhoodTree tree;
  tree.root_degree = tg.variable_degree(root_variable);
  tree.internal_variables[tree.root_degree] += 1;
  var_seen[root_variable] = 1;

  std::vector<std::pair<std::uint32_t, std::uint32_t>> var_frontier{{root_variable, kNoEdge}};
  std::vector<std::pair<std::uint32_t, std::uint32_t>> chk_frontier;

  for (std::uint32_t level = 1; level <= depth; ++level) {
    chk_frontier.clear();
    for (auto [v, parent_edge] : var_frontier) {
      for (const HalfEdge& he : tg.variable_neighbors(v)) {
        if (he.edge == parent_edge) continue;
        if (chk_seen[he.to]) return std::nullopt;
        chk_seen[he.to] = 1;
        tree.checks[tg.check_degree(he.to)] += 1;
        chk_frontier.emplace_back(he.to, he.edge);
      }
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> next_vars;
    for (auto [c, parent_edge] : chk_frontier) {
      for (const HalfEdge& he : tg.check_neighbors(c)) {
        if (he.edge == parent_edge) continue;
        if (var_seen[he.to]) return std::nullopt;
        var_seen[he.to] = 1;
        next_vars.emplace_back(he.to, he.edge);
      }
    }
    var_frontier = std::move(next_vars);
    // Variables reached at the final level are leaves and stay uncounted.
    if (level < depth)
      for (auto [v, e] : var_frontier) tree.internal_variables[tg.variable_degree(v)] += 1;
  }
  return tree;
}

}  // namespace lgldpc
