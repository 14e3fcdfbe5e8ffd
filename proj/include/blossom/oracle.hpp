#pragma once

// Brute-force ground truth for small instances. Written only against the
// graph-core types and predicates so that agreement with the blossom engine
// is independent evidence.

#include <cstdint>
#include <functional>
#include <optional>
#include <ranges>
#include <string>
#include <utility>
#include <vector>

#include "blossom/errors.hpp"
#include "blossom/graph.hpp"
#include "blossom/paths.hpp"

namespace blossom::oracle {

inline constexpr std::size_t kMaxOracleEdges = 25;
inline constexpr std::size_t kMaxEnumeratedVertices = 7;

namespace detail {

inline void guard(const Graph& g) {
  if (g.edge_count() > kMaxOracleEdges) {
    throw CapacityError("oracle limited to " + std::to_string(kMaxOracleEdges) + " edges, got " +
                        std::to_string(g.edge_count()));
  }
}

struct MaxMatchingSearch {
  const Graph& g;
  std::vector<char> used;
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;

  void run(std::size_t next) {
    if (current.size() + (g.edge_count() - next) <= best.size()) return;
    if (next == g.edge_count()) {
      best = current;
      return;
    }
    const Edge& e = g.edge(next);
    if (!used[e.lo()] && !used[e.hi()]) {
      used[e.lo()] = used[e.hi()] = 1;
      current.push_back(next);
      run(next + 1);
      current.pop_back();
      used[e.lo()] = used[e.hi()] = 0;
    }
    run(next + 1);
  }
};

struct AlternatingDfs {
  const Graph& g;
  const Matching& m;
  std::vector<char> on_path;
  VertexPath path;

  // Extends `path` by alternating edges; `visit` returns true to stop.
  bool extend(const std::function<bool(const VertexPath&)>& visit) {
    if (visit(path)) return true;
    const Vertex tip = path.back();
    const bool need_matched = path.size() % 2 == 0;  // edge count is odd
    for (const auto& inc : g.incident(tip)) {
      if (on_path[inc.to] || m.contains(tip, inc.to) != need_matched) continue;
      on_path[inc.to] = 1;
      path.push_back(inc.to);
      const bool stop = extend(visit);
      path.pop_back();
      on_path[inc.to] = 0;
      if (stop) return true;
    }
    return false;
  }
};

// Calls `visit` on every simple alternating path that starts at a free vertex
// with an unmatched edge (including the single-vertex path), in ascending
// vertex order, until it returns true.
inline bool for_each_free_alternating_path(const Graph& g, const Matching& m,
                                           const std::function<bool(const VertexPath&)>& visit) {
  AlternatingDfs dfs{g, m, std::vector<char>(g.vertex_count(), 0), {}};
  for (Vertex r = 0; r < g.vertex_count(); ++r) {
    if (m.is_matched(r)) continue;
    dfs.on_path[r] = 1;
    dfs.path = {r};
    const bool stop = dfs.extend(visit);
    dfs.on_path[r] = 0;
    if (stop) return true;
  }
  return false;
}

}  // namespace detail

/// Maximum-cardinality matching by exhaustive include/exclude search over the
/// edge list with a cardinality bound. Throws CapacityError above 25 edges.
inline Matching brute_max_matching(const Graph& g) {
  detail::guard(g);
  detail::MaxMatchingSearch search{g, std::vector<char>(g.vertex_count(), 0), {}, {}};
  search.run(0);
  Matching out(g.vertex_count());
  for (std::size_t id : search.best) out.add(g.edge(id));
  return out;
}

/// First simple augmenting path found by DFS from free vertices in ascending
/// order, or nullopt when none exists.
inline std::optional<VertexPath> brute_augmenting_path(const Graph& g, const Matching& m) {
  detail::guard(g);
  std::optional<VertexPath> found;
  detail::for_each_free_alternating_path(g, m, [&](const VertexPath& p) {
    if (p.size() >= 2 && is_augmenting_path(m, p)) {
      found = p;
      return true;
    }
    return false;
  });
  return found;
}

struct BruteBlossom {
  VertexPath stem;
  VertexPath cycle;
};

/// Any blossom w.r.t. <g, m>, found by closing an alternating path from a free
/// vertex back onto itself.
inline std::optional<BruteBlossom> brute_blossom(const Graph& g, const Matching& m) {
  detail::guard(g);
  std::optional<BruteBlossom> found;
  detail::for_each_free_alternating_path(g, m, [&](const VertexPath& q) {
    const std::size_t k = q.size() - 1;
    if (k < 2) return false;
    for (std::size_t i = 0; i + 2 <= k; i += 2) {
      if ((k - i) % 2 != 0 || !g.has_edge(q[k], q[i])) continue;
      VertexPath stem(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(i));
      VertexPath cycle(q.begin() + static_cast<std::ptrdiff_t>(i), q.end());
      cycle.push_back(q[i]);
      if (is_blossom(m, stem, cycle)) {
        found = BruteBlossom{std::move(stem), std::move(cycle)};
        return true;
      }
    }
    return false;
  });
  return found;
}

/// Calls `visit` on every matching contained in g (including the empty one).
inline void for_each_matching(const Graph& g, const std::function<void(const Matching&)>& visit) {
  detail::guard(g);
  Matching current(g.vertex_count());
  std::function<void(std::size_t)> rec = [&](std::size_t next) {
    if (next == g.edge_count()) {
      visit(current);
      return;
    }
    rec(next + 1);
    const Edge& e = g.edge(next);
    if (!current.is_matched(e.lo()) && !current.is_matched(e.hi())) {
      current.add(e);
      rec(next + 1);
      current.remove(e);
    }
  };
  rec(0);
}

/// The labeled simple graph on n vertices whose edge set is selected by
/// `mask`; bit k selects the k-th pair (i, j), i < j, in lexicographic order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j, ++bit) {
      if (mask >> bit & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

inline std::uint64_t labeled_graph_count(std::size_t n) {
  return std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
}

/// Lazy view over all 2^(n(n-1)/2) labeled simple graphs on n vertices.
inline auto enumerate_graphs(std::size_t n) {
  if (n > kMaxEnumeratedVertices) {
    throw CapacityError("graph enumeration limited to " +
                        std::to_string(kMaxEnumeratedVertices) + " vertices");
  }
  return std::views::iota(std::uint64_t{0}, labeled_graph_count(n)) |
         std::views::transform([n](std::uint64_t mask) { return graph_from_mask(n, mask); });
}

}  // namespace blossom::oracle
