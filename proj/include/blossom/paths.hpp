#pragma once

#include <algorithm>
#include <vector>

#include "blossom/errors.hpp"
#include "blossom/graph.hpp"

namespace blossom {

/// Consecutive-pair edges of p, in order. Repeated vertices yield repeated
/// edges; a consecutive repeat (a self-loop) throws InputError.
inline std::vector<Edge> edges_of_path(const VertexPath& p) {
  std::vector<Edge> out;
  if (p.size() < 2) return out;
  out.reserve(p.size() - 1);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) out.emplace_back(p[i], p[i + 1]);
  return out;
}

/// Every consecutive pair is an edge of g. Throws InputError on an
/// out-of-range vertex or an empty path.
inline bool is_path(const Graph& g, const VertexPath& p) {
  if (p.empty()) throw InputError("empty vertex path");
  for (Vertex v : p) {
    if (v >= g.vertex_count()) throw InputError("vertex " + std::to_string(v) + " out of range");
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!g.has_edge(p[i], p[i + 1])) return false;
  }
  return true;
}

/// Consecutive edges alternate between matched and unmatched (either phase).
inline bool is_alternating(const Matching& m, const VertexPath& p) {
  for (std::size_t i = 0; i + 2 < p.size(); ++i) {
    const bool first = m.contains(p[i], p[i + 1]);
    const bool second = m.contains(p[i + 1], p[i + 2]);
    if (first == second) return false;
  }
  return true;
}

inline bool is_distinct(const VertexPath& p) {
  VertexPath sorted = p;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

/// At least one edge, alternating, both endpoints free.
inline bool is_augmenting_path(const Matching& m, const VertexPath& p) {
  return p.size() >= 2 && is_alternating(m, p) && !m.is_matched(p.front()) &&
         !m.is_matched(p.back());
}

/// Odd cycle as a closed vertex list: first == last, at least three
/// vertices, odd number of edges.
inline bool is_odd_cycle(const VertexPath& cycle) {
  return cycle.size() >= 3 && cycle.front() == cycle.back() && (cycle.size() - 1) % 2 == 1;
}

/// Blossom w.r.t. m: stem ++ cycle alternates starting from a free vertex,
/// the stem has an even number of edges up to the cycle head, and
/// stem ++ butlast(cycle) repeats no vertex. Does not check edges against a
/// graph; combine with is_path for that.
inline bool is_blossom(const Matching& m, const VertexPath& stem, const VertexPath& cycle) {
  if (!is_odd_cycle(cycle) || stem.size() % 2 != 0) return false;
  VertexPath walk = stem;
  walk.insert(walk.end(), cycle.begin(), cycle.end());
  if (!is_alternating(m, walk) || m.is_matched(walk.front())) return false;
  walk.pop_back();
  return is_distinct(walk);
}

/// m xor edges_of_path(p). Requires p to be a vertex-distinct augmenting path.
inline Matching augment(const Matching& m, const VertexPath& p) {
  detail::require(is_augmenting_path(m, p), "augment: not an augmenting path");
  detail::require(is_distinct(p), "augment: path repeats a vertex");
  Matching out = m;
  const auto edges = edges_of_path(p);
  // Augmenting paths start and end on unmatched edges, so odd positions are
  // the matched ones.
  for (std::size_t i = 1; i < edges.size(); i += 2) out.remove(edges[i]);
  for (std::size_t i = 0; i < edges.size(); i += 2) out.add(edges[i]);
  return out;
}

}  // namespace blossom
