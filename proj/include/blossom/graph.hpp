#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "blossom/errors.hpp"

namespace blossom {

/// Dense 0-based vertex id.
using Vertex = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// A list of vertices. Whether it is a path, alternating, augmenting, ... is
/// decided by the predicates in paths.hpp, never by construction.
using VertexPath = std::vector<Vertex>;

/// Undirected edge stored as (min, max).
class Edge {
 public:
  Edge(Vertex u, Vertex v) : lo_(std::min(u, v)), hi_(std::max(u, v)) {
    if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
  }

  Vertex lo() const { return lo_; }
  Vertex hi() const { return hi_; }

  bool contains(Vertex v) const { return v == lo_ || v == hi_; }
  Vertex other(Vertex v) const { return v == lo_ ? hi_ : lo_; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;

 private:
  Vertex lo_;
  Vertex hi_;
};

/// Finite simple undirected graph over vertex ids [0, n). Immutable after
/// construction; edges are kept sorted and every adjacency list is sorted.
class Graph {
 public:
  struct Incidence {
    Vertex to;
    std::size_t edge;  // index into edges()
  };

  Graph() = default;

  /// Throws InputError on out-of-range endpoints or duplicate edges.
  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ >= kNoVertex) throw InputError("vertex count too large");
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.hi() >= n_) {
        throw InputError("edge {" + std::to_string(e.lo()) + "," + std::to_string(e.hi()) +
                         "} has an endpoint outside [0, " + std::to_string(n_) + ")");
      }
      if (i > 0 && edges_[i - 1] == e) {
        throw InputError("duplicate edge {" + std::to_string(e.lo()) + "," +
                         std::to_string(e.hi()) + "}");
      }
    }
    adjacency_.assign(n_, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      adjacency_[edges_[i].lo()].push_back({edges_[i].hi(), i});
      adjacency_[edges_[i].hi()].push_back({edges_[i].lo(), i});
    }
    for (auto& list : adjacency_) {
      std::sort(list.begin(), list.end(),
                [](const Incidence& a, const Incidence& b) { return a.to < b.to; });
    }
  }

  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs)
      : Graph(n, to_edges(pairs)) {}

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_[id]; }

  std::span<const Incidence> incident(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  std::optional<std::size_t> edge_id(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_ || u == v) return std::nullopt;
    const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
    const Vertex target = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
    auto it = std::lower_bound(a.begin(), a.end(), target,
                               [](const Incidence& inc, Vertex t) { return inc.to < t; });
    if (it == a.end() || it->to != target) return std::nullopt;
    return it->edge;
  }

  bool has_edge(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }
  bool has_edge(const Edge& e) const { return has_edge(e.lo(), e.hi()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  static std::vector<Edge> to_edges(std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    std::vector<Edge> out;
    out.reserve(pairs.size());
    for (auto [u, v] : pairs) out.emplace_back(u, v);
    return out;
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// Edge set with pairwise-disjoint endpoints, indexed by a mate table.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::size_t capacity) : mate_(capacity, kNoVertex) {}

  /// Throws ContractError if two edges share an endpoint.
  Matching(std::size_t capacity, std::span<const Edge> edges) : Matching(capacity) {
    for (const Edge& e : edges) add(e);
  }

  Matching(std::size_t capacity, std::initializer_list<std::pair<Vertex, Vertex>> pairs)
      : Matching(capacity) {
    for (auto [u, v] : pairs) add(Edge(u, v));
  }

  std::size_t capacity() const { return mate_.size(); }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  std::optional<Vertex> mate(Vertex v) const {
    if (v >= mate_.size() || mate_[v] == kNoVertex) return std::nullopt;
    return mate_[v];
  }
  bool is_matched(Vertex v) const { return v < mate_.size() && mate_[v] != kNoVertex; }
  bool contains(const Edge& e) const {
    return e.hi() < mate_.size() && mate_[e.lo()] == e.hi();
  }
  bool contains(Vertex u, Vertex v) const { return u != v && contains(Edge(u, v)); }

  /// Sorted edge list.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(size_);
    for (Vertex v = 0; v < mate_.size(); ++v) {
      if (mate_[v] != kNoVertex && v < mate_[v]) out.emplace_back(v, mate_[v]);
    }
    return out;
  }

  bool is_subset_of(const Graph& g) const {
    for (Vertex v = 0; v < mate_.size(); ++v) {
      if (mate_[v] != kNoVertex && v < mate_[v] && !g.has_edge(v, mate_[v])) return false;
    }
    return true;
  }

  void add(const Edge& e) {
    if (e.hi() >= mate_.size()) mate_.resize(e.hi() + 1, kNoVertex);
    if (mate_[e.lo()] != kNoVertex || mate_[e.hi()] != kNoVertex) {
      throw ContractError("edge {" + std::to_string(e.lo()) + "," + std::to_string(e.hi()) +
                          "} overlaps the matching");
    }
    mate_[e.lo()] = e.hi();
    mate_[e.hi()] = e.lo();
    ++size_;
  }

  void remove(const Edge& e) {
    detail::require(contains(e), "removing an edge that is not matched");
    mate_[e.lo()] = kNoVertex;
    mate_[e.hi()] = kNoVertex;
    --size_;
  }

  void reserve_vertices(std::size_t capacity) {
    if (capacity > mate_.size()) mate_.resize(capacity, kNoVertex);
  }

  friend bool operator==(const Matching& a, const Matching& b) { return a.edges() == b.edges(); }

 private:
  std::vector<Vertex> mate_;
  std::size_t size_ = 0;
};

}  // namespace blossom
