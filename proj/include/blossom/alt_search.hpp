#pragma once

// Alternating-forest search. Grows alternating trees from every free vertex
// and stops at the first examined edge that joins two even vertices,
// returning the two tree ascents from the edge's tips.
//
// Edge choice is deterministic: among the unexamined edges with an even
// endpoint, the lexicographically least (lo, hi) edge is taken next, and the
// even endpoint (the lower one if both are even) plays the role of v1.

#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "blossom/errors.hpp"
#include "blossom/graph.hpp"
#include "blossom/paths.hpp"

namespace blossom {

enum class Parity { Even, Odd };

struct VertexLabel {
  Vertex root;
  Parity parity;

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

/// parent[v] == kNoVertex means v has no parent.
using ParentMap = std::vector<Vertex>;

/// Tree ascent: v, parent(v), parent(parent(v)), ... until a vertex without a
/// parent. Throws ContractError if the parent relation has a cycle.
inline VertexPath follow(const ParentMap& parent, Vertex v) {
  VertexPath out{v};
  std::size_t steps = 0;
  while (v < parent.size() && parent[v] != kNoVertex) {
    if (++steps > parent.size()) throw ContractError("follow: parent relation is cyclic");
    v = parent[v];
    out.push_back(v);
  }
  return out;
}

struct SearchState {
  std::vector<char> examined;  // indexed by Graph edge id
  ParentMap parent;
  std::vector<std::optional<VertexLabel>> label;

  bool is_examined(const Graph& g, const Edge& e) const {
    auto id = g.edge_id(e.lo(), e.hi());
    return id && examined[*id];
  }

  bool is_even(Vertex v) const { return label[v] && label[v]->parity == Parity::Even; }
  bool is_odd(Vertex v) const { return label[v] && label[v]->parity == Parity::Odd; }

  std::vector<Edge> examined_edges(const Graph& g) const {
    std::vector<Edge> out;
    for (std::size_t id = 0; id < examined.size(); ++id) {
      if (examined[id]) out.push_back(g.edge(id));
    }
    return out;
  }
};

enum class SearchAction {
  Grow,     // v2 was unlabeled: v2 becomes odd, its mate even
  Found,    // v2 is even: the search returns
  SkipOdd,  // v2 is odd: another odd-length path to v2, nothing to do
};

struct SearchEvent {
  Vertex v1;
  Vertex v2;
  SearchAction action;
};

using SearchTraceHook = std::function<void(const SearchEvent&)>;

struct AltSearchOptions {
  /// Evaluate all ten loop invariants at every loop head; a violation throws
  /// InternalError naming the invariant.
  bool check_invariants = kDebugBuild;
  SearchTraceHook trace;
};

using PathPair = std::pair<VertexPath, VertexPath>;

/// The seven properties a returned pair must have: both simple paths in g,
/// alternating, odd vertex count, free last vertices, tips joined by an
/// unmatched edge of g.
inline bool is_valid_path_pair(const Graph& g, const Matching& m, const VertexPath& p1,
                               const VertexPath& p2) {
  auto ok = [&](const VertexPath& p) {
    return !p.empty() && is_path(g, p) && is_distinct(p) && is_alternating(m, p) &&
           p.size() % 2 == 1 && !m.is_matched(p.back());
  };
  return ok(p1) && ok(p2) && p1.front() != p2.front() && g.has_edge(p1.front(), p2.front()) &&
         !m.contains(p1.front(), p2.front());
}

namespace detail {

inline constexpr std::size_t kBruteInvariantVertexLimit = 8;

// Every simple alternating path that ends at a free vertex and has an odd
// number of vertices, listed tip-first, grouped by tip.
inline std::vector<std::vector<VertexPath>> free_ending_paths(const Graph& g, const Matching& m) {
  std::vector<std::vector<VertexPath>> by_tip(g.vertex_count());
  std::vector<char> on(g.vertex_count(), 0);
  VertexPath path;
  std::function<void()> dfs = [&] {
    if (path.size() % 2 == 1) {
      by_tip[path.back()].emplace_back(path.rbegin(), path.rend());
    }
    const Vertex tip = path.back();
    const bool need_matched = path.size() % 2 == 0;
    for (const auto& inc : g.incident(tip)) {
      if (on[inc.to] || m.contains(tip, inc.to) != need_matched) continue;
      on[inc.to] = 1;
      path.push_back(inc.to);
      dfs();
      path.pop_back();
      on[inc.to] = 0;
    }
  };
  for (Vertex r = 0; r < g.vertex_count(); ++r) {
    if (m.is_matched(r) || g.degree(r) == 0) continue;
    on[r] = 1;
    path = {r};
    dfs();
    on[r] = 0;
  }
  return by_tip;
}

inline bool outside_m_and_ex(const Graph& g, const Matching& m, const SearchState& s, Vertex a,
                             Vertex b) {
  return !m.contains(a, b) && !s.examined[*g.edge_id(a, b)];
}

// Invariant 10 by exhaustive enumeration of path pairs.
inline bool pairs_leave_unexamined_edge_brute(const Graph& g, const Matching& m,
                                              const SearchState& s) {
  const auto by_tip = free_ending_paths(g, m);
  auto has_free_edge = [&](const VertexPath& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (outside_m_and_ex(g, m, s, p[i], p[i + 1])) return true;
    }
    return false;
  };
  for (const Edge& e : g.edges()) {
    if (m.contains(e)) continue;
    if (outside_m_and_ex(g, m, s, e.lo(), e.hi())) continue;
    for (const auto& p1 : by_tip[e.lo()]) {
      if (has_free_edge(p1)) continue;
      for (const auto& p2 : by_tip[e.hi()]) {
        if (!has_free_edge(p2)) return false;
      }
    }
  }
  return true;
}

}  // namespace detail

class AltSearch {
 public:
  AltSearch(const Graph& g, const Matching& m, AltSearchOptions options = {})
      : g_(g), m_(m), options_(std::move(options)) {
    detail::require(m_.is_subset_of(g_), "alt search: matching is not contained in the graph");
  }

  /// Runs the search to completion. Returns the tree ascents from the tips of
  /// the first even-even edge, or nullopt once no unexamined edge has an even
  /// endpoint.
  std::optional<PathPair> run() {
    init();
    while (true) {
      if (options_.check_invariants) assert_invariants();
      std::size_t id = 0;
      if (!next_candidate(id)) break;
      state_.examined[id] = 1;
      const Edge& e = g_.edge(id);
      const Vertex v1 = state_.is_even(e.lo()) ? e.lo() : e.hi();
      const Vertex v2 = e.other(v1);
      if (!state_.label[v2]) {
        auto mate = m_.mate(v2);
        if (!mate) throw InternalError("alt search: unlabeled vertex is free");
        const Vertex v3 = *mate;
        state_.examined[*g_.edge_id(v2, v3)] = 1;
        const Vertex root = state_.label[v1]->root;
        state_.label[v2] = VertexLabel{root, Parity::Odd};
        state_.label[v3] = VertexLabel{root, Parity::Even};
        state_.parent[v2] = v1;
        state_.parent[v3] = v2;
        push_incident(v3);
        emit(v1, v2, SearchAction::Grow);
      } else if (state_.is_even(v2)) {
        emit(v1, v2, SearchAction::Found);
        return PathPair{follow(state_.parent, v1), follow(state_.parent, v2)};
      } else {
        emit(v1, v2, SearchAction::SkipOdd);
      }
    }
    return std::nullopt;
  }

  const SearchState& state() const { return state_; }

  /// 0 when all ten loop invariants hold for the current state, otherwise the
  /// number of the first one violated.
  int first_violated_invariant() const { return first_violated_invariant(g_, m_, state_); }

  static int first_violated_invariant(const Graph& g, const Matching& m, const SearchState& s) {
    const std::size_t n = g.vertex_count();
    // 3 first: every other check ascends the parent relation.
    for (Vertex v = 0; v < n; ++v) {
      try {
        (void)follow(s.parent, v);
      } catch (const ContractError&) {
        return 3;
      }
    }
    for (Vertex u = 0; u < n; ++u) {
      if (!s.label[u]) continue;
      const VertexPath up = follow(s.parent, u);
      const VertexLabel lu = *s.label[u];
      if (lu.parity == Parity::Even) {
        for (std::size_t i = 0; i < up.size(); ++i) {
          const Parity want = i % 2 == 0 ? Parity::Even : Parity::Odd;
          if (s.label[up[i]] != VertexLabel{lu.root, want}) return 1;
        }
      }
      for (std::size_t i = 0; i + 1 < up.size(); ++i) {
        const auto& a = s.label[up[i]];
        const auto& b = s.label[up[i + 1]];
        const bool even_to_odd = a && b && a->root == b->root && a->parity == Parity::Even &&
                                 b->parity == Parity::Odd;
        if (m.contains(up[i], up[i + 1]) != even_to_odd) return 2;
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      if (auto w = m.mate(v); w && s.label[v].has_value() != s.label[*w].has_value()) return 4;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (s.parent[v] != kNoVertex && !s.label[s.parent[v]]) return 5;
    }
    for (Vertex u = 0; u < n; ++u) {
      if (!s.label[u]) continue;
      const Vertex last = follow(s.parent, u).back();
      if (m.is_matched(last)) return 6;
      if (!s.is_even(last)) return 7;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (auto w = m.mate(v); w && s.label[v] && !s.examined[*g.edge_id(v, *w)]) return 8;
    }
    for (Vertex u = 0; u < n; ++u) {
      const VertexPath up = follow(s.parent, u);
      if (!is_path(g, up) || !is_distinct(up)) return 9;
    }
    if (!pairs_leave_unexamined_edge(g, m, s)) return 10;
    return 0;
  }

 private:
  // Invariant 10: every pair with the seven return properties uses an edge
  // that is neither matched nor examined. Such a pair exists inside
  // M + examined iff a search restricted to that subgraph succeeds, which is
  // how large instances are checked; small ones are enumerated.
  static bool pairs_leave_unexamined_edge(const Graph& g, const Matching& m,
                                          const SearchState& s) {
    std::size_t active = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) active += g.degree(v) > 0 ? 1 : 0;
    if (active <= detail::kBruteInvariantVertexLimit) {
      return detail::pairs_leave_unexamined_edge_brute(g, m, s);
    }
    std::vector<Edge> closed;
    for (std::size_t id = 0; id < g.edge_count(); ++id) {
      if (s.examined[id] || m.contains(g.edge(id))) closed.push_back(g.edge(id));
    }
    const Graph sub(g.vertex_count(), std::move(closed));
    AltSearchOptions plain;
    plain.check_invariants = false;
    return !AltSearch(sub, m, plain).run().has_value();
  }

  void init() {
    const std::size_t n = g_.vertex_count();
    state_.examined.assign(g_.edge_count(), 0);
    state_.parent.assign(n, kNoVertex);
    state_.label.assign(n, std::nullopt);
    candidates_ = {};
    for (Vertex v = 0; v < n; ++v) {
      if (m_.is_matched(v)) continue;
      state_.label[v] = VertexLabel{v, Parity::Even};
      push_incident(v);
    }
  }

  void push_incident(Vertex v) {
    for (const auto& inc : g_.incident(v)) {
      if (!state_.examined[inc.edge]) candidates_.push(inc.edge);
    }
  }

  bool next_candidate(std::size_t& id) {
    while (!candidates_.empty()) {
      id = candidates_.top();
      candidates_.pop();
      if (!state_.examined[id]) return true;
    }
    return false;
  }

  void assert_invariants() const {
    if (int k = first_violated_invariant(); k != 0) {
      throw InternalError("alt search: loop invariant " + std::to_string(k) + " violated");
    }
  }

  void emit(Vertex v1, Vertex v2, SearchAction action) const {
    if (options_.trace) options_.trace(SearchEvent{v1, v2, action});
  }

  const Graph& g_;
  const Matching& m_;
  AltSearchOptions options_;
  SearchState state_;
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> candidates_;
};

inline std::optional<PathPair> compute_alt_path(const Graph& g, const Matching& m,
                                                AltSearchOptions options = {}) {
  return AltSearch(g, m, std::move(options)).run();
}

/// Terminal forest of a failed search. Throws ContractError if the search
/// succeeds instead.
inline SearchState final_state(const Graph& g, const Matching& m, AltSearchOptions options = {}) {
  AltSearch search(g, m, std::move(options));
  if (search.run()) throw ContractError("final_state: an alternating path pair exists");
  return search.state();
}

}  // namespace blossom
