#pragma once

// Blossom contraction and lifting.
//
// A blossom's odd cycle is collapsed into one fresh pseudo-vertex; the
// search recurses on the quotient, and an augmenting path found there is
// lifted back by routing it through the cycle in the direction that keeps
// the path alternating.

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "blossom/alt_search.hpp"
#include "blossom/blossom_assembly.hpp"
#include "blossom/errors.hpp"
#include "blossom/graph.hpp"
#include "blossom/paths.hpp"

namespace blossom {

/// Projection that keeps every vertex off the cycle and sends every cycle
/// vertex to `pseudo`.
class ContractionMap {
 public:
  ContractionMap() = default;

  /// `pseudo` must be at least `vertex_count`, so it is fresh.
  ContractionMap(std::size_t vertex_count, VertexPath cycle, Vertex pseudo)
      : cycle_(std::move(cycle)), pseudo_(pseudo), in_cycle_(vertex_count, 0) {
    detail::require(pseudo_ >= vertex_count, "contraction: pseudo-vertex is not fresh");
    detail::require(is_odd_cycle(cycle_), "contraction: not an odd cycle");
    for (Vertex v : cycle_) {
      detail::require(v < vertex_count, "contraction: cycle vertex out of range");
      in_cycle_[v] = 1;
    }
  }

  /// Contracts `cycle` of g into the vertex g.vertex_count().
  static ContractionMap for_graph(const Graph& g, VertexPath cycle) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    return ContractionMap(n, std::move(cycle), n);
  }

  Vertex project(Vertex v) const { return in_cycle(v) ? pseudo_ : v; }
  bool in_cycle(Vertex v) const { return v < in_cycle_.size() && in_cycle_[v] != 0; }
  bool is_kept(Vertex v) const { return !in_cycle(v); }

  const VertexPath& cycle() const { return cycle_; }
  Vertex pseudo() const { return pseudo_; }
  Vertex base() const { return cycle_.front(); }

  /// Original (level-0) vertices represented by the pseudo-vertex. Filled in
  /// by find_aug_path when a failure trace is requested.
  const std::vector<Vertex>& preimage() const { return preimage_; }
  void set_preimage(std::vector<Vertex> vs) { preimage_ = std::move(vs); }

  std::size_t quotient_vertex_count() const { return static_cast<std::size_t>(pseudo_) + 1; }

 private:
  VertexPath cycle_;
  Vertex pseudo_ = 0;
  std::vector<char> in_cycle_;
  std::vector<Vertex> preimage_;
};

/// Projected edge set with the collapsed cycle edges dropped.
inline Graph quotient_graph(const Graph& g, const ContractionMap& cm) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  std::vector<char> linked(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    const bool a = cm.in_cycle(e.lo());
    const bool b = cm.in_cycle(e.hi());
    if (a && b) continue;
    if (!a && !b) {
      edges.push_back(e);
      continue;
    }
    const Vertex outside = a ? e.hi() : e.lo();
    if (!linked[outside]) {
      linked[outside] = 1;
      edges.emplace_back(outside, cm.pseudo());
    }
  }
  return Graph(cm.quotient_vertex_count(), std::move(edges));
}

/// Projected matching. Throws ContractError if two matched edges land on the
/// pseudo-vertex, i.e. the cycle is not a blossom cycle w.r.t. m.
inline Matching quotient_matching(const Matching& m, const ContractionMap& cm) {
  Matching out(cm.quotient_vertex_count());
  for (const Edge& e : m.edges()) {
    const Vertex a = cm.project(e.lo());
    const Vertex b = cm.project(e.hi());
    if (a == b) continue;
    out.add(Edge(a, b));
  }
  return out;
}

/// Least-id neighbour of v in vs.
inline Vertex choose_con_vert(std::span<const Vertex> vs, const Graph& g, Vertex v) {
  std::vector<Vertex> sorted(vs.begin(), vs.end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& inc : g.incident(v)) {
    if (std::binary_search(sorted.begin(), sorted.end(), inc.to)) return inc.to;
  }
  throw ContractError("choose_con_vert: vertex " + std::to_string(v) +
                      " has no neighbour in the given set");
}

/// Path along the cycle from its base to the cycle neighbour of v, choosing
/// the direction that arrives on a matched edge.
inline VertexPath stem2vert_path(const VertexPath& cycle, const Graph& g, const Matching& m,
                                 Vertex v) {
  detail::require(is_odd_cycle(cycle), "stem2vert_path: not an odd cycle");
  const Vertex target = choose_con_vert(cycle, g, v);
  auto prefix_to_target = [target](auto first, auto last) {
    auto it = std::find(first, last, target);
    return VertexPath(first, std::next(it));
  };
  VertexPath forward = prefix_to_target(cycle.begin(), cycle.end());
  if (forward.size() >= 2 && m.contains(forward[forward.size() - 2], forward.back())) {
    return forward;
  }
  return prefix_to_target(cycle.rbegin(), cycle.rend());
}

/// Lifts an augmenting path of the quotient <g/cm, m/cm> to one of <g, m>.
inline VertexPath refine(const ContractionMap& cm, const Graph& g, const Matching& m,
                         const VertexPath& p) {
  const Vertex u = cm.pseudo();
  const auto at = std::find(p.begin(), p.end(), u);
  if (at == p.end()) return p;
  detail::require(std::find(std::next(at), p.end(), u) == p.end(),
                  "refine: pseudo-vertex occurs twice");
  const VertexPath p1(p.begin(), at);
  const VertexPath p2(std::next(at), p.end());
  detail::require(!p1.empty() || !p2.empty(), "refine: path is only the pseudo-vertex");
  const VertexPath& cycle = cm.cycle();

  VertexPath out;
  auto append = [&out](auto first, auto last) { out.insert(out.end(), first, last); };
  if (p1.empty()) {
    const VertexPath stem2p2 = stem2vert_path(cycle, g, m, p2.front());
    append(stem2p2.begin(), stem2p2.end());
    append(p2.begin(), p2.end());
  } else if (p2.empty()) {
    const VertexPath p12stem = stem2vert_path(cycle, g, m, p1.back());
    append(p12stem.begin(), p12stem.end());
    append(p1.rbegin(), p1.rend());
  } else {
    // {u, hd p2} is matched in the quotient iff hd p2 is the base's outside mate.
    const auto mate = m.mate(p2.front());
    const bool p2_side_matched = mate && cm.in_cycle(*mate);
    if (!p2_side_matched) {
      const VertexPath stem2p2 = stem2vert_path(cycle, g, m, p2.front());
      append(p1.begin(), p1.end());
      append(stem2p2.begin(), stem2p2.end());
      append(p2.begin(), p2.end());
    } else {
      const VertexPath p12stem = stem2vert_path(cycle, g, m, p1.back());
      append(p2.rbegin(), p2.rend());
      append(p12stem.begin(), p12stem.end());
      append(p1.rbegin(), p1.rend());
    }
  }
  return out;
}

/// Everything about one contraction performed by find_aug_path.
struct ContractionEvent {
  std::size_t level;  // 0 = the caller's graph
  const Graph& graph;
  const Matching& matching;
  const Blossom& blossom;
  const ContractionMap& map;
  const Graph& quotient;
  const Matching& quotient_matching;
};

/// Classification of the innermost failed search, mapped back to the
/// caller's vertices.
struct FailedSearchTrace {
  /// Vertex count of the innermost quotient.
  std::size_t level_vertex_count = 0;
  /// Labels of the innermost search, indexed by innermost-level vertex.
  std::vector<std::optional<VertexLabel>> labels;
  /// For each caller vertex, the innermost-level vertex representing it.
  std::vector<Vertex> representative;
  /// Contractions performed before the search failed.
  std::vector<ContractionMap> contractions;
};

struct AugPathOptions {
  AltSearchOptions search;
  /// Called with (level, event) for every alternating-search step.
  std::function<void(std::size_t, const SearchEvent&)> trace;
  std::function<void(const ContractionEvent&)> on_contraction;
  /// Re-check every lifted path (augmenting, a path of g, vertex-distinct).
  bool check_refined = kDebugBuild;
  /// When non-null and no path exists, receives the failed search.
  FailedSearchTrace* failure = nullptr;
};

/// An augmenting path of <g, m>, or nullopt if there is none. Blossoms are
/// contracted level by level; the path found in the innermost quotient is
/// refined back outwards.
inline std::optional<VertexPath> find_aug_path(const Graph& g, const Matching& m,
                                               const AugPathOptions& options = {}) {
  detail::require(m.is_subset_of(g), "find_aug_path: matching is not contained in the graph");
  std::deque<Graph> graphs;
  std::deque<Matching> matchings;
  std::vector<ContractionMap> maps;
  auto graph_at = [&](std::size_t level) -> const Graph& {
    return level == 0 ? g : graphs[level - 1];
  };
  auto matching_at = [&](std::size_t level) -> const Matching& {
    return level == 0 ? m : matchings[level - 1];
  };

  std::vector<Vertex> representative;
  if (options.failure != nullptr) {
    representative.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) representative[v] = v;
  }

  std::optional<VertexPath> path;
  for (std::size_t level = 0;; ++level) {
    const Graph& cg = graph_at(level);
    const Matching& cm = matching_at(level);
    AltSearchOptions search = options.search;
    if (options.trace) {
      search.trace = [&options, level](const SearchEvent& e) { options.trace(level, e); };
    }
    SearchOutcome outcome = compute_blossom(cg, cm, search);

    if (auto* found = std::get_if<AugmentingPathFound>(&outcome)) {
      path = std::move(found->path);
      break;
    }
    if (std::holds_alternative<NothingFound>(outcome)) {
      if (options.failure != nullptr) {
        AltSearchOptions quiet = options.search;
        quiet.trace = nullptr;
        FailedSearchTrace& out = *options.failure;
        out.level_vertex_count = cg.vertex_count();
        out.labels = final_state(cg, cm, quiet).label;
        out.representative = std::move(representative);
        out.contractions = std::move(maps);
      }
      return std::nullopt;
    }

    const Blossom& b = std::get<BlossomFound>(outcome).blossom;
    if (level >= g.vertex_count()) throw InternalError("find_aug_path: contraction depth exceeded");
    ContractionMap map = ContractionMap::for_graph(cg, b.cycle);
    graphs.push_back(quotient_graph(cg, map));
    matchings.push_back(quotient_matching(cm, map));
    if (options.failure != nullptr) {
      std::vector<Vertex> pre;
      for (Vertex v = 0; v < representative.size(); ++v) {
        if (map.in_cycle(representative[v])) {
          representative[v] = map.pseudo();
          pre.push_back(v);
        }
      }
      map.set_preimage(std::move(pre));
    }
    if (options.on_contraction) {
      options.on_contraction(
          ContractionEvent{level, cg, cm, b, map, graphs.back(), matchings.back()});
    }
    maps.push_back(std::move(map));
  }

  for (std::size_t level = maps.size(); level-- > 0;) {
    VertexPath lifted = refine(maps[level], graph_at(level), matching_at(level), *path);
    if (options.check_refined) {
      const Graph& lg = graph_at(level);
      const Matching& lm = matching_at(level);
      if (!is_augmenting_path(lm, lifted) || !is_path(lg, lifted) || !is_distinct(lifted)) {
        throw InternalError("refine produced an invalid augmenting path at level " +
                            std::to_string(level));
      }
    }
    path = std::move(lifted);
  }
  return path;
}

}  // namespace blossom
