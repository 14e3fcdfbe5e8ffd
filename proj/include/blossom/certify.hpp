#pragma once

// Certifying driver and its checker.
//
// An odd-set cover labels every vertex with a non-negative integer such that
// each edge touches a 1 or joins two equal labels >= 2. For any matching N,
// |N| <= n_1 + sum_{i>=2} floor(n_i / 2); equality proves maximality.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "blossom/contraction.hpp"
#include "blossom/errors.hpp"
#include "blossom/graph.hpp"
#include "blossom/paths.hpp"

namespace blossom {

using Label = std::int64_t;

struct OddSetCover {
  std::vector<Label> labels;  // one per vertex
  friend bool operator==(const OddSetCover&, const OddSetCover&) = default;
};

struct Verdict {
  bool accepted = false;
  std::string reason;  // empty when accepted

  static Verdict accept() { return {true, {}}; }
  static Verdict reject(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return accepted; }
};

namespace reason {
inline constexpr const char* kLabelCount = "OSC does not label every node";
inline constexpr const char* kForeignEdge = "matching edge does not belong to G";
inline constexpr const char* kNotMatching = "M is not a matching";
inline constexpr const char* kLabelRange = "negative label or label larger than n - 1";
inline constexpr const char* kNotOptimal = "OSC does not prove optimality";
inline constexpr const char* kNotCover = "OSC is not a cover";
}  // namespace reason

/// n_1 + sum_{i>=2} floor(n_i / 2) over the given labels (all assumed >= 0).
inline std::uint64_t cover_bound(std::span<const Label> labels) {
  std::map<Label, std::uint64_t> count;
  for (Label l : labels) ++count[l];
  std::uint64_t s = 0;
  for (const auto& [label, c] : count) {
    if (label == 1) s += c;
    if (label >= 2) s += c / 2;
  }
  return s;
}

/// Trusts nothing: g, m and the labels are checked from scratch. Returns the
/// first failing clause.
inline Verdict check_max_card_matching(const Graph& g, std::span<const Edge> m,
                                       std::span<const Label> osc) {
  const std::size_t n = g.vertex_count();
  if (osc.size() != n) return Verdict::reject(reason::kLabelCount);

  for (const Edge& e : m) {
    if (!g.has_edge(e)) return Verdict::reject(reason::kForeignEdge);
  }
  std::vector<char> covered(n, 0);
  for (const Edge& e : m) {
    if (covered[e.lo()] || covered[e.hi()]) return Verdict::reject(reason::kNotMatching);
    covered[e.lo()] = covered[e.hi()] = 1;
  }

  const auto limit = static_cast<Label>(std::max<std::size_t>(2, n));
  std::vector<std::uint64_t> count(static_cast<std::size_t>(limit), 0);
  Label k = 1;
  for (Label l : osc) {
    if (l < 0 || l >= limit) return Verdict::reject(reason::kLabelRange);
    ++count[static_cast<std::size_t>(l)];
    k = std::max(k, l);
  }
  std::uint64_t s = count[1];
  for (Label i = 2; i <= k; ++i) s += count[static_cast<std::size_t>(i)] / 2;
  if (s != m.size()) return Verdict::reject(reason::kNotOptimal);

  for (const Edge& e : g.edges()) {
    const Label a = osc[e.lo()];
    const Label b = osc[e.hi()];
    if (a == 1 || b == 1 || (a == b && a >= 2)) continue;
    return Verdict::reject(reason::kNotCover);
  }
  return Verdict::accept();
}

inline Verdict check_max_card_matching(const Graph& g, const Matching& m,
                                       const OddSetCover& osc) {
  const auto edges = m.edges();
  return check_max_card_matching(g, edges, osc.labels);
}

/// Cover from the innermost failed search: odd -> 1, shrunken even blossom ->
/// its own label >= 2, even singleton -> 0, everything outside the forest ->
/// one shared label >= 2. Throws InternalError unless the cover is tight.
inline OddSetCover build_odd_set_cover(const Graph& g, const Matching& m,
                                       const FailedSearchTrace& trace) {
  const std::size_t n = g.vertex_count();
  detail::require(trace.representative.size() == n, "odd-set cover: trace does not match graph");

  std::vector<std::vector<Vertex>> members(trace.level_vertex_count);
  for (Vertex v = 0; v < n; ++v) members.at(trace.representative[v]).push_back(v);

  OddSetCover osc{std::vector<Label>(n, 0)};
  std::vector<Vertex> blossoms;  // even representatives with > 1 member
  std::vector<Vertex> outside;   // caller vertices outside the forest
  for (Vertex r = 0; r < members.size(); ++r) {
    if (members[r].empty()) continue;
    const auto& label = trace.labels.at(r);
    if (!label) {
      outside.insert(outside.end(), members[r].begin(), members[r].end());
    } else if (label->parity == Parity::Odd) {
      for (Vertex v : members[r]) osc.labels[v] = 1;
    } else if (members[r].size() > 1) {
      blossoms.push_back(r);
    }
  }
  // Members are collected in ascending order, so front() is the least vertex.
  std::sort(blossoms.begin(), blossoms.end(),
            [&](Vertex a, Vertex b) { return members[a].front() < members[b].front(); });
  Label next = 2;
  for (Vertex r : blossoms) {
    for (Vertex v : members[r]) osc.labels[v] = next;
    ++next;
  }
  if (!outside.empty()) {
    if (next < static_cast<Label>(std::max<std::size_t>(2, n))) {
      for (Vertex v : outside) osc.labels[v] = next;
    } else {
      // Only a lone matched edge on two vertices gets here; label 2 would be
      // out of range, so one endpoint carries the edge instead.
      detail::require(outside.size() == 2, "odd-set cover: no label left for the outside set");
      osc.labels[outside[0]] = 1;
      osc.labels[outside[1]] = 0;
    }
  }

  if (cover_bound(osc.labels) != m.size()) {
    throw InternalError("odd-set cover is not tight: bound " +
                        std::to_string(cover_bound(osc.labels)) + " vs matching size " +
                        std::to_string(m.size()));
  }
  return osc;
}

struct CertifiedMatching {
  Matching matching;
  OddSetCover witness;
};

struct MatcherOptions {
  AugPathOptions search;
  /// Called after every augmentation with the new matching.
  std::function<void(const Matching&)> on_augment;
};

/// Augments from the empty matching until no augmenting path is left, then
/// builds the odd-set cover from the last (failed) search.
inline CertifiedMatching find_max_matching(const Graph& g, const MatcherOptions& options = {}) {
  Matching m(g.vertex_count());
  FailedSearchTrace trace;
  AugPathOptions search = options.search;
  search.failure = &trace;
  while (auto path = find_aug_path(g, m, search)) {
    m = augment(m, *path);
    if (options.on_augment) options.on_augment(m);
  }
  OddSetCover osc = build_odd_set_cover(g, m, trace);
  return CertifiedMatching{std::move(m), std::move(osc)};
}

}  // namespace blossom
