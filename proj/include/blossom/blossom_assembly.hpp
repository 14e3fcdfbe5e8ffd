#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <variant>

#include "blossom/alt_search.hpp"
#include "blossom/errors.hpp"
#include "blossom/graph.hpp"
#include "blossom/paths.hpp"

namespace blossom {

/// Odd alternating cycle hanging off an even-length stem that starts at a
/// free vertex. `cycle` is closed: cycle.front() == cycle.back() is the base.
struct Blossom {
  VertexPath stem;
  VertexPath cycle;

  Vertex base() const { return cycle.front(); }
  friend bool operator==(const Blossom&, const Blossom&) = default;
};

struct AugmentingPathFound {
  VertexPath path;
  friend bool operator==(const AugmentingPathFound&, const AugmentingPathFound&) = default;
};

struct BlossomFound {
  Blossom blossom;
  friend bool operator==(const BlossomFound&, const BlossomFound&) = default;
};

struct NothingFound {
  friend bool operator==(const NothingFound&, const NothingFound&) = default;
};

using SearchOutcome = std::variant<AugmentingPathFound, BlossomFound, NothingFound>;

/// Splits p1 = p1' ++ l and p2 = p2' ++ l where p1' and p2' end in the same
/// vertex and share no other. Found by the quadratic scan for the first
/// vertex of p1 that also occurs in p2. nullopt when the paths share no
/// vertex or do not continue identically after the meeting point.
inline std::optional<PathPair> longest_disj_pfx(const VertexPath& p1, const VertexPath& p2) {
  for (std::size_t i = 0; i < p1.size(); ++i) {
    for (std::size_t j = 0; j < p2.size(); ++j) {
      if (p1[i] != p2[j]) continue;
      if (!std::equal(p1.begin() + static_cast<std::ptrdiff_t>(i) + 1, p1.end(),
                      p2.begin() + static_cast<std::ptrdiff_t>(j) + 1, p2.end())) {
        return std::nullopt;
      }
      return PathPair{VertexPath(p1.begin(), p1.begin() + static_cast<std::ptrdiff_t>(i) + 1),
                      VertexPath(p2.begin(), p2.begin() + static_cast<std::ptrdiff_t>(j) + 1)};
    }
  }
  return std::nullopt;
}

/// reverse(p1) ++ p2 for two vertex-disjoint tree ascents with odd vertex
/// counts. With g and m given, the full set of hypotheses is checked and the
/// result re-validated.
inline VertexPath assemble_augmenting(const VertexPath& p1, const VertexPath& p2,
                                      const Graph* g = nullptr, const Matching* m = nullptr) {
  detail::require(!p1.empty() && !p2.empty(), "assemble_augmenting: empty path");
  detail::require(p1.size() % 2 == 1 && p2.size() % 2 == 1,
                  "assemble_augmenting: paths must have an odd number of vertices");
  detail::require(p1.back() != p2.back(), "assemble_augmenting: paths end in the same vertex");
  VertexPath out(p1.rbegin(), p1.rend());
  out.insert(out.end(), p2.begin(), p2.end());
  detail::require(is_distinct(out), "assemble_augmenting: paths are not disjoint");
  if (g != nullptr && m != nullptr) {
    detail::require(is_valid_path_pair(*g, *m, p1, p2), "assemble_augmenting: invalid path pair");
    detail::require(is_augmenting_path(*m, out) && is_path(*g, out),
                    "assemble_augmenting: result is not an augmenting path");
  }
  return out;
}

/// stem = reverse(drop(|p1'|, p1)), cycle = reverse(p1') ++ p2' where
/// (p1', p2') = longest_disj_pfx(p1, p2).
inline Blossom assemble_blossom(const VertexPath& p1, const VertexPath& p2,
                                const Graph* g = nullptr, const Matching* m = nullptr) {
  const auto prefixes = longest_disj_pfx(p1, p2);
  detail::require(prefixes.has_value(), "assemble_blossom: paths have no common tail");
  const auto& [pfx1, pfx2] = *prefixes;
  Blossom b;
  b.stem.assign(p1.rbegin(), p1.rend() - static_cast<std::ptrdiff_t>(pfx1.size()));
  b.cycle.assign(pfx1.rbegin(), pfx1.rend());
  b.cycle.insert(b.cycle.end(), pfx2.begin(), pfx2.end());
  if (g != nullptr && m != nullptr) {
    detail::require(is_valid_path_pair(*g, *m, p1, p2), "assemble_blossom: invalid path pair");
    VertexPath walk = b.stem;
    walk.insert(walk.end(), b.cycle.begin(), b.cycle.end());
    detail::require(is_path(*g, walk) && is_blossom(*m, b.stem, b.cycle),
                    "assemble_blossom: result is not a blossom");
  }
  return b;
}

/// One step of the blossom search: an unmatched edge between two free
/// vertices if there is one (the least such edge), otherwise whatever the
/// alternating-forest search yields.
inline SearchOutcome compute_blossom(const Graph& g, const Matching& m,
                                     AltSearchOptions options = {}) {
  for (const Edge& e : g.edges()) {
    if (!m.is_matched(e.lo()) && !m.is_matched(e.hi())) {
      return AugmentingPathFound{{e.lo(), e.hi()}};
    }
  }
  const bool validate = options.check_invariants;
  auto pair = compute_alt_path(g, m, std::move(options));
  if (!pair) return NothingFound{};
  const auto& [p1, p2] = *pair;
  const Graph* vg = validate ? &g : nullptr;
  const Matching* vm = validate ? &m : nullptr;
  VertexPath sorted2 = p2;
  std::sort(sorted2.begin(), sorted2.end());
  const bool disjoint = std::none_of(p1.begin(), p1.end(), [&](Vertex v) {
    return std::binary_search(sorted2.begin(), sorted2.end(), v);
  });
  if (disjoint) return AugmentingPathFound{assemble_augmenting(p1, p2, vg, vm)};
  return BlossomFound{assemble_blossom(p1, p2, vg, vm)};
}

}  // namespace blossom
