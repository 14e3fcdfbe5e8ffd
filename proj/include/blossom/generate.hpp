#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "blossom/errors.hpp"
#include "blossom/graph.hpp"

namespace blossom {

/// Erdos-Renyi G(n, p): each pair (i, j), i < j, taken in lexicographic order,
/// is an edge with probability p. Same seed, same graph, on any platform.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      // 53 random bits mapped to [0, 1); std::uniform_real_distribution is
      // not reproducible across standard libraries.
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace blossom
