#include <random>

#include <gtest/gtest.h>

#include "blossom/generate.hpp"
#include "blossom/graph.hpp"
#include "blossom/oracle.hpp"
#include "blossom/paths.hpp"
#include "test_support.hpp"

namespace blossom {
namespace {

using testing::path_graph;

TEST(Edge, IsCanonical) {
  for (Vertex a = 0; a < 6; ++a) {
    for (Vertex b = 0; b < 6; ++b) {
      if (a == b) continue;
      EXPECT_EQ(Edge(a, b), Edge(b, a));
      EXPECT_LT(Edge(a, b).lo(), Edge(a, b).hi());
    }
  }
}

TEST(Edge, RejectsSelfLoop) { EXPECT_THROW(Edge(3, 3), InputError); }

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{0, 3}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{1, 1}}), InputError);
}

TEST(Graph, AdjacencyMatchesEdgeSet) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_graph(30, 0.2, seed);
    std::size_t incidences = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      Vertex prev = 0;
      bool first = true;
      for (const auto& inc : g.incident(v)) {
        EXPECT_TRUE(first || prev < inc.to);
        EXPECT_EQ(g.edge(inc.edge), Edge(v, inc.to));
        prev = inc.to;
        first = false;
        ++incidences;
      }
    }
    EXPECT_EQ(incidences, 2 * g.edge_count());
    for (Vertex a = 0; a < 30; ++a) {
      for (Vertex b = 0; b < 30; ++b) {
        const bool listed =
            a != b && std::binary_search(g.edges().begin(), g.edges().end(), Edge(a, b));
        EXPECT_EQ(g.has_edge(a, b), listed);
      }
    }
  }
}

TEST(Graph, IsolatedVerticesAreRepresentable) {
  const Graph g(5, {{0, 1}});
  EXPECT_EQ(g.vertex_count(), 5U);
  EXPECT_EQ(g.degree(4), 0U);
}

TEST(Matching, RejectsOverlap) {
  EXPECT_THROW(Matching(4, {{0, 1}, {1, 2}}), ContractError);
}

TEST(Matching, MateIsAnInvolution) {
  const Matching m(6, {{0, 3}, {4, 1}});
  for (Vertex v = 0; v < 6; ++v) {
    if (auto w = m.mate(v)) {
      EXPECT_EQ(m.mate(*w), v);
      EXPECT_TRUE(m.contains(v, *w));
    }
  }
  EXPECT_FALSE(m.is_matched(2));
  EXPECT_EQ(m.size(), 2U);
}

TEST(IsPath, Examples) {
  const Graph p4 = path_graph(4);
  EXPECT_TRUE(is_path(p4, {0, 1, 2}));
  EXPECT_FALSE(is_path(p4, {0, 2}));
  EXPECT_TRUE(is_path(Graph(6, std::vector<Edge>{}), {5}));
}

TEST(IsPath, RejectsOutOfRangeAndEmpty) {
  EXPECT_THROW(is_path(path_graph(4), {0, 9}), InputError);
  EXPECT_THROW(is_path(path_graph(4), {}), InputError);
}

TEST(IsAlternating, Examples) {
  const Matching m(4, {{1, 2}});
  EXPECT_TRUE(is_alternating(m, {0, 1, 2, 3}));
  EXPECT_FALSE(is_alternating(m, {0, 1, 3}));
  EXPECT_TRUE(is_alternating(Matching(8), {7}));
  EXPECT_TRUE(is_alternating(m, {1, 2}));
  // Either phase is fine.
  EXPECT_TRUE(is_alternating(m, {1, 2, 3}));
}

TEST(IsAugmentingPath, Examples) {
  EXPECT_TRUE(is_augmenting_path(Matching(4, {{1, 2}}), {0, 1, 2, 3}));
  EXPECT_FALSE(is_augmenting_path(Matching(1), {0}));
  EXPECT_FALSE(is_augmenting_path(Matching(2, {{0, 1}}), {0, 1}));
}

TEST(EdgesOfPath, Examples) {
  EXPECT_EQ(edges_of_path({0, 1, 2}), (std::vector<Edge>{Edge(0, 1), Edge(1, 2)}));
  EXPECT_TRUE(edges_of_path({5}).empty());
  EXPECT_EQ(edges_of_path({0, 1, 0}), (std::vector<Edge>{Edge(0, 1), Edge(0, 1)}));
}

TEST(Augment, Examples) {
  EXPECT_EQ(augment(Matching(4, {{1, 2}}), {0, 1, 2, 3}), Matching(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(augment(Matching(2), {0, 1}), Matching(2, {{0, 1}}));
  EXPECT_EQ(augment(Matching(5, {{2, 3}}), {1, 2, 3, 4}), Matching(5, {{1, 2}, {3, 4}}));
}

TEST(Augment, RejectsNonAugmentingPath) {
  EXPECT_THROW(augment(Matching(2, {{0, 1}}), {0, 1}), ContractError);
  EXPECT_THROW(augment(Matching(4), {0, 1, 2}), ContractError);
}

// |augment(m, p)| = |m| + 1 and the result is again a matching, for every
// matching of every graph on 5 vertices and the augmenting path the oracle
// finds for it.
TEST(Augment, GrowsMatchingByOne) {
  std::size_t checked = 0;
  for (const Graph& g : oracle::enumerate_graphs(5)) {
    oracle::for_each_matching(g, [&](const Matching& m) {
      auto p = oracle::brute_augmenting_path(g, m);
      if (!p) return;
      const Matching grown = augment(m, *p);
      ASSERT_EQ(grown.size(), m.size() + 1);
      ASSERT_TRUE(grown.is_subset_of(g));
      ++checked;
    });
  }
  EXPECT_GT(checked, 0U);
}

}  // namespace
}  // namespace blossom
