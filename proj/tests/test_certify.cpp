#include <random>

#include <gtest/gtest.h>

#include "blossom/certify.hpp"
#include "blossom/generate.hpp"
#include "blossom/oracle.hpp"
#include "test_support.hpp"

namespace blossom {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::path_graph;
using testing::petersen_graph;
using testing::star_graph;

Verdict check(const Graph& g, std::vector<Edge> m, std::vector<Label> osc) {
  return check_max_card_matching(g, m, osc);
}

TEST(Checker, AcceptsPathOfFour) {
  EXPECT_TRUE(check(path_graph(4), {{0, 1}, {2, 3}}, {0, 1, 1, 0}));
}

TEST(Checker, AcceptsTriangleAsOneOddSet) {
  EXPECT_TRUE(check(complete_graph(3), {{0, 1}}, {2, 2, 2}));
}

TEST(Checker, AcceptsEmptyGraph) {
  EXPECT_TRUE(check(Graph(), {}, {}));
  EXPECT_TRUE(check(Graph(3, std::vector<Edge>{}), {}, {0, 0, 0}));
}

TEST(Checker, RejectionReasons) {
  const Graph p4 = path_graph(4);
  EXPECT_EQ(check(p4, {{0, 1}, {2, 3}}, {0, 1, 1}).reason, reason::kLabelCount);
  EXPECT_EQ(check(p4, {{0, 2}}, {0, 1, 0, 0}).reason, reason::kForeignEdge);
  EXPECT_EQ(check(p4, {{0, 1}, {1, 2}}, {0, 1, 1, 0}).reason, reason::kNotMatching);
  EXPECT_EQ(check(p4, {{0, 1}, {2, 3}}, {0, 1, 1, -1}).reason, reason::kLabelRange);
  EXPECT_EQ(check(p4, {{0, 1}, {2, 3}}, {0, 1, 1, 4}).reason, reason::kLabelRange);
  EXPECT_EQ(check(p4, {{0, 1}}, {0, 1, 1, 0}).reason, reason::kNotOptimal);
  EXPECT_EQ(check(p4, {{0, 1}, {2, 3}}, {0, 0, 1, 1}).reason, reason::kNotCover);
}

// A matching edge outside G must not be certified even when the labels would
// otherwise balance.
TEST(Checker, ForeignEdgeCannotInflateTheMatching) {
  const Graph g(4, {{0, 1}});
  EXPECT_EQ(check(g, {{0, 1}, {2, 3}}, {1, 0, 1, 0}).reason, reason::kForeignEdge);
}

TEST(Checker, TwoVertexRangeAllowsLabelOne) {
  EXPECT_TRUE(check(Graph(2, {{0, 1}}), {{0, 1}}, {1, 0}));
  EXPECT_EQ(check(Graph(2, {{0, 1}}), {{0, 1}}, {2, 2}).reason, reason::kLabelRange);
}

TEST(CoverBound, Examples) {
  EXPECT_EQ(cover_bound(std::vector<Label>{0, 1, 1, 0}), 2U);
  EXPECT_EQ(cover_bound(std::vector<Label>{2, 2, 2, 2, 2}), 2U);
  EXPECT_EQ(cover_bound(std::vector<Label>{1, 2, 2, 3, 3, 3}), 3U);
}

// Weak duality: every labeling that is a cover bounds every matching.
TEST(CoverBound, BoundsEveryMatchingOnSmallGraphs) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto limit = static_cast<Label>(std::max<std::size_t>(2, n));
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(limit);
    for (const Graph& g : oracle::enumerate_graphs(n)) {
      const std::size_t best = oracle::brute_max_matching(g).size();
      for (std::size_t code = 0; code < total; ++code) {
        std::vector<Label> labels(n);
        std::size_t c = code;
        for (auto& l : labels) {
          l = static_cast<Label>(c % static_cast<std::size_t>(limit));
          c /= static_cast<std::size_t>(limit);
        }
        const bool is_cover = std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
          const Label a = labels[e.lo()];
          const Label b = labels[e.hi()];
          return a == 1 || b == 1 || (a == b && a >= 2);
        });
        if (is_cover) {
          ASSERT_GE(cover_bound(labels), best);
        }
      }
    }
  }
}

TEST(BuildOddSetCover, FiveCycleIsOneBlossom) {
  const Graph g = cycle_graph(5);
  const Matching m(5, {{1, 2}, {3, 4}});
  FailedSearchTrace trace;
  AugPathOptions o;
  o.failure = &trace;
  ASSERT_FALSE(find_aug_path(g, m, o));
  EXPECT_EQ(build_odd_set_cover(g, m, trace).labels, (std::vector<Label>{2, 2, 2, 2, 2}));
}

TEST(BuildOddSetCover, StarCentreIsOdd) {
  const Graph g = star_graph(3);
  const Matching m(4, {{0, 1}});
  FailedSearchTrace trace;
  AugPathOptions o;
  o.failure = &trace;
  ASSERT_FALSE(find_aug_path(g, m, o));
  EXPECT_EQ(build_odd_set_cover(g, m, trace).labels, (std::vector<Label>{1, 0, 0, 0}));
}

TEST(BuildOddSetCover, RejectsNonMaximumMatching) {
  // A trace from the maximum matching does not certify a smaller one.
  const Graph g = path_graph(4);
  const Matching best(4, {{0, 1}, {2, 3}});
  FailedSearchTrace trace;
  AugPathOptions o;
  o.failure = &trace;
  ASSERT_FALSE(find_aug_path(g, best, o));
  EXPECT_THROW(build_odd_set_cover(g, Matching(4, {{0, 1}}), trace), InternalError);
}

TEST(FindMaxMatching, Examples) {
  const auto p4 = find_max_matching(path_graph(4));
  EXPECT_EQ(p4.matching, Matching(4, {{0, 1}, {2, 3}}));
  EXPECT_TRUE(check_max_card_matching(path_graph(4), p4.matching, p4.witness));

  const auto pet = find_max_matching(petersen_graph());
  EXPECT_EQ(pet.matching.size(), 5U);
  EXPECT_TRUE(check_max_card_matching(petersen_graph(), pet.matching, pet.witness));

  const Graph empty(4, std::vector<Edge>{});
  const auto none = find_max_matching(empty);
  EXPECT_EQ(none.matching.size(), 0U);
  EXPECT_EQ(none.witness.labels, (std::vector<Label>{0, 0, 0, 0}));
}

TEST(FindMaxMatching, LoneEdgeUsesLabelOne) {
  const Graph g(2, {{0, 1}});
  const auto r = find_max_matching(g);
  EXPECT_EQ(r.witness.labels, (std::vector<Label>{1, 0}));
  EXPECT_TRUE(check_max_card_matching(g, r.matching, r.witness));
}

TEST(FindMaxMatching, OddCyclesGetOneLabel) {
  for (std::size_t k = 1; k <= 6; ++k) {
    const Graph g = cycle_graph(2 * k + 1);
    const auto r = find_max_matching(g);
    EXPECT_EQ(r.matching.size(), k);
    EXPECT_EQ(r.witness.labels, std::vector<Label>(2 * k + 1, 2));
  }
}

TEST(FindMaxMatching, OptimalAndCertifiedUpToSixVertices) {
  MatcherOptions o;
  o.search.search.check_invariants = true;
  o.search.check_refined = true;
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const Graph& g : oracle::enumerate_graphs(n)) {
      const auto r = find_max_matching(g, o);
      ASSERT_EQ(r.matching.size(), oracle::brute_max_matching(g).size());
      ASSERT_TRUE(check_max_card_matching(g, r.matching, r.witness));
    }
  }
}

// Dropping a matching edge or moving a label must not slip past the checker
// unless the result is still a genuine certificate.
TEST(Checker, RejectsMutatedCertificates) {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_graph(10, 0.3, seed);
    const auto r = find_max_matching(g);
    auto edges = r.matching.edges();
    if (!edges.empty()) {
      auto fewer = edges;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(rng() % fewer.size()));
      EXPECT_EQ(check_max_card_matching(g, fewer, r.witness.labels).reason, reason::kNotOptimal);
    }
    auto labels = r.witness.labels;
    const std::size_t v = rng() % labels.size();
    labels[v] = (labels[v] + 1 + static_cast<Label>(rng() % 9)) % 10;
    const Verdict verdict = check_max_card_matching(g, edges, labels);
    if (verdict && g.edge_count() <= oracle::kMaxOracleEdges) {
      EXPECT_EQ(edges.size(), oracle::brute_max_matching(g).size());
    }
  }
}

}  // namespace
}  // namespace blossom
