#include <gtest/gtest.h>

#include "dominator/exact.hpp"
#include "dominator/generators.hpp"
#include "oracles.hpp"

namespace dominator {
namespace {

TEST(IsAbDominating, Examples) {
  const Graph c4 = cycle_graph(4);
  EXPECT_TRUE(is_ab_dominating(c4, VertexSet{0, 1, 2, 3}, 2, 2));
  EXPECT_FALSE(is_ab_dominating(c4, VertexSet{}, 1, 1));
  EXPECT_TRUE(is_ab_dominating(complete_graph(4), VertexSet{0, 1, 2}, 2, 2));
  EXPECT_FALSE(is_ab_dominating(complete_graph(4), VertexSet{0, 1}, 2, 2));
}

TEST(IsAbDominating, FourCycleNeedsEverythingForTwoTwo) {
  // Brute force over all 16 subsets: only V itself works.
  const Graph c4 = cycle_graph(4);
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    VertexSet s;
    for (Vertex v = 0; v < 4; ++v)
      if ((mask >> v) & 1) s.push_back(v);
    EXPECT_EQ(is_ab_dominating(c4, s, 2, 2), mask == 15) << mask;
  }
}

TEST(IsAbDominating, RejectsOutOfRange) {
  try {
    is_ab_dominating(cycle_graph(4), VertexSet{0, 4}, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::vertex_out_of_range);
  }
}

TEST(GammaExact, HeawoodTwoTwo) {
  const auto r = gamma_exact(heawood_graph(), 2, 2);
  ASSERT_EQ(r.status, GammaStatus::optimal);
  EXPECT_EQ(r.size, 12);
  EXPECT_TRUE(is_ab_dominating(heawood_graph(), r.witness, 2, 2));
}

TEST(GammaExact, PetersenTwoThree) {
  const auto r = gamma_exact(petersen_graph(), 2, 3);
  ASSERT_EQ(r.status, GammaStatus::optimal);
  EXPECT_EQ(r.size, 9);
}

TEST(GammaExact, FourCycleOneOne) {
  const auto r = gamma_exact(cycle_graph(4), 1, 1);
  ASSERT_EQ(r.status, GammaStatus::optimal);
  EXPECT_EQ(r.size, 2);
  // first optimum in include-first order
  EXPECT_EQ(r.witness, (VertexSet{0, 1}));
}

TEST(GammaExact, InfeasibleIsAResult) {
  const auto r = gamma_exact(complete_graph(2), 2, 1);
  EXPECT_EQ(r.status, GammaStatus::infeasible);
  EXPECT_FALSE(r.size.has_value());
  EXPECT_EQ(gamma_exact(cycle_graph(4), 3, 3).status, GammaStatus::infeasible);
}

TEST(GammaExact, BudgetExceededIsDistinct) {
  const auto r = gamma_exact(random_regular_graph(30, 5, 3), 2, 2, 50);
  EXPECT_EQ(r.status, GammaStatus::budget_exceeded);
  EXPECT_LE(r.nodes, 51u);
}

TEST(GammaExact, MatchesBruteForce) {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + static_cast<int>(rng.uniform(10));
    const Graph g = testing::random_graph(n, 2 + static_cast<int>(rng.uniform(7)), 10, rng);
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b) {
        const auto r = gamma_exact(g, a, b);
        const auto expected = testing::gamma_brute_force(g, a, b);
        ASSERT_NE(r.status, GammaStatus::budget_exceeded);
        ASSERT_EQ(r.size, expected) << "graph " << i << " (a,b)=(" << a << "," << b << ")";
        if (expected) {
          ASSERT_TRUE(is_ab_dominating(g, r.witness, a, b));
          ASSERT_EQ(static_cast<int>(r.witness.size()), *expected);
        }
      }
  }
}

TEST(GammaExact, MonotoneInAAndB) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng.uniform(9));
    const Graph g = testing::random_graph(n, 5, 10, rng);
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b) {
        const auto base = gamma_exact(g, a, b);
        if (!base.size) continue;
        const auto up_a = gamma_exact(g, a + 1, b);
        const auto up_b = gamma_exact(g, a, b + 1);
        if (up_a.size) {
          EXPECT_GE(*up_a.size, *base.size);
        }
        if (up_b.size) {
          EXPECT_GE(*up_b.size, *base.size);
        }
      }
  }
}

TEST(Certify, VerifiedCertificatesReverify) {
  const Graph g = petersen_graph();
  const auto r = gamma_exact(g, 2, 3);
  const auto cert = certify(g, r.witness, 2, 3, Method::exact, make_rational(9, 10));
  EXPECT_TRUE(cert.verified);
  EXPECT_TRUE(is_ab_dominating(g, cert.set, cert.a, cert.b));
}

TEST(Certify, RejectsBadSetsAndBrokenBounds) {
  const Graph g = cycle_graph(4);
  EXPECT_THROW(certify(g, {0}, 1, 1, Method::external), Error);
  EXPECT_THROW(certify(g, {0, 1, 2}, 1, 1, Method::external, make_rational(1, 2)), Error);
  EXPECT_NO_THROW(certify(g, {0, 1}, 1, 1, Method::external, make_rational(1, 2)));
}

TEST(IndependenceNumber, Examples) {
  const auto star = independence_number_exact(complete_bipartite_graph(1, 3));
  EXPECT_EQ(star.size, 3);
  EXPECT_EQ(star.witness, (VertexSet{1, 2, 3}));
  EXPECT_EQ(independence_number_exact(complete_graph(4)).size, 1);
  EXPECT_EQ(independence_number_exact(cycle_graph(4)).size, 2);
  EXPECT_EQ(independence_number_exact(petersen_graph()).size, 4);
  EXPECT_EQ(independence_number_exact(heawood_graph()).size, 7);
  EXPECT_EQ(independence_number_exact(Graph(0, {})).size, 0);
}

TEST(IndependenceNumber, MatchesBruteForce) {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng.uniform(14));
    const Graph g = testing::random_graph(n, 1 + static_cast<int>(rng.uniform(8)), 10, rng);
    const auto r = independence_number_exact(g);
    ASSERT_EQ(r.size, testing::independence_brute_force(g)) << i;
    ASSERT_TRUE(is_independent(g, r.witness));
    ASSERT_EQ(static_cast<int>(r.witness.size()), r.size);
  }
}

}  // namespace
}  // namespace dominator
