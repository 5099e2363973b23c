#include <gtest/gtest.h>

#include "dominator/exact.hpp"
#include "dominator/generators.hpp"
#include "dominator/lll.hpp"
#include "oracles.hpp"

namespace dominator {
namespace {

TEST(FailureProb, Examples) {
  EXPECT_EQ(failure_prob(7, 4, 2, 2), make_rational(88, 16384));
  EXPECT_EQ(failure_prob(7, 4, 2, 2), make_rational(11, 2048));
  EXPECT_EQ(failure_prob(13, 2, 1, 2), make_rational(15, 8192));
  EXPECT_EQ(failure_prob(1, 2, 1, 1), 1);
}

TEST(FailureProb, Errors) {
  EXPECT_THROW(failure_prob(3, 1, 1, 1), Error);
  EXPECT_THROW(failure_prob(3, 2, 4, 1), Error);
  EXPECT_THROW(failure_prob(3, 2, 1, 0), Error);
}

TEST(FailureProb, MatchesEnumeration) {
  // brute-force over all N^delta neighbor colorings with v fixed to color 0
  for (int delta = 1; delta <= 6; ++delta) {
    for (int colors = 2; colors <= 4; ++colors) {
      for (int a = 1; a <= delta; ++a) {
        for (int b = 1; b <= delta; ++b) {
          long long total = 1;
          for (int i = 0; i < delta; ++i) total *= colors;
          long long union_count = 0;
          std::vector<int> c(static_cast<std::size_t>(delta), 0);
          for (long long code = 0; code < total; ++code) {
            long long rest = code;
            std::vector<int> per(static_cast<std::size_t>(colors), 0);
            for (int i = 0; i < delta; ++i) {
              ++per[rest % colors];
              rest /= colors;
            }
            if (delta - per[0] < b) ++union_count;
            for (int x = 1; x < colors; ++x)
              if (delta - per[x] < a) ++union_count;
          }
          EXPECT_EQ(failure_prob(delta, colors, a, b), make_rational(union_count, total))
              << delta << " " << colors << " " << a << " " << b;
        }
      }
    }
  }
}

TEST(LllCondition, Examples) {
  const auto c1 = lll_condition(make_rational(88, 16384), 7);
  EXPECT_TRUE(c1.holds);
  EXPECT_NEAR(to_double(c1.value), 0.7154, 1e-4);
  const auto c2 = lll_condition(make_rational(15, 8192), 14);
  EXPECT_TRUE(c2.holds);
  EXPECT_NEAR(to_double(c2.value), 0.97556, 1e-4);
  const auto c3 = lll_condition(Rational(1), 1);
  EXPECT_FALSE(c3.holds);
  EXPECT_EQ(c3.value, e_upper());
  EXPECT_GT(e_upper(), Rational(2718281828, 1000000000));
  EXPECT_FALSE(lll_condition(Rational(2), 3).holds);
  EXPECT_THROW(lll_condition(Rational(-1), 3), Error);
  EXPECT_THROW(lll_condition(Rational(1, 2), 0), Error);
}

TEST(MinimalColors, TableRows) {
  const std::vector<int> expected{4, 4, 3, 3, 3, 2, 3, 3, 3, 3, 2, 2, 3, 2, 2};
  const auto rows = table_rows();
  ASSERT_EQ(rows.size(), expected.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto report = minimal_colors(rows[i]);
    ASSERT_TRUE(report.minimal_colors) << i;
    EXPECT_EQ(*report.minimal_colors, expected[i]) << i;
    EXPECT_EQ(*report.bound, make_rational(expected[i] - 1, expected[i]));
    EXPECT_EQ(report.probability, failure_prob(rows[i].delta, expected[i], rows[i].a, rows[i].b));
    EXPECT_LE(report.condition_value, 1);
    if (expected[i] > 2) {
      const auto below = failure_prob(rows[i].delta, expected[i] - 1, rows[i].a, rows[i].b);
      EXPECT_FALSE(lll_condition(below, rows[i].Delta).holds) << i;
    }
  }
}

TEST(MinimalColors, Examples) {
  EXPECT_EQ(minimal_colors({7, 7, 2, 2}).minimal_colors, 4);
  EXPECT_EQ(minimal_colors({9, 11, 2, 2}).minimal_colors, 3);
  EXPECT_EQ(minimal_colors({8, 8, 2, 1}).minimal_colors, 3);
  EXPECT_EQ(minimal_colors({14, 14, 2, 2}).minimal_colors, 2);
  EXPECT_FALSE(minimal_colors({2, 2, 3, 1}).minimal_colors);
  // condition can never hold with delta = 2: the chance of two neighbors
  // sharing v's color is at least 1/N^2 while Delta^2 = 4
  EXPECT_FALSE(minimal_colors({2, 50, 1, 1}, 64).minimal_colors);
  EXPECT_THROW(minimal_colors({5, 4, 1, 1}), Error);
}

TEST(LllProperties, DenominatorIsPowerOfN) {
  for (int delta = 2; delta <= 16; ++delta) {
    for (int colors = 2; colors <= 6; ++colors) {
      const Rational p = failure_prob(delta, colors, std::min(2, delta), std::min(2, delta));
      const BigInt full = boost::multiprecision::pow(BigInt(colors), static_cast<unsigned>(delta));
      EXPECT_EQ(full % denominator(p), 0);
      EXPECT_EQ(failure_prob_fixed_color(delta, colors, 1, 1), failure_prob(delta, colors, 1, 1) / colors);
    }
  }
}

TEST(LllProperties, Monotonicity) {
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (int colors = 2; colors <= 6; ++colors) {
        for (int delta = std::max(a, b); delta < 24; ++delta) {
          EXPECT_LE(failure_prob(delta + 1, colors, a, b), failure_prob(delta, colors, a, b))
              << delta << " " << colors << " " << a << " " << b;
        }
      }
      for (int delta = std::max(a, b); delta <= 16; ++delta) {
        std::optional<int> previous;
        for (int Delta = delta; Delta <= delta + 6; ++Delta) {
          const auto now = minimal_colors({delta, Delta, a, b}).minimal_colors;
          if (previous) {
            ASSERT_TRUE(!now || *now >= *previous);
          }
          if (!now) break;
          previous = now;
        }
      }
    }
  }
}

TEST(LllProperties, SmallestRegularDegree) {
  EXPECT_EQ(smallest_regular_degree(4, 2, 2), 7);
  EXPECT_EQ(smallest_regular_degree(2, 2, 2), 14);
  EXPECT_EQ(smallest_regular_degree(2, 1, 2), 13);
  EXPECT_EQ(smallest_regular_degree(2, 2, 1), 13);
  EXPECT_EQ(smallest_regular_degree(3, 1, 2), 8);
}

Coloring make_coloring(int colors, std::vector<int> color) { return Coloring{colors, std::move(color)}; }

TEST(IsGoodAt, Examples) {
  const Graph c4 = cycle_graph(4);
  // (i) holds at 0 but dropping color 1 would strand it: (ii) fails.
  EXPECT_FALSE(is_good_at(c4, make_coloring(2, {0, 1, 0, 1}), 0, 1, 1));
  EXPECT_TRUE(is_good(c4, make_coloring(2, {0, 1, 1, 0}), 1, 1));
  EXPECT_FALSE(is_good_at(c4, make_coloring(2, {0, 0, 0, 0}), 0, 1, 1));
  EXPECT_TRUE(is_good_at(complete_graph(4), make_coloring(2, {0, 1, 1, 1}), 1, 2, 1));
  // condition (ii) alone fails: both neighbors colored 1, v colored 0, a = 1
  EXPECT_FALSE(is_good_at(c4, make_coloring(3, {0, 1, 2, 1}), 0, 1, 1));
  EXPECT_TRUE(is_good_at(c4, make_coloring(3, {0, 1, 2, 2}), 0, 1, 1));
}

TEST(IsGoodAt, SoundForEveryDroppedColor) {
  Rng rng(17);
  int good_seen = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 6 + static_cast<int>(rng.uniform(10));
    const Graph g = testing::random_graph(n, 7, 10, rng);
    const int colors = 2 + static_cast<int>(rng.uniform(3));
    const int a = 1 + static_cast<int>(rng.uniform(2));
    const int b = 1 + static_cast<int>(rng.uniform(2));
    Coloring c{colors, std::vector<int>(static_cast<std::size_t>(n))};
    for (auto& x : c.color) x = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(colors)));
    if (!is_good(g, c, a, b)) continue;
    ++good_seen;
    for (int x = 0; x < colors; ++x) {
      VertexSet kept;
      for (Vertex v = 0; v < n; ++v)
        if (c.color[v] != x) kept.push_back(v);
      ASSERT_TRUE(is_ab_dominating(g, kept, a, b));
    }
  }
  EXPECT_GT(good_seen, 50);
}

TEST(MoserTardos, Heawood) {
  try {
    const auto run = moser_tardos(heawood_graph(), 2, 2, 2, 5, 10000);
    EXPECT_TRUE(is_good(heawood_graph(), run.coloring, 2, 2));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::resample_budget_exceeded);
  }
}

TEST(MoserTardos, TableBackedRuns) {
  {
    const Graph g = random_regular_graph(100, 7, 1);
    const auto run = moser_tardos(g, 4, 2, 2, 2, 5000);
    EXPECT_TRUE(is_good(g, run.coloring, 2, 2));
    const auto cert = extract_dominating(g, run.coloring, 2, 2);
    EXPECT_TRUE(cert.verified);
    EXPECT_LE(cert.set.size(), 75u);
  }
  {
    const Graph g = random_regular_graph(200, 14, 1);
    const auto run = moser_tardos(g, 2, 2, 2, 3, 10000);
    EXPECT_TRUE(is_good(g, run.coloring, 2, 2));
    EXPECT_LE(extract_dominating(g, run.coloring, 2, 2).set.size(), 100u);
  }
}

TEST(MoserTardos, Deterministic) {
  const Graph g = random_regular_graph(60, 7, 9);
  const auto r1 = moser_tardos(g, 4, 2, 2, 11, 3000);
  const auto r2 = moser_tardos(g, 4, 2, 2, 11, 3000);
  EXPECT_EQ(r1.coloring.color, r2.coloring.color);
  EXPECT_EQ(r1.resamples, r2.resamples);
}

TEST(MoserTardos, BudgetExceeded) {
  // K3 with a = 2 can never be good: condition (i) needs both neighbors to
  // avoid v's color, impossible for all three at once with two colors.
  try {
    moser_tardos(complete_graph(3), 2, 2, 2, 1, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::resample_budget_exceeded);
  }
}

TEST(ExtractDominating, Examples) {
  const Graph c4 = cycle_graph(4);
  const auto cert = extract_dominating(c4, make_coloring(2, {0, 1, 1, 0}), 1, 1);
  EXPECT_EQ(cert.set, (VertexSet{1, 2}));
  EXPECT_TRUE(cert.verified);
  EXPECT_EQ(cert.method, Method::lll);
  EXPECT_EQ(cert.claimed_bound, make_rational(1, 2));
  // an empty class does not matter; the largest one is dropped
  const auto three = extract_dominating(c4, make_coloring(3, {0, 1, 1, 0}), 1, 1);
  EXPECT_EQ(three.set, (VertexSet{1, 2}));
  EXPECT_EQ(extract_dominating(c4, make_coloring(4, {0, 1, 2, 3}), 1, 1).set, (VertexSet{1, 2, 3}));
  EXPECT_THROW(extract_dominating(c4, make_coloring(2, {0, 1, 0, 1}), 1, 1), Error);
  try {
    extract_dominating(c4, make_coloring(2, {0, 0, 0, 0}), 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::coloring_not_good);
  }
  EXPECT_THROW(extract_dominating(c4, make_coloring(2, {0, 1, 0}), 1, 1), Error);
}

TEST(ExtractDominating, TerminationOverSeeds) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_regular_graph(100, 7, 100 + seed);
    const auto run = moser_tardos(g, 4, 2, 2, seed, 5000);
    EXPECT_LT(run.resamples, 5000u);
    const auto cert = extract_dominating(g, run.coloring, 2, 2);
    EXPECT_LE(cert.set.size(), 75u);
  }
}

}  // namespace
}  // namespace dominator
