#include "symcycle/census.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <string>

#include "symcycle/cycle.hpp"

namespace symcycle {
namespace {

using Counts = std::map<int, std::uint64_t>;

TEST(Binomial, SmallValuesAndEdges) {
  EXPECT_EQ(binomial(0, 0), 1u);
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(10, 0), 1u);
  EXPECT_EQ(binomial(10, 10), 1u);
  EXPECT_EQ(binomial(4, 5), 0u);
  EXPECT_EQ(binomial(4, -1), 0u);
}

TEST(Binomial, PascalRuleAcrossTheSupportedRange) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 64);
    const int k = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
    EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
}

TEST(Census, MatchesThePublishedSmallTables) {
  EXPECT_EQ(census(SymmetricCycle::standard(1)).counts, (Counts{{1, 2}}));
  EXPECT_EQ(census(SymmetricCycle::standard(5)).counts,
            (Counts{{1, 10}, {3, 20}, {5, 2}}));
  EXPECT_EQ(census(SymmetricCycle::standard(8)).counts,
            (Counts{{1, 16}, {3, 112}, {5, 112}, {7, 16}}));
}

TEST(Census, EnforcesTheEnumerationCap) {
  EXPECT_THROW(census(SymmetricCycle::standard(6), 5), CapExceeded);
}

TEST(GammaPolynomial, MatchesThePublishedSmallTables) {
  EXPECT_EQ(gamma_polynomial(2).counts, (Counts{{1, 4}}));
  EXPECT_EQ(gamma_polynomial(7).counts, (Counts{{1, 14}, {3, 70}, {5, 42}, {7, 2}}));
  EXPECT_EQ(gamma_polynomial(10).counts,
            (Counts{{1, 20}, {3, 240}, {5, 504}, {7, 240}, {9, 20}}));
}

TEST(GammaText, RendersThePolynomialTable) {
  const std::map<int, std::string> expected = {
      {1, "2x"},
      {2, "4x"},
      {3, "6x + 2x^3"},
      {4, "8x + 8x^3"},
      {5, "10x + 20x^3 + 2x^5"},
      {6, "12x + 40x^3 + 12x^5"},
      {7, "14x + 70x^3 + 42x^5 + 2x^7"},
      {8, "16x + 112x^3 + 112x^5 + 16x^7"},
      {9, "18x + 168x^3 + 252x^5 + 72x^7 + 2x^9"},
      {10, "20x + 240x^3 + 504x^5 + 240x^7 + 20x^9"},
  };
  for (const auto& [t, text] : expected) {
    EXPECT_EQ(gamma_text(gamma_polynomial(t)), text);
  }
}

TEST(Census, AgreesWithTheClosedForm) {
  for (int t = 1; t <= 12; ++t) {
    EXPECT_EQ(census(SymmetricCycle::standard(t)), gamma_polynomial(t));
  }
}

TEST(Census, IndependentOfTheCycle) {
  std::mt19937_64 rng(52);
  for (int t = 1; t <= 10; ++t) {
    const CensusTable expected = gamma_polynomial(t);
    for (int i = 0; i < 5; ++i) {
      const SymmetricCycle cycle = SymmetricCycle::from_spec(random_cycle_spec(t, rng));
      EXPECT_EQ(census(cycle), expected);
    }
  }
}

TEST(Census, TotalsMatchVertexAndEdgeCounts) {
  for (int t = 1; t <= 12; ++t) {
    const CensusTable table = census(SymmetricCycle::standard(t));
    std::uint64_t total = 0, weighted = 0;
    for (const auto& [j, count] : table.counts) {
      EXPECT_EQ(j % 2, 1);
      total += count;
      weighted += static_cast<std::uint64_t>(j) * count;
    }
    EXPECT_EQ(total, std::uint64_t{1} << t);
    // The weighted sum counts edges, which needs a genuine cycle (t >= 2);
    // the degenerate 2-cycle at t=1 revisits its single edge.
    if (t >= 2) {
      EXPECT_EQ(weighted, (std::uint64_t{1} << (t - 1)) * static_cast<std::uint64_t>(t));
    }
  }
}

TEST(IntersectionNumbers, FrozenExamples) {
  EXPECT_EQ(hamming_intersection_number(3, 1, 1), 2u);
  EXPECT_EQ(hamming_intersection_number(4, 3, 1), 2u);
  EXPECT_EQ(hamming_intersection_number(5, 2, 3), 0u);  // odd difference
  EXPECT_EQ(hamming_intersection_number(5, 1, 5), 0u);  // gap wider than 2
  EXPECT_EQ(hamming_intersection_number(5, -1, 1), 0u);
  EXPECT_EQ(hamming_intersection_number(5, 6, 4), 0u);
  EXPECT_THROW(hamming_intersection_number(1, 0, 0), std::invalid_argument);
}

TEST(IntersectionNumbers, ClosedFormMatchesBruteForce) {
  for (int t = 2; t <= 8; ++t) {
    for (int i = 0; i <= t; ++i) {
      for (int j = 0; j <= t; ++j) {
        EXPECT_EQ(hamming_intersection_number(t, i, j),
                  hamming_intersection_count(t, i, j))
            << "t=" << t << " i=" << i << " j=" << j;
      }
    }
  }
}

TEST(IntersectionNumbers, WeightedExpansionYieldsTheEdgeCount) {
  // (t/2) * sum over j in {i-2, i+2} of p2(i,j) * i * (i-j) counts the edges
  // of the graph, using the intersection-number values themselves.
  for (int t = 2; t <= 12; ++t) {
    std::int64_t sum = 0;
    for (int i = 1; i <= t; ++i) {
      for (const int j : {i - 2, i + 2}) {
        if (j < 0 || j > t) continue;
        sum += static_cast<std::int64_t>(hamming_intersection_number(t, i, j)) *
               i * (i - j);
      }
    }
    EXPECT_EQ(static_cast<std::int64_t>(t) * sum / 2,
              (std::int64_t{1} << (t - 1)) * t);
  }
}

TEST(IntersectionWeightedSum, CollapsesToAPowerOfTwo) {
  EXPECT_EQ(intersection_weighted_sum(2), 4);
  EXPECT_EQ(intersection_weighted_sum(3), 8);
  EXPECT_EQ(intersection_weighted_sum(10), 1024);
  for (int t = 2; t <= 20; ++t) {
    EXPECT_EQ(intersection_weighted_sum(t), std::int64_t{1} << t);
    if (t >= 3) {
      EXPECT_EQ(intersection_weighted_sum(t), 2 * intersection_weighted_sum(t - 1));
    }
  }
  EXPECT_THROW(intersection_weighted_sum(1), std::invalid_argument);
}

TEST(GlobalSums, FrozenSmallCases) {
  const GlobalSums three = global_sums(SymmetricCycle::standard(3));
  EXPECT_EQ(three.cardinality_sum, 12u);
  EXPECT_EQ(three.distance_sum, 6u);
  EXPECT_TRUE(three.edge_sum_ok);
  EXPECT_TRUE(three.distance_sum_ok);

  const GlobalSums two = global_sums(SymmetricCycle::standard(2));
  EXPECT_EQ(two.distance_sum, 0u);
  EXPECT_TRUE(two.edge_sum_ok);
  EXPECT_TRUE(two.distance_sum_ok);
}

TEST(GlobalSums, HoldForRandomCycles) {
  std::mt19937_64 rng(53);
  for (int t = 2; t <= 10; ++t) {
    const SymmetricCycle cycle = SymmetricCycle::from_spec(random_cycle_spec(t, rng));
    const GlobalSums sums = global_sums(cycle);
    EXPECT_TRUE(sums.edge_sum_ok);
    EXPECT_TRUE(sums.distance_sum_ok);
  }
}

TEST(GlobalSums, NeedTwoDimensionsAndTheCap) {
  EXPECT_THROW(global_sums(SymmetricCycle::standard(1)), std::invalid_argument);
  EXPECT_THROW(global_sums(SymmetricCycle::standard(6), 5), CapExceeded);
}

TEST(CensusSymmetry, HoldsOnCensusOutput) {
  for (int t = 2; t <= 12; ++t) {
    EXPECT_TRUE(census_symmetry_holds(census(SymmetricCycle::standard(t))));
  }
}

TEST(CensusSymmetry, FrozenRelations) {
  const CensusTable ten = census(SymmetricCycle::standard(10));
  EXPECT_EQ(ten.counts.at(3), 240u);
  EXPECT_EQ(ten.counts.at(7), 240u);

  const CensusTable nine = census(SymmetricCycle::standard(9));
  EXPECT_EQ(3 * nine.counts.at(3), 504u);
  EXPECT_EQ(7 * nine.counts.at(7), 504u);

  const CensusTable four = census(SymmetricCycle::standard(4));
  EXPECT_EQ(four.counts.at(1), 8u);
  EXPECT_EQ(four.counts.at(3), 8u);
}

TEST(CensusSymmetry, DetectsBrokenTables) {
  EXPECT_FALSE(census_symmetry_holds(CensusTable{4, {{1, 8}, {3, 9}}}));
  EXPECT_FALSE(census_symmetry_holds(CensusTable{5, {{1, 10}, {3, 20}, {5, 3}}}));
  EXPECT_THROW(census_symmetry_holds(CensusTable{1, {{1, 2}}}), std::invalid_argument);
}

}  // namespace
}  // namespace symcycle
