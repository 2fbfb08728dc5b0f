// End-to-end acceptance suite. Each test covers one release criterion and
// prints a single PASS/FAIL line with its runtime.

#include <gtest/gtest.h>

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "symcycle/symcycle.hpp"

namespace symcycle {
namespace {

class Acceptance : public ::testing::Test {
 protected:
  void SetUp() override { start_ = std::chrono::steady_clock::now(); }

  double elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

  void report(int criterion, const std::string& description) {
    std::printf("[criterion %d] %s: %s (%.2fs)\n", criterion,
                HasFailure() ? "FAIL" : "PASS", description.c_str(),
                elapsed_seconds());
    std::fflush(stdout);
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

constexpr KernelVariant kVariants[] = {KernelVariant::Q1, KernelVariant::Q2,
                                       KernelVariant::Q3, KernelVariant::Q4};

TEST_F(Acceptance, Criterion1GammaTableReproduction) {
  const std::map<int, std::string> table = {
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
  for (const auto& [t, text] : table) {
    const testutil::CommandResult r =
        testutil::run_cli("gamma --t " + std::to_string(t));
    EXPECT_EQ(r.exit_code, 0) << "t=" << t;
    EXPECT_EQ(r.output, text + "\n") << "t=" << t;
  }
  EXPECT_LT(elapsed_seconds(), 1.0);
  report(1, "gamma --t 1..10 reproduces the published table byte-for-byte");
}

TEST_F(Acceptance, Criterion2CensusTheorem) {
  std::mt19937_64 rng(1002);
  for (int t = 2; t <= 12; ++t) {
    const CensusTable expected = gamma_polynomial(t);
    for (int i = 0; i < 5; ++i) {
      const SymmetricCycle cycle =
          SymmetricCycle::from_spec(random_cycle_spec(t, rng));
      EXPECT_EQ(census(cycle), expected) << "t=" << t;
    }
  }
  EXPECT_LT(elapsed_seconds(), 30.0);
  report(2, "census counts equal 2*C(t,j) for t=2..12 over random cycles");
}

TEST_F(Acceptance, Criterion3DecompositionCorrectness) {
  std::mt19937_64 rng(1003);
  for (int t = 2; t <= 6; ++t) {
    for (int i = 0; i < 10; ++i) {
      const SymmetricCycle cycle =
          SymmetricCycle::from_spec(random_cycle_spec(t, rng));
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << t); ++m) {
        const Tope target(t, m);
        const Decomposition d = decompose(target, cycle);
        EXPECT_EQ(d, decompose_exhaustive(target, cycle)) << target.str();
        EXPECT_EQ(d.cardinality() % 2, 1);
        EXPECT_TRUE(reconstructs(d, cycle, target));
        EXPECT_EQ(tope_rank(summands(d, cycle)), d.cardinality());
      }
    }
  }
  EXPECT_LT(elapsed_seconds(), 60.0);
  report(3, "decompose matches the exhaustive scan, odd, reconstructing, independent");
}

TEST_F(Acceptance, Criterion4FourFormulaAgreement) {
  std::mt19937_64 rng(1004);
  for (int t = 3; t <= 12; ++t) {
    for (int pair = 0; pair < 1000; ++pair) {
      const SymmetricCycle cycle =
          SymmetricCycle::from_spec(random_cycle_spec(t, rng));
      const Tope target(t, rng() & detail::low_bits(t));
      const Rational expected(decompose(target, cycle).cardinality());
      const DistanceVector z = distance_vector(target, cycle);
      const Autocorrelation a = autocorrelation(z);
      for (const KernelVariant v : kVariants) {
        EXPECT_EQ(cardinality_from_quadratic(z, v), expected) << target.str();
        EXPECT_EQ(cardinality_from_autocorrelation(a, v), expected) << target.str();
        EXPECT_NEAR(cardinality_from_spectrum(z, v),
                    boost::rational_cast<double>(expected), 1e-6)
            << target.str();
      }
    }
  }
  EXPECT_LT(elapsed_seconds(), 30.0);
  report(4, "quadratic, autocorrelation, spectral, and direct cardinalities agree");
}

TEST_F(Acceptance, Criterion5MetricIdentities) {
  std::mt19937_64 rng(1005);
  for (int t = 2; t <= 8; ++t) {
    std::vector<SymmetricCycle> cycles{SymmetricCycle::standard(t)};
    cycles.push_back(SymmetricCycle::from_spec(random_cycle_spec(t, rng)));
    for (const auto& cycle : cycles) {
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << t); ++m) {
        const Tope target(t, m);
        const std::int64_t q = decompose(target, cycle).cardinality();
        const std::int64_t sum = decomposition_distance_sum(target, cycle);
        EXPECT_EQ(2 * sum, (q - 1) * t);
        EXPECT_EQ((2 * sum) % t, 0);
        EXPECT_EQ(q, 1 + (2 * sum) / t);
        if (cycle.index_of(target) >= 0) continue;
        const PairwiseDistanceStats stats = pairwise_distance_stats(target, cycle);
        EXPECT_EQ(4 * stats.pair_sum, (q * q - 1) * t);
        EXPECT_EQ(stats.cardinality_from_pairs, q);
        EXPECT_TRUE(stats.cross_relation_ok);
        EXPECT_EQ(2 * stats.pair_sum, (q + 1) * sum);
      }
    }
  }
  EXPECT_LT(elapsed_seconds(), 60.0);
  report(5, "distance-sum and pairwise-distance identities hold exactly for t<=8");
}

TEST_F(Acceptance, Criterion6GlobalSums) {
  std::mt19937_64 rng(1006);
  for (int t = 2; t <= 16; ++t) {
    std::vector<SymmetricCycle> cycles{SymmetricCycle::standard(t)};
    if (t <= 12) {
      cycles.push_back(SymmetricCycle::from_spec(random_cycle_spec(t, rng)));
    }
    for (const auto& cycle : cycles) {
      const GlobalSums sums = global_sums(cycle);
      EXPECT_TRUE(sums.edge_sum_ok) << "t=" << t;
      EXPECT_TRUE(sums.distance_sum_ok) << "t=" << t;
      EXPECT_EQ(sums.cardinality_sum,
                (std::uint64_t{1} << (t - 1)) * static_cast<std::uint64_t>(t));
      EXPECT_EQ(sums.distance_sum,
                (std::uint64_t{1} << (t - 2)) * static_cast<std::uint64_t>(t - 2) *
                    static_cast<std::uint64_t>(t));
    }
  }
  EXPECT_LT(elapsed_seconds(), 300.0);
  report(6, "whole-graph cardinality and distance sums verified up to t=16");
}

TEST_F(Acceptance, Criterion7StructuralConstants) {
  std::mt19937_64 rng(1007);
  for (int t = 1; t <= 8; ++t) {
    std::vector<SymmetricCycle> cycles{SymmetricCycle::standard(t)};
    for (int i = 0; i < 2; ++i) {
      cycles.push_back(SymmetricCycle::from_spec(random_cycle_spec(t, rng)));
    }
    const std::int64_t expected = std::int64_t{1} << (t - 1);
    for (const auto& cycle : cycles) {
      for (int start = 0; start < 2 * t; ++start) {
        EXPECT_EQ(std::abs(path_matrix_determinant(cycle, start)), expected);
      }
    }
  }
  for (int t = 2; t <= 20; ++t) {
    EXPECT_EQ(intersection_weighted_sum(t), std::int64_t{1} << t);
    if (t >= 3) {
      EXPECT_EQ(intersection_weighted_sum(t), 2 * intersection_weighted_sum(t - 1));
    }
  }
  for (int t = 2; t <= 8; ++t) {
    for (int i = 0; i <= t; ++i) {
      for (int j = 0; j <= t; ++j) {
        EXPECT_EQ(hamming_intersection_number(t, i, j),
                  hamming_intersection_count(t, i, j));
      }
    }
  }
  for (int t = 2; t <= 12; ++t) {
    EXPECT_TRUE(census_symmetry_holds(census(SymmetricCycle::standard(t))));
  }
  report(7, "determinants, doubling sums, intersection numbers, census symmetry");
}

TEST_F(Acceptance, Criterion8WienerKhinchin) {
  std::mt19937_64 rng(1008);
  for (int trial = 0; trial < 500; ++trial) {
    const int t = 1 + static_cast<int>(rng() % 16);
    const SymmetricCycle cycle =
        SymmetricCycle::from_spec(random_cycle_spec(t, rng));
    const Tope target(t, rng() & detail::low_bits(t));
    EXPECT_LE(wiener_khinchin_relative_error(distance_vector(target, cycle)), 1e-6);
  }
  report(8, "autocorrelation spectra match squared magnitudes for 500 vectors");
}

}  // namespace
}  // namespace symcycle
