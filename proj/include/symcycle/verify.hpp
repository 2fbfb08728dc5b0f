#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "symcycle/census.hpp"
#include "symcycle/cycle.hpp"
#include "symcycle/decompose.hpp"
#include "symcycle/exact_linalg.hpp"
#include "symcycle/metrics.hpp"
#include "symcycle/tope.hpp"

namespace symcycle {

/// Everything the identity suite needs to know for one run.
struct VerifyOptions {
  int t = 3;
  std::uint64_t seed = 1;
  int sample_targets = 1000;  // target count when 2^t is too large to sweep
  int random_cycles = 10;
  int oracle_cap = kOracleDimensionCap;
  int enumeration_cap = kEnumerationCap;
  double spectral_tolerance = 1e-6;
};

enum class IdentityStatus { pass, fail, skip };

struct IdentityResult {
  std::string name;
  IdentityStatus status = IdentityStatus::pass;
  std::uint64_t checks = 0;
  std::string detail;
};

namespace detail {

class SuiteBuilder {
 public:
  explicit SuiteBuilder(const VerifyOptions& options)
      : options_(options), rng_(options.seed) {
    cycles_.push_back(SymmetricCycle::standard(options.t));
    for (int i = 0; i < options.random_cycles; ++i) {
      cycles_.push_back(SymmetricCycle::from_spec(random_cycle_spec(options.t, rng_)));
    }
    const int t = options.t;
    if (t <= 12) {
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << t); ++m) {
        targets_.emplace_back(t, m);
      }
    } else {
      for (int i = 0; i < options.sample_targets; ++i) {
        targets_.emplace_back(t, rng_() & low_bits(t));
      }
    }
  }

  std::vector<IdentityResult> run() {
    results_.clear();
    cycle_construction();
    reorientation();
    scalar_product_relation();
    path_determinant();
    distance_vector_shape();
    decompose_reconstructs();
    decompose_matches_exhaustive();
    antipodal_shift();
    maximal_positive_vs_minima();
    summands_independent();
    partition();
    four_formula_agreement();
    wiener_khinchin();
    distance_sum_identity();
    pairwise_distance_identities();
    census_closed_form();
    global_sum_identities();
    intersection_numbers();
    intersection_sum_recursion();
    census_symmetry();
    return results_;
  }

 private:
  using Failure = std::string;

  void record(const std::string& name, std::uint64_t checks, const Failure& failure) {
    results_.push_back({name,
                        failure.empty() ? IdentityStatus::pass : IdentityStatus::fail,
                        checks, failure});
  }

  void skip(const std::string& name, const std::string& reason) {
    results_.push_back({name, IdentityStatus::skip, 0, reason});
  }

  std::span<const Tope> some_targets(std::size_t limit) const {
    return {targets_.data(), std::min(targets_.size(), limit)};
  }

  void cycle_construction() {
    std::uint64_t checks = 0;
    Failure failure;
    for (const auto& cycle : cycles_) {
      const CycleCheck check = validate_cycle(cycle.vertices());
      ++checks;
      if (!check.ok) {
        failure = check.error;
        break;
      }
    }
    record("cycle-construction", checks, failure);
  }

  void reorientation() {
    std::uint64_t checks = 0;
    Failure failure;
    const int t = options_.t;
    for (int i = 0; i < 500 && failure.empty(); ++i) {
      const Tope x(t, rng_() & low_bits(t));
      const Tope y(t, rng_() & low_bits(t));
      const SignSet s(t, rng_() & low_bits(t));
      ++checks;
      if (reorient(reorient(x, s), s) != x ||
          hamming_distance(reorient(x, s), reorient(y, s)) != hamming_distance(x, y)) {
        failure = "reorientation by " + std::to_string(s.mask()) + " misbehaves";
      }
    }
    record("reorient-involution-isometry", checks, failure);
  }

  void scalar_product_relation() {
    std::uint64_t checks = 0;
    Failure failure;
    const int t = options_.t;
    for (std::size_t i = 0; i < targets_.size() && failure.empty(); ++i) {
      const Tope& x = targets_[i];
      const Tope y(t, rng_() & low_bits(t));
      ++checks;
      if (scalar_product(x, y) != t - 2 * hamming_distance(x, y)) {
        failure = "scalar product relation fails for " + x.str() + ", " + y.str();
      }
    }
    record("scalar-product-relation", checks, failure);
  }

  void path_determinant() {
    std::uint64_t checks = 0;
    Failure failure;
    const int t = options_.t;
    const std::int64_t expected = std::int64_t{1} << (t - 1);
    const int step = t <= 16 ? 1 : std::max(1, 2 * t / 16);
    for (const auto& cycle : cycles_) {
      for (int start = 0; start < 2 * t && failure.empty(); start += step) {
        ++checks;
        if (std::abs(path_matrix_determinant(cycle, start)) != expected) {
          failure = "path determinant at start " + std::to_string(start);
        }
      }
      if (!failure.empty()) break;
    }
    record("path-determinant", checks, failure);
  }

  void distance_vector_shape() {
    std::uint64_t checks = 0;
    Failure failure;
    for (const auto& cycle : cycles_) {
      for (const Tope& target : targets_) {
        ++checks;
        if (!distance_vector_invariants_hold(distance_vector(target, cycle))) {
          failure = "distance vector shape broken for " + target.str();
          break;
        }
      }
      if (!failure.empty()) break;
    }
    record("distance-vector-shape", checks, failure);
  }

  void decompose_reconstructs() {
    std::uint64_t checks = 0;
    Failure failure;
    for (const auto& cycle : cycles_) {
      for (const Tope& target : targets_) {
        const Decomposition d = decompose(target, cycle);
        ++checks;
        if (d.cardinality() % 2 == 0 || !reconstructs(d, cycle, target) ||
            !std::is_sorted(d.cycle_indices.begin(), d.cycle_indices.end())) {
          failure = "decomposition of " + target.str() + " is malformed";
          break;
        }
      }
      if (!failure.empty()) break;
    }
    record("decompose-reconstructs-odd", checks, failure);
  }

  void decompose_matches_exhaustive() {
    if (options_.t > options_.oracle_cap) {
      skip("decompose-matches-exhaustive",
           "subset scan capped at t=" + std::to_string(options_.oracle_cap));
      return;
    }
    std::uint64_t checks = 0;
    Failure failure;
    for (const auto& cycle : cycles_) {
      for (const Tope& target : some_targets(256)) {
        ++checks;
        if (decompose(target, cycle) !=
            decompose_exhaustive(target, cycle, options_.oracle_cap)) {
          failure = "exhaustive scan disagrees at " + target.str();
          break;
        }
      }
      if (!failure.empty()) break;
    }
    record("decompose-matches-exhaustive", checks, failure);
  }

  void antipodal_shift() {
    std::uint64_t checks = 0;
    Failure failure;
    const int t = options_.t;
    for (const auto& cycle : cycles_) {
      for (const Tope& target : targets_) {
        const Decomposition d = decompose(target, cycle);
        const Decomposition n = decompose(-target, cycle);
        std::vector<int> shifted;
        shifted.reserve(d.cycle_indices.size());
        for (int k : d.cycle_indices) shifted.push_back((k + t) % (2 * t));
        std::sort(shifted.begin(), shifted.end());
        ++checks;
        if (n.cycle_indices != shifted) {
          failure = "antipodal shift fails at " + target.str();
          break;
        }
      }
      if (!failure.empty()) break;
    }
    record("antipodal-index-shift", checks, failure);
  }

  void maximal_positive_vs_minima() {
    std::uint64_t checks = 0;
    Failure failure;
    for (const auto& cycle : cycles_) {
      for (const Tope& target : some_targets(512)) {
        const SignSet s = negative_part(target);
        std::vector<Tope> reoriented;
        reoriented.reserve(static_cast<std::size_t>(cycle.size()));
        for (int k = 0; k < cycle.size(); ++k) {
          reoriented.push_back(reorient(cycle.vertex(k), s));
        }
        ++checks;
        if (maximal_positive_positions(reoriented) != negative_size_minima(cycle, s)) {
          failure = "selection rules disagree for reorientation " + target.str();
          break;
        }
      }
      if (!failure.empty()) break;
    }
    record("maximal-positive-vs-minima", checks, failure);
  }

  void summands_independent() {
    std::uint64_t checks = 0;
    Failure failure;
    for (const auto& cycle : cycles_) {
      for (const Tope& target : some_targets(128)) {
        const Decomposition d = decompose(target, cycle);
        const std::vector<Tope> members = summands(d, cycle);
        ++checks;
        if (tope_rank(members) != d.cardinality()) {
          failure = "summands of " + target.str() + " are dependent";
          break;
        }
      }
      if (!failure.empty()) break;
    }
    record("summands-linearly-independent", checks, failure);
  }

  void partition() {
    if (options_.t > options_.enumeration_cap) {
      skip("partition", "enumeration capped at t=" + std::to_string(options_.enumeration_cap));
      return;
    }
    std::uint64_t checks = 0;
    Failure failure;
    for (const auto& cycle : cycles_) {
      ++checks;
      if (!partition_check(cycle, options_.enumeration_cap)) {
        failure = "partition fails";
        break;
      }
    }
    record("partition", checks, failure);
  }

  void four_formula_agreement() {
    if (options_.t < 3) {
      skip("four-formula-agreement", "kernel formulas need t >= 3");
      return;
    }
    std::uint64_t checks = 0;
    Failure failure;
    constexpr KernelVariant kVariants[] = {KernelVariant::Q1, KernelVariant::Q2,
                                           KernelVariant::Q3, KernelVariant::Q4};
    for (const auto& cycle : cycles_) {
      for (const Tope& target : some_targets(512)) {
        const Decomposition d = decompose(target, cycle);
        const DistanceVector z = distance_vector(target, cycle);
        const Autocorrelation a = autocorrelation(z);
        const Rational expected(d.cardinality());
        ++checks;
        for (const KernelVariant v : kVariants) {
          if (cardinality_from_quadratic(z, v) != expected ||
              cardinality_from_autocorrelation(a, v) != expected ||
              std::abs(cardinality_from_spectrum(z, v) - d.cardinality()) >
                  options_.spectral_tolerance) {
            failure = "formula disagreement at " + target.str();
            break;
          }
        }
        if (!failure.empty()) break;
      }
      if (!failure.empty()) break;
    }
    record("four-formula-agreement", checks, failure);
  }

  void wiener_khinchin() {
    std::uint64_t checks = 0;
    Failure failure;
    for (std::size_t c = 0; c < std::min<std::size_t>(cycles_.size(), 3); ++c) {
      for (const Tope& target : some_targets(300)) {
        ++checks;
        if (wiener_khinchin_relative_error(distance_vector(target, cycles_[c])) > 1e-6) {
          failure = "autocorrelation spectrum mismatch at " + target.str();
          break;
        }
      }
      if (!failure.empty()) break;
    }
    record("wiener-khinchin", checks, failure);
  }

  void distance_sum_identity() {
    std::uint64_t checks = 0;
    Failure failure;
    const int t = options_.t;
    for (const auto& cycle : cycles_) {
      for (const Tope& target : targets_) {
        const Decomposition d = decompose(target, cycle);
        ++checks;
        if (2 * decomposition_distance_sum(target, cycle) !=
            static_cast<std::int64_t>(d.cardinality() - 1) * t) {
          failure = "distance sum identity fails at " + target.str();
          break;
        }
      }
      if (!failure.empty()) break;
    }
    record("distance-sum-identity", checks, failure);
  }

  void pairwise_distance_identities() {
    if (options_.t < 3) {
      skip("pairwise-distance-identities",
           "every vertex lies on the cycle when t <= 2");
      return;
    }
    std::uint64_t checks = 0;
    Failure failure;
    const int t = options_.t;
    for (const auto& cycle : cycles_) {
      for (const Tope& target : targets_) {
        if (cycle.index_of(target) >= 0) continue;
        const Decomposition d = decompose(target, cycle);
        const std::int64_t q = d.cardinality();
        const PairwiseDistanceStats stats = pairwise_distance_stats(target, cycle);
        ++checks;
        if (4 * stats.pair_sum != (q * q - 1) * t ||
            stats.cardinality_from_pairs != q || !stats.cross_relation_ok) {
          failure = "pairwise identities fail at " + target.str();
          break;
        }
      }
      if (!failure.empty()) break;
    }
    record("pairwise-distance-identities", checks, failure);
  }

  void census_closed_form() {
    if (options_.t > options_.enumeration_cap) {
      skip("census-closed-form",
           "enumeration capped at t=" + std::to_string(options_.enumeration_cap));
      return;
    }
    std::uint64_t checks = 0;
    Failure failure;
    const int t = options_.t;
    const CensusTable closed = gamma_polynomial(t);
    for (const auto& cycle : cycles_) {
      const CensusTable table = census(cycle, options_.enumeration_cap);
      std::uint64_t total = 0, weighted = 0;
      for (const auto& [j, count] : table.counts) {
        total += count;
        weighted += static_cast<std::uint64_t>(j) * count;
      }
      ++checks;
      const bool edge_total_ok =
          t < 2 ||
          weighted == (std::uint64_t{1} << (t - 1)) * static_cast<std::uint64_t>(t);
      if (table != closed || total != (std::uint64_t{1} << t) || !edge_total_ok) {
        failure = "census deviates from closed form";
        break;
      }
    }
    record("census-closed-form", checks, failure);
  }

  void global_sum_identities() {
    if (options_.t < 2) {
      skip("global-sums", "needs t >= 2");
      return;
    }
    if (options_.t > options_.enumeration_cap) {
      skip("global-sums",
           "enumeration capped at t=" + std::to_string(options_.enumeration_cap));
      return;
    }
    std::uint64_t checks = 0;
    Failure failure;
    for (const auto& cycle : cycles_) {
      const GlobalSums sums = global_sums(cycle, options_.enumeration_cap);
      ++checks;
      if (!sums.edge_sum_ok || !sums.distance_sum_ok) {
        failure = "global sums deviate";
        break;
      }
    }
    record("global-sums", checks, failure);
  }

  void intersection_numbers() {
    if (options_.t < 2) {
      skip("intersection-numbers", "needs t >= 2");
      return;
    }
    if (options_.t > 8) {
      skip("intersection-numbers", "brute-force companion capped at t=8");
      return;
    }
    std::uint64_t checks = 0;
    Failure failure;
    const int t = options_.t;
    for (int i = 0; i <= t && failure.empty(); ++i) {
      for (int j = 0; j <= t; ++j) {
        ++checks;
        if (hamming_intersection_number(t, i, j) != hamming_intersection_count(t, i, j)) {
          failure = "intersection number (" + std::to_string(i) + "," +
                    std::to_string(j) + ") deviates from count";
          break;
        }
      }
    }
    record("intersection-numbers", checks, failure);
  }

  void intersection_sum_recursion() {
    if (options_.t < 2) {
      skip("intersection-weighted-sum", "needs t >= 2");
      return;
    }
    std::uint64_t checks = 0;
    Failure failure;
    const int t = options_.t;
    const std::int64_t s = intersection_weighted_sum(t);
    ++checks;
    if (s != (std::int64_t{1} << t)) failure = "sum is not 2^t";
    if (failure.empty() && t >= 3) {
      ++checks;
      if (s != 2 * intersection_weighted_sum(t - 1)) failure = "sum does not double";
    }
    record("intersection-weighted-sum", checks, failure);
  }

  void census_symmetry() {
    if (options_.t < 2) {
      skip("census-symmetry", "needs t >= 2");
      return;
    }
    if (options_.t > options_.enumeration_cap) {
      skip("census-symmetry",
           "enumeration capped at t=" + std::to_string(options_.enumeration_cap));
      return;
    }
    std::uint64_t checks = 0;
    Failure failure;
    ++checks;
    if (!census_symmetry_holds(census(cycles_.front(), options_.enumeration_cap))) {
      failure = "symmetry relations fail on census output";
    }
    record("census-symmetry", checks, failure);
  }

  VerifyOptions options_;
  std::mt19937_64 rng_;
  std::vector<SymmetricCycle> cycles_;
  std::vector<Tope> targets_;
  std::vector<IdentityResult> results_;
};

}  // namespace detail

/// Runs every identity the library promises, at one dimension.
inline std::vector<IdentityResult> run_identity_suite(const VerifyOptions& options) {
  detail::check_dimension(options.t);
  return detail::SuiteBuilder(options).run();
}

}  // namespace symcycle
