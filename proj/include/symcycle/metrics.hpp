#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "symcycle/cycle.hpp"
#include "symcycle/decompose.hpp"
#include "symcycle/tope.hpp"

namespace symcycle {

/// Exact value with a small power-of-two denominator.
using Rational = boost::rational<std::int64_t>;

/// Hamming distances from a fixed vertex to every cycle vertex, in cycle
/// order. Consecutive entries differ by exactly 1 and entries half a turn
/// apart sum to t.
struct DistanceVector {
  int t = 0;
  std::vector<int> entries;
};

/// Cyclic autocorrelation of a distance vector; palindromic past index 0.
struct Autocorrelation {
  int t = 0;
  std::vector<std::int64_t> entries;
};

/// Forward unnormalized DFT of a length-2t real vector.
struct Spectrum {
  int t = 0;
  std::vector<std::complex<double>> entries;
};

/// The four circulant kernels whose quadratic forms in the distance vector
/// recover the decomposition cardinality.
enum class KernelVariant { Q1, Q2, Q3, Q4 };

/// First row of the circulant attached to a kernel variant.
struct KernelVector {
  KernelVariant variant;
  std::vector<std::int64_t> entries;
};

namespace detail {

inline void check_kernel_dimension(int t) {
  // Rows carry nonzeros at offsets {0,1,2,2t-2,2t-1}; below t=3 those
  // offsets collide and the printed kernels stop making sense.
  if (t < 3) {
    throw std::invalid_argument(
        "kernel formulas need dimension >= 3 (offsets collide at t=" +
        std::to_string(t) + "); use decompose directly");
  }
}

inline std::vector<std::int64_t> kernel_entries(KernelVariant v, int t) {
  check_kernel_dimension(t);
  const std::size_t n = static_cast<std::size_t>(2 * t);
  std::vector<std::int64_t> b(n, 0);
  switch (v) {
    case KernelVariant::Q1:  // 2I - C^-2 - C^2
      b[0] = 2; b[2] = -1; b[n - 2] = -1;
      break;
    case KernelVariant::Q2:  // 6I - 4C^-1 - 4C + C^-2 + C^2
      b[0] = 6; b[1] = -4; b[2] = 1; b[n - 2] = 1; b[n - 1] = -4;
      break;
    case KernelVariant::Q3:  // 2I - 2C^-1 - 2C + C^-2 + C^2
      b[0] = 2; b[1] = -2; b[2] = 1; b[n - 2] = 1; b[n - 1] = -2;
      break;
    case KernelVariant::Q4:  // companion row of C^-1 + C - C^-2 - C^2
      b[1] = -1; b[2] = 1; b[n - 2] = 1; b[n - 1] = -1;
      break;
  }
  return b;
}

/// z * B * z^T for the circulant B whose first row is `row`.
inline std::int64_t circulant_quadratic_form(const std::vector<int>& z,
                                             const std::vector<std::int64_t>& row) {
  const std::size_t n = z.size();
  std::int64_t total = 0;
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] == 0) continue;
      total += static_cast<std::int64_t>(z[m]) * row[j] *
               static_cast<std::int64_t>(z[(m + j) % n]);
    }
  }
  return total;
}

}  // namespace detail

inline KernelVector kernel_vector(KernelVariant v, int t) {
  return {v, detail::kernel_entries(v, t)};
}

inline DistanceVector distance_vector(const Tope& target, const SymmetricCycle& cycle) {
  detail::check_same_dimension(target.dimension(), cycle.dimension());
  DistanceVector z{cycle.dimension(), {}};
  z.entries.reserve(static_cast<std::size_t>(cycle.size()));
  for (int k = 0; k < cycle.size(); ++k) {
    z.entries.push_back(hamming_distance(target, cycle.vertex(k)));
  }
  return z;
}

/// True when the entries could have come from a vertex and a symmetric
/// cycle: bounded by t, antipodal halves summing to t, unit steps.
inline bool distance_vector_invariants_hold(const DistanceVector& z) {
  const int t = z.t;
  const int n = 2 * t;
  if (static_cast<int>(z.entries.size()) != n) return false;
  for (int k = 0; k < n; ++k) {
    const int v = z.entries[static_cast<std::size_t>(k)];
    if (v < 0 || v > t) return false;
    if (v + z.entries[static_cast<std::size_t>((k + t) % n)] != t) return false;
    if (std::abs(v - z.entries[static_cast<std::size_t>((k + 1) % n)]) != 1) return false;
  }
  return true;
}

inline Autocorrelation autocorrelation(const DistanceVector& z) {
  const std::size_t n = z.entries.size();
  Autocorrelation a{z.t, std::vector<std::int64_t>(n, 0)};
  for (std::size_t m = 0; m < n; ++m) {
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < n; ++k) {
      sum += static_cast<std::int64_t>(z.entries[k]) *
             static_cast<std::int64_t>(z.entries[(k + m) % n]);
    }
    a.entries[m] = sum;
  }
  return a;
}

/// Direct O(n^2) forward DFT; the supported lengths never justify an FFT.
inline Spectrum dft_forward(std::span<const double> v, int t) {
  const std::size_t n = v.size();
  Spectrum s{t, std::vector<std::complex<double>>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> sum = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(k * m) /
                           static_cast<double>(n);
      sum += v[m] * std::polar(1.0, angle);
    }
    s.entries[k] = sum;
  }
  return s;
}

inline Spectrum dft_forward(const DistanceVector& z) {
  std::vector<double> v(z.entries.begin(), z.entries.end());
  return dft_forward(v, z.t);
}

inline Spectrum dft_forward(const Autocorrelation& a) {
  std::vector<double> v(a.entries.begin(), a.entries.end());
  return dft_forward(v, a.t);
}

/// Largest entrywise deviation between the DFT of the autocorrelation and
/// the squared-magnitude spectrum, scaled by the spectrum's largest square.
inline double wiener_khinchin_relative_error(const DistanceVector& z) {
  const Spectrum zs = dft_forward(z);
  const Spectrum as = dft_forward(autocorrelation(z));
  double scale = 1.0;
  for (const auto& c : zs.entries) scale = std::max(scale, std::norm(c));
  double worst = 0.0;
  for (std::size_t k = 0; k < zs.entries.size(); ++k) {
    worst = std::max(worst, std::abs(as.entries[k].real() - std::norm(zs.entries[k])));
    worst = std::max(worst, std::abs(as.entries[k].imag()));
  }
  return worst / scale;
}

/// Decomposition cardinality as an exact circulant quadratic form in the
/// distance vector. Arbitrary integer entries are accepted (handy in tests);
/// for genuine distance vectors the value is a nonnegative odd integer.
inline Rational cardinality_from_quadratic(const DistanceVector& z, KernelVariant v) {
  const int t = z.t;
  detail::check_kernel_dimension(t);
  std::vector<std::int64_t> row = detail::kernel_entries(v, t);
  if (v == KernelVariant::Q4) {
    // The matrix form carries a leading minus and its circulant's first row
    // is the negation of the printed kernel row.
    for (auto& x : row) x = -x;
  }
  const std::int64_t qf = detail::circulant_quadratic_form(z.entries, row);
  switch (v) {
    case KernelVariant::Q1: return Rational(t) - Rational(qf, 8);
    case KernelVariant::Q2: return Rational(qf, 8);
    case KernelVariant::Q3: return Rational(t, 2) + Rational(qf, 8);
    case KernelVariant::Q4: return Rational(3 * t, 4) - Rational(qf, 8);
  }
  throw std::logic_error("unreachable kernel variant");
}

/// Decomposition cardinality from the first three autocorrelation values.
inline Rational cardinality_from_autocorrelation(const Autocorrelation& a, KernelVariant v) {
  const int t = a.t;
  detail::check_kernel_dimension(t);
  if (a.entries.size() < 3) {
    throw std::invalid_argument("autocorrelation needs at least 3 entries");
  }
  const std::int64_t a0 = a.entries[0], a1 = a.entries[1], a2 = a.entries[2];
  switch (v) {
    case KernelVariant::Q1: return Rational(t) - Rational(a0 - a2, 4);
    case KernelVariant::Q2: return Rational(3 * a0 - 4 * a1 + a2, 4);
    case KernelVariant::Q3: return Rational(t, 2) + Rational(a0 - 2 * a1 + a2, 4);
    case KernelVariant::Q4: return Rational(3 * t, 4) + Rational(a2 - a1, 4);
  }
  throw std::logic_error("unreachable kernel variant");
}

/// Decomposition cardinality from the power spectrum with the trigonometric
/// weights; the single floating-point route among the four.
inline double cardinality_from_spectrum(const DistanceVector& z, KernelVariant v) {
  const int t = z.t;
  detail::check_kernel_dimension(t);
  const Spectrum s = dft_forward(z);
  double weighted = 0.0;
  for (std::size_t k = 0; k < s.entries.size(); ++k) {
    const double power = std::norm(s.entries[k]);
    const double theta = std::numbers::pi * static_cast<double>(k) / static_cast<double>(t);
    const double c = std::cos(theta);
    double w = 0.0;
    switch (v) {
      case KernelVariant::Q1: { const double sn = std::sin(theta); w = sn * sn; break; }
      case KernelVariant::Q2: w = c * c - 2.0 * c + 1.0; break;
      case KernelVariant::Q3: w = c * c - c; break;
      case KernelVariant::Q4: w = 2.0 * c * c - c - 1.0; break;
    }
    weighted += power * w;
  }
  switch (v) {
    case KernelVariant::Q1: return t - weighted / (4.0 * t);
    case KernelVariant::Q2: return weighted / (4.0 * t);
    case KernelVariant::Q3: return t / 2.0 + weighted / (4.0 * t);
    case KernelVariant::Q4: return 3.0 * t / 4.0 + weighted / (8.0 * t);
  }
  throw std::logic_error("unreachable kernel variant");
}

/// Sum of distances from `target` to its own decomposition members. Equals
/// (|Q|-1)t/2, equivalently |Q| = 1 + (2/t) * sum; both checked here.
inline std::int64_t decomposition_distance_sum(const Tope& target,
                                               const SymmetricCycle& cycle) {
  const Decomposition d = decompose(target, cycle);
  const int t = cycle.dimension();
  std::int64_t sum = 0;
  for (int k : d.cycle_indices) sum += hamming_distance(target, cycle.vertex(k));
  const std::int64_t q = d.cardinality();
  if (2 * sum != (q - 1) * static_cast<std::int64_t>(t) ||
      (2 * sum) % t != 0 || q != 1 + (2 * sum) / t) {
    throw std::logic_error("distance-sum identity violated at " + target.str());
  }
  return sum;
}

/// Pairwise-distance statistics of a decomposition; defined only for
/// vertices off the cycle.
struct PairwiseDistanceStats {
  std::int64_t pair_sum = 0;        // sum of distances over unordered pairs
  int cardinality_from_pairs = 0;   // sqrt(1 + 4*pair_sum/t), exact
  bool cross_relation_ok = false;   // pair_sum == (|Q|+1)/2 * sum d(T, Q)
};

inline PairwiseDistanceStats pairwise_distance_stats(const Tope& target,
                                                     const SymmetricCycle& cycle) {
  detail::check_same_dimension(target.dimension(), cycle.dimension());
  if (cycle.index_of(target) >= 0) {
    throw std::invalid_argument(
        "target " + target.str() +
        " lies on the cycle; the pairwise identities require a vertex "
        "outside the cycle's vertex sequence");
  }
  const Decomposition d = decompose(target, cycle);
  const std::vector<Tope> members = summands(d, cycle);
  const int t = cycle.dimension();

  PairwiseDistanceStats stats;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      stats.pair_sum += hamming_distance(members[i], members[j]);
    }
  }

  const std::int64_t scaled = 1 + 4 * stats.pair_sum / t;
  if ((4 * stats.pair_sum) % t != 0) {
    throw std::logic_error("pair-sum identity violated at " + target.str());
  }
  const auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(scaled))));
  if (root * root != scaled) {
    throw std::logic_error("pair-sum square root is not integral at " + target.str());
  }
  stats.cardinality_from_pairs = static_cast<int>(root);

  std::int64_t distance_sum = 0;
  for (const Tope& q : members) distance_sum += hamming_distance(target, q);
  stats.cross_relation_ok =
      2 * stats.pair_sum == (d.cardinality() + 1) * distance_sum;
  return stats;
}

}  // namespace symcycle
