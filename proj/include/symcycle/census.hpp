#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "symcycle/cycle.hpp"
#include "symcycle/decompose.hpp"
#include "symcycle/tope.hpp"

namespace symcycle {

/// Counts of vertices by decomposition cardinality: counts[j] is the number
/// of vertices whose decomposition uses exactly j cycle vertices (j odd).
struct CensusTable {
  int t = 0;
  std::map<int, std::uint64_t> counts;

  friend bool operator==(const CensusTable&, const CensusTable&) = default;
};

/// Exact binomial coefficient; out-of-range arguments give 0. Fits 64 bits
/// for every n <= 64.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (n > kMaxDimension) throw std::invalid_argument("binomial: n > 64");
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<std::uint64_t>(c);
}

namespace detail {

/// Streams targets in [lo, hi) by their natural binary encoding, decomposes
/// each via the local-minimum criterion, and hands (cardinality, sum of
/// distances to the selected vertices) to the accumulator.
template <typename Accumulate>
void decomposition_sweep(const SymmetricCycle& cycle, std::uint64_t lo,
                         std::uint64_t hi, Accumulate&& acc) {
  const int t = cycle.dimension();
  const int n = 2 * t;
  std::vector<std::uint64_t> vmask(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    vmask[static_cast<std::size_t>(k)] = cycle.vertex(k).negative_mask();
  }
  std::vector<int> size(static_cast<std::size_t>(n));
  for (std::uint64_t target = lo; target < hi; ++target) {
    for (int k = 0; k < n; ++k) {
      size[static_cast<std::size_t>(k)] =
          std::popcount(vmask[static_cast<std::size_t>(k)] ^ target);
    }
    int cardinality = 0;
    std::int64_t distance_sum = 0;
    for (int k = 0; k < n; ++k) {
      const int here = size[static_cast<std::size_t>(k)];
      if (size[static_cast<std::size_t>((k + n - 1) % n)] == here + 1 &&
          size[static_cast<std::size_t>((k + 1) % n)] == here + 1) {
        ++cardinality;
        distance_sum += here;
      }
    }
    acc(cardinality, distance_sum);
  }
}

inline void check_enumeration_cap(int t, int cap) {
  if (t > cap) {
    throw CapExceeded("full enumeration needs dimension <= " +
                      std::to_string(cap) + ", got " + std::to_string(t));
  }
}

/// Splits [0, 2^t) into per-thread blocks and merges additive tallies.
/// Blocks are disjoint, so the merged result is schedule-independent.
template <typename MakeLocal, typename Work, typename Merge>
void blockwise(int t, MakeLocal make_local, Work work, Merge merge) {
  const std::uint64_t total = std::uint64_t{1} << t;
  unsigned threads = t >= 20 ? std::thread::hardware_concurrency() : 1;
  threads = std::max(1u, std::min({threads, 32u, static_cast<unsigned>(total)}));
  if (threads == 1) {
    auto local = make_local();
    work(std::uint64_t{0}, total, local);
    merge(local);
    return;
  }
  std::vector<decltype(make_local())> locals(threads, make_local());
  std::vector<std::thread> pool;
  const std::uint64_t block = total / threads;
  for (unsigned i = 0; i < threads; ++i) {
    const std::uint64_t lo = i * block;
    const std::uint64_t hi = (i + 1 == threads) ? total : lo + block;
    pool.emplace_back([&, lo, hi, i] { work(lo, hi, locals[i]); });
  }
  for (auto& th : pool) th.join();
  for (auto& local : locals) merge(local);
}

}  // namespace detail

/// Tallies decomposition cardinalities over all 2^t vertices. The result is
/// the same for every symmetric cycle of the dimension: counts[j] = 2*C(t,j).
inline CensusTable census(const SymmetricCycle& cycle,
                          int enumeration_cap = kEnumerationCap) {
  const int t = cycle.dimension();
  detail::check_enumeration_cap(t, enumeration_cap);
  std::vector<std::uint64_t> tallies(static_cast<std::size_t>(t) + 1, 0);
  detail::blockwise(
      t,
      [&] { return std::vector<std::uint64_t>(static_cast<std::size_t>(t) + 1, 0); },
      [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& local) {
        detail::decomposition_sweep(cycle, lo, hi, [&](int q, std::int64_t) {
          ++local[static_cast<std::size_t>(q)];
        });
      },
      [&](const std::vector<std::uint64_t>& local) {
        for (std::size_t j = 0; j < local.size(); ++j) tallies[j] += local[j];
      });
  CensusTable table{t, {}};
  for (int j = 0; j <= t; ++j) {
    if (tallies[static_cast<std::size_t>(j)]) {
      table.counts[j] = tallies[static_cast<std::size_t>(j)];
    }
  }
  return table;
}

/// Closed form of the census: 2*C(t,j) for every odd j, no enumeration.
inline CensusTable gamma_polynomial(int t) {
  detail::check_dimension(t);
  CensusTable table{t, {}};
  for (int j = 1; j <= t; j += 2) table.counts[j] = 2 * binomial(t, j);
  return table;
}

/// Renders a census as a polynomial in x, e.g. "12x + 40x^3 + 12x^5".
inline std::string gamma_text(const CensusTable& table) {
  std::string out;
  for (const auto& [j, count] : table.counts) {
    if (!out.empty()) out += " + ";
    out += std::to_string(count) + "x";
    if (j != 1) out += "^" + std::to_string(j);
  }
  return out;
}

/// Intersection number of the Hamming scheme: the number of vertices at
/// distance i from X and j from Y, for any fixed pair X, Y at distance 2.
/// Closed form C(t-2, (i+j)/2 - 1) * C(2, (i-j)/2 + 1); odd i-j gives 0.
inline std::uint64_t hamming_intersection_number(int t, int i, int j) {
  if (t < 2) throw std::invalid_argument("intersection numbers need t >= 2");
  if (i < 0 || j < 0 || i > t || j > t) return 0;
  if ((i + j) % 2 != 0 || std::abs(i - j) > 2) return 0;
  return binomial(t - 2, (i + j) / 2 - 1) * binomial(2, (i - j) / 2 + 1);
}

/// Brute-force companion of hamming_intersection_number: scans all 2^t
/// vertices against a fixed distance-2 pair.
inline std::uint64_t hamming_intersection_count(int t, int i, int j,
                                                int enumeration_cap = kEnumerationCap) {
  if (t < 2) throw std::invalid_argument("intersection numbers need t >= 2");
  detail::check_enumeration_cap(t, enumeration_cap);
  const std::uint64_t y = 0b11;  // all-plus flipped in coordinates 1 and 2
  std::uint64_t count = 0;
  for (std::uint64_t z = 0; z < (std::uint64_t{1} << t); ++z) {
    if (std::popcount(z) == i && std::popcount(z ^ y) == j) ++count;
  }
  return count;
}

/// The double sum of intersection numbers weighted by i(i-j) around a
/// distance-2 pair; collapses to 2^t and doubles with each dimension.
inline std::int64_t intersection_weighted_sum(int t) {
  if (t < 2) throw std::invalid_argument("intersection sum needs t >= 2");
  __int128 sum = 0;
  for (int i = 1; i <= t; ++i) {
    for (const int j : {i - 2, i + 2}) {
      if (j < 0 || j > t) continue;
      sum += static_cast<__int128>(binomial(t - 2, (i + j) / 2 - 1)) *
             static_cast<__int128>(i) * static_cast<__int128>(i - j);
    }
  }
  if (sum < 0 || sum > static_cast<__int128>(std::numeric_limits<std::int64_t>::max())) {
    throw std::overflow_error("intersection sum exceeds 64 bits");
  }
  return static_cast<std::int64_t>(sum);
}

/// Whole-graph sums over every vertex's decomposition, by full enumeration.
struct GlobalSums {
  std::uint64_t cardinality_sum = 0;  // sum of |Q| over all vertices
  std::uint64_t distance_sum = 0;     // sum of d(T, Q) over all vertices and members
  bool edge_sum_ok = false;           // cardinality_sum == 2^(t-1) * t
  bool distance_sum_ok = false;       // distance_sum == 2^(t-2) * (t-2) * t
};

inline GlobalSums global_sums(const SymmetricCycle& cycle,
                              int enumeration_cap = kEnumerationCap) {
  const int t = cycle.dimension();
  if (t < 2) {
    throw std::invalid_argument("global sums need t >= 2 (the degenerate "
                                "2-cycle has no distance-2 pairs)");
  }
  detail::check_enumeration_cap(t, enumeration_cap);
  GlobalSums sums;
  struct Local {
    std::uint64_t q = 0;
    std::uint64_t d = 0;
  };
  detail::blockwise(
      t, [] { return Local{}; },
      [&](std::uint64_t lo, std::uint64_t hi, Local& local) {
        detail::decomposition_sweep(cycle, lo, hi, [&](int q, std::int64_t d) {
          local.q += static_cast<std::uint64_t>(q);
          local.d += static_cast<std::uint64_t>(d);
        });
      },
      [&](const Local& local) {
        sums.cardinality_sum += local.q;
        sums.distance_sum += local.d;
      });
  sums.edge_sum_ok =
      sums.cardinality_sum == (std::uint64_t{1} << (t - 1)) * static_cast<std::uint64_t>(t);
  sums.distance_sum_ok =
      sums.distance_sum == (std::uint64_t{1} << (t - 2)) *
                               static_cast<std::uint64_t>(t - 2) *
                               static_cast<std::uint64_t>(t);
  return sums;
}

/// Symmetry of the census counts: for even t, c_j == c_(t-j); for odd t,
/// j*c_j == (1+t-j)*c_(1+t-j). Evaluated on the supplied table, not on the
/// closed form.
inline bool census_symmetry_holds(const CensusTable& table) {
  const int t = table.t;
  if (t < 2) throw std::invalid_argument("symmetry relations need t >= 2");
  const auto c = [&](int j) -> std::uint64_t {
    const auto it = table.counts.find(j);
    return it == table.counts.end() ? 0 : it->second;
  };
  if (t % 2 == 0) {
    for (int j = 1; j < t; j += 2) {
      if (c(j) != c(t - j)) return false;
    }
  } else {
    for (int j = 1; j <= t; j += 2) {
      if (static_cast<std::uint64_t>(j) * c(j) !=
          static_cast<std::uint64_t>(1 + t - j) * c(1 + t - j)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace symcycle
