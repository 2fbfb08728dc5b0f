#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "symcycle/cycle.hpp"
#include "symcycle/tope.hpp"

namespace symcycle {

/// The exhaustive subset scan visits 2^(2t) subsets; keep it at desk scale.
inline constexpr int kOracleDimensionCap = 10;

/// Full sweeps over all 2^t vertices are allowed up to this dimension.
inline constexpr int kEnumerationCap = 24;

/// The unique inclusion-minimal set of cycle vertices summing to a target
/// vertex, recorded as ascending positions into the cycle. Always of odd
/// cardinality.
struct Decomposition {
  int t = 0;
  std::vector<int> cycle_indices;

  int cardinality() const { return static_cast<int>(cycle_indices.size()); }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Positions of all sequence members whose positive part (the complement of
/// the negative part) is inclusion-maximal within the sequence. Members with
/// equal maximal positive parts are all reported.
inline std::vector<int> maximal_positive_positions(std::span<const Tope> seq) {
  if (seq.empty()) {
    throw std::invalid_argument("maximal_positive_positions: empty sequence");
  }
  const int t = seq[0].dimension();
  const std::uint64_t full = detail::low_bits(t);
  std::vector<std::uint64_t> pos(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    detail::check_same_dimension(seq[i].dimension(), t);
    pos[i] = ~seq[i].negative_mask() & full;
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < seq.size() && !dominated; ++j) {
      dominated = pos[i] != pos[j] && (pos[i] & pos[j]) == pos[i];
    }
    if (!dominated) out.push_back(static_cast<int>(i));
  }
  return out;
}

/// Positions k of the cycle, after reorientation on `s`, whose two cyclic
/// neighbours both carry exactly one more negative coordinate. The walk of
/// negative-part sizes along the cycle changes by +-1 per step, so these are
/// its strict local minima; they coincide with the inclusion-maximal
/// positive parts of the reoriented sequence.
inline std::vector<int> negative_size_minima(const SymmetricCycle& cycle,
                                             const SignSet& s) {
  detail::check_same_dimension(cycle.dimension(), s.dimension());
  const int n = cycle.size();
  std::vector<int> size(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    size[static_cast<std::size_t>(k)] =
        std::popcount(cycle.vertex(k).negative_mask() ^ s.mask());
  }
  std::vector<int> out;
  for (int k = 0; k < n; ++k) {
    const int here = size[static_cast<std::size_t>(k)];
    if (size[static_cast<std::size_t>((k + n - 1) % n)] == here + 1 &&
        size[static_cast<std::size_t>((k + 1) % n)] == here + 1) {
      out.push_back(k);
    }
  }
  return out;
}

/// Decomposes `target` over the cycle's vertex sequence: reorient on the
/// target's negative part, keep the positions with inclusion-maximal
/// positive parts, and read the original vertices back off at those
/// positions (reorientation is coordinatewise, so positions are preserved).
inline Decomposition decompose(const Tope& target, const SymmetricCycle& cycle) {
  detail::check_same_dimension(target.dimension(), cycle.dimension());
  return {cycle.dimension(), negative_size_minima(cycle, negative_part(target))};
}

/// The selected cycle vertices themselves.
inline std::vector<Tope> summands(const Decomposition& d, const SymmetricCycle& cycle) {
  std::vector<Tope> out;
  out.reserve(d.cycle_indices.size());
  for (int k : d.cycle_indices) out.push_back(cycle.vertex(k));
  return out;
}

/// Coordinatewise integer sum of the selected vertices.
inline std::vector<int> summand_coordinate_sums(const Decomposition& d,
                                                const SymmetricCycle& cycle) {
  std::vector<int> sums(static_cast<std::size_t>(cycle.dimension()), 0);
  for (int k : d.cycle_indices) {
    const Tope& v = cycle.vertex(k);
    for (int e = 1; e <= cycle.dimension(); ++e) {
      sums[static_cast<std::size_t>(e - 1)] += v.sign(e);
    }
  }
  return sums;
}

/// True iff the selected vertices sum, coordinate by coordinate, to `target`.
inline bool reconstructs(const Decomposition& d, const SymmetricCycle& cycle,
                         const Tope& target) {
  if (target.dimension() != cycle.dimension()) return false;
  const std::vector<int> sums = summand_coordinate_sums(d, cycle);
  for (int e = 1; e <= cycle.dimension(); ++e) {
    if (sums[static_cast<std::size_t>(e - 1)] != target.sign(e)) return false;
  }
  return true;
}

/// Independent check path: scans every subset of cycle positions, collects
/// those whose vertex sum equals `target`, verifies that exactly one of them
/// is inclusion-minimal, and returns the minimum-cardinality one. A
/// uniqueness violation is a hard failure, not an input error.
inline Decomposition decompose_exhaustive(const Tope& target,
                                          const SymmetricCycle& cycle,
                                          int dimension_cap = kOracleDimensionCap) {
  detail::check_same_dimension(target.dimension(), cycle.dimension());
  const int t = cycle.dimension();
  if (t > dimension_cap) {
    throw CapExceeded("subset scan needs dimension <= " +
                      std::to_string(dimension_cap) + ", got " + std::to_string(t));
  }
  const int n = 2 * t;

  // neg_col[e]: cycle positions whose vertex carries -1 at coordinate e+1.
  std::vector<std::uint32_t> neg_col(static_cast<std::size_t>(t), 0);
  for (int k = 0; k < n; ++k) {
    const std::uint64_t mask = cycle.vertex(k).negative_mask();
    for (int e = 0; e < t; ++e) {
      if ((mask >> e) & 1u) neg_col[static_cast<std::size_t>(e)] |= std::uint32_t{1} << k;
    }
  }

  std::vector<std::uint32_t> summing;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t sub = 0; sub < limit; ++sub) {
    const int members = std::popcount(sub);
    bool ok = true;
    for (int e = 0; e < t && ok; ++e) {
      const int coordinate_sum =
          members - 2 * std::popcount(sub & neg_col[static_cast<std::size_t>(e)]);
      ok = coordinate_sum == target.sign(e + 1);
    }
    if (ok) summing.push_back(sub);
  }
  if (summing.empty()) {
    throw std::logic_error("no subset of cycle vertices sums to " + target.str());
  }

  std::sort(summing.begin(), summing.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  int minimal_count = 0;
  std::uint32_t minimal = 0;
  for (const std::uint32_t a : summing) {
    bool has_proper_subset = false;
    for (const std::uint32_t b : summing) {
      if (b != a && (a & b) == b) {
        has_proper_subset = true;
        break;
      }
    }
    if (!has_proper_subset) {
      ++minimal_count;
      minimal = a;
    }
  }
  if (minimal_count != 1 || minimal != summing.front()) {
    throw std::logic_error("decomposition of " + target.str() +
                           " is not unique: " + std::to_string(minimal_count) +
                           " inclusion-minimal summing subsets");
  }

  Decomposition out{t, {}};
  for (std::uint32_t m = minimal; m; m &= m - 1) {
    out.cycle_indices.push_back(std::countr_zero(m));
  }
  return out;
}

/// Verifies that the singleton sums of the decompositions partition the
/// whole vertex set: every vertex is reconstructed by its own decomposition
/// and no two vertices share an index set.
inline bool partition_check(const SymmetricCycle& cycle,
                            int enumeration_cap = kEnumerationCap) {
  const int t = cycle.dimension();
  if (t > enumeration_cap) {
    throw CapExceeded("partition check needs dimension <= " +
                      std::to_string(enumeration_cap) + ", got " + std::to_string(t));
  }
  const int n = 2 * t;

  std::vector<std::uint64_t> vmask(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) vmask[static_cast<std::size_t>(k)] = cycle.vertex(k).negative_mask();
  std::vector<std::uint64_t> neg_col(static_cast<std::size_t>(t), 0);
  for (int k = 0; k < n; ++k) {
    for (int e = 0; e < t; ++e) {
      if ((vmask[static_cast<std::size_t>(k)] >> e) & 1u) {
        neg_col[static_cast<std::size_t>(e)] |= std::uint64_t{1} << k;
      }
    }
  }

  std::vector<std::uint64_t> index_sets;
  index_sets.reserve(std::size_t{1} << t);
  std::vector<int> size(static_cast<std::size_t>(n));
  for (std::uint64_t target = 0; target < (std::uint64_t{1} << t); ++target) {
    for (int k = 0; k < n; ++k) {
      size[static_cast<std::size_t>(k)] =
          std::popcount(vmask[static_cast<std::size_t>(k)] ^ target);
    }
    std::uint64_t selected = 0;
    for (int k = 0; k < n; ++k) {
      const int here = size[static_cast<std::size_t>(k)];
      if (size[static_cast<std::size_t>((k + n - 1) % n)] == here + 1 &&
          size[static_cast<std::size_t>((k + 1) % n)] == here + 1) {
        selected |= std::uint64_t{1} << k;
      }
    }
    const int members = std::popcount(selected);
    for (int e = 0; e < t; ++e) {
      const int want = ((target >> e) & 1u) ? -1 : +1;
      if (members - 2 * std::popcount(selected & neg_col[static_cast<std::size_t>(e)]) != want) {
        return false;
      }
    }
    index_sets.push_back(selected);
  }
  std::sort(index_sets.begin(), index_sets.end());
  return std::adjacent_find(index_sets.begin(), index_sets.end()) == index_sets.end();
}

}  // namespace symcycle
