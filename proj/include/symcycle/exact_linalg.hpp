#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symcycle/cycle.hpp"
#include "symcycle/tope.hpp"

namespace symcycle {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

/// Fraction-free (Bareiss) elimination; exact over the integers.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline std::vector<std::vector<BigInt>> sign_matrix(std::span<const Tope> rows) {
  std::vector<std::vector<BigInt>> m;
  m.reserve(rows.size());
  for (const Tope& r : rows) {
    std::vector<BigInt> row;
    row.reserve(static_cast<std::size_t>(r.dimension()));
    for (int e = 1; e <= r.dimension(); ++e) row.emplace_back(r.sign(e));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace detail

/// Determinant of the t x t matrix whose rows are the t consecutive cycle
/// vertices starting at `start_index`. Exact integer arithmetic; for any
/// symmetric cycle the absolute value equals 2^(t-1).
inline std::int64_t path_matrix_determinant(const SymmetricCycle& cycle,
                                            int start_index) {
  const int t = cycle.dimension();
  std::vector<Tope> rows;
  rows.reserve(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) rows.push_back(cycle.vertex(start_index + i));
  const BigInt det = detail::bareiss_determinant(detail::sign_matrix(rows));
  if (det < std::numeric_limits<std::int64_t>::min() ||
      det > std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("path matrix determinant exceeds 64 bits");
  }
  return static_cast<std::int64_t>(det);
}

/// Rank over the rationals of a set of sign vectors, by exact elimination.
inline int tope_rank(std::span<const Tope> rows) {
  auto m = detail::sign_matrix(rows);
  if (m.empty()) return 0;
  const std::size_t ncols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      for (std::size_t j = c + 1; j < ncols; ++j) {
        m[i][j] = m[i][j] * m[r][c] - m[i][c] * m[r][j];
      }
      m[i][c] = 0;
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace symcycle
