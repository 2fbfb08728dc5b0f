#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "symcycle/tope.hpp"

namespace symcycle {

/// Canonical descriptor of a symmetric cycle: a start vertex plus the order
/// in which coordinates are flipped along the first half of the cycle.
/// Every symmetric cycle of the hypercube graph arises this way.
struct CycleSpec {
  Tope start;
  std::vector<int> flip_order;  // permutation of {1,...,t}

  /// Parses "start=<sign-string>;order=<comma-separated permutation>".
  static CycleSpec parse(std::string_view text);

  std::string str() const {
    std::string out = "start=" + start.str() + ";order=";
    for (std::size_t i = 0; i < flip_order.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(flip_order[i]);
    }
    return out;
  }
};

/// Outcome of validating a vertex sequence; on failure `error` names the
/// first violated invariant and the offending index.
struct CycleCheck {
  bool ok = true;
  std::string error;
};

/// Checks that `seq` is the vertex sequence of a symmetric cycle: length 2t,
/// cyclically consecutive vertices adjacent, antipodal halves, no repeats.
inline CycleCheck validate_cycle(std::span<const Tope> seq) {
  if (seq.empty()) return {false, "empty vertex sequence"};
  const int t = seq[0].dimension();
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (seq[k].dimension() != t) {
      return {false, "mixed dimensions at index " + std::to_string(k)};
    }
  }
  if (seq.size() != static_cast<std::size_t>(2 * t)) {
    return {false, "wrong length: " + std::to_string(seq.size()) +
                       " vertices for dimension " + std::to_string(t)};
  }
  const int n = 2 * t;
  for (int k = 0; k < n; ++k) {
    if (hamming_distance(seq[static_cast<std::size_t>(k)],
                         seq[static_cast<std::size_t>((k + 1) % n)]) != 1) {
      return {false, "consecutive vertices at index " + std::to_string(k) +
                         " are not adjacent"};
    }
  }
  for (int k = 0; k < t; ++k) {
    if (seq[static_cast<std::size_t>(k + t)] != -seq[static_cast<std::size_t>(k)]) {
      return {false, "antipodality violated at k=" + std::to_string(k)};
    }
  }
  std::unordered_set<std::uint64_t> seen;
  for (int k = 0; k < n; ++k) {
    if (!seen.insert(seq[static_cast<std::size_t>(k)].negative_mask()).second) {
      return {false, "duplicate vertex at index " + std::to_string(k)};
    }
  }
  return {};
}

/// A symmetric 2t-cycle in the hypercube graph: consecutive vertices differ
/// in one coordinate and vertex k+t is the antipode of vertex k. Immutable
/// once built; all factories validate.
class SymmetricCycle {
 public:
  static SymmetricCycle standard(int t) {
    detail::check_dimension(t);
    std::vector<int> order(static_cast<std::size_t>(t));
    std::iota(order.begin(), order.end(), 1);
    return from_spec({Tope::all_plus(t), std::move(order)});
  }

  static SymmetricCycle from_spec(const CycleSpec& spec) {
    const int t = spec.start.dimension();
    if (static_cast<int>(spec.flip_order.size()) != t ||
        !is_permutation_of_coordinates(t, spec.flip_order)) {
      throw std::invalid_argument(
          "flip order is not a permutation of 1.." + std::to_string(t));
    }
    std::vector<Tope> verts;
    verts.reserve(static_cast<std::size_t>(2 * t));
    verts.push_back(spec.start);
    // One full pass over the flip order reaches the antipode; the second
    // pass mirrors it back, giving vertex(k+t) == -vertex(k).
    for (int k = 1; k < 2 * t; ++k) {
      verts.push_back(verts.back().flipped(spec.flip_order[static_cast<std::size_t>((k - 1) % t)]));
    }
    return SymmetricCycle(t, std::move(verts));
  }

  static SymmetricCycle from_vertices(std::vector<Tope> verts) {
    const CycleCheck check = validate_cycle(verts);
    if (!check.ok) {
      throw std::invalid_argument("invalid symmetric cycle: " + check.error);
    }
    const int t = verts[0].dimension();
    return SymmetricCycle(t, std::move(verts));
  }

  int dimension() const { return t_; }
  int size() const { return 2 * t_; }

  /// Vertex at position k; any integer is accepted and reduced mod 2t.
  const Tope& vertex(int k) const {
    const int n = 2 * t_;
    int r = k % n;
    if (r < 0) r += n;
    return verts_[static_cast<std::size_t>(r)];
  }

  std::span<const Tope> vertices() const { return verts_; }

  /// Position of x in the vertex sequence, or -1 when x is off the cycle.
  int index_of(const Tope& x) const {
    if (x.dimension() != t_) return -1;
    for (int k = 0; k < 2 * t_; ++k) {
      if (verts_[static_cast<std::size_t>(k)] == x) return k;
    }
    return -1;
  }

  friend bool operator==(const SymmetricCycle&, const SymmetricCycle&) = default;

 private:
  SymmetricCycle(int t, std::vector<Tope> verts)
      : t_(t), verts_(std::move(verts)) {}

  static bool is_permutation_of_coordinates(int t, const std::vector<int>& order) {
    std::uint64_t seen = 0;
    for (int e : order) {
      if (e < 1 || e > t) return false;
      const std::uint64_t bit = std::uint64_t{1} << (e - 1);
      if (seen & bit) return false;
      seen |= bit;
    }
    return seen == detail::low_bits(t);
  }

  int t_;
  std::vector<Tope> verts_;
};

inline SymmetricCycle build_standard_cycle(int t) { return SymmetricCycle::standard(t); }
inline SymmetricCycle build_cycle(const CycleSpec& spec) { return SymmetricCycle::from_spec(spec); }

inline CycleSpec CycleSpec::parse(std::string_view text) {
  constexpr std::string_view kStart = "start=";
  constexpr std::string_view kOrder = ";order=";
  const std::size_t order_at = text.find(kOrder);
  if (!text.starts_with(kStart) || order_at == std::string_view::npos) {
    throw std::invalid_argument(
        "cycle descriptor must look like start=<signs>;order=<permutation>");
  }
  const Tope start = Tope::parse(text.substr(kStart.size(), order_at - kStart.size()));
  std::vector<int> order;
  std::string_view rest = text.substr(order_at + kOrder.size());
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(std::string(item), &used);
      if (used != item.size()) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad flip-order entry '" + std::string(item) + "'");
    }
    order.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
    if (rest.empty()) throw std::invalid_argument("trailing comma in flip order");
  }
  return {start, std::move(order)};
}

/// Uniformly random cycle descriptor: random start vertex, shuffled flips.
inline CycleSpec random_cycle_spec(int t, std::mt19937_64& rng) {
  detail::check_dimension(t);
  const std::uint64_t mask = rng() & detail::low_bits(t);
  std::vector<int> order(static_cast<std::size_t>(t));
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  return {Tope(t, mask), std::move(order)};
}

}  // namespace symcycle
