#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symcycle {

/// Largest supported dimension; a sign vector lives in one 64-bit mask.
inline constexpr int kMaxDimension = 64;

/// Raised when a request would exceed an enumeration or search cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

constexpr std::uint64_t low_bits(int t) {
  return t >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1;
}

inline void check_dimension(int t) {
  if (t < 1 || t > kMaxDimension) {
    throw std::invalid_argument("dimension must be in 1.." +
                                std::to_string(kMaxDimension) + ", got " +
                                std::to_string(t));
  }
}

inline void check_same_dimension(int a, int b) {
  if (a != b) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a) +
                                " vs " + std::to_string(b));
  }
}

inline void check_coordinate(int t, int e) {
  if (e < 1 || e > t) {
    throw std::invalid_argument("coordinate " + std::to_string(e) +
                                " outside 1.." + std::to_string(t));
  }
}

}  // namespace detail

/// Subset of the coordinate set {1,...,t}, stored as a bit mask
/// (bit e-1 holds coordinate e).
class SignSet {
 public:
  SignSet(int t, std::uint64_t mask) : t_(t), mask_(mask) {
    detail::check_dimension(t);
    if (mask & ~detail::low_bits(t)) {
      throw std::invalid_argument("SignSet mask has bits above the dimension");
    }
  }

  static SignSet empty_set(int t) { return SignSet(t, 0); }
  static SignSet full_set(int t) { return SignSet(t, detail::low_bits(t)); }

  static SignSet of(int t, const std::vector<int>& members) {
    std::uint64_t mask = 0;
    for (int e : members) {
      detail::check_coordinate(t, e);
      mask |= std::uint64_t{1} << (e - 1);
    }
    return SignSet(t, mask);
  }

  int dimension() const { return t_; }
  std::uint64_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }

  bool contains(int e) const {
    detail::check_coordinate(t_, e);
    return (mask_ >> (e - 1)) & 1u;
  }

  SignSet complement() const {
    return SignSet(t_, ~mask_ & detail::low_bits(t_));
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = mask_; m; m &= m - 1) {
      out.push_back(std::countr_zero(m) + 1);
    }
    return out;
  }

  friend bool operator==(const SignSet&, const SignSet&) = default;

 private:
  int t_;
  std::uint64_t mask_;
};

/// A vertex of the hypercube graph: a sign vector in {+1,-1}^t.
/// Bit e-1 of the mask is set exactly when coordinate e equals -1, so the
/// all-plus vertex has mask 0 and Hamming distances reduce to popcounts.
class Tope {
 public:
  Tope(int t, std::uint64_t negative_mask) : t_(t), mask_(negative_mask) {
    detail::check_dimension(t);
    if (negative_mask & ~detail::low_bits(t)) {
      throw std::invalid_argument("Tope mask has bits above the dimension");
    }
  }

  static Tope all_plus(int t) { return Tope(t, 0); }
  static Tope all_minus(int t) { return Tope(t, detail::low_bits(t)); }

  /// Parses a sign string such as "+-+"; position e (1-based) is coordinate e.
  static Tope parse(std::string_view text) {
    const int t = static_cast<int>(text.size());
    detail::check_dimension(t);
    std::uint64_t mask = 0;
    for (int e = 1; e <= t; ++e) {
      const char c = text[static_cast<std::size_t>(e - 1)];
      if (c == '-') {
        mask |= std::uint64_t{1} << (e - 1);
      } else if (c != '+') {
        throw std::invalid_argument("sign string may contain only '+'/'-', got '" +
                                    std::string(1, c) + "' at position " +
                                    std::to_string(e));
      }
    }
    return Tope(t, mask);
  }

  int dimension() const { return t_; }
  std::uint64_t negative_mask() const { return mask_; }

  /// Sign of coordinate e (1-based): +1 or -1.
  int sign(int e) const {
    detail::check_coordinate(t_, e);
    return ((mask_ >> (e - 1)) & 1u) ? -1 : +1;
  }

  /// Copy with coordinate e negated.
  Tope flipped(int e) const {
    detail::check_coordinate(t_, e);
    return Tope(t_, mask_ ^ (std::uint64_t{1} << (e - 1)));
  }

  /// The antipode -x.
  Tope operator-() const {
    return Tope(t_, ~mask_ & detail::low_bits(t_));
  }

  std::string str() const {
    std::string out(static_cast<std::size_t>(t_), '+');
    for (int e = 1; e <= t_; ++e) {
      if ((mask_ >> (e - 1)) & 1u) out[static_cast<std::size_t>(e - 1)] = '-';
    }
    return out;
  }

  friend bool operator==(const Tope&, const Tope&) = default;

 private:
  int t_;
  std::uint64_t mask_;
};

/// Coordinates where the vertex carries -1.
inline SignSet negative_part(const Tope& x) {
  return SignSet(x.dimension(), x.negative_mask());
}

/// Negates the coordinates listed in s. Involution, and an isometry of the
/// Hamming metric.
inline Tope reorient(const Tope& x, const SignSet& s) {
  detail::check_same_dimension(x.dimension(), s.dimension());
  return Tope(x.dimension(), x.negative_mask() ^ s.mask());
}

/// Number of coordinates where x and y disagree.
inline int hamming_distance(const Tope& x, const Tope& y) {
  detail::check_same_dimension(x.dimension(), y.dimension());
  return std::popcount(x.negative_mask() ^ y.negative_mask());
}

/// Standard scalar product; equals t - 2*hamming_distance(x, y).
inline int scalar_product(const Tope& x, const Tope& y) {
  detail::check_same_dimension(x.dimension(), y.dimension());
  return x.dimension() - 2 * hamming_distance(x, y);
}

}  // namespace symcycle
