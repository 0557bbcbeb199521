#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cylat {

// Exact arbitrary-precision integer.
using Int = mpz_class;

// mpz_class constructors stop at long; funnel machine integers here.
inline Int make_int(long long v) {
  return Int(static_cast<long>(v));
}

// Element of the unimodular lattice Z^{1,9} in the fixed basis
// (h, e1, ..., e9).  Values are immutable: every operation returns a
// fresh vector, coordinates are exact integers of unbounded size.
class LatticeVector {
 public:
  static constexpr std::size_t kRank = 10;

  // Zero vector.
  LatticeVector() = default;

  explicit LatticeVector(std::array<Int, kRank> coords) : c_(std::move(coords)) {}

  // Hyperplane class h = (1; 0, ..., 0).
  static LatticeVector h();

  // Exceptional class e_i, 1 <= i <= 9.
  static LatticeVector e(int i);

  // Coordinate access; index 0 is the h-component, 1..9 the e-components.
  const Int& operator[](std::size_t idx) const { return c_[idx]; }

  const std::array<Int, kRank>& coords() const { return c_; }

  bool operator==(const LatticeVector&) const = default;

  LatticeVector operator+(const LatticeVector& o) const;
  LatticeVector operator-(const LatticeVector& o) const;
  LatticeVector operator-() const;
  friend LatticeVector operator*(const Int& s, const LatticeVector& v);

  // Compact text form "a;b1,b2,...,b9".
  std::string to_compact() const;
  static LatticeVector parse_compact(std::string_view text);

 private:
  std::array<Int, kRank> c_{};
};

// Bilinear form of signature (1,9):
// (a; b1..b9) . (a'; b1'..b9') = a*a' - sum_i b_i*b_i'.
Int pairing(const LatticeVector& x, const LatticeVector& y);

// Canonical class k = (-3; 1, ..., 1); -k is the fiber class.
LatticeVector canonical_class();

// f_i = e_{3i-2} + e_{3i-1} + e_{3i} for i in {1, 2, 3}.
LatticeVector triple_sum(int i);

// Anticanonical degree x . (-k).
Int degree(const LatticeVector& x);

}  // namespace cylat
