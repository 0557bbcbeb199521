#include <doctest.h>

#include <stdexcept>

#include "cylat/lattice.hpp"
#include "test_util.hpp"

using namespace cylat;

TEST_CASE("basis vectors and signature") {
  const LatticeVector h = LatticeVector::h();
  CHECK(h == lv(1, {0, 0, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(pairing(h, h) == 1);
  for (int i = 1; i <= 9; ++i) {
    const LatticeVector ei = LatticeVector::e(i);
    CHECK(ei[static_cast<std::size_t>(i)] == 1);
    CHECK(pairing(ei, ei) == -1);
    CHECK(pairing(h, ei) == 0);
    for (int j = i + 1; j <= 9; ++j) CHECK(pairing(ei, LatticeVector::e(j)) == 0);
  }
  CHECK_THROWS_AS(LatticeVector::e(0), std::invalid_argument);
  CHECK_THROWS_AS(LatticeVector::e(10), std::invalid_argument);
}

TEST_CASE("canonical class and fiber degree") {
  const LatticeVector k = canonical_class();
  CHECK(k == lv(-3, {1, 1, 1, 1, 1, 1, 1, 1, 1}));
  CHECK(pairing(k, k) == 0);
  CHECK(degree(k) == 0);
  CHECK(degree(LatticeVector::h()) == 3);
  CHECK(degree(LatticeVector::e(1)) == 1);
}

TEST_CASE("triple sums") {
  CHECK(triple_sum(1) == lv(0, {1, 1, 1, 0, 0, 0, 0, 0, 0}));
  CHECK(triple_sum(2) == lv(0, {0, 0, 0, 1, 1, 1, 0, 0, 0}));
  CHECK(triple_sum(3) == lv(0, {0, 0, 0, 0, 0, 0, 1, 1, 1}));
  CHECK(pairing(triple_sum(1), triple_sum(1)) == -3);
  CHECK(triple_sum(1) + triple_sum(2) + triple_sum(3) ==
        Int(3) * LatticeVector::h() + canonical_class());
  CHECK_THROWS_AS(triple_sum(0), std::invalid_argument);
  CHECK_THROWS_AS(triple_sum(4), std::invalid_argument);
}

TEST_CASE("vector arithmetic") {
  const LatticeVector a = lv(2, {-1, 0, 3, 0, 0, 0, 0, 0, -4});
  const LatticeVector b = lv(-1, {1, 1, 1, 0, 0, 0, 0, 0, 0});
  CHECK(a + b == lv(1, {0, 1, 4, 0, 0, 0, 0, 0, -4}));
  CHECK(a - b == lv(3, {-2, -1, 2, 0, 0, 0, 0, 0, -4}));
  CHECK(-a == lv(-2, {1, 0, -3, 0, 0, 0, 0, 0, 4}));
  CHECK(Int(-2) * a == lv(-4, {2, 0, -6, 0, 0, 0, 0, 0, 8}));
  CHECK(a + LatticeVector{} == a);
  CHECK(pairing(a, b) == -2 + 1 - 3);
}

TEST_CASE("compact form round trip") {
  const LatticeVector v = lv(26, {-5, -5, -5, -8, -8, -8, -11, -11, -11});
  CHECK(v.to_compact() == "26;-5,-5,-5,-8,-8,-8,-11,-11,-11");
  CHECK(LatticeVector::parse_compact(v.to_compact()) == v);
  CHECK(LatticeVector::parse_compact("1;0,0,0,0,0,0,0,0,0") == LatticeVector::h());
  CHECK(LatticeVector::parse_compact(" 1 ; 0,0,0, 0,0,0, 0,0,0 ") == LatticeVector::h());

  // Coordinates beyond any machine-integer range survive the trip.
  const std::string big = "123456789012345678901234567890;0,0,0,0,0,0,0,0,-1";
  CHECK(LatticeVector::parse_compact(big).to_compact() == big);
}

TEST_CASE("compact form rejects malformed input") {
  CHECK_THROWS_AS(LatticeVector::parse_compact(""), std::invalid_argument);
  CHECK_THROWS_AS(LatticeVector::parse_compact("1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(LatticeVector::parse_compact("1;2;3"), std::invalid_argument);
  CHECK_THROWS_AS(LatticeVector::parse_compact("1;0,0,0,0,0,0,0,0"), std::invalid_argument);
  CHECK_THROWS_AS(LatticeVector::parse_compact("1;0,0,0,0,0,0,0,0,0,0"),
                  std::invalid_argument);
  CHECK_THROWS_AS(LatticeVector::parse_compact(";0,0,0,0,0,0,0,0,0"), std::invalid_argument);
  CHECK_THROWS_AS(LatticeVector::parse_compact("1;0,0,x,0,0,0,0,0,0"), std::invalid_argument);
  CHECK_THROWS_AS(LatticeVector::parse_compact("1;0,0,,0,0,0,0,0,0"), std::invalid_argument);
}

TEST_CASE("make_int matches direct construction") {
  CHECK(make_int(0) == 0);
  CHECK(make_int(-5) == Int(-5));
  CHECK(make_int(1'000'000'007) == Int(1'000'000'007));
}
