#include <doctest.h>

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "cylat/curves.hpp"
#include "brute_oracle.hpp"
#include "test_util.hpp"

using namespace cylat;

namespace {

std::array<long long, 10> as_tuple(const CurveClass& c) {
  std::array<long long, 10> t;
  t[0] = c.alpha().get_si();
  for (int i = 1; i <= 9; ++i) t[static_cast<std::size_t>(i)] = c.beta(i).get_si();
  return t;
}

}  // namespace

TEST_CASE("classification") {
  const CurveClass e1 = CurveClass::classify(LatticeVector::e(1));
  CHECK(e1.kind == CurveKind::minus_one);
  CHECK(e1.alpha() == 0);
  CHECK(e1.beta(1) == -1);
  CHECK(e1.beta(2) == 0);
  CHECK(e1.gamma(1) == -1);
  CHECK(e1.gamma(3) == 0);

  const CurveClass line = CurveClass::classify(
      LatticeVector::h() - LatticeVector::e(1) - LatticeVector::e(2));
  CHECK(line.kind == CurveKind::minus_one);
  CHECK(line.beta(1) == 1);

  const CurveClass root = CurveClass::classify(LatticeVector::h() - LatticeVector::e(1) -
                                               LatticeVector::e(2) - LatticeVector::e(3));
  CHECK(root.kind == CurveKind::minus_two_root);

  CHECK(CurveClass::classify(LatticeVector::h()).kind == CurveKind::other);
  CHECK(CurveClass::classify(canonical_class()).kind == CurveKind::other);

  CHECK_THROWS_AS(e1.beta(0), std::invalid_argument);
  CHECK_THROWS_AS(e1.beta(10), std::invalid_argument);
  CHECK_THROWS_AS(e1.gamma(0), std::invalid_argument);
  CHECK_THROWS_AS(e1.gamma(4), std::invalid_argument);
}

TEST_CASE("enumeration agrees with the brute-force oracle") {
  for (long long cap = 0; cap <= 4; ++cap) {
    const std::vector<CurveClass> got = enumerate_minus_one_classes(cap);
    std::vector<std::array<long long, 10>> tuples;
    tuples.reserve(got.size());
    for (const CurveClass& c : got) {
      CHECK(c.kind == CurveKind::minus_one);
      CHECK(pairing(c.vector, c.vector) == -1);
      CHECK(degree(c.vector) == 1);
      tuples.push_back(as_tuple(c));
    }
    CHECK(std::is_sorted(tuples.begin(), tuples.end()));
    CHECK(tuples == brute_force_minus_one_classes(cap));
  }
}

TEST_CASE("enumeration counts per degree") {
  // New classes at alpha = 0, 1, 2, 3, 4: the e_i; lines through two
  // points; conics through five; cubics with one double point through
  // eight.  Cumulative: 9, 45, 171, 423, 936.
  CHECK(enumerate_minus_one_classes(0).size() == 9);
  CHECK(enumerate_minus_one_classes(1).size() == 45);
  CHECK(enumerate_minus_one_classes(2).size() == 171);
  CHECK(enumerate_minus_one_classes(3).size() == 423);
  CHECK(enumerate_minus_one_classes(4).size() == 936);

  CHECK_THROWS_AS(enumerate_minus_one_classes(-1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_minus_one_classes(2'000'000), std::invalid_argument);
}

TEST_CASE("L_m and C_m") {
  const LatticeVector L1 = build_L(1);
  CHECK(L1 == lv(26, {-5, -5, -5, -8, -8, -8, -11, -11, -11}));
  CHECK(pairing(L1, L1) == 46);
  CHECK(degree(L1) == 6);

  const LatticeVector L2 = build_L(2);
  CHECK(L2 == lv(104, {-28, -28, -28, -34, -34, -34, -40, -40, -40}));
  CHECK(pairing(L2, L2) == 196);
  CHECK(degree(L2) == 6);

  const LatticeVector C1 = build_C(1);
  CHECK(C1 == lv(90, {-19, -19, -19, -28, -28, -28, -37, -37, -37}));
  CHECK(degree(C1) == 18);
  CHECK(-pairing(canonical_class() + C1, C1) == -540);

  const LatticeVector C2 = build_C(2);
  CHECK(C2 == lv(330, {-90, -90, -90, -108, -108, -108, -126, -126, -126}));
  CHECK(degree(C2) == 18);
  CHECK(-pairing(canonical_class() + C2, C2) == -1962);

  for (int m = 1; m <= 8; ++m) {
    const Int mm(m);
    CHECK(pairing(build_L(mm), build_L(mm)) == 54 * mm * mm - 12 * mm + 4);
    CHECK(degree(build_L(mm)) == 6);
    CHECK(degree(build_C(mm)) == 18);
  }

  CHECK_THROWS_AS(build_L(0), std::invalid_argument);
  CHECK_THROWS_AS(build_C(0), std::invalid_argument);
  CHECK_THROWS_AS(build_L(-3), std::invalid_argument);
}

TEST_CASE("ample certificates for L_m and C_m") {
  for (int m = 1; m <= 4; ++m) {
    const LatticeVector L = build_L(m);
    const AmpleCertificate cert = ample_test(L, m, Int(m));
    CHECK(cert.verdict == AmpleVerdict::ample_certified);
    CHECK(cert.tail_certified);
    CHECK(!cert.witness);
    CHECK(cert.checked_alpha_max == m);
    CHECK(cert.hypotheses ==
          std::vector<std::string>{kGenericityHypothesis, kNefTailHypothesis});
    CHECK(free_numeric_test(L, cert));

    const LatticeVector C = build_C(m);
    const AmpleCertificate cc = ample_test(C, m, Int(m));
    CHECK(cc.verdict == AmpleVerdict::ample_certified);
    CHECK(cc.tail_certified);
    CHECK(free_numeric_test(C, cc));
  }
}

TEST_CASE("verdicts degrade without the tail rule") {
  const LatticeVector L1 = build_L(1);

  const AmpleCertificate no_tail = ample_test(L1, 3);
  CHECK(no_tail.verdict == AmpleVerdict::ample_up_to_degree);
  CHECK(!no_tail.tail_certified);
  CHECK(no_tail.hypotheses == std::vector<std::string>{kGenericityHypothesis});

  // Tail rule given but the enumeration cap stops short of it.
  const AmpleCertificate short_cap = ample_test(build_L(2), 1, Int(2));
  CHECK(short_cap.verdict == AmpleVerdict::ample_up_to_degree);
  CHECK(short_cap.tail_certified);
}

TEST_CASE("non-ample classes are refused with a witness") {
  // h is nef but not ample: h . e_1 = 0, and e_1 is the first class out.
  const AmpleCertificate h_cert = ample_test(LatticeVector::h(), 1);
  CHECK(h_cert.verdict == AmpleVerdict::not_ample);
  REQUIRE(h_cert.witness);
  CHECK(h_cert.witness->vector == LatticeVector::e(1));

  // Negative square fails regardless of witnesses.
  const AmpleCertificate e_cert = ample_test(LatticeVector::e(1), 0);
  CHECK(e_cert.verdict == AmpleVerdict::not_ample);
  CHECK(e_cert.square == -1);

  // Nonpositive fiber degree fails.
  const AmpleCertificate neg = ample_test(-build_L(1), 1);
  CHECK(neg.verdict == AmpleVerdict::not_ample);
  CHECK(neg.fiber_degree == -6);
}

TEST_CASE("ample_test argument checking") {
  CHECK_THROWS_AS(ample_test(build_L(1), -1), std::invalid_argument);
  CHECK_THROWS_AS(ample_test(build_L(1), 1, Int(-1)), std::invalid_argument);
  const AmpleCertificate cert = ample_test(build_L(1), 1, Int(1));
  CHECK_THROWS_AS(free_numeric_test(build_L(2), cert), std::invalid_argument);
}
