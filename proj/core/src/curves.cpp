#include "cylat/curves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cylat/cremona.hpp"

namespace cylat {

const char* const kGenericityHypothesis =
    "generic surface: no (-2)-class is represented by a curve";
const char* const kNefTailHypothesis =
    "pullback of the nef hyperplane class stays nef on (-1)-classes beyond the "
    "enumerated range";

Int CurveClass::beta(int i) const {
  if (i < 1 || i > 9) throw std::invalid_argument("CurveClass::beta: index must be in 1..9");
  return -vector[static_cast<std::size_t>(i)];
}

Int CurveClass::gamma(int i) const {
  if (i < 1 || i > 3) throw std::invalid_argument("CurveClass::gamma: index must be in 1..3");
  return beta(3 * i - 2) + beta(3 * i - 1) + beta(3 * i);
}

CurveClass CurveClass::classify(LatticeVector v) {
  const Int sq = pairing(v, v);
  const Int deg = degree(v);
  CurveKind kind = CurveKind::other;
  if (sq == -1 && deg == 1) {
    kind = CurveKind::minus_one;
  } else if (sq == -2 && deg == 0) {
    kind = CurveKind::minus_two_root;
  }
  return CurveClass{std::move(v), kind};
}

namespace {

long long isqrt_ll(long long x) {
  if (x < 0) return -1;
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long ceil_div(long long a, long long b) {
  return -floor_div(-a, b);
}

// Depth-first search over beta_1..beta_9 for a fixed alpha.  At each
// level the remaining sum S and square sum Q must satisfy the
// Cauchy-Schwarz bound S^2 <= t*Q over the t open slots, which yields
// exact per-coordinate bounds
//   beta in [ (S - sqrt((t-1)(tQ - S^2))) / t , (S + sqrt(...)) / t ].
// Iterating beta in ascending order makes the output lexicographic.
struct Searcher {
  long long alpha;
  std::array<long long, 9> beta{};
  std::vector<CurveClass>* out;

  void emit() {
    std::array<Int, LatticeVector::kRank> c;
    c[0] = make_int(alpha);
    for (std::size_t i = 0; i < 9; ++i) c[i + 1] = make_int(-beta[i]);
    CurveClass cc = CurveClass::classify(LatticeVector(std::move(c)));
    out->push_back(std::move(cc));
  }

  void dfs(int level, long long S, long long Q) {
    const int t = 9 - level;
    if (t == 1) {
      if (S * S == Q) {
        beta[8] = S;
        emit();
      }
      return;
    }
    const long long disc = static_cast<long long>(t - 1) * (t * Q - S * S);
    if (disc < 0) return;
    const long long root = isqrt_ll(disc);
    const long long lo = ceil_div(S - root, t);
    const long long hi = floor_div(S + root, t);
    for (long long b = lo; b <= hi; ++b) {
      beta[static_cast<std::size_t>(level)] = b;
      dfs(level + 1, S - b, Q - b * b);
    }
  }
};

}  // namespace

std::vector<CurveClass> enumerate_minus_one_classes(long long alpha_max) {
  if (alpha_max < 0) throw std::invalid_argument("enumerate_minus_one_classes: alpha_max < 0");
  if (alpha_max > 1'000'000)
    throw std::invalid_argument("enumerate_minus_one_classes: alpha_max too large");
  std::vector<CurveClass> out;
  for (long long alpha = 0; alpha <= alpha_max; ++alpha) {
    Searcher s;
    s.alpha = alpha;
    s.out = &out;
    s.dfs(0, 3 * alpha - 1, alpha * alpha + 1);
  }
  return out;
}

LatticeVector build_L(const Int& m) {
  if (m < 1) throw std::invalid_argument("build_L: m must be >= 1");
  return LatticeVector::h() + phi_pullback_closed(m) + m * canonical_class();
}

LatticeVector build_C(const Int& m) {
  if (m < 1) throw std::invalid_argument("build_C: m must be >= 1");
  return Int(3) * (LatticeVector::h() + phi_pullback_closed(m)) +
         (m - 2) * canonical_class();
}

std::string to_string(AmpleVerdict v) {
  switch (v) {
    case AmpleVerdict::ample_certified: return "ample_certified";
    case AmpleVerdict::ample_up_to_degree: return "ample_up_to_degree";
    case AmpleVerdict::not_ample: return "not_ample";
  }
  throw std::logic_error("to_string(AmpleVerdict): bad value");
}

namespace {

// Solves v = c1 h + c2 phi + c3 (-k) over the rationals and reports
// whether a solution with all c_i >= 0 exists.  The three columns span
// a rank <= 3 sublattice, so plain elimination on the 10x3 system with
// exact rationals settles it.
bool nonneg_nef_combination(const LatticeVector& v, const LatticeVector& phi) {
  const LatticeVector h = LatticeVector::h();
  const LatticeVector f = -canonical_class();
  constexpr std::size_t kRows = LatticeVector::kRank;
  constexpr std::size_t kCols = 3;
  std::array<std::array<mpq_class, kCols + 1>, kRows> a;
  for (std::size_t r = 0; r < kRows; ++r) {
    a[r][0] = h[r];
    a[r][1] = phi[r];
    a[r][2] = f[r];
    a[r][3] = v[r];
  }
  std::array<long long, kCols> pivot_row{-1, -1, -1};
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < kCols && next_row < kRows; ++col) {
    std::size_t sel = next_row;
    while (sel < kRows && a[sel][col] == 0) ++sel;
    if (sel == kRows) continue;
    std::swap(a[sel], a[next_row]);
    const mpq_class inv = 1 / a[next_row][col];
    for (std::size_t j = col; j <= kCols; ++j) a[next_row][j] *= inv;
    for (std::size_t r = 0; r < kRows; ++r) {
      if (r == next_row || a[r][col] == 0) continue;
      const mpq_class factor = a[r][col];
      for (std::size_t j = col; j <= kCols; ++j) a[r][j] -= factor * a[next_row][j];
    }
    pivot_row[col] = static_cast<long long>(next_row);
    ++next_row;
  }
  for (std::size_t r = next_row; r < kRows; ++r)
    if (a[r][kCols] != 0) return false;  // inconsistent
  for (std::size_t col = 0; col < kCols; ++col) {
    if (pivot_row[col] < 0) continue;  // free variable, taken as 0
    if (a[static_cast<std::size_t>(pivot_row[col])][kCols] < 0) return false;
  }
  return true;
}

}  // namespace

AmpleCertificate ample_test(const LatticeVector& L, long long alpha_cap,
                            std::optional<Int> tail_rule_m) {
  if (alpha_cap < 0) throw std::invalid_argument("ample_test: alpha_cap < 0");
  if (tail_rule_m && *tail_rule_m < 0)
    throw std::invalid_argument("ample_test: tail_rule_m < 0");

  AmpleCertificate cert;
  cert.target = L;
  cert.m = tail_rule_m;
  cert.checked_alpha_max = alpha_cap;
  cert.square = pairing(L, L);
  cert.fiber_degree = degree(L);
  cert.hypotheses.push_back(kGenericityHypothesis);

  std::optional<LatticeVector> phi;
  bool tail_ok = false;
  if (tail_rule_m) {
    phi = phi_pullback_closed(*tail_rule_m);
    const LatticeVector excess =
        L - (LatticeVector::h() + (*tail_rule_m) * canonical_class());
    tail_ok = nonneg_nef_combination(excess, *phi);
  }

  const std::vector<CurveClass> classes = enumerate_minus_one_classes(alpha_cap);
  for (const CurveClass& c : classes) {
    if (!cert.witness && pairing(L, c.vector) <= 0) cert.witness = c;
    if (tail_ok && pairing(*phi, c.vector) < 0) tail_ok = false;
  }
  cert.tail_certified = tail_ok;
  if (tail_ok) cert.hypotheses.push_back(kNefTailHypothesis);

  if (cert.square <= 0 || cert.fiber_degree <= 0 || cert.witness) {
    cert.verdict = AmpleVerdict::not_ample;
  } else if (cert.tail_certified && tail_rule_m && make_int(alpha_cap) >= *tail_rule_m) {
    cert.verdict = AmpleVerdict::ample_certified;
  } else {
    cert.verdict = AmpleVerdict::ample_up_to_degree;
  }
  return cert;
}

bool free_numeric_test(const LatticeVector& L, const AmpleCertificate& cert) {
  if (cert.target != L)
    throw std::invalid_argument("free_numeric_test: certificate refers to a different class");
  return cert.verdict == AmpleVerdict::ample_certified && degree(L) >= 2;
}

}  // namespace cylat
