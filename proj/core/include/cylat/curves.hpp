#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cylat/lattice.hpp"

namespace cylat {

enum class CurveKind { minus_one, minus_two_root, other };

// A class written alpha h - sum_i beta_i e_i together with its
// classification under the pairing.
struct CurveClass {
  LatticeVector vector;
  CurveKind kind = CurveKind::other;

  Int alpha() const { return vector[0]; }
  // beta_i = -(e_i coordinate), 1 <= i <= 9.
  Int beta(int i) const;
  // gamma_i = beta_{3i-2} + beta_{3i-1} + beta_{3i}, 1 <= i <= 3.
  Int gamma(int i) const;

  // kind := minus_one if v.v = -1 and degree 1, minus_two_root if
  // v.v = -2 and degree 0, other otherwise.
  static CurveClass classify(LatticeVector v);

  bool operator==(const CurveClass&) const = default;
};

// All integer solutions of  alpha^2 - sum beta_i^2 = -1  and
// 3 alpha - sum beta_i = 1  with 0 <= alpha <= alpha_max, in
// lexicographic order on (alpha, beta_1, ..., beta_9).  Negative
// beta_i are admitted (the e_i themselves appear with beta_i = -1).
std::vector<CurveClass> enumerate_minus_one_classes(long long alpha_max);

// L_m = h + phi_m*(h) + m k.  Requires m >= 1.
LatticeVector build_L(const Int& m);

// C_m = 3h + 3 phi_m*(h) + (m-2) k.  Requires m >= 1.
LatticeVector build_C(const Int& m);

enum class AmpleVerdict { ample_certified, ample_up_to_degree, not_ample };

std::string to_string(AmpleVerdict v);

struct AmpleCertificate {
  LatticeVector target;
  std::optional<Int> m;  // tail rule parameter, when given
  long long checked_alpha_max = 0;
  Int square;
  Int fiber_degree;
  bool tail_certified = false;
  AmpleVerdict verdict = AmpleVerdict::not_ample;
  // A (-1)-class with pairing(target, witness) <= 0, when one was found.
  std::optional<CurveClass> witness;
  // Unverified assumptions the verdict relies on.
  std::vector<std::string> hypotheses;
};

// Positivity test against the enumerated (-1)-classes up to alpha_cap,
// plus the square and fiber-degree requirements.  When tail_rule_m is
// given, the tail alpha > m is certified from the bound
//   pairing(L, C) >= pairing(h + m k, C) = alpha - m > 0,
// which holds whenever L - (h + m k) is a nonnegative combination of
// h, phi_m*(h) and -k; the combination is solved for exactly, and
// nonnegativity of phi_m*(h) against (-1)-classes is checked on the
// enumerated range and recorded as a hypothesis beyond it.  The
// verdict is ample_certified only if alpha_cap >= tail_rule_m.
AmpleCertificate ample_test(const LatticeVector& L, long long alpha_cap,
                            std::optional<Int> tail_rule_m = std::nullopt);

// Numeric freeness criterion: certified ample and fiber degree >= 2.
// cert must refer to L.
bool free_numeric_test(const LatticeVector& L, const AmpleCertificate& cert);

// Hypothesis strings attached to certificates and reports.
extern const char* const kGenericityHypothesis;
extern const char* const kNefTailHypothesis;

}  // namespace cylat
