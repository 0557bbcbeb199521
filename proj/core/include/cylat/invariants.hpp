#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cylat/lattice.hpp"

namespace cylat {

// sigma_n = ((-n)^{n+1} + n^2 + 2n) / (n + 1); the division is always
// exact and is asserted.  Requires n >= 1.
Int sigma(int n);

// d_n = (n+1) n^n, the discriminant degree.  Requires n >= 1.
Int discriminant_degree(int n);

// delta_n = (-1)^n d_n.  Requires n >= 1.
Int delta(int n);

// gamma_m = -18 (27 m^2 - 2m + 5).  Requires m >= 1.
Int gamma(const Int& m);

// Euler numbers of all the pieces entering the normal-crossing
// Mayer-Vietoris bookkeeping, plus the total.
struct EulerBreakdown {
  int n = 0;
  Int m;
  Int sigma_n;
  Int d_n;
  Int delta_n;
  Int gamma_m;
  Int e_T;        // 2 sigma + delta
  Int e_X1;       // (gamma + 6) sigma + 21 delta
  Int e_X2;       // 6 sigma + 3 delta
  Int e_X12;      // 12 sigma
  Int e_Cm;       // gamma
  Int e_Gamma_m;  // gamma sigma + 18 delta
  Int e_X;        // e_X1 + e_X2 - 2 e_X12 = (gamma - 12) sigma + 24 delta

  bool operator==(const EulerBreakdown&) const = default;
};

// Computes the breakdown and asserts the Mayer-Vietoris recombination
// against the single closed formula.  Requires n >= 1, m >= 1.
EulerBreakdown euler_breakdown(int n, const Int& m);

// Betti/Euler/certification summary for the N-fold X(m), N = n + 2.
struct InvariantReport {
  int N = 0;
  int n = 0;
  Int m;
  std::optional<Int> b2_X0;  // absent for N == 3
  std::optional<Int> b2_X;
  Int e_X;
  int a_X = 0;  // N - 2
  bool in_theorem_range = false;  // N >= 4
  bool b2_matches_theorem = false;
  std::string L_verdict;
  bool L_free = false;
  std::string C_verdict;
  bool C_free = false;
  bool d_semistable = false;
  std::vector<std::string> hypotheses;
  EulerBreakdown euler;

  bool operator==(const InvariantReport&) const = default;
};

// Assembles the full report: b2 through the Smith-normal-form route
// (cross-checked against the piecewise m + 10 / m + 2 law for N >= 4;
// flagged out of range for N = 3), the Euler breakdown, and the
// ampleness/freeness/d-semistability verdicts for L_m and C_m.
// alpha_cap < 0 means "use m", which yields full certification.
// Requires N >= 3, m >= 1.
InvariantReport theorem_report(int N, long long m, long long alpha_cap = -1);

}  // namespace cylat
