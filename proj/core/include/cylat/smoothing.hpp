#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cylat/intmatrix.hpp"
#include "cylat/lattice.hpp"

namespace cylat {

// Picard data of the second factor T, a smooth (1, n+1)-hypersurface
// in P^1 x P^n.  Only the rank and the canonical class matter here.
struct SurfaceModel {
  int n = 0;
  int rho_T = 0;
  std::vector<Int> k_T;

  // n == 2: rho_T = 10 with k_T = (-3; 1,...,1) (T is again a blown-up
  // plane); n >= 3: rho_T = 2 with k_T = (-1, 0).  Requires n >= 2.
  static SurfaceModel for_dimension(int n);
};

// Pic of the double locus, presented as the quotient of
// Z^{10 + rho_T} = Pic S (+) Pic T by the single relation (-k_S, k_T).
struct PicPresentation {
  std::size_t ambient_rank = 0;
  std::vector<Int> relation;
  std::size_t quotient_rank = 0;
};

// The presentation itself does not depend on m.
PicPresentation pic_X12_presentation(const SurfaceModel& model, const Int& m);

// Matrix of the joint restriction map into the ambient Z^{10 + rho_T},
// one column per generator of Pic X_1 (+) Pic X_2, the X_2 block
// negated.  For m >= 1 the columns are, in order:
//   (h, 0); (0, t_i) for i = 1..rho_T; m copies of (-k, 0); (c_m, 0);
//   (-phi_m*(h), 0); (0, -t_i) for i = 1..rho_T,
// giving m + 2 rho_T + 3 columns.  m = 0 is the unblown-up gluing with
// just the hyperplane and Pic T columns (2 rho_T + 2 columns).
IntegerMatrix restriction_matrix(const SurfaceModel& model, long long m);

// Rank of the restriction map into the quotient: rank of the matrix
// augmented by the relation column, minus one for the relation itself.
long long image_rank_in_quotient(const SurfaceModel& model, long long m);

// Kernel rank of the restriction map into the quotient; equals the
// second Betti number of the normal crossing total space X_0(m).
// Requires m >= 1.
long long b2_of_X0(const SurfaceModel& model, long long m);

// b2 of the smoothed fiber: b2_of_X0 - 1.  Requires m >= 1.
long long b2_of_X(const SurfaceModel& model, long long m);

// Rank of the 3 x 10 matrix with rows h, phi_m*(h), k.  Requires m >= 0.
std::size_t independence_rank(const Int& m);

struct DSemistabilityReport {
  Int m;
  bool holds = false;
  LatticeVector lhs;  // 3(h + phi_m*(h)) + 2(-k)
  LatticeVector rhs;  // m(-k) + c_m (+ perturbation)
};

// Verifies the triple-point formula 3(h + phi_m*(h)) + 2f = m f + c_m
// coordinate by coordinate (f = -k).  The optional perturbation is a
// test hook added to the right-hand side.  Requires m >= 1.
DSemistabilityReport d_semistability_check(const Int& m,
                                           const LatticeVector& perturbation = LatticeVector{});

struct NonprojectivityResult {
  bool consistent = false;
  // Present exactly when the datum is consistent and effective; then
  // the only solution is (a, a') = (0, 0).
  std::optional<std::pair<Int, Int>> forced;
  // Dimension drop of the algebraic reduction: a(X) = N - 2.
  int algebraic_dim_drop = 2;
};

// Line-bundle matching across the double locus: a datum (a, c, a') is
// consistent iff a' = 3c and a + 3c = 0; requiring effectivity
// (a >= 0, a' >= 0) forces (0, 0).  Requires m >= 1; the independence
// of {h, phi_m*(h), k} backing the coefficient comparison is
// re-verified for the given m.
NonprojectivityResult nonprojectivity_kernel(const Int& m, const Int& a, const Int& c,
                                             const Int& a_prime);

}  // namespace cylat
