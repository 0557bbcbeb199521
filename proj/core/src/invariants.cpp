#include "cylat/invariants.hpp"

#include <stdexcept>

#include "cylat/curves.hpp"
#include "cylat/smoothing.hpp"

namespace cylat {

Int sigma(int n) {
  if (n < 1) throw std::invalid_argument("sigma: n must be >= 1");
  Int pow;
  mpz_ui_pow_ui(pow.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(n + 1));
  if (n % 2 == 0) pow = -pow;  // (-n)^{n+1}
  const Int num = pow + Int(n) * n + 2 * n;
  const Int den = n + 1;
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("sigma: division by n + 1 not exact");
  Int out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

Int discriminant_degree(int n) {
  if (n < 1) throw std::invalid_argument("discriminant_degree: n must be >= 1");
  Int pow;
  mpz_ui_pow_ui(pow.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(n));
  return Int(n + 1) * pow;
}

Int delta(int n) {
  const Int d = discriminant_degree(n);
  return n % 2 == 0 ? d : Int(-d);
}

Int gamma(const Int& m) {
  if (m < 1) throw std::invalid_argument("gamma: m must be >= 1");
  return Int(-18) * (27 * m * m - 2 * m + 5);
}

EulerBreakdown euler_breakdown(int n, const Int& m) {
  if (n < 1) throw std::invalid_argument("euler_breakdown: n must be >= 1");
  if (m < 1) throw std::invalid_argument("euler_breakdown: m must be >= 1");
  EulerBreakdown b;
  b.n = n;
  b.m = m;
  b.sigma_n = sigma(n);
  b.d_n = discriminant_degree(n);
  b.delta_n = delta(n);
  b.gamma_m = gamma(m);
  b.e_T = 2 * b.sigma_n + b.delta_n;
  b.e_X1 = (b.gamma_m + 6) * b.sigma_n + 21 * b.delta_n;
  b.e_X2 = 6 * b.sigma_n + 3 * b.delta_n;
  b.e_X12 = 12 * b.sigma_n;
  b.e_Cm = b.gamma_m;
  b.e_Gamma_m = b.gamma_m * b.sigma_n + 18 * b.delta_n;
  b.e_X = b.e_X1 + b.e_X2 - 2 * b.e_X12;
  const Int closed = (b.gamma_m - 12) * b.sigma_n + 24 * b.delta_n;
  if (b.e_X != closed)
    throw std::logic_error("euler_breakdown: Mayer-Vietoris recombination mismatch");
  return b;
}

InvariantReport theorem_report(int N, long long m, long long alpha_cap) {
  if (N < 3) throw std::invalid_argument("theorem_report: N must be >= 3");
  if (m < 1) throw std::invalid_argument("theorem_report: m must be >= 1");
  if (alpha_cap < 0) alpha_cap = m;

  InvariantReport r;
  r.N = N;
  r.n = N - 2;
  r.m = make_int(m);
  r.a_X = N - 2;
  r.euler = euler_breakdown(r.n, make_int(m));
  r.e_X = r.euler.e_X;

  if (N >= 4) {
    const SurfaceModel model = SurfaceModel::for_dimension(r.n);
    r.b2_X0 = make_int(b2_of_X0(model, m));
    r.b2_X = make_int(b2_of_X(model, m));
    r.in_theorem_range = true;
    r.b2_matches_theorem =
        N == 4 ? *r.b2_X == make_int(m) + 10 : *r.b2_X == make_int(m) + 2;
  }

  const LatticeVector L = build_L(make_int(m));
  const AmpleCertificate certL = ample_test(L, alpha_cap, make_int(m));
  r.L_verdict = to_string(certL.verdict);
  r.L_free = free_numeric_test(L, certL);
  const LatticeVector C = build_C(make_int(m));
  const AmpleCertificate certC = ample_test(C, alpha_cap, make_int(m));
  r.C_verdict = to_string(certC.verdict);
  r.C_free = free_numeric_test(C, certC);
  r.d_semistable = d_semistability_check(make_int(m)).holds;
  r.hypotheses = {kGenericityHypothesis, kNefTailHypothesis};
  return r;
}

}  // namespace cylat
