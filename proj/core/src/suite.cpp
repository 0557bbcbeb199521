#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "cylat/cremona.hpp"
#include "cylat/report.hpp"

namespace cylat {

namespace {

using Clock = std::chrono::steady_clock;

LatticeVector random_vector(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-9, 9);
  std::array<Int, LatticeVector::kRank> c;
  for (auto& x : c) x = coord(rng);
  return LatticeVector(std::move(c));
}

Root random_root(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(1, 9);
  int i = pick(rng), j = pick(rng), k = pick(rng);
  while (j == i) j = pick(rng);
  while (k == i || k == j) k = pick(rng);
  return Root::make(i, j, k);
}

struct CheckOutcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& msg) {
    if (passed) {
      passed = false;
      detail = msg;
    }
  }
};

CheckOutcome check_reflection_properties(const SuiteConfig&) {
  CheckOutcome out;
  std::mt19937_64 rng(0x1f2e3d4c5b6a7981ULL);
  const LatticeVector k = canonical_class();
  for (int trial = 0; trial < 10'000 && out.passed; ++trial) {
    const LatticeVector x = random_vector(rng);
    const LatticeVector y = random_vector(rng);
    const Root r = random_root(rng);
    if (reflect(reflect(x, r), r) != x) out.fail("reflection is not an involution");
    if (pairing(reflect(x, r), reflect(y, r)) != pairing(x, y))
      out.fail("reflection does not preserve the pairing");
    if (reflect(k, r) != k) out.fail("reflection moves the canonical class");
  }
  return out;
}

CheckOutcome check_pullback(const SuiteConfig& cfg) {
  CheckOutcome out;
  const LatticeVector h = LatticeVector::h();
  const LatticeVector one_step = psi_step(h);
  if (one_step != Int(8) * h - triple_sum(1) - Int(2) * triple_sum(2) -
                      Int(4) * triple_sum(3))
    out.fail("psi_step(h) anchor mismatch");
  if (psi_step(one_step) != phi_pullback_closed(1)) out.fail("psi_step^2(h) anchor mismatch");
  for (long long m = 0; m <= cfg.m_max && out.passed; ++m) {
    if (phi_pullback_iterative(make_int(m), h) != phi_pullback_closed(make_int(m)))
      out.fail("closed and iterative pullbacks differ at m=" + std::to_string(m));
  }
  return out;
}

CheckOutcome check_lm_cm_identities(const SuiteConfig& cfg) {
  CheckOutcome out;
  const LatticeVector h = LatticeVector::h();
  const LatticeVector k = canonical_class();
  for (long long mi = 1; mi <= cfg.m_max && out.passed; ++mi) {
    const Int m = make_int(mi);
    const LatticeVector L = build_L(m);
    const LatticeVector C = build_C(m);
    if (pairing(L, L) != 54 * m * m - 12 * m + 4)
      out.fail("L_m self-intersection mismatch at m=" + std::to_string(mi));
    if (degree(L) != 6) out.fail("L_m fiber degree mismatch at m=" + std::to_string(mi));
    if (degree(C) != 18) out.fail("C_m fiber degree mismatch at m=" + std::to_string(mi));
    const LatticeVector phi = phi_pullback_closed(m);
    if (C != L + Int(2) * (h + phi) + Int(2) * (-k))
      out.fail("C_m decomposition mismatch at m=" + std::to_string(mi));
    if (-pairing(k + C, C) != gamma(m))
      out.fail("adjunction Euler number of C_m mismatch at m=" + std::to_string(mi));
  }
  return out;
}

CheckOutcome check_ampleness(const SuiteConfig& cfg) {
  CheckOutcome out;
  const long long top = std::min(cfg.m_max, cfg.alpha_cap);
  for (long long m = 1; m <= top && out.passed; ++m) {
    const LatticeVector L = build_L(make_int(m));
    const AmpleCertificate cl = ample_test(L, m, make_int(m));
    if (cl.verdict != AmpleVerdict::ample_certified || !cl.tail_certified ||
        !free_numeric_test(L, cl))
      out.fail("L_m certificate not clean at m=" + std::to_string(m));
    const LatticeVector C = build_C(make_int(m));
    const AmpleCertificate cc = ample_test(C, m, make_int(m));
    if (cc.verdict != AmpleVerdict::ample_certified || !cc.tail_certified ||
        !free_numeric_test(C, cc))
      out.fail("C_m certificate not clean at m=" + std::to_string(m));
  }
  return out;
}

CheckOutcome check_d_semistability(const SuiteConfig& cfg) {
  CheckOutcome out;
  const LatticeVector perturbation =
      cfg.inject_d_fault ? LatticeVector::e(1) : LatticeVector{};
  for (long long m = 1; m <= cfg.m_max && out.passed; ++m) {
    const DSemistabilityReport rep = d_semistability_check(make_int(m), perturbation);
    if (!rep.holds) out.fail("triple-point formula fails at m=" + std::to_string(m));
  }
  return out;
}

CheckOutcome check_betti_grid(const SuiteConfig& cfg) {
  CheckOutcome out;
  for (int n : cfg.n_set) {
    if (n < 2) continue;  // b2 presentation needs n >= 2; Euler grid covers n = 1
    const SurfaceModel model = SurfaceModel::for_dimension(n);
    for (long long m = 1; m <= cfg.m_max && out.passed; ++m) {
      const long long rho = model.rho_T;
      const std::string at = " at n=" + std::to_string(n) + ", m=" + std::to_string(m);
      if (b2_of_X0(model, m) != m + rho + 1) out.fail("b2(X0) mismatch" + at);
      if (b2_of_X(model, m) != m + rho) out.fail("b2(X) mismatch" + at);
      if (image_rank_in_quotient(model, m) != rho + 2) out.fail("image rank mismatch" + at);
      const long long expected = n == 2 ? m + 10 : m + 2;
      if (b2_of_X(model, m) != expected) out.fail("piecewise b2 law mismatch" + at);
    }
    if (!out.passed) break;
  }
  return out;
}

CheckOutcome check_euler_grid(const SuiteConfig& cfg) {
  CheckOutcome out;
  for (int n : cfg.n_set) {
    for (long long mi = 1; mi <= cfg.m_max && out.passed; ++mi) {
      const Int m = make_int(mi);
      const EulerBreakdown b = euler_breakdown(n, m);
      const std::string at = " at n=" + std::to_string(n) + ", m=" + std::to_string(mi);
      if (b.e_X != b.e_X1 + b.e_X2 - 2 * b.e_X12)
        out.fail("Mayer-Vietoris recombination mismatch" + at);
      if (n == 2 && b.e_X != 288) out.fail("constant Euler number violated" + at);
      const LatticeVector C = build_C(m);
      if (-pairing(canonical_class() + C, C) != b.gamma_m)
        out.fail("gamma lattice oracle mismatch" + at);
    }
    if (!out.passed) break;
  }
  return out;
}

}  // namespace

SuiteSummary run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  SuiteSummary summary;
  summary.config = cfg;

  const std::vector<std::pair<std::string, std::function<CheckOutcome(const SuiteConfig&)>>>
      checks = {
          {"reflection-properties", check_reflection_properties},
          {"pullback-closed-vs-iterative", check_pullback},
          {"lm-cm-identities", check_lm_cm_identities},
          {"ampleness-certificates", check_ampleness},
          {"d-semistability", check_d_semistability},
          {"betti-grid", check_betti_grid},
          {"euler-grid", check_euler_grid},
      };

  for (const auto& [name, fn] : checks) {
    CheckResult r;
    r.name = name;
    const auto t0 = Clock::now();
    try {
      const CheckOutcome outcome = fn(cfg);
      r.passed = outcome.passed;
      r.detail = outcome.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    summary.checks.push_back(std::move(r));
  }
  return summary;
}

}  // namespace cylat
