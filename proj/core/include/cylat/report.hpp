#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cylat/cremona.hpp"
#include "cylat/curves.hpp"
#include "cylat/invariants.hpp"
#include "cylat/smoothing.hpp"

namespace cylat {

enum class OutputFormat { json, table, csv };

OutputFormat parse_output_format(const std::string& name);
std::string to_string(OutputFormat f);

// All JSON emitters below are deterministic: keys appear in a fixed
// order and integers whose magnitude exceeds 2^53 are serialized as
// exact decimal strings (smaller ones as plain JSON numbers).

std::string emit_report(const InvariantReport& report, OutputFormat format);
InvariantReport parse_report_json(const std::string& text);

std::string certificate_json(const AmpleCertificate& cert);
std::string d_semistability_json(const DSemistabilityReport& rep);
std::string pullback_json(const Int& m, const LatticeVector& closed,
                          const LatticeVector& iterative);
std::string word_application_json(const CremonaWord& word, const LatticeVector& input,
                                  const LatticeVector& output);
std::string betti_json(const SurfaceModel& model, long long m, bool emit_matrices);

// RFC-4180 style CSV, header alpha,beta1..beta9, one class per row.
std::string curve_csv(const std::vector<CurveClass>& classes);

struct SuiteConfig {
  long long m_max = 50;
  long long alpha_cap = 12;
  std::vector<int> n_set = {2, 3, 4, 5};
  std::optional<std::string> emit_path;
  OutputFormat format = OutputFormat::json;
  // Test hook: perturbs c_m inside the d-semistability check so the
  // suite exercises its failure path.
  bool inject_d_fault = false;

  void validate() const;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteSummary {
  SuiteConfig config;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::optional<std::string> first_failure() const;
};

// Runs the full verification suite under the given configuration:
// reflection properties, closed-vs-iterative pullbacks, the L_m/C_m
// identities, ampleness certificates, d-semistability, the b2 grid and
// the Euler grid.  Deterministic for a fixed config (randomized checks
// use a fixed seed).
SuiteSummary run_suite(const SuiteConfig& cfg);

std::string suite_summary_json(const SuiteSummary& s);
std::string suite_summary_table(const SuiteSummary& s);

}  // namespace cylat
