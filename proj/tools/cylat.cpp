// Command-line front end.  Exit codes: 0 success, 1 check failure,
// 2 usage or argument error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cylat/cremona.hpp"
#include "cylat/report.hpp"

namespace {

using namespace cylat;

// Thrown when a computation finished but the verified property fails.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::optional<std::string>& out_path) {
  if (!out_path) {
    std::cout << text;
    return;
  }
  std::ofstream f(*out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + *out_path + "'");
  f << text;
  if (!f) throw std::runtime_error("failed writing output file '" + *out_path + "'");
}

struct CommonOut {
  std::string format = "json";
  std::optional<std::string> out_path;
};

int run(int argc, char** argv) {
  CLI::App app{"exact lattice computations for smoothed normal-crossing Calabi-Yau fibers"};
  app.require_subcommand(1);

  int exit_code = 0;

  // invariants
  auto* inv = app.add_subcommand("invariants", "full Betti/Euler/certification report");
  int inv_N = 4;
  long long inv_m = 1;
  long long inv_alpha_cap = -1;
  CommonOut inv_out;
  inv->add_option("--N", inv_N, "complex dimension of the smoothed fiber (>= 3)")
      ->required();
  inv->add_option("--m", inv_m, "twist parameter (>= 1)")->required();
  inv->add_option("--alpha-cap", inv_alpha_cap,
                  "enumeration cap for the certificates (default: m)");
  inv->add_option("--format", inv_out.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  inv->add_option("--out", inv_out.out_path, "write the report to a file");
  inv->callback([&] {
    const InvariantReport r = theorem_report(inv_N, inv_m, inv_alpha_cap);
    write_output(emit_report(r, parse_output_format(inv_out.format)), inv_out.out_path);
  });

  // betti
  auto* betti = app.add_subcommand("betti", "second Betti numbers via Smith normal form");
  int betti_n = 2;
  long long betti_m = 1;
  bool betti_json_flag = false;
  bool betti_matrices = false;
  std::optional<std::string> betti_out;
  betti->add_option("--n", betti_n, "dimension parameter of the second factor (>= 2)")
      ->required();
  betti->add_option("--m", betti_m, "twist parameter (>= 1)")->required();
  betti->add_flag("--json", betti_json_flag, "emit JSON instead of the one-line summary");
  betti->add_flag("--emit-matrices", betti_matrices,
                  "include the restriction matrix and Smith invariants (JSON only)");
  betti->add_option("--out", betti_out, "write the output to a file");
  betti->callback([&] {
    const SurfaceModel model = SurfaceModel::for_dimension(betti_n);
    if (betti_json_flag || betti_matrices) {
      write_output(betti_json(model, betti_m, betti_matrices), betti_out);
    } else {
      std::string line = "b2(X0) = " + std::to_string(b2_of_X0(model, betti_m)) +
                         ", b2(X) = " + std::to_string(b2_of_X(model, betti_m)) + "\n";
      write_output(line, betti_out);
    }
  });

  // certify
  auto* certify = app.add_subcommand("certify", "ampleness certificate for L_m");
  long long certify_m = 1;
  long long certify_cap = -1;
  std::optional<std::string> certify_out;
  certify->add_option("--m", certify_m, "twist parameter (>= 1)")->required();
  certify->add_option("--alpha-cap", certify_cap, "enumeration cap (default: m)");
  certify->add_option("--out", certify_out, "write the certificate to a file");
  certify->callback([&] {
    const long long cap = certify_cap < 0 ? certify_m : certify_cap;
    const AmpleCertificate cert =
        ample_test(build_L(make_int(certify_m)), cap, make_int(certify_m));
    write_output(certificate_json(cert), certify_out);
    if (cert.verdict == AmpleVerdict::not_ample)
      throw CheckFailure("certify: verdict not_ample");
  });

  // enumerate-curves
  auto* enumerate = app.add_subcommand("enumerate-curves",
                                       "(-1)-classes up to a degree bound, as CSV");
  long long enum_max_degree = 2;
  std::optional<std::string> enum_csv;
  enumerate->add_option("--max-degree", enum_max_degree, "largest alpha to enumerate")
      ->required();
  enumerate->add_option("--csv", enum_csv, "write the CSV to a file");
  enumerate->callback([&] {
    write_output(curve_csv(enumerate_minus_one_classes(enum_max_degree)), enum_csv);
  });

  // d-semistable
  auto* dsemi = app.add_subcommand("d-semistable", "triple-point formula check");
  long long dsemi_m = 1;
  std::optional<std::string> dsemi_out;
  dsemi->add_option("--m", dsemi_m, "twist parameter (>= 1)")->required();
  dsemi->add_option("--out", dsemi_out, "write the report to a file");
  dsemi->callback([&] {
    const DSemistabilityReport rep = d_semistability_check(make_int(dsemi_m));
    write_output(d_semistability_json(rep), dsemi_out);
    if (!rep.holds) throw CheckFailure("d-semistable: formula violated");
  });

  // pullback
  auto* pullback = app.add_subcommand("pullback",
                                      "pullback of h, closed form against iteration");
  long long pull_m = -1;
  std::string pull_word;
  std::string pull_vector = "1;0,0,0,0,0,0,0,0,0";
  std::optional<std::string> pull_out;
  pullback->add_option("--m", pull_m, "twist parameter (>= 0)");
  pullback->add_option("--word", pull_word,
                       "apply a reflection word, e.g. \"1,2,3;4,5,6\"");
  pullback->add_option("--vector", pull_vector,
                       "input vector for --word, compact form \"a;b1,...,b9\"");
  pullback->add_option("--out", pull_out, "write the output to a file");
  pullback->callback([&] {
    if (!pull_word.empty()) {
      const CremonaWord word = CremonaWord::parse(pull_word);
      const LatticeVector input = LatticeVector::parse_compact(pull_vector);
      write_output(word_application_json(word, input, apply_word(word, input)), pull_out);
      return;
    }
    if (pull_m < 0)
      throw CLI::ValidationError("pullback", "either --m or --word is required");
    const LatticeVector closed = phi_pullback_closed(make_int(pull_m));
    const LatticeVector iterative =
        phi_pullback_iterative(make_int(pull_m), LatticeVector::h());
    write_output(pullback_json(make_int(pull_m), closed, iterative), pull_out);
    if (closed != iterative) throw CheckFailure("pullback: closed != iterative");
  });

  // verify
  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  SuiteConfig cfg;
  std::string verify_format = "json";
  std::optional<std::string> verify_out;
  std::vector<int> verify_n;
  verify->add_option("--m-max", cfg.m_max, "largest m in the grids (default 50)");
  verify->add_option("--alpha-cap", cfg.alpha_cap,
                     "enumeration cap for certificates (default 12)");
  verify->add_option("--n", verify_n, "dimension parameters (default 2 3 4 5)");
  verify->add_option("--format", verify_format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  verify->add_option("--out", verify_out, "write the summary to a file");
  verify->add_flag("--inject-d-fault", cfg.inject_d_fault)->group("");  // test hook
  verify->callback([&] {
    if (!verify_n.empty()) cfg.n_set = verify_n;
    cfg.format = parse_output_format(verify_format);
    cfg.emit_path = verify_out;
    const SuiteSummary summary = run_suite(cfg);
    const std::string text = cfg.format == OutputFormat::table
                                 ? suite_summary_table(summary)
                                 : suite_summary_json(summary);
    write_output(text, cfg.emit_path);
    if (!summary.all_passed()) {
      std::cerr << "failed check: " << *summary.first_failure() << "\n";
      exit_code = 1;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CheckFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  return run(argc, argv);
}
