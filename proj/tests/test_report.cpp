#include <doctest.h>

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cylat/cremona.hpp"
#include "cylat/report.hpp"
#include "test_util.hpp"

using namespace cylat;
using nlohmann::json;

TEST_CASE("output format names") {
  CHECK(parse_output_format("json") == OutputFormat::json);
  CHECK(parse_output_format("table") == OutputFormat::table);
  CHECK(parse_output_format("csv") == OutputFormat::csv);
  CHECK(to_string(OutputFormat::table) == "table");
  CHECK_THROWS_AS(parse_output_format("yaml"), std::invalid_argument);
}

TEST_CASE("report JSON round trip") {
  const InvariantReport r = theorem_report(4, 1);
  const std::string text = emit_report(r, OutputFormat::json);
  CHECK(parse_report_json(text) == r);

  // N = 3 reports carry null Betti slots.
  const InvariantReport r3 = theorem_report(3, 2);
  const std::string text3 = emit_report(r3, OutputFormat::json);
  CHECK(parse_report_json(text3) == r3);
  const json j = json::parse(text3);
  CHECK(j.at("b2_X0").is_null());
  CHECK(j.at("b2_X").is_null());
  CHECK(j.at("e").get<long long>() == r3.e_X.get_si());

  CHECK_THROWS_AS(parse_report_json("{not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_report_json("{}"), std::exception);
}

TEST_CASE("report JSON key order is fixed") {
  const std::string text = emit_report(theorem_report(4, 1), OutputFormat::json);
  const std::vector<std::string> keys = {
      "\"N\"",         "\"n\"",      "\"m\"",
      "\"b2_X0\"",     "\"b2_X\"",   "\"e\"",
      "\"a\"",         "\"in_theorem_range\"", "\"b2_matches_theorem\"",
      "\"L_verdict\"", "\"L_free\"", "\"C_verdict\"",
      "\"C_free\"",    "\"d_semistable\"",     "\"hypotheses\"",
      "\"euler\""};
  std::size_t pos = 0;
  for (const std::string& key : keys) {
    const std::size_t here = text.find(key, pos);
    REQUIRE(here != std::string::npos);
    pos = here;
  }
}

TEST_CASE("report table form") {
  const std::string table = emit_report(theorem_report(4, 1), OutputFormat::table);
  CHECK(table.find("b2_X") != std::string::npos);
  CHECK(table.find("ample_certified, free") != std::string::npos);
  CHECK(table.find("in_theorem_range") != std::string::npos);
  CHECK_THROWS_AS(emit_report(theorem_report(4, 1), OutputFormat::csv),
                  std::invalid_argument);
}

TEST_CASE("certificate JSON") {
  const LatticeVector L = build_L(1);
  const AmpleCertificate cert = ample_test(L, 1, Int(1));
  const json j = json::parse(certificate_json(cert));
  CHECK(j.at("verdict") == "ample_certified");
  CHECK(j.at("tail_certified") == true);
  CHECK(j.at("m") == 1);
  CHECK(j.at("checked_alpha_max") == 1);
  CHECK(j.at("square") == 46);
  CHECK(j.at("fiber_degree") == 6);
  CHECK(j.at("witness").is_null());
  CHECK(j.at("target")[0] == 26);
  CHECK(j.at("hypotheses").size() == 2);

  const AmpleCertificate bad = ample_test(LatticeVector::h(), 0);
  const json jb = json::parse(certificate_json(bad));
  CHECK(jb.at("verdict") == "not_ample");
  CHECK(jb.at("m").is_null());
  CHECK(jb.at("witness").at("alpha") == 0);
  CHECK(jb.at("witness").at("kind") == "minus_one");
  CHECK(jb.at("witness").at("beta")[0] == -1);
}

TEST_CASE("d-semistability and pullback JSON") {
  const json jd = json::parse(d_semistability_json(d_semistability_check(2)));
  CHECK(jd.at("m") == 2);
  CHECK(jd.at("holds") == true);
  CHECK(jd.at("lhs") == jd.at("rhs"));

  const Int big("1000000000000");
  const LatticeVector closed = phi_pullback_closed(big);
  const json jp = json::parse(pullback_json(big, closed, closed));
  CHECK(jp.at("equal") == true);
  // 27 m^2 + 1 is far past 2^53 and must arrive as a decimal string.
  CHECK(jp.at("closed")[0].is_string());
  CHECK(jp.at("closed")[0].get<std::string>() == "27000000000000000000000001");
  CHECK(jp.at("m") == 1000000000000);
}

TEST_CASE("word application JSON") {
  const CremonaWord w = CremonaWord::parse("1,2,3;4,5,6");
  const LatticeVector in = LatticeVector::h();
  const json j = json::parse(word_application_json(w, in, apply_word(w, in)));
  CHECK(j.at("word").size() == 2);
  CHECK(j.at("word")[0] == json::array({1, 2, 3}));
  CHECK(j.at("input")[0] == 1);
  CHECK(j.at("output")[0] == 4);
}

TEST_CASE("betti JSON") {
  const SurfaceModel s3 = SurfaceModel::for_dimension(3);
  const json j = json::parse(betti_json(s3, 1, false));
  CHECK(j.at("n") == 3);
  CHECK(j.at("rho_T") == 2);
  CHECK(j.at("ambient_rank") == 12);
  CHECK(j.at("quotient_rank") == 11);
  CHECK(j.at("b2_X0") == 4);
  CHECK(j.at("b2_X") == 3);
  CHECK(j.at("image_rank") == 4);
  CHECK(!j.contains("matrices"));

  const json jm = json::parse(betti_json(s3, 1, true));
  REQUIRE(jm.contains("matrices"));
  CHECK(jm.at("matrices").at("restriction").size() == 12);
  CHECK(jm.at("matrices").at("restriction")[0].size() == 8);
  CHECK(jm.at("matrices").at("smith_invariants").size() == 5);
}

TEST_CASE("curve CSV") {
  const std::string csv = curve_csv(enumerate_minus_one_classes(0));
  std::size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 10);
  CHECK(csv.rfind("alpha,beta1,beta2,beta3,beta4,beta5,beta6,beta7,beta8,beta9\n", 0) == 0);
  CHECK(csv.find("\n0,-1,0,0,0,0,0,0,0,0\n") != std::string::npos);
  CHECK(csv.find("\n0,0,0,0,0,0,0,0,0,-1\n") != std::string::npos);
}

TEST_CASE("suite configuration validation") {
  SuiteConfig cfg;
  cfg.m_max = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.m_max = 1;
  cfg.alpha_cap = -1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.alpha_cap = 0;
  cfg.n_set = {};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.n_set = {0};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.n_set = {1, 2};
  cfg.validate();
}

TEST_CASE("verification suite") {
  SuiteConfig cfg;
  cfg.m_max = 2;
  cfg.alpha_cap = 2;
  cfg.n_set = {1, 2, 3};
  const SuiteSummary s = run_suite(cfg);
  REQUIRE(s.checks.size() == 7);
  CHECK(s.all_passed());
  CHECK(!s.first_failure());
  CHECK(s.checks[0].name == "reflection-properties");
  CHECK(s.checks[1].name == "pullback-closed-vs-iterative");
  CHECK(s.checks[2].name == "lm-cm-identities");
  CHECK(s.checks[3].name == "ampleness-certificates");
  CHECK(s.checks[4].name == "d-semistability");
  CHECK(s.checks[5].name == "betti-grid");
  CHECK(s.checks[6].name == "euler-grid");

  const json j = json::parse(suite_summary_json(s));
  CHECK(j.at("all_passed") == true);
  CHECK(j.at("checks").size() == 7);
  CHECK(j.at("config").at("m_max") == 2);

  const std::string table = suite_summary_table(s);
  CHECK(table.find("PASS") != std::string::npos);
  CHECK(table.find("all checks passed") != std::string::npos);
}

TEST_CASE("suite fault injection trips the d-semistability check") {
  SuiteConfig cfg;
  cfg.m_max = 1;
  cfg.alpha_cap = 1;
  cfg.n_set = {2};
  cfg.inject_d_fault = true;
  const SuiteSummary s = run_suite(cfg);
  CHECK(!s.all_passed());
  REQUIRE(s.first_failure());
  CHECK(*s.first_failure() == "d-semistability");
  for (const CheckResult& c : s.checks)
    if (c.name != "d-semistability") CHECK(c.passed);

  const std::string table = suite_summary_table(s);
  CHECK(table.find("FAIL") != std::string::npos);
  CHECK(table.find("FAILED: d-semistability") != std::string::npos);
}
