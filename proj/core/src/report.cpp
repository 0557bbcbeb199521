#include "cylat/report.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cylat/cremona.hpp"

namespace cylat {

namespace {

using json = nlohmann::ordered_json;

const Int kJsonNumberLimit = Int(1) << 53;

json json_int(const Int& v) {
  if (abs(v) <= kJsonNumberLimit) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Int int_from_json(const json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  throw std::invalid_argument("expected integer or decimal string");
}

json vector_json(const LatticeVector& v) {
  json arr = json::array();
  for (std::size_t i = 0; i < LatticeVector::kRank; ++i) arr.push_back(json_int(v[i]));
  return arr;
}

json int_list_json(const std::vector<Int>& xs) {
  json arr = json::array();
  for (const Int& x : xs) arr.push_back(json_int(x));
  return arr;
}

const char* kind_name(CurveKind k) {
  switch (k) {
    case CurveKind::minus_one: return "minus_one";
    case CurveKind::minus_two_root: return "minus_two_root";
    case CurveKind::other: return "other";
  }
  throw std::logic_error("kind_name: bad value");
}

json curve_json(const CurveClass& c) {
  json j;
  j["alpha"] = json_int(c.alpha());
  json betas = json::array();
  for (int i = 1; i <= 9; ++i) betas.push_back(json_int(c.beta(i)));
  j["beta"] = betas;
  j["class"] = vector_json(c.vector);
  j["kind"] = kind_name(c.kind);
  return j;
}

json euler_json(const EulerBreakdown& b) {
  json j;
  j["n"] = b.n;
  j["m"] = json_int(b.m);
  j["sigma_n"] = json_int(b.sigma_n);
  j["d_n"] = json_int(b.d_n);
  j["delta_n"] = json_int(b.delta_n);
  j["gamma_m"] = json_int(b.gamma_m);
  j["e_T"] = json_int(b.e_T);
  j["e_X1"] = json_int(b.e_X1);
  j["e_X2"] = json_int(b.e_X2);
  j["e_X12"] = json_int(b.e_X12);
  j["e_Cm"] = json_int(b.e_Cm);
  j["e_Gamma_m"] = json_int(b.e_Gamma_m);
  j["e_X"] = json_int(b.e_X);
  return j;
}

EulerBreakdown euler_from_json(const json& j) {
  EulerBreakdown b;
  b.n = j.at("n").get<int>();
  b.m = int_from_json(j.at("m"));
  b.sigma_n = int_from_json(j.at("sigma_n"));
  b.d_n = int_from_json(j.at("d_n"));
  b.delta_n = int_from_json(j.at("delta_n"));
  b.gamma_m = int_from_json(j.at("gamma_m"));
  b.e_T = int_from_json(j.at("e_T"));
  b.e_X1 = int_from_json(j.at("e_X1"));
  b.e_X2 = int_from_json(j.at("e_X2"));
  b.e_X12 = int_from_json(j.at("e_X12"));
  b.e_Cm = int_from_json(j.at("e_Cm"));
  b.e_Gamma_m = int_from_json(j.at("e_Gamma_m"));
  b.e_X = int_from_json(j.at("e_X"));
  return b;
}

json report_json(const InvariantReport& r) {
  json j;
  j["N"] = r.N;
  j["n"] = r.n;
  j["m"] = json_int(r.m);
  j["b2_X0"] = r.b2_X0 ? json_int(*r.b2_X0) : json(nullptr);
  j["b2_X"] = r.b2_X ? json_int(*r.b2_X) : json(nullptr);
  j["e"] = json_int(r.e_X);
  j["a"] = r.a_X;
  j["in_theorem_range"] = r.in_theorem_range;
  j["b2_matches_theorem"] = r.b2_matches_theorem;
  j["L_verdict"] = r.L_verdict;
  j["L_free"] = r.L_free;
  j["C_verdict"] = r.C_verdict;
  j["C_free"] = r.C_free;
  j["d_semistable"] = r.d_semistable;
  j["hypotheses"] = r.hypotheses;
  j["euler"] = euler_json(r.euler);
  return j;
}

std::string table_line(const std::string& key, const std::string& value) {
  std::ostringstream os;
  os << std::left << std::setw(20) << key << value << '\n';
  return os.str();
}

std::string int_str(const Int& v) { return v.get_str(); }

std::string report_table(const InvariantReport& r) {
  std::string out;
  out += table_line("N", std::to_string(r.N));
  out += table_line("n", std::to_string(r.n));
  out += table_line("m", int_str(r.m));
  out += table_line("b2_X0", r.b2_X0 ? int_str(*r.b2_X0) : "-");
  out += table_line("b2_X", r.b2_X ? int_str(*r.b2_X) : "-");
  out += table_line("e", int_str(r.e_X));
  out += table_line("a", std::to_string(r.a_X));
  out += table_line("in_theorem_range", r.in_theorem_range ? "yes" : "no");
  out += table_line("b2_matches_theorem", r.b2_matches_theorem ? "yes" : "no");
  out += table_line("L", r.L_verdict + (r.L_free ? ", free" : ""));
  out += table_line("C", r.C_verdict + (r.C_free ? ", free" : ""));
  out += table_line("d_semistable", r.d_semistable ? "yes" : "no");
  return out;
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::table: return "table";
    case OutputFormat::csv: return "csv";
  }
  throw std::logic_error("to_string(OutputFormat): bad value");
}

std::string emit_report(const InvariantReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return report_json(report).dump(2) + "\n";
    case OutputFormat::table: return report_table(report);
    case OutputFormat::csv:
      throw std::invalid_argument("emit_report: csv not supported for reports");
  }
  throw std::logic_error("emit_report: bad format");
}

InvariantReport parse_report_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("parse_report_json: ") + e.what());
  }
  InvariantReport r;
  r.N = j.at("N").get<int>();
  r.n = j.at("n").get<int>();
  r.m = int_from_json(j.at("m"));
  if (!j.at("b2_X0").is_null()) r.b2_X0 = int_from_json(j.at("b2_X0"));
  if (!j.at("b2_X").is_null()) r.b2_X = int_from_json(j.at("b2_X"));
  r.e_X = int_from_json(j.at("e"));
  r.a_X = j.at("a").get<int>();
  r.in_theorem_range = j.at("in_theorem_range").get<bool>();
  r.b2_matches_theorem = j.at("b2_matches_theorem").get<bool>();
  r.L_verdict = j.at("L_verdict").get<std::string>();
  r.L_free = j.at("L_free").get<bool>();
  r.C_verdict = j.at("C_verdict").get<std::string>();
  r.C_free = j.at("C_free").get<bool>();
  r.d_semistable = j.at("d_semistable").get<bool>();
  r.hypotheses = j.at("hypotheses").get<std::vector<std::string>>();
  r.euler = euler_from_json(j.at("euler"));
  return r;
}

std::string certificate_json(const AmpleCertificate& cert) {
  json j;
  j["target"] = vector_json(cert.target);
  j["m"] = cert.m ? json_int(*cert.m) : json(nullptr);
  j["checked_alpha_max"] = cert.checked_alpha_max;
  j["square"] = json_int(cert.square);
  j["fiber_degree"] = json_int(cert.fiber_degree);
  j["tail_certified"] = cert.tail_certified;
  j["verdict"] = to_string(cert.verdict);
  j["witness"] = cert.witness ? curve_json(*cert.witness) : json(nullptr);
  j["hypotheses"] = cert.hypotheses;
  return j.dump(2) + "\n";
}

std::string d_semistability_json(const DSemistabilityReport& rep) {
  json j;
  j["m"] = json_int(rep.m);
  j["holds"] = rep.holds;
  j["lhs"] = vector_json(rep.lhs);
  j["rhs"] = vector_json(rep.rhs);
  return j.dump(2) + "\n";
}

std::string pullback_json(const Int& m, const LatticeVector& closed,
                          const LatticeVector& iterative) {
  json j;
  j["m"] = json_int(m);
  j["closed"] = vector_json(closed);
  j["iterative"] = vector_json(iterative);
  j["equal"] = closed == iterative;
  return j.dump(2) + "\n";
}

std::string word_application_json(const CremonaWord& word, const LatticeVector& input,
                                  const LatticeVector& output) {
  json j;
  json steps = json::array();
  for (const auto& t : word.steps()) steps.push_back({t[0], t[1], t[2]});
  j["word"] = steps;
  j["input"] = vector_json(input);
  j["output"] = vector_json(output);
  return j.dump(2) + "\n";
}

std::string betti_json(const SurfaceModel& model, long long m, bool emit_matrices) {
  const PicPresentation pres = pic_X12_presentation(model, make_int(m));
  json j;
  j["n"] = model.n;
  j["rho_T"] = model.rho_T;
  j["m"] = m;
  j["ambient_rank"] = pres.ambient_rank;
  j["quotient_rank"] = pres.quotient_rank;
  j["relation"] = int_list_json(pres.relation);
  j["b2_X0"] = b2_of_X0(model, m);
  j["b2_X"] = b2_of_X(model, m);
  j["image_rank"] = image_rank_in_quotient(model, m);
  if (emit_matrices) {
    const IntegerMatrix r = restriction_matrix(model, m);
    json rows = json::array();
    for (std::size_t i = 0; i < r.rows(); ++i) {
      json row = json::array();
      for (std::size_t c = 0; c < r.cols(); ++c) row.push_back(json_int(r.at(i, c)));
      rows.push_back(row);
    }
    const SmithDecomposition snf =
        smith_normal_form(r.with_appended_column(pres.relation));
    json mats;
    mats["restriction"] = rows;
    mats["smith_invariants"] = int_list_json(snf.invariants);
    j["matrices"] = mats;
  }
  return j.dump(2) + "\n";
}

std::string curve_csv(const std::vector<CurveClass>& classes) {
  std::string out = "alpha,beta1,beta2,beta3,beta4,beta5,beta6,beta7,beta8,beta9\n";
  for (const CurveClass& c : classes) {
    out += c.alpha().get_str();
    for (int i = 1; i <= 9; ++i) {
      out.push_back(',');
      out += c.beta(i).get_str();
    }
    out.push_back('\n');
  }
  return out;
}

void SuiteConfig::validate() const {
  if (m_max < 1) throw std::invalid_argument("SuiteConfig: m_max must be >= 1");
  if (alpha_cap < 0) throw std::invalid_argument("SuiteConfig: alpha_cap must be >= 0");
  if (n_set.empty()) throw std::invalid_argument("SuiteConfig: n_set must be nonempty");
  for (int n : n_set)
    if (n < 1) throw std::invalid_argument("SuiteConfig: n_set entries must be >= 1");
}

bool SuiteSummary::all_passed() const {
  for (const CheckResult& c : checks)
    if (!c.passed) return false;
  return true;
}

std::optional<std::string> SuiteSummary::first_failure() const {
  for (const CheckResult& c : checks)
    if (!c.passed) return c.name;
  return std::nullopt;
}

std::string suite_summary_json(const SuiteSummary& s) {
  json j;
  json cfg;
  cfg["m_max"] = s.config.m_max;
  cfg["alpha_cap"] = s.config.alpha_cap;
  cfg["n_set"] = s.config.n_set;
  cfg["format"] = to_string(s.config.format);
  cfg["inject_d_fault"] = s.config.inject_d_fault;
  j["config"] = cfg;
  json checks = json::array();
  for (const CheckResult& c : s.checks) {
    json jc;
    jc["name"] = c.name;
    jc["passed"] = c.passed;
    jc["seconds"] = c.seconds;
    jc["detail"] = c.detail;
    checks.push_back(jc);
  }
  j["checks"] = checks;
  j["all_passed"] = s.all_passed();
  return j.dump(2) + "\n";
}

std::string suite_summary_table(const SuiteSummary& s) {
  std::ostringstream os;
  os << std::left << std::setw(32) << "check" << std::setw(8) << "status"
     << std::setw(10) << "seconds" << "detail" << '\n';
  for (const CheckResult& c : s.checks) {
    std::ostringstream sec;
    sec << std::fixed << std::setprecision(3) << c.seconds;
    os << std::left << std::setw(32) << c.name << std::setw(8)
       << (c.passed ? "PASS" : "FAIL") << std::setw(10) << sec.str() << c.detail << '\n';
  }
  os << (s.all_passed() ? "all checks passed" : "FAILED: " + *s.first_failure()) << '\n';
  return os.str();
}

}  // namespace cylat
