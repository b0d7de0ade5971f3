#include "beurling/io.hpp"

#include <cstdio>
#include <sstream>

namespace beurling {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

nlohmann::json combo_to_json(const Combo& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Term& t : f.terms()) {
    arr.push_back({{"num", t.coeff.num_str()},
                   {"den", t.coeff.den_str()},
                   {"modulus", t.modulus}});
  }
  return arr;
}

Combo combo_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("combo_from_json: expected an array");
  std::vector<Term> ts;
  ts.reserve(j.size());
  for (const nlohmann::json& e : j) {
    ts.push_back({Rational::from_strings(e.at("num").get<std::string>(),
                                         e.at("den").get<std::string>()),
                  e.at("modulus").get<std::int64_t>()});
  }
  return Combo::from_terms(std::move(ts));
}

std::string trace_csv(const ConstructionState& state, const std::string& config_line) {
  std::ostringstream os;
  if (!config_line.empty()) os << "# " << config_line << "\n";
  os << "i,k_i,mu_hat,j_searched,b_at_ki\n";
  for (const TraceRow& row : state.trace) {
    os << row.i << "," << row.k << "," << row.mu_hat.compact_str() << "," << row.j_searched
       << "," << (row.b_at_k ? row.b_at_k->fraction_str() : "-") << "\n";
  }
  return os.str();
}

nlohmann::json trace_to_json(const ConstructionState& state, const nlohmann::json& config) {
  nlohmann::json rows = nlohmann::json::array();
  for (const TraceRow& row : state.trace) {
    nlohmann::json r{{"i", row.i},
                     {"k", row.k},
                     {"mu_hat", row.mu_hat.compact_str()},
                     {"j_searched", row.j_searched}};
    if (row.b_at_k) r["b_at_ki"] = row.b_at_k->fraction_str();
    rows.push_back(std::move(r));
  }
  return nlohmann::json{{"config", config},
                        {"rows", std::move(rows)},
                        {"final_combo", combo_to_json(state.combo)}};
}

std::string mobius_csv(const MobiusTable& table, const std::string& config_line) {
  std::ostringstream os;
  if (!config_line.empty()) os << "# " << config_line << "\n";
  os << "t,mu,g_float,g_exact\n";
  for (std::int64_t t = 1; t <= table.n; ++t) {
    os << t << "," << static_cast<int>(table.mu_at(t)) << "," << format_double(table.g(t))
       << ",";
    if (table.has_exact_g(t)) os << table.g_exact[static_cast<std::size_t>(t)].fraction_str();
    os << "\n";
  }
  return os.str();
}

nlohmann::json report_to_json(const Report& report) {
  nlohmann::json j{{"check_name", report.check_name},
                   {"range_checked", report.range_checked},
                   {"passed", report.passed}};
  if (report.first_failure) {
    j["first_failure"] = {{"index", report.first_failure->index},
                          {"expected", report.first_failure->expected},
                          {"actual", report.first_failure->actual},
                          {"context", report.first_failure->context}};
  }
  return j;
}

nlohmann::json reports_document(const std::vector<Report>& reports, const nlohmann::json& config,
                                std::optional<std::int64_t> timing_ms) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Report& r : reports) arr.push_back(report_to_json(r));
  nlohmann::json doc{{"config", config}, {"reports", std::move(arr)}};
  if (timing_ms) doc["timing_ms"] = *timing_ms;
  return doc;
}

std::string identity_csv(const std::vector<IdentityRow>& rows, const std::string& config_line) {
  std::ostringstream os;
  if (!config_line.empty()) os << "# " << config_line << "\n";
  os << "s_re,s_im,lhs_re,lhs_im,rhs_re,rhs_im,tail_bound\n";
  for (const IdentityRow& r : rows) {
    os << format_double(r.s.real()) << "," << format_double(r.s.imag()) << ","
       << format_double(r.lhs.real()) << "," << format_double(r.lhs.imag()) << ","
       << format_double(r.rhs.real()) << "," << format_double(r.rhs.imag()) << ","
       << format_double(r.tail_bound) << "\n";
  }
  return os.str();
}

std::string norms_csv(const std::vector<NormRow>& rows, const std::string& config_line) {
  std::ostringstream os;
  if (!config_line.empty()) os << "# " << config_line << "\n";
  os << "n,k_i,l2_lower,l2_upper\n";
  for (const NormRow& r : rows) {
    os << r.index << "," << r.k << "," << format_double(r.l2_lower) << ","
       << format_double(r.l2_upper) << "\n";
  }
  return os.str();
}

}  // namespace beurling
