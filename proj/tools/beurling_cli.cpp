// Command-line front end: sieve, construct, verify, analyze, demo.
// Identical flags give byte-identical outputs; flags are echoed into every
// output header. Exit codes: 0 success / all checks pass, 1 at least one
// counterexample (verify), 2 usage or operational error.

#include <chrono>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "beurling/analysis.hpp"
#include "beurling/classic.hpp"
#include "beurling/constructor.hpp"
#include "beurling/io.hpp"
#include "beurling/mobius.hpp"
#include "beurling/verify.hpp"

namespace {

using namespace beurling;

struct Options {
  std::int64_t limit_k = 10000;
  std::int64_t sieve_n = 10000;
  std::int64_t k_trunc = 100000;
  std::int64_t t_trunc = 10000;
  std::int64_t exact_g_limit = 5000;
  std::int64_t search_limit_factor = 2;
  double tol = 1e-6;
  std::string s_grid = "2,0;3,0;0.8,3";
  std::string out;
  std::string format = "csv";
  bool timing = false;
};

std::vector<std::complex<double>> parse_s_grid(const std::string& spec) {
  std::vector<std::complex<double>> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    const auto comma = item.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("--s: expected \"re,im[;re,im...]\", got '" + item + "'");
    out.emplace_back(std::stod(item.substr(0, comma)), std::stod(item.substr(comma + 1)));
  }
  if (out.empty()) throw std::invalid_argument("--s: empty grid");
  return out;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
}

std::string echo_common(const std::string& sub, const Options& o) {
  std::ostringstream os;
  os << "beurling " << sub;
  if (sub == "construct" || sub == "verify" || sub == "analyze")
    os << " --limit-k " << o.limit_k << " --search-limit-factor " << o.search_limit_factor;
  if (sub == "sieve" || sub == "verify" || sub == "analyze")
    os << " --sieve-n " << o.sieve_n << " --exact-g-limit " << o.exact_g_limit;
  if (sub == "analyze")
    os << " --k-trunc " << o.k_trunc << " --t-trunc " << o.t_trunc << " --tol " << o.tol
       << " --s \"" << o.s_grid << "\"";
  if (sub == "sieve" || sub == "construct") os << " --format " << o.format;
  return os.str();
}

int cmd_sieve(const Options& o) {
  const MobiusTable table = sieve(o.sieve_n, o.exact_g_limit);
  if (o.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::int64_t t = 1; t <= table.n; ++t) {
      nlohmann::json r{{"t", t}, {"mu", table.mu_at(t)}, {"g_float", table.g(t)}};
      if (table.has_exact_g(t))
        r["g_exact"] = table.g_exact[static_cast<std::size_t>(t)].fraction_str();
      rows.push_back(std::move(r));
    }
    nlohmann::json doc{{"config", echo_common("sieve", o)}, {"rows", std::move(rows)}};
    write_output(o.out, doc.dump(2) + "\n");
  } else {
    write_output(o.out, mobius_csv(table, echo_common("sieve", o)));
  }
  return 0;
}

int cmd_construct(const Options& o) {
  const ConstructionState state = run(o.limit_k, o.search_limit_factor);
  if (o.format == "json") {
    nlohmann::json doc = trace_to_json(state, echo_common("construct", o));
    write_output(o.out, doc.dump(2) + "\n");
  } else {
    write_output(o.out, trace_csv(state, echo_common("construct", o)));
  }
  return 0;
}

int cmd_verify(const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  VerifySuiteConfig cfg;
  cfg.limit_k = o.limit_k;
  cfg.sieve_n = o.sieve_n;
  cfg.exact_g_limit = o.exact_g_limit;
  cfg.search_limit_factor = o.search_limit_factor;
  cfg.cap_abc = std::min<std::int64_t>(1000, o.limit_k);
  cfg.lemma2_exhaustive_cap = std::min<std::int64_t>(1000, o.limit_k);

  const std::vector<Report> reports = run_verify_suite(cfg);

  nlohmann::json config{{"subcommand", "verify"},
                        {"limit_k", cfg.limit_k},
                        {"sieve_n", cfg.sieve_n},
                        {"exact_g_limit", cfg.exact_g_limit},
                        {"search_limit_factor", cfg.search_limit_factor},
                        {"cap_abc", cfg.cap_abc},
                        {"lemma2_exhaustive_cap", cfg.lemma2_exhaustive_cap},
                        {"lemma2_sample_budget", cfg.lemma2_sample_budget},
                        {"beta_a_max", cfg.beta_a_max},
                        {"timing", o.timing}};
  std::optional<std::int64_t> timing_ms;
  if (o.timing) {
    timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  }
  nlohmann::json doc = reports_document(reports, config, timing_ms);
  write_output(o.out, doc.dump(2) + "\n");

  for (const Report& r : reports)
    if (!r.passed) return 1;
  return 0;
}

int cmd_analyze(const Options& o) {
  const std::vector<std::complex<double>> grid = parse_s_grid(o.s_grid);
  const MobiusTable table =
      sieve(std::max({o.sieve_n, o.t_trunc, o.limit_k}), o.exact_g_limit);

  // Snapshot the construction as k_i passes decade thresholds for the norm
  // sweep; the final state feeds the identity grid.
  std::vector<std::pair<std::int64_t, Combo>> snapshots;  // (i, combo)
  std::vector<std::int64_t> snapshot_ks;
  std::int64_t next_threshold = 10;
  ConstructionState state =
      run_with_observer(o.limit_k, o.search_limit_factor, [&](const ConstructionState& s) {
        if (s.ks.back() >= next_threshold) {
          snapshots.emplace_back(s.i, s.combo);
          snapshot_ks.push_back(s.ks.back());
          while (next_threshold <= s.ks.back()) next_threshold *= 10;
        }
      });

  std::vector<IdentityRow> identity;
  for (const std::complex<double>& s : grid) {
    const Eq2Result r = eq2_check(state.combo, s, o.k_trunc, o.tol);
    identity.push_back({s, r.lhs, r.rhs, r.lhs_tail_bound + r.rhs_err_bound});
  }

  std::vector<NormRow> norms;
  for (std::size_t j = 0; j < snapshots.size(); ++j) {
    const L2Result l2 = l2_distance_sq(snapshots[j].second, o.k_trunc);
    norms.push_back({snapshots[j].first, snapshot_ks[j], l2.lower.to_double(),
                     l2.upper.to_double()});
  }

  const std::string echo = echo_common("analyze", o);
  const std::string id_csv = identity_csv(identity, echo);
  const std::string no_csv = norms_csv(norms, echo);
  if (o.out.empty()) {
    std::cout << id_csv << no_csv;
  } else {
    write_output(o.out + ".identity.csv", id_csv);
    write_output(o.out + ".norms.csv", no_csv);
  }
  return 0;
}

int cmd_demo(const Options& o) {
  std::ostringstream os;
  const MobiusTable table = sieve(1000, 1000);
  const ConstructionState s15 = run(15);

  os << "Iterative construction of step Beurling functions\n";
  os << "==================================================\n\n";
  os << "K up to 15:";
  for (std::int64_t k : s15.ks) os << " " << k;
  os << "\n(square-free numbers up to 15, with mu emerging as the value jumps)\n\n";

  os << "trace (i, k_i, mu_hat, j_searched, b_i(k_i)):\n";
  os << trace_csv(s15, "") << "\n";

  const ConstructionState s1000 = run(1000);
  const Report c2 = check_conjecture2(s1000, table, 1000);
  const Report em = check_mobius_emergence(s1000, table);
  os << "conjecture 2 (K = M) up to 1000: " << (c2.passed ? "pass" : "FAIL") << " ("
     << s1000.ks.size() << " points)\n";
  os << "mobius emergence up to 1000:     " << (em.passed ? "pass" : "FAIL") << "\n\n";

  // The two readings of conjecture 1 at n = 4.
  ConstructionState s4 = step(step(init()));
  const Combo B4 = build_B(4, table);
  const Combo B5 = build_B(5, table);
  os << "b_4 terms:  ";
  for (const Term& t : s4.combo.terms()) os << "(" << t.coeff.compact_str() << "," << t.modulus << ") ";
  os << "\nB_4 terms:  ";
  for (const Term& t : B4.terms()) os << "(" << t.coeff.compact_str() << "," << t.modulus << ") ";
  os << "\nB_5 terms:  ";
  for (const Term& t : B5.terms()) os << "(" << t.coeff.compact_str() << "," << t.modulus << ") ";
  os << "\nliteral reading b_4 = B_4: " << (s4.combo == B4 ? "holds" : "fails")
     << "; aligned reading b_4 = B_{k_4} = B_5: " << (s4.combo == B5 ? "holds" : "fails")
     << "\n\n";

  const Combo b2 = init().combo;
  const Eq2Result eq2 = eq2_check(b2, {2.0, 0.0}, 20000, 1e-6);
  os << "integral/series identity for b_2 at s = 2:\n";
  os << "  series side  = " << format_double(eq2.lhs.real()) << "\n";
  os << "  1 - zeta(2)/2 = " << format_double(eq2.rhs.real()) << " (= 1 - pi^2/12)\n";
  os << "  agree within bounds: " << (eq2.agree ? "yes" : "NO") << "\n\n";

  const L2Result l2 = l2_distance_sq(b2, 10000);
  os << "||b_2 + 1||^2 bracketing at K = 10^4: [" << format_double(l2.lower.to_double())
     << ", " << format_double(l2.upper.to_double()) << "] contains 1 - ln 2 = "
     << format_double(1.0 - std::log(2.0)) << "\n\n";

  const Combo b3 = step(init()).combo;
  const PeriodEnergy pe = period_energy(b3, 1'000'000);
  os << "period energy of b_3: p = " << pe.p << ", a = " << pe.a.fraction_str()
     << ", a/p = " << format_double(pe.ratio)
     << " (the linear l^2 growth rate; the norm series diverges)\n";

  write_output(o.out, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for the iterative construction of step Beurling "
               "functions, the emergent Moebius data, and the related identities"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--out", o.out, "output path (stdout when omitted)");
    if (with_format)
      sub->add_option("--format", o.format, "csv|json")
          ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* sc_sieve = app.add_subcommand("sieve", "Moebius sieve + g(t) prefix sums");
  sc_sieve->add_option("--sieve-n", o.sieve_n, "sieve limit N")->check(CLI::PositiveNumber);
  sc_sieve->add_option("--exact-g-limit", o.exact_g_limit, "cap for exact g(t)");
  add_common(sc_sieve, true);

  CLI::App* sc_construct = app.add_subcommand("construct", "run the iterative construction");
  sc_construct->add_option("--limit-k", o.limit_k, "generate k_i up to this bound")
      ->check(CLI::PositiveNumber);
  sc_construct->add_option("--search-limit-factor", o.search_limit_factor,
                           "per-step search limit = factor * k_i");
  add_common(sc_construct, true);

  CLI::App* sc_verify = app.add_subcommand("verify", "conjecture/lemma harness");
  sc_verify->add_option("--limit-k", o.limit_k, "construction bound")->check(CLI::PositiveNumber);
  sc_verify->add_option("--sieve-n", o.sieve_n, "sieve limit (>= limit-k)");
  sc_verify->add_option("--exact-g-limit", o.exact_g_limit, "cap for exact g(t)");
  sc_verify->add_option("--search-limit-factor", o.search_limit_factor, "search limit factor");
  sc_verify->add_flag("--timing", o.timing, "include timing_ms in the report JSON");
  add_common(sc_verify, false);

  CLI::App* sc_analyze = app.add_subcommand("analyze", "identity grids and norm sweeps");
  sc_analyze->add_option("--limit-k", o.limit_k, "construction bound")->check(CLI::PositiveNumber);
  sc_analyze->add_option("--sieve-n", o.sieve_n, "sieve limit");
  sc_analyze->add_option("--k-trunc", o.k_trunc, "series truncation K");
  sc_analyze->add_option("--t-trunc", o.t_trunc, "integral truncation T");
  sc_analyze->add_option("--tol", o.tol, "agreement tolerance");
  sc_analyze->add_option("--s", o.s_grid, "s grid: \"re,im[;re,im...]\"");
  sc_analyze->add_option("--exact-g-limit", o.exact_g_limit, "cap for exact g(t)");
  sc_analyze->add_option("--search-limit-factor", o.search_limit_factor, "search limit factor");
  add_common(sc_analyze, false);

  CLI::App* sc_demo = app.add_subcommand("demo", "reproduce the K listing and a summary page");
  add_common(sc_demo, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (sc_sieve->parsed()) return cmd_sieve(o);
    if (sc_construct->parsed()) return cmd_construct(o);
    if (sc_verify->parsed()) return cmd_verify(o);
    if (sc_analyze->parsed()) return cmd_analyze(o);
    if (sc_demo->parsed()) return cmd_demo(o);
  } catch (const StalledSearch& e) {
    std::cerr << "stalled: " << e.what() << "\n";
    nlohmann::json snapshot{{"error", "StalledSearch"},
                            {"search_limit", e.search_limit},
                            {"ks", e.state.ks},
                            {"combo", combo_to_json(e.state.combo)}};
    std::cerr << snapshot.dump(2) << "\n";
    return 2;
  } catch (const ConjectureViolation& e) {
    std::cerr << "conjecture violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
