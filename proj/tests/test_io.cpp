#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "beurling/io.hpp"

using namespace beurling;

TEST_CASE("combo json round trip with arbitrary-precision parts") {
  const Combo f = Combo::from_terms(
      {{Rational::from_strings("-123456789012345678901", "2"), 7}, {Rational(1), 2}});
  const nlohmann::json j = combo_to_json(f);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0]["modulus"] == 2);
  CHECK(j[1]["num"] == "-123456789012345678901");
  CHECK(j[1]["den"] == "2");
  CHECK(combo_from_json(j) == f);
}

TEST_CASE("combo json round trip on random combos") {
  std::mt19937 rng(424242u);
  for (int trial = 0; trial < 20; ++trial) {
    Combo f = make_beta(1, 2);
    for (int b = 0; b < 3; ++b) {
      const std::int64_t lo = 1 + static_cast<std::int64_t>(rng() % 9);
      const std::int64_t hi = lo + 1 + static_cast<std::int64_t>(rng() % 9);
      f = add_scaled(f, Rational(static_cast<long long>(rng() % 11) - 5,
                                 1 + static_cast<long long>(rng() % 4)),
                     make_beta(lo, hi));
    }
    REQUIRE(combo_from_json(combo_to_json(f)) == f);
  }
}

TEST_CASE("trace csv carries the schema and the provenance header") {
  const ConstructionState s = run(15);
  const std::string csv = trace_csv(s, "beurling construct --limit-k 15");
  CHECK(csv.rfind("# beurling construct --limit-k 15\n", 0) == 0);
  CHECK(csv.find("i,k_i,mu_hat,j_searched,b_at_ki\n") != std::string::npos);
  CHECK(csv.find("1,1,1,0,-\n") != std::string::npos);
  CHECK(csv.find("2,2,-1,0,0/1\n") != std::string::npos);
  CHECK(csv.find("4,5,-1,2,-7/6\n") != std::string::npos);
}

TEST_CASE("trace json mirrors the csv and appends the final combo") {
  const ConstructionState s = run(6);
  const nlohmann::json doc = trace_to_json(s, {{"limit_k", 6}});
  CHECK(doc["config"]["limit_k"] == 6);
  REQUIRE(doc["rows"].size() == s.trace.size());
  CHECK(doc["rows"][1]["mu_hat"] == "-1");
  CHECK(doc["rows"][1]["b_at_ki"] == "0/1");
  CHECK(combo_from_json(doc["final_combo"]) == s.combo);
}

TEST_CASE("mobius csv rows") {
  const MobiusTable t = sieve(6, 4);
  const std::string csv = mobius_csv(t, "cfg");
  CHECK(csv.rfind("# cfg\nt,mu,g_float,g_exact\n", 0) == 0);
  CHECK(csv.find("\n4,0," + format_double(t.g(4)) + ",1/6\n") != std::string::npos);
  // Beyond the exact cap the last column is empty.
  const auto line5 = csv.find("\n5,");
  REQUIRE(line5 != std::string::npos);
  const auto eol = csv.find('\n', line5 + 1);
  CHECK(csv.substr(line5, eol - line5).back() == ',');
}

TEST_CASE("report json shape and the timing toggle") {
  Report r;
  r.check_name = "demo";
  r.range_checked = "n <= 4";
  r.passed = false;
  r.first_failure = Failure{4, "x", "y", "ctx"};
  const nlohmann::json j = report_to_json(r);
  CHECK(j["passed"] == false);
  CHECK(j["first_failure"]["index"] == 4);
  CHECK(j["first_failure"]["expected"] == "x");

  const nlohmann::json with = reports_document({r}, {{"limit_k", 4}}, 123);
  const nlohmann::json without = reports_document({r}, {{"limit_k", 4}}, std::nullopt);
  CHECK(with.contains("timing_ms"));
  CHECK(!without.contains("timing_ms"));
  CHECK(without["reports"].size() == 1);
}

TEST_CASE("float formatting is value-faithful") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(std::stod(format_double(-1.2345678901234567e-12)) == -1.2345678901234567e-12);
}

TEST_CASE("analysis csv emitters") {
  const std::vector<IdentityRow> rows = {{{2.0, 0.0}, {0.25, 0.0}, {0.25, 1e-9}, 1e-8}};
  const std::string id = identity_csv(rows, "cfg");
  CHECK(id.find("s_re,s_im,lhs_re,lhs_im,rhs_re,rhs_im,tail_bound\n") != std::string::npos);
  CHECK(id.find("2,0,0.25,0,0.25,") != std::string::npos);

  const std::vector<NormRow> nr = {{4, 5, 0.25, 0.5}};
  const std::string no = norms_csv(nr, "cfg");
  CHECK(no.find("n,k_i,l2_lower,l2_upper\n") != std::string::npos);
  CHECK(no.find("4,5,0.25,0.5\n") != std::string::npos);
}
