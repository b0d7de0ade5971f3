#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "beurling/io.hpp"
#include "beurling/verify.hpp"

using namespace beurling;

namespace {
const MobiusTable& table() {
  static const MobiusTable t = sieve(1000, 1000);
  return t;
}
const ConstructionState& state300() {
  static const ConstructionState s = run(300);
  return s;
}
}  // namespace

TEST_CASE("conjecture 2 passes on honest runs") {
  const Report r15 = check_conjecture2(run(15), table(), 15);
  CHECK(r15.passed);

  CHECK(check_conjecture2(run(2), table(), 2).passed);
  CHECK(check_conjecture2(state300(), table(), 300).passed);
}

TEST_CASE("conjecture 2 localizes a corrupted sequence") {
  ConstructionState bad = run(15);
  bad.ks[4] = 8;  // 6 -> 8 (8 = 2^3 is not square-free)
  const Report r = check_conjecture2(bad, table(), 15);
  CHECK(!r.passed);
  REQUIRE(r.first_failure.has_value());
  CHECK(r.first_failure->index == 6);

  ConstructionState shorter = run(15);
  shorter.ks.pop_back();
  shorter.mu_hat.pop_back();
  shorter.i -= 1;
  shorter.trace.pop_back();
  const Report r2 = check_conjecture2(shorter, table(), 15);
  CHECK(!r2.passed);
  CHECK(r2.first_failure->index == 15);
}

TEST_CASE("mobius emergence agrees with the sieve and flags tampering") {
  CHECK(check_mobius_emergence(state300(), table()).passed);

  ConstructionState bad = state300();
  bad.mu_hat[5] = Rational(1, 2);
  const Report r = check_mobius_emergence(bad, table());
  CHECK(!r.passed);
  CHECK(r.first_failure->actual == "1/2");

  ConstructionState flipped = state300();
  flipped.mu_hat[3] = -flipped.mu_hat[3];
  CHECK(!check_mobius_emergence(flipped, table()).passed);
}

TEST_CASE("conjecture 1: aligned reading holds, literal counterexample pinned at 4") {
  const Conjecture1Reports r = check_conjecture1(state300(), table(), 300);
  CHECK(r.aligned.passed);
  CHECK(r.literal_counterexample.passed);

  // A tiny run still pins the literal counterexample (the scan is
  // independent of how far the checked state went).
  const Conjecture1Reports r2 = check_conjecture1(run(2), table(), 2);
  CHECK(r2.aligned.passed);
  CHECK(r2.literal_counterexample.passed);
}

TEST_CASE("conjecture 1 notices a state the replay cannot retrace") {
  ConstructionState bad = state300();
  bad.ks[6] = 9;
  const Conjecture1Reports r = check_conjecture1(bad, table(), 300);
  CHECK(!r.aligned.passed);
  CHECK(r.aligned.first_failure->context == "replay diverged from the checked state");
}

TEST_CASE("literal counterexample requires a table reaching n = 8") {
  const MobiusTable tiny = sieve(6, 6);
  const Conjecture1Reports r = check_conjecture1(run(6), tiny, 6);
  CHECK(!r.literal_counterexample.passed);
  CHECK(r.literal_counterexample.first_failure->context ==
        "table too small to exhibit the pinned counterexample");
}

TEST_CASE("lemma 3: all five conditions hold exactly") {
  const std::vector<Report> rs = check_lemma3(state300(), table(), 300, 300);
  REQUIRE(rs.size() == 5);
  for (const Report& r : rs) {
    CAPTURE(r.check_name);
    CHECK(r.passed);
  }
}

TEST_CASE("lemma 3 failures localize") {
  ConstructionState bad = state300();
  bad.mu_hat[10] = -bad.mu_hat[10];
  const std::vector<Report> rs = check_lemma3(bad, table(), 300, 300);
  // (a) reads the tampered mu_hat against recorded b values: must fail.
  CHECK(!rs[0].passed);
  // (e)'s floor sums see it too.
  CHECK(!rs[4].passed);

  ConstructionState badv = state300();
  badv.trace[12].b_at_k = Rational(7, 3);
  const std::vector<Report> rs2 = check_lemma3(badv, table(), 300, 300);
  CHECK(!rs2[0].passed);  // (a) uses b_i(k_i)
  CHECK(!rs2[2].passed);  // (c) uses consecutive b values
}

TEST_CASE("lemma 2: flatness, -1 at the previous point, doubling chain") {
  const Report r = check_lemma2(state300(), 100, 200);
  CHECK(r.passed);
  CHECK(r.range_checked.find("max k_{i+1}/k_i") != std::string::npos);

  ConstructionState bad = state300();
  bad.ks[8] = 40;  // not the replayed value: divergence must be caught
  CHECK(!check_lemma2(bad, 100, 200).passed);
}

TEST_CASE("beta lemma scan") {
  const Report r = check_beta_lemma(12);
  CHECK(r.passed);
  CHECK(!check_beta_lemma(1).passed);
}

TEST_CASE("the verify suite is deterministic and all-green") {
  VerifySuiteConfig cfg;
  cfg.limit_k = 300;
  cfg.sieve_n = 300;
  cfg.exact_g_limit = 300;
  cfg.cap_abc = 300;
  cfg.lemma2_exhaustive_cap = 100;
  cfg.beta_a_max = 12;

  const std::vector<Report> a = run_verify_suite(cfg);
  const std::vector<Report> b = run_verify_suite(cfg);
  REQUIRE(a.size() == b.size());
  REQUIRE(a.size() == 11);
  for (std::size_t j = 0; j < a.size(); ++j) {
    CAPTURE(a[j].check_name);
    CHECK(a[j].passed);
    CHECK(report_to_json(a[j]).dump() == report_to_json(b[j]).dump());
  }
  // Reports arrive sorted by name.
  for (std::size_t j = 1; j < a.size(); ++j) CHECK(a[j - 1].check_name < a[j].check_name);
}
