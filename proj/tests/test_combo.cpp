#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "beurling/combo.hpp"

using namespace beurling;

namespace {

Combo b2() { return Combo::from_terms({{Rational(1), 1}, {Rational(-2), 2}}); }

Combo b3() {
  return Combo::from_terms({{Rational(1), 1}, {Rational(-1), 2}, {Rational(-3, 2), 3}});
}

Combo b4() {
  return Combo::from_terms(
      {{Rational(1), 1}, {Rational(-1), 2}, {Rational(-1), 3}, {Rational(-5, 6), 5}});
}

// Deterministic zero-sum combos assembled from random beta blocks.
Combo random_zero_sum(std::mt19937& rng) {
  Combo f = make_beta(1, 2);
  const int blocks = 1 + static_cast<int>(rng() % 4);
  for (int b = 0; b < blocks; ++b) {
    const std::int64_t lo = 1 + static_cast<std::int64_t>(rng() % 12);
    const std::int64_t hi = lo + 1 + static_cast<std::int64_t>(rng() % 12);
    const Rational c(static_cast<long long>(rng() % 7) - 3, 1 + static_cast<long long>(rng() % 5));
    f = add_scaled(f, c, make_beta(lo, hi));
  }
  return f;
}

Rational random_rational(std::mt19937& rng) {
  return Rational(static_cast<long long>(rng() % 19) - 9, 1 + static_cast<long long>(rng() % 6));
}

}  // namespace

TEST_CASE("make_beta produces the two-term zero-sum block") {
  const Combo beta = make_beta(2, 3);
  REQUIRE(beta.size() == 2);
  CHECK(beta.terms()[0] == Term{Rational(1), 2});
  CHECK(beta.terms()[1] == Term{Rational(-3, 2), 3});
  CHECK(zero_sum(beta).is_zero());

  CHECK(eval_int(beta, 1) == Rational(0));
  CHECK(eval_int(beta, 2) == Rational(-1));
  CHECK(eval_int(beta, 4) == Rational(-1, 2));

  CHECK_THROWS_AS(make_beta(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_beta(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_beta(0, 2), std::invalid_argument);
}

TEST_CASE("eval_int matches hand values on the construction combos") {
  CHECK(eval_int(b2(), 1) == Rational(-1));
  CHECK(eval_int(b2(), 2) == Rational(0));
  CHECK(eval_int(b3(), 5) == Rational(-3, 2));
  CHECK_THROWS_AS(eval_int(b2(), 0), std::invalid_argument);
}

TEST_CASE("diff_int equals the evaluation difference and needs zero-sum") {
  CHECK(diff_int(b3(), 3, 5) == Rational(-1));
  CHECK(diff_int(b2(), 2, 3) == Rational(-1));
  CHECK(diff_int(b4(), 7, 7) == Rational(0));

  const Combo not_zero_sum = Combo::from_terms({{Rational(1), 1}});
  CHECK_THROWS_AS(diff_int(not_zero_sum, 1, 2), std::domain_error);
}

TEST_CASE("add_scaled merges and cancels") {
  const Combo r = add_scaled(b2(), Rational(1), make_beta(2, 3));
  CHECK(r == b3());

  const Combo r2 = add_scaled(b3(), Rational(1, 2), make_beta(3, 5));
  CHECK(r2 == b4());

  // Zero scale canonicalizes the left side only.
  CHECK(add_scaled(b4(), Rational(0), make_beta(2, 9)) == b4());

  // Full cancellation leaves the empty combo.
  const Combo zero = add_scaled(b2(), Rational(-1), b2());
  CHECK(zero.empty());
  CHECK(eval_int(zero, 17) == Rational(0));
}

TEST_CASE("zero_sum values") {
  CHECK(zero_sum(b2()).is_zero());
  CHECK(zero_sum(Combo::from_terms({{Rational(1), 1}})) == Rational(1));
  CHECK(zero_sum(b4()).is_zero());
}

TEST_CASE("period is the lcm of moduli with an explicit overflow signal") {
  CHECK(period(b3()) == 6);
  CHECK(period(make_beta(2, 3)) == 6);
  CHECK(period(b3(), 5) == std::nullopt);  // configurable bound

  // Moduli = the first 60 square-free numbers; the lcm is the primorial of
  // every prime below 90 and far exceeds 2^63.
  std::vector<Term> ts;
  std::int64_t found = 0;
  for (std::int64_t k = 1; found < 60; ++k) {
    bool sf = true;
    for (std::int64_t d = 2; d * d <= k; ++d)
      if (k % (d * d) == 0) { sf = false; break; }
    if (sf) {
      ts.push_back({Rational(1), k});
      ++found;
    }
  }
  CHECK(period(Combo::from_terms(std::move(ts))) == std::nullopt);
}

TEST_CASE("dirichlet partial sums") {
  CHECK(dirichlet_partial(b2(), {2.0, 0.0}).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(dirichlet_partial(Combo::from_terms({{Rational(1), 1}}), {0.73, 4.5}).real() ==
        doctest::Approx(1.0));
  const double b4_expect = 1.0 - 1.0 / 4 - 1.0 / 9 - (5.0 / 6) / 25;
  CHECK(dirichlet_partial(b4(), {2.0, 0.0}).real() == doctest::Approx(b4_expect).epsilon(1e-14));
}

TEST_CASE("canonicalization sorts, merges, drops zeros, and is idempotent") {
  const Combo c = Combo::from_terms({{Rational(1, 2), 6},
                                     {Rational(-1), 2},
                                     {Rational(1, 2), 6},
                                     {Rational(0), 4},
                                     {Rational(1, 2), 2}});
  REQUIRE(c.size() == 2);
  CHECK(c.terms()[0] == Term{Rational(-1, 2), 2});
  CHECK(c.terms()[1] == Term{Rational(1), 6});
  CHECK(Combo::from_terms(c.terms()) == c);

  // Exact cancellation drops the modulus entirely.
  const Combo gone = Combo::from_terms({{Rational(1), 2}, {Rational(-1), 2}});
  CHECK(gone.empty());
  CHECK_THROWS_AS(Combo::from_terms({{Rational(1), 0}}), std::invalid_argument);
}

TEST_CASE("randomized: diff_int equals eval differences, both eval routes agree") {
  std::mt19937 rng(20260810u);
  for (int trial = 0; trial < 40; ++trial) {
    const Combo f = random_zero_sum(rng);
    REQUIRE(zero_sum(f).is_zero());
    for (int probe = 0; probe < 12; ++probe) {
      const std::int64_t m1 = 1 + static_cast<std::int64_t>(rng() % 10000);
      const std::int64_t m2 = 1 + static_cast<std::int64_t>(rng() % 10000);
      CHECK(diff_int(f, m1, m2) == eval_int(f, m2) - eval_int(f, m1));
      CHECK(eval_int(f, m1) == eval_int_floor(f, m1));
    }
  }
}

TEST_CASE("randomized: periodicity of integer evaluation") {
  std::mt19937 rng(77001u);
  for (int trial = 0; trial < 25; ++trial) {
    const Combo f = random_zero_sum(rng);
    const auto p = period(f);
    REQUIRE(p.has_value());
    for (int probe = 0; probe < 6; ++probe) {
      const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 500);
      CHECK(eval_int(f, m + *p) == eval_int(f, m));
    }
  }
}

TEST_CASE("randomized: add_scaled is pointwise exact") {
  std::mt19937 rng(90125u);
  for (int trial = 0; trial < 30; ++trial) {
    const Combo f = random_zero_sum(rng);
    const Combo g = random_zero_sum(rng);
    const Rational c = random_rational(rng);
    const Combo sum = add_scaled(f, c, g);
    for (int probe = 0; probe < 8; ++probe) {
      const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 3000);
      CHECK(eval_int(sum, m) == eval_int(f, m) + c * eval_int(g, m));
    }
  }
}

TEST_CASE("floor-form evaluation agrees even without zero-sum") {
  std::mt19937 rng(5150u);
  for (int trial = 0; trial < 20; ++trial) {
    Combo f = random_zero_sum(rng);
    f = add_scaled(f, Rational(1), Combo::from_terms({{random_rational(rng), 1 + static_cast<std::int64_t>(rng() % 9)}}));
    for (int probe = 0; probe < 8; ++probe) {
      const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 2000);
      CHECK(eval_int(f, m) == eval_int_floor(f, m));
    }
  }
}

TEST_CASE("exact pointwise evaluation and the step structure") {
  const Combo f = b3();
  // At integers the pointwise value is the integer evaluation.
  for (std::int64_t m = 1; m <= 12; ++m) CHECK(eval_at(f, Rational(m)) == eval_int(f, m));
  // Zero-sum combos are constant on [k, k+1).
  for (std::int64_t m = 1; m <= 12; ++m) {
    CHECK(eval_at(f, Rational(m) + Rational(1, 3)) == eval_int(f, m));
    CHECK(eval_at(f, Rational(m) + Rational(7, 9)) == eval_int(f, m));
  }
  // A non-zero-sum combo is genuinely non-constant between integers.
  const Combo s = Combo::from_terms({{Rational(1), 2}});
  CHECK(eval_at(s, Rational(5, 2)) != eval_at(s, Rational(2)));
  // Real-argument convenience is the step value at floor(x).
  CHECK(eval_real(f, 5.75) == eval_int(f, 5));
}

TEST_CASE("walker reproduces eval_int along a range") {
  std::mt19937 rng(314159u);
  for (int trial = 0; trial < 10; ++trial) {
    const Combo f = random_zero_sum(rng);
    const std::int64_t start = 1 + static_cast<std::int64_t>(rng() % 50);
    IntegerValueWalker w(f, start);
    for (std::int64_t k = start; k < start + 200; ++k) {
      CHECK(w.value() == eval_int(f, k));
      w.advance();
    }
  }
}
