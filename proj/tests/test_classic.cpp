#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "beurling/classic.hpp"
#include "beurling/constructor.hpp"

using namespace beurling;

namespace {
const MobiusTable& table() {
  static const MobiusTable t = sieve(400, 400);
  return t;
}
}  // namespace

TEST_CASE("build_S lists the mu terms verbatim") {
  const Combo s2 = build_S(2, table());
  REQUIRE(s2.size() == 2);
  CHECK(s2.terms()[0] == Term{Rational(1), 1});
  CHECK(s2.terms()[1] == Term{Rational(-1), 2});

  const Combo s1 = build_S(1, table());
  REQUIRE(s1.size() == 1);
  CHECK(s1.terms()[0] == Term{Rational(1), 1});

  CHECK(zero_sum(build_S(4, table())) == Rational(1, 6));  // = g(4)
  CHECK_THROWS_AS(build_S(0, table()), std::out_of_range);
  CHECK_THROWS_AS(build_S(401, table()), std::out_of_range);
}

TEST_CASE("build_B matches the frozen examples") {
  const Combo b5 = build_B(5, table());
  CHECK(b5 == Combo::from_terms({{Rational(1), 1},
                                 {Rational(-1), 2},
                                 {Rational(-1), 3},
                                 {Rational(-5, 6), 5}}));

  // B_2 equals the construction seed b_2.
  CHECK(build_B(2, table()) == init().combo);

  // mu(4) = 0, yet the modulus-4 tail is present with coefficient -4 g(3).
  const Combo b4 = build_B(4, table());
  CHECK(b4 == Combo::from_terms({{Rational(1), 1},
                                 {Rational(-1), 2},
                                 {Rational(-1), 3},
                                 {Rational(-2, 3), 4}}));

  CHECK_THROWS_AS(build_B(1, table()), std::out_of_range);
}

TEST_CASE("build_V reduces the modulus-1 coefficient by g(n)") {
  const Combo v2 = build_V(2, table());
  CHECK(v2 == Combo::from_terms({{Rational(1, 2), 1}, {Rational(-1), 2}}));

  // 1 - g(1) = 0: the modulus-1 term cancels entirely.
  CHECK(build_V(1, table()).empty());

  CHECK(zero_sum(build_V(7, table())).is_zero());
}

TEST_CASE("zero-sum behaviour across the range") {
  for (std::int64_t n = 2; n <= 400; ++n) {
    REQUIRE(zero_sum(build_B(n, table())).is_zero());
    REQUIRE(zero_sum(build_V(n, table())).is_zero());
    REQUIRE(zero_sum(build_S(n, table())) ==
            g_value(table(), n));
  }
}

TEST_CASE("the two displayed forms of B_n agree for every n in range") {
  // build_B asserts the equality internally; surviving the loop is the test.
  for (std::int64_t n = 2; n <= 400; ++n) CHECK(!build_B(n, table()).empty());
}

TEST_CASE("range errors: exact g is required") {
  const MobiusTable small = sieve(100, 10);
  CHECK(!build_S(50, small).empty());            // S needs no exact g
  CHECK_THROWS_AS(build_B(11, small), std::out_of_range);
  CHECK_THROWS_AS(build_V(11, small), std::out_of_range);
  CHECK(!build_B(10, small).empty());
}
