#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "beurling/rational.hpp"

namespace beurling {

/// Sieve output: mu(k) for k <= n, the square-free ("Moebius") numbers, and
/// prefix sums g(t) = sum_{k<=t} mu(k)/k both exactly (up to g_limit) and in
/// floating point (full range). Immutable after construction; concurrent
/// reads are safe.
struct MobiusTable {
  std::int64_t n = 0;
  std::int64_t g_limit = 0;            // exact g available for t in [1, g_limit]
  std::vector<std::int8_t> mu;         // index 1..n (index 0 unused)
  std::vector<std::int64_t> squarefree;
  std::vector<double> g_float;         // index 1..n
  std::vector<Rational> g_exact;       // index 1..g_limit

  std::int8_t mu_at(std::int64_t k) const;
  double g(std::int64_t t) const;
  bool has_exact_g(std::int64_t t) const { return t >= 1 && t <= g_limit; }
};

/// Linear sieve of mu up to n. g_limit caps the exact prefix sums (their
/// denominators grow like the product of primes <= t, i.e. hundreds of
/// digits by t ~ 2000).
MobiusTable sieve(std::int64_t n, std::int64_t g_limit = 5000);

/// Exact g(t); throws std::out_of_range beyond g_limit (use table.g then).
const Rational& g_value(const MobiusTable& table, std::int64_t t);

/// (count of square-free k <= n, expected 6n/pi^2 density value).
std::pair<std::int64_t, double> density_report(const MobiusTable& table);

/// max over 2 <= t <= n of |g(t)| * ln(t) and its argmax; the de la
/// Vallee-Poussin bound |g| = O(1/ln t) keeps this bounded.
std::pair<double, std::int64_t> g_log_envelope(const MobiusTable& table);

}  // namespace beurling
