#include "beurling/mobius.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace beurling {

std::int8_t MobiusTable::mu_at(std::int64_t k) const {
  if (k < 1 || k > n) throw std::out_of_range("mu_at: k outside sieve range");
  return mu[static_cast<std::size_t>(k)];
}

double MobiusTable::g(std::int64_t t) const {
  if (t < 1 || t > n) throw std::out_of_range("g: t outside sieve range");
  return g_float[static_cast<std::size_t>(t)];
}

MobiusTable sieve(std::int64_t n, std::int64_t g_limit) {
  if (n < 1) throw std::invalid_argument("sieve: n must be >= 1");
  MobiusTable t;
  t.n = n;
  t.g_limit = std::min(n, std::max<std::int64_t>(g_limit, 0));
  const std::size_t sz = static_cast<std::size_t>(n) + 1;

  std::vector<std::int64_t>& sf = t.squarefree;
  t.mu.assign(sz, 0);
  t.mu[1] = 1;

  // Linear sieve: every composite is crossed once via its smallest prime.
  std::vector<std::int32_t> primes;
  std::vector<std::int64_t> spf(sz, 0);
  for (std::int64_t i = 2; i <= n; ++i) {
    if (spf[i] == 0) {
      spf[i] = i;
      primes.push_back(static_cast<std::int32_t>(i));
      t.mu[i] = -1;
    }
    for (std::int32_t p : primes) {
      if (p > spf[i] || p * i > n) break;
      spf[p * i] = p;
      t.mu[p * i] = (p == spf[i]) ? 0 : static_cast<std::int8_t>(-t.mu[i]);
    }
  }

  sf.reserve(static_cast<std::size_t>(0.61 * static_cast<double>(n)) + 8);
  for (std::int64_t k = 1; k <= n; ++k)
    if (t.mu[k] != 0) sf.push_back(k);

  // Floating prefix sums with compensated summation so they match the exact
  // values to ~1e-15 over the whole range.
  t.g_float.assign(sz, 0.0);
  double sum = 0.0, comp = 0.0;
  for (std::int64_t k = 1; k <= n; ++k) {
    if (t.mu[k] != 0) {
      double term = static_cast<double>(t.mu[k]) / static_cast<double>(k) - comp;
      double next = sum + term;
      comp = (next - sum) - term;
      sum = next;
    }
    t.g_float[k] = sum;
  }

  t.g_exact.reserve(static_cast<std::size_t>(t.g_limit) + 1);
  t.g_exact.emplace_back();  // unused index 0
  Rational acc;
  for (std::int64_t k = 1; k <= t.g_limit; ++k) {
    if (t.mu[k] != 0) acc += Rational(static_cast<long long>(t.mu[k]), k);
    t.g_exact.push_back(acc);
  }
  return t;
}

const Rational& g_value(const MobiusTable& table, std::int64_t t) {
  if (t < 1 || t > table.g_limit)
    throw std::out_of_range("g_value: t beyond exact range; use the floating g instead");
  return table.g_exact[static_cast<std::size_t>(t)];
}

std::pair<std::int64_t, double> density_report(const MobiusTable& table) {
  const double expected =
      6.0 * static_cast<double>(table.n) / (std::numbers::pi * std::numbers::pi);
  return {static_cast<std::int64_t>(table.squarefree.size()), expected};
}

std::pair<double, std::int64_t> g_log_envelope(const MobiusTable& table) {
  double best = 0.0;
  std::int64_t arg = 2;
  for (std::int64_t t = 2; t <= table.n; ++t) {
    double v = std::abs(table.g_float[static_cast<std::size_t>(t)]) *
               std::log(static_cast<double>(t));
    if (v > best) {
      best = v;
      arg = t;
    }
  }
  return {best, arg};
}

}  // namespace beurling
