#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "beurling/combo.hpp"
#include "beurling/mobius.hpp"

namespace beurling {

/// zeta(s) with a rigorous error bound, computed through the alternating
/// eta series (Borwein-accelerated for Re s >= 1/2, plain partial sums with
/// an Abel remainder bound for 0 < Re s < 1/2). Requires Re s > 0 and s not
/// too close to a zero of 1 - 2^{1-s}.
struct ZetaResult {
  std::complex<double> value;
  double err_bound = 0.0;
  int terms_used = 0;
};
ZetaResult zeta_eta(std::complex<double> s);

/// A truncated series value with a proven bound on the omitted tail.
struct SeriesResult {
  std::complex<double> value;
  double tail_bound = 0.0;
  std::int64_t terms_used = 0;
};

/// First integer k with f(k) != -1 (the m of the integral-to-series lemma:
/// F = -1 on (1/m, 1]). Scans up to scan_bound (default 4*max_modulus + 2)
/// and throws if the prefix never breaks.
std::int64_t flat_prefix_end(const Combo& f, std::int64_t scan_bound = 0);

/// sum_{k=m}^{K} f(k) [k^{-s} - (k+1)^{-s}] + m^{-s} with
/// tail_bound = sup|f| |s| / (sigma K^sigma). Requires Re s > 0 and
/// f(k) = -1 for k < m (checked; the violating k is named).
SeriesResult mellin_series(const Combo& f, std::int64_t m, std::complex<double> s,
                           std::int64_t k_trunc);

/// Both sides of the integral/series identity: lhs is the mellin series at
/// the hypothesis point m, rhs = 1 - zeta(s) * dirichlet_partial(f, s).
/// agree iff |lhs - rhs| <= lhs_tail_bound + rhs_err_bound + tol.
/// Requires zero_sum(f) = 0 (the pole term must vanish) and Re s > 0, s != 1.
struct Eq2Result {
  std::complex<double> lhs;
  std::complex<double> rhs;
  double lhs_tail_bound = 0.0;
  double rhs_err_bound = 0.0;
  std::int64_t m = 0;
  bool agree = false;
};
Eq2Result eq2_check(const Combo& f, std::complex<double> s, std::int64_t k_trunc,
                    double tol = 1e-6);

/// The B_n specialization: lhs = sum_{k=n}^{T} B_n(k)[k^{-s}-(k+1)^{-s}],
/// rhs = zeta(s) sum_{k=n}^{T-1} g(k)[k^{1-s}-(k+1)^{1-s}] - n^{-s} (the
/// step-function integral evaluated exactly, the (s-1) factors cancelling).
/// Requires Re s > 1.
struct Eq31Result {
  std::complex<double> lhs;
  std::complex<double> rhs;
  double lhs_tail_bound = 0.0;
  double rhs_err_bound = 0.0;
  bool agree = false;
};
Eq31Result eq31_check(std::int64_t n, std::complex<double> s, const MobiusTable& table,
                      std::int64_t t_trunc, double tol = 1e-6);

/// Exact bracketing of ||F + 1||^2 in L^2([0,1]):
/// lower = sum_{k=1}^{K} (f(k)+1)^2 (1/k - 1/(k+1)), upper adds the crude
/// but rigorous tail (1 + sum|c_j|)^2 / (K+1). Both exact rationals.
struct L2Result {
  Rational lower;
  Rational upper;
  std::int64_t k_trunc = 0;
};
L2Result l2_distance_sq(const Combo& f, std::int64_t k_trunc);

/// Period p = lcm of moduli (error beyond period_cap) and the per-period
/// squared mass a = sum_{k=1}^{p} f(k)^2; ratio = a/p drives the linear
/// growth of the l^2 partial sums.
struct PeriodEnergy {
  std::int64_t p = 1;
  Rational a;
  double ratio = 0.0;
};
PeriodEnergy period_energy(const Combo& f, std::int64_t period_cap);

/// Partial sums sum_{k=m}^{N} f(k)^2 over the given N list (ascending,
/// >= m), with the bracketing (a/p)(N-m) <= sum <= (a/p)N checked exactly
/// at every N that is a multiple of the period, and the empirical slope of
/// the partial sums.
struct GrowthRow {
  std::int64_t n = 0;
  Rational sum;
  bool bracket_checked = false;
  bool bracket_ok = false;
};
struct GrowthResult {
  std::vector<GrowthRow> rows;
  double slope = 0.0;
  PeriodEnergy energy;
};
GrowthResult l2_growth_demo(const Combo& f, std::int64_t m, std::span<const std::int64_t> n_list,
                            std::int64_t period_cap);

/// The finite-K budget of the Schwarz-inequality analogue:
///   factor1 = (sum_{k=m}^{K} f(k)^2)^{1/2}               (divergent in K)
///   factor2 = (sum_{k=m}^{K} |k^{-s}-(k+1)^{-s}|^2 + tail)^{1/2}
///   bound   = m^{-sigma} + factor1 * factor2 + series tail allowances
///   lhs     = |1 - zeta(s) dirichlet_partial(f, s)|
/// holds iff lhs <= bound. Requires Re s > 1/2 and f = -1 below m.
struct SchwarzResult {
  double factor1 = 0.0;
  double factor2 = 0.0;
  double factor2_tail_bound = 0.0;
  double series_tail_bound = 0.0;
  double bound = 0.0;
  double lhs = 0.0;
  bool holds = false;
};
SchwarzResult schwarz_budget(const Combo& f, std::int64_t m, std::complex<double> s,
                             std::int64_t k_trunc);

/// The two exact routes of the per-interval decomposition behind the
/// integral-to-series lemma, at integer s >= 2 where the antiderivatives are
/// rational at rational endpoints:
///   interval_integral_scaled: s * int_{1/(k+1)}^{1/k} (F(x)+1) x^{s-1} dx
///     from the combo coefficients and floor data alone;
///   interval_series_term:     (f(k)+1) (k^{-s} - (k+1)^{-s}) via eval_int.
/// For zero-sum combos the two agree exactly, term by term.
Rational interval_integral_scaled(const Combo& f, std::int64_t k, int s);
Rational interval_series_term(const Combo& f, std::int64_t k, int s);

}  // namespace beurling
