#include "beurling/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "beurling/classic.hpp"

namespace beurling {

namespace {

constexpr double kLog2 = 0.6931471805599453;

std::complex<double> cpow_int(std::int64_t base, std::complex<double> exponent) {
  return std::exp(exponent * std::log(static_cast<double>(base)));
}

// k^{-s}
std::complex<double> inv_pow(std::int64_t k, std::complex<double> s) {
  return cpow_int(k, -s);
}

void require_positive_sigma(std::complex<double> s) {
  if (!(s.real() > 0.0)) throw std::domain_error("requires Re s > 0");
}

}  // namespace

ZetaResult zeta_eta(std::complex<double> s) {
  require_positive_sigma(s);
  const double sigma = s.real();
  const double t = std::abs(s.imag());
  const std::complex<double> eta_factor = 1.0 - std::exp((1.0 - s) * kLog2);
  const double ef = std::abs(eta_factor);
  if (ef < 1e-9)
    throw std::domain_error("zeta_eta: s too close to a zero of 1 - 2^{1-s} (e.g. s = 1)");

  ZetaResult out;
  if (sigma >= 0.5) {
    // Borwein's accelerated alternating series. Published error bound for
    // Re s >= 1/2: 3/(3+sqrt 8)^n * (1+2|t|) e^{pi |t| / 2} / |1-2^{1-s}|.
    const double log_rate = std::log(3.0 + std::sqrt(8.0));
    const double target = 1e-13;
    const double log_need =
        std::log(3.0 * (1.0 + 2.0 * t) / (target * ef)) + t * 3.14159265358979323846 / 2.0;
    const int n = std::clamp(static_cast<int>(std::ceil(log_need / log_rate)) + 2, 12, 220);

    // d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), exactly.
    std::vector<Rational> d(static_cast<std::size_t>(n) + 1);
    Rational u(1, n);  // u_0 = (n-1)!/n!
    Rational acc = u;
    d[0] = Rational(n) * acc;
    for (int i = 1; i <= n; ++i) {
      u *= Rational(4LL * (n + i - 1) * (n - i + 1), static_cast<long long>(2 * i) * (2 * i - 1));
      acc += u;
      d[static_cast<std::size_t>(i)] = Rational(n) * acc;
    }

    const Rational& dn = d[static_cast<std::size_t>(n)];
    std::complex<double> sum = 0.0;
    for (int k = 0; k < n; ++k) {
      const double w = ((d[static_cast<std::size_t>(k)] - dn) / dn).to_double();
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      sum += sign * w * inv_pow(k + 1, s);
    }
    out.value = -sum / eta_factor;
    out.err_bound = 3.0 / std::pow(3.0 + std::sqrt(8.0), n) * (1.0 + 2.0 * t) *
                        std::exp(t * 3.14159265358979323846 / 2.0) / ef +
                    5e-14 * (1.0 + std::abs(out.value));
    out.terms_used = n;
    return out;
  }

  // 0 < sigma < 1/2: plain eta partial sums. Abel remainder: the partial
  // sums of (-1)^{k-1} are bounded by 1, so |tail past N| <= (N+1)^{-sigma}
  // + |s| N^{-sigma} / sigma. Slowly converging; the bound is reported as-is.
  const std::int64_t N = 2'000'000;
  std::complex<double> eta = 0.0;
  double sign = 1.0;
  for (std::int64_t k = 1; k <= N; ++k) {
    eta += sign * inv_pow(k, s);
    sign = -sign;
  }
  const double tail = std::pow(static_cast<double>(N + 1), -sigma) +
                      std::abs(s) * std::pow(static_cast<double>(N), -sigma) / sigma;
  out.value = eta / eta_factor;
  out.err_bound = tail / ef + 1e-12 * (1.0 + std::abs(out.value));
  out.terms_used = static_cast<int>(std::min<std::int64_t>(N, 1 << 30));
  return out;
}

std::int64_t flat_prefix_end(const Combo& f, std::int64_t scan_bound) {
  if (scan_bound <= 0) scan_bound = 4 * f.max_modulus() + 2;
  IntegerValueWalker w(f, 1);
  for (std::int64_t k = 1; k <= scan_bound; ++k) {
    if (!(w.value() == Rational(-1))) return k;
    w.advance();
  }
  throw std::domain_error("flat_prefix_end: f stays -1 beyond the scan bound");
}

SeriesResult mellin_series(const Combo& f, std::int64_t m, std::complex<double> s,
                           std::int64_t k_trunc) {
  require_positive_sigma(s);
  if (m < 1) throw std::invalid_argument("mellin_series: m must be >= 1");
  if (k_trunc < m) throw std::invalid_argument("mellin_series: k_trunc must be >= m");

  IntegerValueWalker w(f, 1);
  for (std::int64_t k = 1; k < m; ++k) {
    if (!(w.value() == Rational(-1)))
      throw std::domain_error("mellin_series: hypothesis F = -1 on (1/m, 1] fails at k = " +
                              std::to_string(k));
    w.advance();
  }

  SeriesResult out;
  std::complex<double> sum = 0.0;
  std::complex<double> left = inv_pow(m, s);
  for (std::int64_t k = m; k <= k_trunc; ++k) {
    const std::complex<double> right = inv_pow(k + 1, s);
    sum += w.value().to_double() * (left - right);
    left = right;
    w.advance();
  }
  out.value = sum + inv_pow(m, s);
  const double sigma = s.real();
  out.tail_bound = f.abs_coeff_sum().to_double() * std::abs(s) /
                   (sigma * std::pow(static_cast<double>(k_trunc), sigma));
  out.terms_used = k_trunc - m + 1;
  return out;
}

Eq2Result eq2_check(const Combo& f, std::complex<double> s, std::int64_t k_trunc, double tol) {
  if (!f.zero_sum().is_zero())
    throw std::domain_error("eq2_check: combo must satisfy the zero-sum condition");
  require_positive_sigma(s);

  Eq2Result out;
  out.m = flat_prefix_end(f);
  const SeriesResult mel = mellin_series(f, out.m, s, k_trunc);
  out.lhs = mel.value;
  out.lhs_tail_bound = mel.tail_bound;

  const ZetaResult z = zeta_eta(s);
  const std::complex<double> dp = dirichlet_partial(f, s);
  out.rhs = 1.0 - z.value * dp;
  out.rhs_err_bound = z.err_bound * std::abs(dp);
  out.agree = std::abs(out.lhs - out.rhs) <= out.lhs_tail_bound + out.rhs_err_bound + tol;
  return out;
}

Eq31Result eq31_check(std::int64_t n, std::complex<double> s, const MobiusTable& table,
                      std::int64_t t_trunc, double tol) {
  if (!(s.real() > 1.0)) throw std::domain_error("eq31_check: requires Re s > 1");
  if (t_trunc <= n) throw std::invalid_argument("eq31_check: t_trunc must exceed n");
  if (t_trunc > table.n) throw std::out_of_range("eq31_check: t_trunc beyond sieve range");

  const Combo bn = build_B(n, table);
  const double sigma = s.real();

  Eq31Result out;
  {
    IntegerValueWalker w(bn, n);
    std::complex<double> sum = 0.0;
    std::complex<double> left = inv_pow(n, s);
    for (std::int64_t k = n; k <= t_trunc; ++k) {
      const std::complex<double> right = inv_pow(k + 1, s);
      sum += w.value().to_double() * (left - right);
      left = right;
      w.advance();
    }
    out.lhs = sum;
    out.lhs_tail_bound = bn.abs_coeff_sum().to_double() * std::abs(s) /
                         (sigma * std::pow(static_cast<double>(t_trunc), sigma));
  }

  const ZetaResult z = zeta_eta(s);
  {
    // (s-1) zeta(s) int_n^T g(t) t^{-s} dt with g constant on [k, k+1):
    // the integral is sum g(k) (k^{1-s} - (k+1)^{1-s}) / (s-1).
    std::complex<double> gsum = 0.0;
    std::complex<double> left = cpow_int(n, 1.0 - s);
    for (std::int64_t k = n; k < t_trunc; ++k) {
      const std::complex<double> right = cpow_int(k + 1, 1.0 - s);
      gsum += table.g(k) * (left - right);
      left = right;
    }
    out.rhs = z.value * gsum - inv_pow(n, s);
    // Integral tail: |g| <= 1 (classical), so |(s-1) int_T^inf g t^{-s} dt|
    // <= |s-1| T^{1-sigma} / (sigma-1); plus the zeta error on the g sum.
    out.rhs_err_bound = std::abs(z.value) * std::abs(s - 1.0) *
                            std::pow(static_cast<double>(t_trunc), 1.0 - sigma) / (sigma - 1.0) +
                        z.err_bound * std::abs(gsum);
  }
  out.agree = std::abs(out.lhs - out.rhs) <= out.lhs_tail_bound + out.rhs_err_bound + tol;
  return out;
}

L2Result l2_distance_sq(const Combo& f, std::int64_t k_trunc) {
  if (k_trunc < 1) throw std::invalid_argument("l2_distance_sq: k_trunc must be >= 1");

  // Common-denominator accumulation: D = lcm(1..K+1) absorbs the measure
  // weights 1/(k(k+1)), C = lcm of coefficient denominators absorbs every
  // (f(k)+1)^2. One reduction at the end instead of K rational adds whose
  // gcds over ever-growing denominators dominate the cost.
  mpz_class D = 1;
  for (std::int64_t k = 2; k <= k_trunc + 1; ++k) D = lcm(D, mpz_class(static_cast<long>(k)));
  mpz_class C = 1;
  for (const Term& t : f.terms()) C = lcm(C, t.coeff.den());
  const mpz_class C2 = C * C;

  mpz_class acc = 0;
  IntegerValueWalker w(f, 1);
  for (std::int64_t k = 1; k <= k_trunc; ++k) {
    const Rational v = w.value() + Rational(1);
    if (!v.is_zero()) {
      const Rational v2 = v * v;
      mpz_class scale = C2 / v2.den();            // exact: den | C^2
      mpz_class weight;
      mpz_divexact_ui(weight.get_mpz_t(), D.get_mpz_t(),
                      static_cast<unsigned long>(k));
      mpz_class kk1;
      mpz_divexact_ui(kk1.get_mpz_t(), weight.get_mpz_t(),
                      static_cast<unsigned long>(k + 1));
      acc += v2.num() * scale * kk1;
    }
    w.advance();
  }

  L2Result out;
  out.k_trunc = k_trunc;
  out.lower = Rational(acc, D * C2);
  const Rational sup_bound = pow(Rational(1) + f.abs_coeff_sum(), 2);
  out.upper = out.lower + sup_bound / Rational(k_trunc + 1);
  return out;
}

PeriodEnergy period_energy(const Combo& f, std::int64_t period_cap) {
  const std::optional<std::int64_t> p = period(f, period_cap);
  if (!p) throw std::domain_error("period_energy: period exceeds the cap (lcm growth)");
  PeriodEnergy out;
  out.p = *p;
  IntegerValueWalker w(f, 1);
  for (std::int64_t k = 1; k <= *p; ++k) {
    out.a += w.value() * w.value();
    w.advance();
  }
  out.ratio = out.a.to_double() / static_cast<double>(*p);
  return out;
}

GrowthResult l2_growth_demo(const Combo& f, std::int64_t m, std::span<const std::int64_t> n_list,
                            std::int64_t period_cap) {
  if (m < 1) throw std::invalid_argument("l2_growth_demo: m must be >= 1");
  GrowthResult out;
  out.energy = period_energy(f, period_cap);
  if (n_list.empty()) return out;
  for (std::size_t j = 0; j < n_list.size(); ++j) {
    if (n_list[j] < m || (j > 0 && n_list[j] <= n_list[j - 1]))
      throw std::invalid_argument("l2_growth_demo: N list must be ascending and >= m");
  }

  const std::int64_t p = out.energy.p;
  const Rational& a = out.energy.a;
  Rational sum;
  IntegerValueWalker w(f, m);
  std::size_t next = 0;
  for (std::int64_t k = m; k <= n_list.back() && next < n_list.size(); ++k) {
    sum += w.value() * w.value();
    w.advance();
    while (next < n_list.size() && n_list[next] == k) {
      GrowthRow row;
      row.n = k;
      row.sum = sum;
      if (k % p == 0) {
        row.bracket_checked = true;
        const Rational lo = a * Rational(k - m);
        const Rational hi = a * Rational(k);
        const Rational scaled = sum * Rational(p);
        row.bracket_ok = lo <= scaled && scaled <= hi;
      }
      out.rows.push_back(std::move(row));
      ++next;
    }
  }

  if (out.rows.size() >= 2) {
    const GrowthRow& first = out.rows.front();
    const GrowthRow& last = out.rows.back();
    out.slope = ((last.sum - first.sum) / Rational(last.n - first.n)).to_double();
  }
  return out;
}

SchwarzResult schwarz_budget(const Combo& f, std::int64_t m, std::complex<double> s,
                             std::int64_t k_trunc) {
  if (!(s.real() > 0.5)) throw std::domain_error("schwarz_budget: requires Re s > 1/2");
  if (m < 1 || k_trunc < m) throw std::invalid_argument("schwarz_budget: bad range");
  const double sigma = s.real();

  SchwarzResult out;
  {
    IntegerValueWalker w(f, 1);
    for (std::int64_t k = 1; k < m; ++k) {
      if (!(w.value() == Rational(-1)))
        throw std::domain_error("schwarz_budget: f = -1 below m fails at k = " +
                                std::to_string(k));
      w.advance();
    }
    double sq = 0.0;
    for (std::int64_t k = m; k <= k_trunc; ++k) {
      const double v = w.value().to_double();
      sq += v * v;
      w.advance();
    }
    out.factor1 = std::sqrt(sq);
  }
  {
    double sq = 0.0;
    std::complex<double> left = inv_pow(m, s);
    for (std::int64_t k = m; k <= k_trunc; ++k) {
      const std::complex<double> right = inv_pow(k + 1, s);
      sq += std::norm(left - right);
      left = right;
    }
    // |k^{-s} - (k+1)^{-s}| <= |s| k^{-sigma-1}, so the squared tail is below
    // |s|^2 / ((2 sigma + 1) K^{2 sigma + 1}).
    out.factor2_tail_bound = std::abs(s) * std::abs(s) /
                             ((2.0 * sigma + 1.0) *
                              std::pow(static_cast<double>(k_trunc), 2.0 * sigma + 1.0));
    out.factor2 = std::sqrt(sq + out.factor2_tail_bound);
  }
  out.series_tail_bound = f.abs_coeff_sum().to_double() * std::abs(s) /
                          (sigma * std::pow(static_cast<double>(k_trunc), sigma));

  const ZetaResult z = zeta_eta(s);
  const std::complex<double> dp = dirichlet_partial(f, s);
  out.lhs = std::abs(1.0 - z.value * dp);
  out.bound = std::pow(static_cast<double>(m), -sigma) + out.factor1 * out.factor2 +
              out.series_tail_bound + z.err_bound * std::abs(dp);
  out.holds = out.lhs <= out.bound;
  return out;
}

Rational interval_integral_scaled(const Combo& f, std::int64_t k, int s) {
  if (k < 1) throw std::invalid_argument("interval_integral_scaled: k must be >= 1");
  if (s < 2) throw std::invalid_argument("interval_integral_scaled: integer s >= 2 only");
  // On (1/(k+1), 1/k] the integrand is (zs/x + 1 - sum c_j floor(k/m_j)) x^{s-1}
  // with constant floors, so the antiderivative is rational at the endpoints.
  Rational floor_part;
  for (const Term& t : f.terms()) floor_part += t.coeff * Rational(k / t.modulus);
  const Rational upper(1, k), lower(1, k + 1);
  const unsigned long us = static_cast<unsigned long>(s);
  const Rational xs = pow(upper, us) - pow(lower, us);
  const Rational xs1 = pow(upper, us - 1) - pow(lower, us - 1);
  return Rational(s) * f.zero_sum() * xs1 / Rational(s - 1) + (Rational(1) - floor_part) * xs;
}

Rational interval_series_term(const Combo& f, std::int64_t k, int s) {
  if (k < 1) throw std::invalid_argument("interval_series_term: k must be >= 1");
  if (s < 2) throw std::invalid_argument("interval_series_term: integer s >= 2 only");
  const unsigned long us = static_cast<unsigned long>(s);
  const Rational delta = pow(Rational(1, k), us) - pow(Rational(1, k + 1), us);
  return (eval_int(f, k) + Rational(1)) * delta;
}

}  // namespace beurling
