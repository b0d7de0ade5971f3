#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "beurling/rational.hpp"

namespace beurling {

/// One term c * frac(x / modulus).
struct Term {
  Rational coeff;
  std::int64_t modulus = 1;
  bool operator==(const Term&) const = default;
};

/// A finite linear combination f(x) = sum_j c_j * frac(x / m_j) with integer
/// moduli, kept canonical: moduli strictly increasing, no zero coefficients.
/// Equality of canonical forms is equality of the represented functions.
/// Immutable value type; the zero-sum sum_j c_j / m_j is cached on build.
class Combo {
 public:
  Combo() = default;

  /// Canonicalizes: sorts by modulus, merges repeated moduli, drops zero
  /// coefficients. Rejects moduli < 1.
  static Combo from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// sum_j c_j / m_j (Eq-style zero-sum condition holds iff this is 0).
  const Rational& zero_sum() const { return zero_sum_; }

  std::int64_t max_modulus() const { return terms_.empty() ? 1 : terms_.back().modulus; }

  /// sum_j |c_j|, a pointwise bound on |f| since each frac factor is < 1.
  Rational abs_coeff_sum() const;

  bool operator==(const Combo& other) const { return terms_ == other.terms_; }

 private:
  friend Combo add_scaled(Combo f, const Rational& c, const Combo& g);
  std::vector<Term> terms_;
  Rational zero_sum_;
};

/// Beurling binomial beta_{a,b}(x) = frac(x/a) - (b/a) frac(x/b).
/// Requires 0 < a < b; zero-sum by construction.
Combo make_beta(std::int64_t a, std::int64_t b);

/// f + c * g, canonicalized. Merges the two sorted term lists and carries
/// the zero-sum forward as zs(f) + c*zs(g), so the one huge-denominator
/// coefficient is never re-summed.
Combo add_scaled(Combo f, const Rational& c, const Combo& g);

inline Rational zero_sum(const Combo& f) { return f.zero_sum(); }

/// f(m) = sum_j c_j (m mod m_j)/m_j for integer m >= 1. Reference form.
Rational eval_int(const Combo& f, std::int64_t m);

/// Same value as eval_int, computed as m*zero_sum - sum_j c_j floor(m/m_j).
/// For zero-sum combos with small leading coefficients this never mixes the
/// one huge-denominator tail coefficient into the accumulation unless its
/// floor is nonzero, which keeps bulk evaluation in small-number arithmetic.
Rational eval_int_floor(const Combo& f, std::int64_t m);

/// Exact pointwise value at a rational argument x >= 0.
Rational eval_at(const Combo& f, const Rational& x);

/// Real-argument convenience: the step value eval_int(f, floor(x)), x >= 1.
Rational eval_real(const Combo& f, double x);

/// f(m2) - f(m1) via -sum_j c_j (floor(m2/m_j) - floor(m1/m_j)); the linear
/// parts cancel only under the zero-sum condition, so combos with
/// zero_sum != 0 are rejected (std::domain_error). Terms whose floor does not
/// change contribute nothing and cost no rational arithmetic.
Rational diff_int(const Combo& f, std::int64_t m1, std::int64_t m2);

/// lcm of the moduli if it fits below `bound`, nullopt on overflow.
std::optional<std::int64_t> period(const Combo& f,
                                   std::int64_t bound = std::numeric_limits<std::int64_t>::max());

/// sum_j c_j m_j^{-s}, floating point (the partial Dirichlet series that
/// approximates 1/zeta(s) under the Beurling criterion).
std::complex<double> dirichlet_partial(const Combo& f, std::complex<double> s);

/// Iterates f(k), f(k+1), ... incrementally. Advancing from k to k+1 adds
/// zero_sum - sum_{m_j | k+1} c_j, so only moduli dividing the next point
/// touch rational arithmetic. Valid for any combo.
class IntegerValueWalker {
 public:
  explicit IntegerValueWalker(const Combo& f, std::int64_t start = 1);

  std::int64_t k() const { return k_; }
  const Rational& value() const { return value_; }
  void advance();

 private:
  const Combo* f_;
  std::int64_t k_;
  Rational value_;
};

}  // namespace beurling
