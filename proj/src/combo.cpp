#include "beurling/combo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace beurling {

Combo Combo::from_terms(std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.modulus < 1) throw std::invalid_argument("Combo: modulus must be >= 1");
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.modulus < b.modulus; });
  Combo out;
  for (Term& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().modulus == t.modulus) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.terms_.push_back(std::move(t));
    }
  }
  for (const Term& t : out.terms_) out.zero_sum_ += t.coeff / Rational(t.modulus);
  return out;
}

Rational Combo::abs_coeff_sum() const {
  Rational s;
  for (const Term& t : terms_) s += abs(t.coeff);
  return s;
}

Combo make_beta(std::int64_t a, std::int64_t b) {
  if (a <= 0 || b <= a) throw std::invalid_argument("make_beta: requires 0 < a < b");
  std::vector<Term> ts;
  ts.push_back({Rational(1), a});
  ts.push_back({Rational(-b, a), b});
  return Combo::from_terms(std::move(ts));
}

Combo add_scaled(Combo f, const Rational& c, const Combo& g) {
  Combo out;
  out.zero_sum_ = f.zero_sum_ + c * g.zero_sum_;
  if (c.is_zero()) {
    out.terms_ = std::move(f.terms_);
    return out;
  }
  out.terms_.reserve(f.terms_.size() + g.terms_.size());
  std::size_t fi = 0, gi = 0;
  while (fi < f.terms_.size() || gi < g.terms_.size()) {
    const bool take_f =
        gi == g.terms_.size() ||
        (fi < f.terms_.size() && f.terms_[fi].modulus <= g.terms_[gi].modulus);
    if (take_f) {
      Term t = std::move(f.terms_[fi++]);
      if (gi < g.terms_.size() && g.terms_[gi].modulus == t.modulus) {
        t.coeff += c * g.terms_[gi++].coeff;
      }
      if (!t.coeff.is_zero()) out.terms_.push_back(std::move(t));
    } else {
      Term t{c * g.terms_[gi].coeff, g.terms_[gi].modulus};
      ++gi;
      if (!t.coeff.is_zero()) out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

Rational eval_int(const Combo& f, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("eval_int: m must be >= 1");
  Rational v;
  for (const Term& t : f.terms()) {
    std::int64_t r = m % t.modulus;
    if (r != 0) v += t.coeff * Rational(r, t.modulus);
  }
  return v;
}

Rational eval_int_floor(const Combo& f, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("eval_int_floor: m must be >= 1");
  // Integer coefficients (the usual case: every leading coefficient is +-1)
  // accumulate in a machine word; anything else, or an overflow, falls back
  // to exact rational accumulation.
  std::int64_t fast = 0;
  Rational slow;
  bool have_slow = false;
  for (const Term& t : f.terms()) {
    const std::int64_t q = m / t.modulus;
    if (q == 0) continue;
    if (t.coeff.is_integer() && t.coeff.num().fits_slong_p()) {
      std::int64_t prod, next;
      if (!__builtin_mul_overflow(t.coeff.num().get_si(), q, &prod) &&
          !__builtin_sub_overflow(fast, prod, &next)) {
        fast = next;
        continue;
      }
    }
    slow -= t.coeff * Rational(q);
    have_slow = true;
  }
  Rational v = have_slow ? slow + Rational(fast) : Rational(fast);
  if (!f.zero_sum().is_zero()) v += Rational(m) * f.zero_sum();
  return v;
}

Rational eval_at(const Combo& f, const Rational& x) {
  if (x.sign() < 0) throw std::invalid_argument("eval_at: x must be >= 0");
  Rational v;
  for (const Term& t : f.terms()) v += t.coeff * frac(x / Rational(t.modulus));
  return v;
}

Rational eval_real(const Combo& f, double x) {
  if (!(x >= 1.0)) throw std::invalid_argument("eval_real: x must be >= 1");
  return eval_int(f, static_cast<std::int64_t>(std::floor(x)));
}

Rational diff_int(const Combo& f, std::int64_t m1, std::int64_t m2) {
  if (m1 < 1 || m2 < 1) throw std::invalid_argument("diff_int: points must be >= 1");
  if (!f.zero_sum().is_zero())
    throw std::domain_error("diff_int: combo must satisfy the zero-sum condition");
  std::int64_t fast = 0;
  Rational slow;
  bool have_slow = false;
  for (const Term& t : f.terms()) {
    const std::int64_t dq = m2 / t.modulus - m1 / t.modulus;
    if (dq == 0) continue;
    if (t.coeff.is_integer() && t.coeff.num().fits_slong_p()) {
      std::int64_t prod, next;
      if (!__builtin_mul_overflow(t.coeff.num().get_si(), dq, &prod) &&
          !__builtin_sub_overflow(fast, prod, &next)) {
        fast = next;
        continue;
      }
    }
    slow -= t.coeff * Rational(dq);
    have_slow = true;
  }
  return have_slow ? slow + Rational(fast) : Rational(fast);
}

std::optional<std::int64_t> period(const Combo& f, std::int64_t bound) {
  mpz_class p = 1;
  for (const Term& t : f.terms()) {
    p = lcm(p, mpz_class(static_cast<long>(t.modulus)));
    if (cmp(p, static_cast<long>(bound)) > 0) return std::nullopt;
  }
  return p.get_si();
}

std::complex<double> dirichlet_partial(const Combo& f, std::complex<double> s) {
  std::complex<double> v = 0.0;
  for (const Term& t : f.terms())
    v += t.coeff.to_double() * std::exp(-s * std::log(static_cast<double>(t.modulus)));
  return v;
}

IntegerValueWalker::IntegerValueWalker(const Combo& f, std::int64_t start)
    : f_(&f), k_(start), value_(eval_int_floor(f, start)) {}

void IntegerValueWalker::advance() {
  ++k_;
  for (const Term& t : f_->terms()) {
    if (k_ % t.modulus == 0) value_ -= t.coeff;
  }
  if (!f_->zero_sum().is_zero()) value_ += f_->zero_sum();
}

}  // namespace beurling
