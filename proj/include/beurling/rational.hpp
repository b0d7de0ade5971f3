#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace beurling {

/// Exact arbitrary-precision rational, always in reduced canonical form:
/// gcd(|num|, den) = 1 and den >= 1. Arithmetic and comparison are exact.
/// Immutable-friendly value type; safe to share across threads.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(n) {}
  Rational(long long n) : q_(from_int64(n)) {}

  Rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_ = mpq_class(from_int64(num), from_int64(den));
    q_.canonicalize();
  }

  explicit Rational(mpz_class z) : q_(std::move(z)) {}

  Rational(mpz_class num, mpz_class den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_ = mpq_class(std::move(num), std::move(den));
    q_.canonicalize();
  }

  // Parses decimal strings, e.g. ("-5", "6"). Used by the JSON combo format.
  static Rational from_strings(const std::string& num, const std::string& den) {
    mpz_class n, d;
    if (n.set_str(num, 10) != 0) throw std::invalid_argument("Rational: bad numerator '" + num + "'");
    if (d.set_str(den, 10) != 0) throw std::invalid_argument("Rational: bad denominator '" + den + "'");
    return Rational(std::move(n), std::move(d));
  }

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  double to_double() const { return q_.get_d(); }

  std::string num_str() const { return q_.get_num().get_str(); }
  std::string den_str() const { return q_.get_den().get_str(); }

  /// "num/den", always with the denominator ("0/1", "-5/6").
  std::string fraction_str() const { return num_str() + "/" + den_str(); }

  /// "num" when integral, "num/den" otherwise.
  std::string compact_str() const {
    return is_integer() ? num_str() : fraction_str();
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
  }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
  Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
  Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }
  Rational& operator/=(const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= b.q_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.q_))); }

  /// a^e for e >= 0.
  friend Rational pow(const Rational& a, unsigned long e) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), a.num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), a.den().get_mpz_t(), e);
    Rational r;
    r.q_ = mpq_class(std::move(n), std::move(d));  // already reduced: gcd(n,d)=1 is preserved by powers
    return r;
  }

  /// Largest integer <= a.
  friend mpz_class floor(const Rational& a) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), a.num().get_mpz_t(), a.den().get_mpz_t());
    return f;
  }

  /// Fractional part a - floor(a), in [0, 1).
  friend Rational frac(const Rational& a) {
    if (a.is_integer()) return Rational(0);
    mpz_class rem;
    mpz_fdiv_r(rem.get_mpz_t(), a.num().get_mpz_t(), a.den().get_mpz_t());
    Rational r;
    r.q_ = mpq_class(std::move(rem), a.den());  // gcd(rem, den) = gcd(num, den) = 1
    return r;
  }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  static mpz_class from_int64(long long v) {
    // mpz_import reads a magnitude; apply the sign afterwards.
    unsigned long long mag = v < 0 ? 0ULL - static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
    if (v < 0) z = -z;
    return z;
  }

  mpq_class q_;
};

}  // namespace beurling
