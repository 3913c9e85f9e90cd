#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cantor {

/// Exact rational arithmetic backed by GMP. Values are always canonical:
/// lowest terms, positive denominator, zero stored as 0/1.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long long n) : value_(make_int(n)) {}  // NOLINT: implicit by design
  Rational(long long num, long long den) : value_(make_int(num)) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ /= make_int(den);
  }
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  /// Parses "p/q" or "p" with an optional leading sign on p; q must be a
  /// positive decimal integer.
  static Rational parse(std::string_view text);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Largest integer <= value (floor division, exact).
  mpz_class floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num().get_mpz_t(), value_.get_den().get_mpz_t());
    return q;
  }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(mpq_class(value_.get_den(), value_.get_num()));
  }

  /// Exact nonnegative integer power.
  Rational pow(unsigned long e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), value_.get_den().get_mpz_t(), e);
    Rational r;
    r.value_ = mpq_class(n, d);  // coprime stays coprime under powers
    return r;
  }

  double to_double() const { return value_.get_d(); }

  /// "p" when integral, else "p/q".
  std::string str() const;
  /// Always "p/q", even for integers.
  std::string str_fraction() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ + b.value_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ - b.value_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ * b.value_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.value_ / b.value_));
  }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  static mpq_class make_int(long long n) {
    static_assert(sizeof(long) == sizeof(long long), "LP64 assumed");
    return mpq_class(static_cast<long>(n));
  }

  mpq_class value_;
};

}  // namespace cantor
