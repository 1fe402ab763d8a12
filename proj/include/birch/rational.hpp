#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace birch {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator. Backed by GMP.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT

  template <std::unsigned_integral T>
  Rational(T value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT

  /// Throws std::domain_error when den == 0.
  Rational(long num, long den);

  explicit Rational(mpq_class value);

  /// Accepts an integer ("-7"), a fraction ("3/-12") or a finite decimal
  /// ("0.25", "-.5", "2."). Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  /// "a" for integers, "a/b" otherwise.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  /// Throws std::domain_error for zero.
  Rational inverse() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Integer power with a nonnegative exponent.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace birch
