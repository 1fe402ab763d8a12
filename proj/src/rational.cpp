#include "birch/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace birch {

namespace {

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty() || !all_digits(digits)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  mpz_class out(std::string(digits), 10);
  if (text.front() == '-') out = -out;
  return out;
}

}  // namespace

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::domain_error("zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(mpq_class(num, den));
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view head = text.substr(0, dot);
    std::string_view tail = text.substr(dot + 1);
    bool negative = false;
    if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
      negative = head.front() == '-';
      head.remove_prefix(1);
    }
    if ((head.empty() && tail.empty()) || !all_digits(head) || !all_digits(tail)) {
      throw std::invalid_argument("not a decimal: '" + std::string(text) + "'");
    }
    std::string digits = std::string(head) + std::string(tail);
    mpz_class num(digits.empty() ? std::string("0") : digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, tail.size());
    if (negative) num = -num;
    return Rational(mpq_class(num, den));
  }

  return Rational(mpq_class(parse_integer(text)));
}

std::string Rational::str() const { return value_.get_str(10); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

}  // namespace birch
