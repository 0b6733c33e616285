#include "expdist/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "expdist/error.hpp"

namespace expdist {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](unsigned char c) { return std::isdigit(c) != 0; });
}

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform expected");

mpz_class to_mpz(std::int64_t v) {
  mpz_class out;
  mpz_set_si(out.get_mpz_t(), static_cast<long>(v));
  return out;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(to_mpz(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(to_mpz(num), to_mpz(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) {
    throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw Error(ErrorKind::ParseError, "not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class num{std::string(num_text)};
  const mpz_class den{std::string(den_text)};
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  Rational out;
  out.value_ = mpq_class(num, den);  // already coprime
  return out;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, to_string() + " / 0");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

bool is_canonical(const Rational& r) {
  const mpz_class num = r.numerator();
  const mpz_class den = r.denominator();
  if (den <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return g == 1;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace expdist
