#include "kleinstab/rational.hpp"

#include <ostream>

namespace kleinstab {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto valid_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den))
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  auto strip_plus = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
  mpz_class n(strip_plus(num), 10);
  mpz_class d(strip_plus(den), 10);
  if (d == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(mpq_class(n, d));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_str();
}

std::string Rational::fraction() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
  if (digits < 0) digits = 0;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // round(|q| * 10^digits) half away from zero
  mpz_class num = ::abs(value_.get_num()) * scale * 2 + value_.get_den();
  mpz_class den = value_.get_den() * 2;
  mpz_class scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  std::string digits_str = scaled.get_str();
  if (static_cast<int>(digits_str.size()) <= digits)
    digits_str.insert(0, static_cast<std::size_t>(digits + 1) - digits_str.size(), '0');
  std::string out = (sign() < 0 && scaled != 0) ? "-" : "";
  const std::size_t int_len = digits_str.size() - static_cast<std::size_t>(digits);
  out += digits_str.substr(0, int_len);
  if (digits > 0) out += "." + digits_str.substr(int_len);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational cross(const ExactComplex& a, const ExactComplex& b) { return a.re * b.im - a.im * b.re; }

}  // namespace kleinstab
