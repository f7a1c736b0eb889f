#pragma once

// Exact rational numbers backed by GMP.
//
// Values are always in lowest terms with a positive denominator; zero is 0/1.

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kleinstab {

/// Raised when a value would require dividing by zero.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an internal consistency check between two computation routes fails.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

  Rational(long numerator, long denominator);

  explicit Rational(mpq_class value);

  /// Parses "p", "-p", "p/q" (whitespace-free). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational inverse() const;

  /// "p/q", or "p" when the value is an integer.
  std::string str() const;
  /// Always "p/q", including "p/1"; this is the serialization form.
  std::string fraction() const;
  /// Decimal rendering rounded half away from zero to `digits` fractional digits.
  std::string decimal(int digits) const;
  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Exact complex number with rational parts.
struct ExactComplex {
  Rational re;
  Rational im;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  friend bool operator==(const ExactComplex&, const ExactComplex&) = default;
  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend ExactComplex operator*(const Rational& s, const ExactComplex& z) { return {s * z.re, s * z.im}; }
  friend ExactComplex operator*(const ExactComplex& z, const Rational& s) { return {s * z.re, s * z.im}; }
};

/// Im(conj(a)·b): positive iff b is strictly counter-clockwise from a (within a half turn).
Rational cross(const ExactComplex& a, const ExactComplex& b);

}  // namespace kleinstab
