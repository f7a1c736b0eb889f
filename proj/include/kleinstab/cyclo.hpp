#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// An element of order n is stored by its coordinates in the power basis
// 1, z, ..., z^(phi(n)-1) modulo the n-th cyclotomic polynomial, as integer
// numerators over one positive denominator coprime to their content. Equality
// of two elements of the same order is therefore coefficientwise. Elements of different
// orders are embedded into Q(zeta_lcm) before they are combined or compared.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kleinstab/rational.hpp"

namespace kleinstab {

long euler_phi(long n);

/// Integer coefficients of Phi_n, lowest degree first. Cached; thread-safe.
const std::vector<std::int64_t>& cyclotomic_polynomial(long n);

class CycloNumber {
 public:
  /// Zero of Q.
  CycloNumber();
  /// Rational embedded in Q(zeta_order).
  CycloNumber(const Rational& q, long order = 1);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  CycloNumber(I n) : CycloNumber(Rational(n)) {}  // NOLINT(google-explicit-constructor)

  /// zeta_order^exponent; the exponent is reduced modulo the order.
  static CycloNumber root(long order, long exponent);
  /// Reduces an arbitrary-length polynomial in zeta_order.
  static CycloNumber from_coeffs(long order, std::vector<Rational> poly);

  long order() const { return order_; }
  std::vector<Rational> coeffs() const;
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  /// The same number viewed in Q(zeta_target); target must be a multiple of order().
  CycloNumber embed(long target) const;

  bool is_zero() const;
  std::optional<Rational> as_rational() const;

  CycloNumber scaled(const Rational& s) const;
  /// this * zeta_order^k, by rotating exponents modulo the order.
  CycloNumber times_root(long k) const;

  CycloNumber inverse() const;
  CycloNumber conjugate() const { return galois(-1); }
  /// The automorphism zeta -> zeta^k; k must be coprime to the order.
  CycloNumber galois(long k) const;

  /// Numerical value; the absolute error is below 10^-digits up to double rounding.
  std::complex<double> approx(int digits = 17) const;

  /// Symbolic rendering: "w" for zeta_3, "z{n}^k" otherwise, or a power-basis sum.
  std::string str() const;

  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  CycloNumber& operator/=(const CycloNumber& o) { return *this *= o.inverse(); }

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }
  friend CycloNumber operator-(CycloNumber a);

  friend bool operator==(const CycloNumber& a, const CycloNumber& b);

 private:
  CycloNumber(long order, std::vector<mpz_class> num, mpz_class den);
  static void reduce_in_place(long order, std::vector<mpz_class>& poly);
  void normalize();

  long order_ = 1;
  std::vector<mpz_class> num_;
  mpz_class den_{1};
};

std::ostream& operator<<(std::ostream& os, const CycloNumber& z);

}  // namespace kleinstab
