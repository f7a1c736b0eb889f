#include "kleinstab/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <mpfr.h>

namespace kleinstab {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

// p - q * x^shift * c, in place
void sub_scaled(Poly& p, const Poly& q, const Rational& c, std::size_t shift) {
  if (p.size() < q.size() + shift) p.resize(q.size() + shift);
  for (std::size_t k = 0; k < q.size(); ++k)
    if (!q[k].is_zero()) p[k + shift] -= c * q[k];
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Quotient and remainder of a by b (b nonzero, trimmed).
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  trim(a);
  const int db = degree(b);
  if (degree(a) < db) return {{}, a};
  Poly q(static_cast<std::size_t>(degree(a) - db + 1));
  const Rational lead_inv = b.back().inverse();
  for (int d = degree(a); d >= db; --d) {
    const Rational& top = a[static_cast<std::size_t>(d)];
    if (top.is_zero()) continue;
    const Rational c = top * lead_inv;
    q[static_cast<std::size_t>(d - db)] = c;
    sub_scaled(a, b, c, static_cast<std::size_t>(d - db));
  }
  a.resize(static_cast<std::size_t>(db));
  trim(a);
  return {q, a};
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic polynomial coefficient overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("cyclotomic polynomial coefficient overflow");
  return r;
}

std::vector<std::int64_t> compute_cyclotomic(long n) {
  // x^n - 1 divided exactly by every Phi_d with d | n, d < n
  std::vector<std::int64_t> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    const std::size_t dd = div.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dd, 0);
    for (std::size_t k = num.size() - 1; k + 1 > dd; --k) {
      const std::int64_t c = num[k];
      if (c == 0) continue;
      quot[k - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] = checked_sub(num[k - dd + j], checked_mul(c, div[j]));
      if (k == dd) break;
    }
    for (std::size_t j = 0; j < dd; ++j)
      if (num[j] != 0) throw std::logic_error("cyclotomic division left a remainder");
    num = std::move(quot);
  }
  return num;
}

std::string root_name(long order, long exponent) {
  const long g = std::gcd(order, exponent);
  order /= g;
  exponent /= g;
  std::string base = order == 3 ? "w" : "z" + std::to_string(order);
  return exponent == 1 ? base : base + "^" + std::to_string(exponent);
}

std::string signed_term(const Rational& c, const std::string& name, bool first) {
  std::string out;
  const Rational mag = c.abs();
  if (c.sign() < 0) out = first ? "-" : " - ";
  else if (!first) out = " + ";
  if (name.empty()) return out + mag.str();
  if (mag != Rational(1)) out += mag.str() + "*";
  return out + name;
}

}  // namespace

long euler_phi(long n) {
  if (n < 1) throw std::invalid_argument("euler_phi of non-positive integer");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic polynomial order must be positive");
  static std::mutex mu;
  static std::map<long, std::vector<std::int64_t>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<std::int64_t> poly = n == 1 ? std::vector<std::int64_t>{-1, 1} : compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(mu);
  // std::map never invalidates references, so returning into the cache is safe
  return cache.emplace(n, std::move(poly)).first->second;
}

CycloNumber::CycloNumber() : order_(1), num_(1) {}

CycloNumber::CycloNumber(const Rational& q, long order) : order_(order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  num_.resize(static_cast<std::size_t>(euler_phi(order)));
  num_[0] = q.value().get_num();
  den_ = q.value().get_den();
}

CycloNumber::CycloNumber(long order, std::vector<mpz_class> num, mpz_class den)
    : order_(order), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void CycloNumber::normalize() {
  if (sgn(den_) < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (sgn(c) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  for (auto& c : num_)
    if (sgn(c) != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

void CycloNumber::reduce_in_place(long order, std::vector<mpz_class>& poly) {
  const auto& phi = cyclotomic_polynomial(order);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = poly.size(); k-- > deg;) {
    if (sgn(poly[k]) == 0) continue;
    const mpz_class c = poly[k];
    for (std::size_t j = 0; j < deg; ++j) {
      const std::int64_t p = phi[j];
      if (p > 0) mpz_submul_ui(poly[k - deg + j].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
      else if (p < 0) mpz_addmul_ui(poly[k - deg + j].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-p));
    }
  }
  poly.resize(deg);
}

std::vector<Rational> CycloNumber::coeffs() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (const auto& c : num_) out.emplace_back(mpq_class(c, den_));
  return out;
}

CycloNumber CycloNumber::root(long order, long exponent) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  long e = exponent % order;
  if (e < 0) e += order;
  const std::size_t deg = static_cast<std::size_t>(euler_phi(order));
  std::vector<mpz_class> p(std::max(deg, static_cast<std::size_t>(e) + 1));
  p[static_cast<std::size_t>(e)] = 1;
  reduce_in_place(order, p);
  return CycloNumber(order, std::move(p), mpz_class(1));
}

CycloNumber CycloNumber::from_coeffs(long order, std::vector<Rational> poly) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  const std::size_t deg = static_cast<std::size_t>(euler_phi(order));
  mpz_class den = 1;
  for (const auto& c : poly) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.value().get_den_mpz_t());
  std::vector<mpz_class> num(std::max(deg, poly.size()));
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (poly[k].is_zero()) continue;
    num[k] = poly[k].value().get_num() * (den / poly[k].value().get_den());
  }
  reduce_in_place(order, num);
  return CycloNumber(order, std::move(num), std::move(den));
}

CycloNumber CycloNumber::embed(long target) const {
  if (target == order_) return *this;
  if (target < 1 || target % order_ != 0) throw std::invalid_argument("embedding target must be a multiple of the order");
  const std::size_t step = static_cast<std::size_t>(target / order_);
  const std::size_t deg = static_cast<std::size_t>(euler_phi(target));
  std::vector<mpz_class> p(std::max(deg, (num_.size() - 1) * step + 1));
  for (std::size_t k = 0; k < num_.size(); ++k) p[k * step] = num_[k];
  reduce_in_place(target, p);
  return CycloNumber(target, std::move(p), den_);
}

bool CycloNumber::is_zero() const {
  for (const auto& c : num_)
    if (sgn(c) != 0) return false;
  return true;
}

std::optional<Rational> CycloNumber::as_rational() const {
  for (std::size_t k = 1; k < num_.size(); ++k)
    if (sgn(num_[k]) != 0) return std::nullopt;
  return Rational(mpq_class(num_[0], den_));
}

CycloNumber CycloNumber::scaled(const Rational& s) const {
  if (s.is_zero()) return CycloNumber(Rational(0), order_);
  std::vector<mpz_class> p = num_;
  const mpz_class& sn = s.value().get_num();
  for (auto& c : p)
    if (sgn(c) != 0) c *= sn;
  return CycloNumber(order_, std::move(p), den_ * s.value().get_den());
}

CycloNumber CycloNumber::times_root(long k) const {
  const std::size_t n = static_cast<std::size_t>(order_);
  long kk = k % order_;
  if (kk < 0) kk += order_;
  std::vector<mpz_class> p(n);
  for (std::size_t j = 0; j < num_.size(); ++j)
    if (sgn(num_[j]) != 0) p[(j + static_cast<std::size_t>(kk)) % n] = num_[j];
  reduce_in_place(order_, p);
  return CycloNumber(order_, std::move(p), den_);
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in a cyclotomic field");
  const auto& phi_int = cyclotomic_polynomial(order_);
  Poly r0(phi_int.begin(), phi_int.end());
  Poly r1;
  for (const auto& c : num_) r1.emplace_back(mpq_class(c));
  trim(r1);
  Poly s0;
  Poly s1{Rational(1)};
  while (degree(r1) > 0) {
    auto [q, rem] = poly_divmod(r0, r1);
    Poly s2 = s0;
    Poly qs = poly_mul(q, s1);
    if (s2.size() < qs.size()) s2.resize(qs.size());
    for (std::size_t k = 0; k < qs.size(); ++k) s2[k] -= qs[k];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw std::logic_error("non-invertible element in a cyclotomic field");
  }
  // (num/den)^-1 = den * (num)^-1
  const Rational c = Rational(mpq_class(den_)) / r1[0];
  for (auto& x : s1) x *= c;
  return from_coeffs(order_, std::move(s1));
}

CycloNumber CycloNumber::galois(long k) const {
  long kk = k % order_;
  if (kk < 0) kk += order_;
  if (std::gcd(kk, order_) != 1 && order_ > 1) throw std::invalid_argument("Galois exponent must be coprime to the order");
  const std::size_t n = static_cast<std::size_t>(order_);
  std::vector<mpz_class> p(std::max(n, num_.size()));
  for (std::size_t j = 0; j < num_.size(); ++j)
    if (sgn(num_[j]) != 0) p[(j * static_cast<std::size_t>(kk)) % n] += num_[j];
  reduce_in_place(order_, p);
  return CycloNumber(order_, std::move(p), den_);
}

std::complex<double> CycloNumber::approx(int digits) const {
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits < 17 ? 17 : digits) * 4 + 64;
  mpfr_t re, im, angle, c, s, term, twopi;
  mpfr_inits2(prec, re, im, angle, c, s, term, twopi, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(re, 1);
  mpfr_set_zero(im, 1);
  mpfr_const_pi(twopi, MPFR_RNDN);
  mpfr_mul_ui(twopi, twopi, 2, MPFR_RNDN);
  mpfr_t den;
  mpfr_init2(den, prec);
  mpfr_set_z(den, den_.get_mpz_t(), MPFR_RNDN);
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (sgn(num_[k]) == 0) continue;
    mpfr_mul_ui(angle, twopi, static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_div_ui(angle, angle, static_cast<unsigned long>(order_), MPFR_RNDN);
    mpfr_sin_cos(s, c, angle, MPFR_RNDN);
    mpfr_set_z(term, num_[k].get_mpz_t(), MPFR_RNDN);
    mpfr_div(term, term, den, MPFR_RNDN);
    mpfr_mul(c, c, term, MPFR_RNDN);
    mpfr_mul(s, s, term, MPFR_RNDN);
    mpfr_add(re, re, c, MPFR_RNDN);
    mpfr_add(im, im, s, MPFR_RNDN);
  }
  std::complex<double> out(mpfr_get_d(re, MPFR_RNDN), mpfr_get_d(im, MPFR_RNDN));
  mpfr_clear(den);
  mpfr_clears(re, im, angle, c, s, term, twopi, static_cast<mpfr_ptr>(nullptr));
  return out;
}

std::string CycloNumber::str() const {
  if (auto q = as_rational()) return q->str();
  // single monomial q * zeta^k
  for (long k = 1; k < order_; ++k) {
    const CycloNumber rest = *this * root(order_, -k);
    if (auto q = rest.as_rational()) return signed_term(*q, root_name(order_, k), true);
  }
  // two unit monomials, e.g. z8 + z8^7
  for (long a = 0; a < order_; ++a) {
    for (long b = a + 1; b < order_; ++b) {
      for (int sa : {1, -1}) {
        for (int sb : {1, -1}) {
          const CycloNumber rest = *this - CycloNumber(sa) * root(order_, a) - CycloNumber(sb) * root(order_, b);
          if (!rest.is_zero()) continue;
          const std::string na = a == 0 ? std::string() : root_name(order_, a);
          return signed_term(Rational(sa), na, true) + signed_term(Rational(sb), root_name(order_, b), false);
        }
      }
    }
  }
  std::string out;
  const auto cs = coeffs();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k].is_zero()) continue;
    out += signed_term(cs[k], k == 0 ? std::string() : root_name(order_, static_cast<long>(k)), out.empty());
  }
  return out;
}

namespace {

// a*sa + b*sb coefficientwise into a (sizes equal)
void combine(std::vector<mpz_class>& a, const mpz_class& sa, const std::vector<mpz_class>& b, const mpz_class& sb,
             bool subtract) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (sa != 1 && sgn(a[k]) != 0) a[k] *= sa;
    if (sgn(b[k]) == 0) continue;
    if (subtract) mpz_submul(a[k].get_mpz_t(), b[k].get_mpz_t(), sb.get_mpz_t());
    else mpz_addmul(a[k].get_mpz_t(), b[k].get_mpz_t(), sb.get_mpz_t());
  }
}

}  // namespace

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  if (o.order_ != order_) {
    const long l = std::lcm(order_, o.order_);
    *this = embed(l);
    return *this += o.embed(l);
  }
  if (den_ == o.den_) {
    combine(num_, mpz_class(1), o.num_, mpz_class(1), false);
  } else {
    combine(num_, o.den_, o.num_, den_, false);
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
  if (o.order_ != order_) {
    const long l = std::lcm(order_, o.order_);
    *this = embed(l);
    return *this -= o.embed(l);
  }
  if (den_ == o.den_) {
    combine(num_, mpz_class(1), o.num_, mpz_class(1), true);
  } else {
    combine(num_, o.den_, o.num_, den_, true);
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  if (o.order_ != order_) {
    const long l = std::lcm(order_, o.order_);
    *this = embed(l);
    return *this *= o.embed(l);
  }
  std::vector<mpz_class> p(num_.size() + o.num_.size() - 1);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (sgn(num_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.num_.size(); ++j)
      if (sgn(o.num_[j]) != 0) mpz_addmul(p[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
  }
  reduce_in_place(order_, p);
  num_ = std::move(p);
  den_ *= o.den_;
  normalize();
  return *this;
}

CycloNumber operator-(CycloNumber a) {
  for (auto& c : a.num_) c = -c;
  return a;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.order_ != b.order_) {
    const long l = std::lcm(a.order_, b.order_);
    return a.embed(l) == b.embed(l);
  }
  return a.den_ == b.den_ && a.num_ == b.num_;
}

std::ostream& operator<<(std::ostream& os, const CycloNumber& z) { return os << z.str(); }

}  // namespace kleinstab
