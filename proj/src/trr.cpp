#include "kleinstab/trr.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace kleinstab {

TCoefficients compute_t_coefficients(const KleinianGroup& g) {
  TCoefficients tc;
  tc.group = g.spec;
  std::vector<CycloNumber> weight(g.classes.size());
  for (std::size_t c = 1; c < g.classes.size(); ++c) {
    const auto& cls = g.classes[c];
    weight[c] = (CycloNumber(2) - cls.chi_v).inverse().scaled(Rational(1, cls.centralizer_order));
  }
  for (const auto& r : g.irreps) {
    CycloNumber sum;
    for (std::size_t c = 1; c < g.classes.size(); ++c)
      if (!r.character[c].is_zero()) sum += r.character[c] * weight[c];
    const auto q = sum.as_rational();
    if (!q) throw ConsistencyError("T coefficient of " + r.label + " in " + g.spec.str() + " is not rational: " + sum.str());
    tc.labels.push_back(r.label);
    tc.values.push_back(*q);
  }
  return tc;
}

const TCoefficients& t_coefficients(const KleinianGroup& g) {
  static std::mutex mu;
  static std::map<std::string, TCoefficients> cache;
  const std::string key = g.spec.str();
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  TCoefficients tc = compute_t_coefficients(g);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(tc)).first->second;
}

Rational delta(const TCoefficients& tc, const AVector& a) {
  if (a.size() != tc.values.size())
    throw std::invalid_argument("a-vector length " + std::to_string(a.size()) + " does not match irrep count " +
                                std::to_string(tc.values.size()));
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += Rational(a[i]) * tc.values[i];
  return s;
}

AVector skyscraper_fiber(const KleinianGroup& g, std::size_t i) {
  if (i >= g.irreps.size()) throw std::out_of_range("irrep index out of range");
  std::vector<CycloNumber> chi;
  for (std::size_t c = 0; c < g.classes.size(); ++c)
    chi.push_back((CycloNumber(2) - g.classes[c].chi_v) * g.irreps[i].character[c]);
  return decompose(g, chi);
}

Rational delta_skyscraper(const KleinianGroup& g, std::size_t i) {
  if (i >= g.irreps.size()) throw std::out_of_range("irrep index out of range");
  const Rational n(g.order);
  const Rational expected = i == 0 ? Rational(1) - n.inverse() : Rational(-g.irreps[i].dim) / n;
  const Rational computed = delta(t_coefficients(g), skyscraper_fiber(g, i));
  if (computed != expected)
    throw ConsistencyError("delta of the skyscraper twisted by " + g.irreps[i].label + " in " + g.spec.str() + " is " +
                           computed.str() + ", expected " + expected.str());
  return expected;
}

Rational d_constant(const KleinianGroup& g) {
  const Rational t0 = t_coefficients(g).values.at(0);
  const Rational expected = (Rational(static_cast<long>(g.rank()) + 1) - Rational(1, g.order)) / Rational(12);
  if (t0 != expected)
    throw ConsistencyError("T of the trivial irrep of " + g.spec.str() + " is " + t0.str() + ", expected " + expected.str());
  return t0;
}

Rational lieblich_closed_form(long p, long j) {
  if (p < 1 || j < 0 || j > p) throw std::domain_error("lieblich_closed_form needs P >= 1 and 0 <= j <= P");
  return Rational(j * (j - p), 2) + Rational(p * p - 1, 12);
}

namespace {

std::vector<CycloNumber> lieblich_inverses(long p) {
  std::vector<CycloNumber> inv(static_cast<std::size_t>(p));
  for (long k = 1; k < p; ++k)
    inv[static_cast<std::size_t>(k)] = (CycloNumber(Rational(2), p) - CycloNumber::root(p, k) - CycloNumber::root(p, -k)).inverse();
  return inv;
}

CycloNumber lieblich_from(const std::vector<CycloNumber>& inv, long p, long j) {
  CycloNumber sum(Rational(0), p);
  for (long k = 1; k < p; ++k) sum += inv[static_cast<std::size_t>(k)].times_root(k * j);
  return sum;
}

}  // namespace

CycloNumber lieblich_sum(long p, long j) {
  if (p < 1) throw std::domain_error("lieblich_sum needs P >= 1");
  return lieblich_from(lieblich_inverses(p), p, j);
}

std::vector<CycloNumber> lieblich_row(long p) {
  if (p < 1) throw std::domain_error("lieblich_row needs P >= 1");
  const auto inv = lieblich_inverses(p);
  std::vector<CycloNumber> row;
  for (long j = 0; j <= p; ++j) row.push_back(lieblich_from(inv, p, j));
  return row;
}

std::vector<std::vector<CycloNumber>> lieblich_table_serial(long pmax) {
  std::vector<std::vector<CycloNumber>> table;
  for (long p = 2; p <= pmax; ++p) table.push_back(lieblich_row(p));
  return table;
}

std::vector<std::vector<CycloNumber>> lieblich_table_parallel(long pmax) {
  if (pmax < 2) return {};
  std::vector<std::vector<CycloNumber>> table(static_cast<std::size_t>(pmax - 1));
  for (long p = 2; p <= pmax; ++p) cyclotomic_polynomial(p);  // warm the cache outside the parallel region
#pragma omp parallel for schedule(dynamic)
  for (long p = pmax; p >= 2; --p) table[static_cast<std::size_t>(p - 2)] = lieblich_row(p);
  return table;
}

namespace {

CycloNumber q(long num, long den = 1) { return CycloNumber(Rational(num, den)); }
CycloNumber q(const Rational& r) { return CycloNumber(r); }

void add_row(std::vector<ClosedFormRow>& rows, std::string label, CycloNumber direct, CycloNumber closed) {
  const bool match = direct == closed;
  rows.push_back({std::move(label), std::move(direct), std::move(closed), match});
}

void dicyclic_rows(const KleinianGroup& g, std::vector<ClosedFormRow>& rows) {
  const long n = g.spec.param;
  const long m = 2 * n;
  const auto& tc = t_coefficients(g);
  const std::size_t xa = static_cast<std::size_t>(n) + 1;
  const std::size_t x = static_cast<std::size_t>(n) + 2;

  // (2 - zeta^k - zeta^-k)^-1 over Q(zeta_2n) for k = 1..2n-1
  const auto inv = lieblich_inverses(m);
  auto half_sum = [&](long l) {
    CycloNumber s(Rational(0), m);
    for (long k = 1; k < n; ++k) s += inv[static_cast<std::size_t>(k)].times_root(k * l);
    return s;
  };

  for (std::size_t i = 0; i < g.irreps.size(); ++i) {
    const auto& r = g.irreps[i];
    CycloNumber s;
    for (long k = 1; k < n; ++k) {
      const std::size_t c = static_cast<std::size_t>(k) + 1;
      s += r.character[c] * (CycloNumber(2) - g.classes[c].chi_v).inverse();
    }
    const CycloNumber closed = q(-r.dim, 16 * n) + (r.character[x] + r.character[xa]).scaled(Rational(1, 8)) +
                               s.scaled(Rational(1, 2 * n));
    add_row(rows, "general Dic formula, T_" + r.label, q(tc.values[i]), closed);
  }

  const Rational base = Rational(-1, 16 * n) + Rational(n * n - 1, 12 * n);
  add_row(rows, "T_1 closed form", q(tc.values[0]), q(base + Rational(1, 4)));
  add_row(rows, "T_rho_x closed form", q(tc.values[2]), q(base - Rational(1, 4)));

  const Rational sign_n = n % 2 == 0 ? Rational(1) : Rational(-1);
  const Rational alt_sum = (Rational(-n * n, 2) + Rational(4 * n * n - 1, 12) - sign_n / Rational(4)) / Rational(2);
  add_row(rows, "alternating half sum at P=2n, j=n", half_sum(n), q(alt_sum));
  const Rational t_a = Rational(-1, 16 * n) + alt_sum / Rational(2 * n);
  add_row(rows, "T_rho_a closed form", q(tc.values[1]), q(t_a));
  add_row(rows, "T_rho_xa closed form", q(tc.values[3]), q(t_a));

  for (long l = 1; l < n; ++l) {
    const std::size_t i = 3 + static_cast<std::size_t>(l);
    const auto& label = g.irreps[i].label;
    const CycloNumber inner = half_sum(l) + half_sum(-l);
    if (l % 2 == 1) {
      const Rational sign_l = Rational(-1);
      const Rational rhs = Rational(l * (l - 2 * n), 2) + Rational(4 * n * n - 1, 12) - sign_l / Rational(4);
      add_row(rows, "quaternionic inner sum, l=" + std::to_string(l), inner, q(rhs));
      add_row(rows, "quaternionic T_" + label + " closed form", q(tc.values[i]),
              q(Rational(-1, 8 * n) + rhs / Rational(2 * n)));
    } else {
      const long ll = l / 2;
      const Rational rhs = Rational(-1, 4) + Rational(2 * ll * (ll - n)) + Rational(4 * n * n - 1, 12);
      add_row(rows, "dihedral inner sum as printed (with 1/(2n)), l=" + std::to_string(ll),
              inner.scaled(Rational(1, 2 * n)), q(rhs));
      add_row(rows, "dihedral inner sum without 1/(2n), l=" + std::to_string(ll), inner, q(rhs));
      add_row(rows, "dihedral T_" + label + " closed form as printed", q(tc.values[i]), q(Rational(-1, 8 * n) + rhs));
      add_row(rows, "dihedral T_" + label + " closed form with 1/(2n) restored", q(tc.values[i]),
              q(Rational(-1, 8 * n) + rhs / Rational(2 * n)));
    }
  }
}

}  // namespace

std::vector<ClosedFormRow> closed_form_report(const KleinianGroup& g) {
  std::vector<ClosedFormRow> rows;
  const auto& tc = t_coefficients(g);
  switch (g.spec.family) {
    case Family::A: {
      const long n = g.order;
      for (long j = 0; j < n; ++j)
        add_row(rows, "T_" + g.irreps[static_cast<std::size_t>(j)].label + " = f(j)/N", q(tc.values[static_cast<std::size_t>(j)]),
                q(lieblich_closed_form(n, j) / Rational(n)));
      break;
    }
    case Family::D: dicyclic_rows(g, rows); break;
    case Family::E6: {
      const long printed[] = {167, -25, -25, 58, -38, -38, -27};
      for (std::size_t i = 0; i < 7; ++i)
        add_row(rows, "printed T_" + g.irreps[i].label, q(tc.values[i]), q(printed[i], 288));
      break;
    }
    case Family::E7:
    case Family::E8: break;
  }
  return rows;
}

Rational euler_characteristic(const Rational& rank, const Rational& c1_dot_K, const Rational& ch2, const Rational& dlt,
                              const SurfaceProfileLite& profile) {
  return rank * profile.chi_O - c1_dot_K / Rational(2) + ch2 + dlt;
}

}  // namespace kleinstab
