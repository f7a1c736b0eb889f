#pragma once

// Correction coefficients T_i of the stacky Riemann-Roch formula at a Kleinian point,
// delta of fiber classes, and the closed forms checked against the direct sum.

#include <string>
#include <vector>

#include "kleinstab/groups.hpp"

namespace kleinstab {

/// Coefficients a_i of a fiber class sum a_i rho_i, ordered as the group's irreps.
using AVector = std::vector<long>;

struct TCoefficients {
  GroupSpec group;
  std::vector<std::string> labels;
  std::vector<Rational> values;
};

/// T_i = sum over nontrivial classes of chi_i(g) / (|C(g)| (2 - chi_V(g))), certified rational.
/// Memoized per group spec; thread-safe.
const TCoefficients& t_coefficients(const KleinianGroup& g);
/// Uncached evaluation, for benchmarks and oracle comparisons.
TCoefficients compute_t_coefficients(const KleinianGroup& g);

Rational delta(const TCoefficients& tc, const AVector& a);

/// Decomposition of (2 - V) (x) rho_i.
AVector skyscraper_fiber(const KleinianGroup& g, std::size_t i);

/// 1 - 1/N for the trivial irrep, -r_i/N otherwise; ConsistencyError if the T-vector disagrees.
Rational delta_skyscraper(const KleinianGroup& g, std::size_t i);

/// T of the trivial irrep; ConsistencyError unless it equals (M + 1 - 1/N)/12.
Rational d_constant(const KleinianGroup& g);

/// j(j - P)/2 + (P^2 - 1)/12. Throws std::domain_error outside 0 <= j <= P, P >= 1.
Rational lieblich_closed_form(long p, long j);

/// sum_{k=1}^{P-1} zeta_P^{kj} / (2 - zeta_P^k - zeta_P^-k), evaluated in Q(zeta_P).
CycloNumber lieblich_sum(long p, long j);
/// The sums for j = 0..P, sharing the P-1 inverses.
std::vector<CycloNumber> lieblich_row(long p);
/// Rows for P = 2..pmax; the parallel variant distributes P over threads.
std::vector<std::vector<CycloNumber>> lieblich_table_serial(long pmax);
std::vector<std::vector<CycloNumber>> lieblich_table_parallel(long pmax);

struct ClosedFormRow {
  std::string label;
  CycloNumber direct;
  CycloNumber closed;
  bool match = false;
};

/// Every printed closed form for the group next to the direct evaluation.
std::vector<ClosedFormRow> closed_form_report(const KleinianGroup& g);

struct SurfaceProfileLite {
  Rational chi_O;
  Rational HK;
  Rational K2;
};

/// rank * chi(O) - (c1.K)/2 + ch2 + delta.
Rational euler_characteristic(const Rational& rank, const Rational& c1_dot_K, const Rational& ch2, const Rational& dlt,
                              const SurfaceProfileLite& profile);

}  // namespace kleinstab
