#pragma once

// Simply laced root systems paired with the Kleinian groups.
//
// Node k of the Dynkin diagram corresponds to irrep k+1 of the paired group,
// so highest-root coefficients line up with the nontrivial irrep dimensions.

#include <string>
#include <utility>
#include <vector>

#include "kleinstab/groups.hpp"
#include "kleinstab/matrix.hpp"

namespace kleinstab {

struct RootSystem {
  std::string label;  // "A2", "D4", "E6", ...
  int rank = 0;
  std::vector<std::vector<int>> cartan;
  std::vector<std::vector<int>> intersection;  // = -cartan
  std::vector<int> highest_root;
  int coxeter = 0;  // 1 + sum of highest-root coefficients
};

using Root = std::vector<int>;

/// Edges of the finite Dynkin diagram in the node order described above.
std::vector<std::pair<int, int>> dynkin_edges(const GroupSpec& spec);

RootSystem root_system_for(const KleinianGroup& g);
RootSystem root_system_for(const GroupSpec& spec);

/// All roots as the closure of the simple roots under simple reflections, sorted.
std::vector<Root> enumerate_roots(const RootSystem& rs);
std::vector<Root> positive_roots(const RootSystem& rs);

/// Sylvester certificate for a symmetric rational matrix; throws on non-symmetric input.
DefinitenessCertificate is_negative_definite(const RMatrix& m);

struct ToeplitzReport {
  std::string label;
  long group_order = 0;
  int coxeter = 0;
  /// Exact verdict on A = intersection + r r^T / N^2.
  DefinitenessCertificate certificate;
  /// q = r^T (-intersection)^-1 r; A is negative definite iff q < N^2.
  Rational q;
  /// Largest eigenvalue of the intersection matrix, -2 + 2 cos(pi / h).
  double eta1 = 0;
  /// eta1 + (h - 1)/N^2: the bound as printed in the Weyl argument.
  double printed_bound = 0;
  /// eta1 + |r|^2/N^2 = eta1 + (N - 1)/N^2: Weyl with the true eigenvalue of r r^T.
  double rank_one_bound = 0;
  bool printed_bound_negative() const { return printed_bound < 0; }
  bool rank_one_bound_negative() const { return rank_one_bound < 0; }
};

ToeplitzReport toeplitz_lemma_check(const RootSystem& rs, long group_order);

}  // namespace kleinstab
