#pragma once

// Dense exact linear algebra over Q, sized for root lattices and class lattices (dimension < 30).

#include <optional>
#include <string>
#include <vector>

#include "kleinstab/rational.hpp"

namespace kleinstab {

using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;

RMatrix to_rational(const std::vector<std::vector<int>>& m);
RMatrix identity_matrix(std::size_t n);
bool is_symmetric(const RMatrix& m);
bool is_square(const RMatrix& m);

RVector mat_vec(const RMatrix& m, const RVector& x);
Rational dot(const RVector& a, const RVector& b);
/// x^T m y
Rational bilinear(const RMatrix& m, const RVector& x, const RVector& y);
RMatrix scaled(const RMatrix& m, const Rational& s);
RMatrix add(const RMatrix& a, const RMatrix& b);
RMatrix outer(const RVector& a, const RVector& b);
/// b^T m b for a column basis b (rows of `basis` are the basis vectors).
RMatrix gram(const RMatrix& m, const RMatrix& basis);

/// Determinants of the leading principal k x k blocks, k = 1..n (fraction-free elimination).
RVector leading_minors(const RMatrix& m);
Rational determinant(const RMatrix& m);

/// Diagonal pivots of symmetric Gaussian elimination without row exchange.
/// Stops early (returning fewer than n pivots) at the first zero pivot.
RVector symmetric_pivots(const RMatrix& m);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
/// Sylvester inertia via congruence diagonalization (handles zero pivots).
Inertia inertia(const RMatrix& m);

/// Basis of the right nullspace, as rows, from the reduced row echelon form.
RMatrix nullspace(const RMatrix& m);
std::size_t rank(const RMatrix& m);

/// Unique solution of a nonsingular square system.
RVector solve(const RMatrix& a, const RVector& b);

/// Result of testing a symmetric matrix for negative definiteness.
struct DefinitenessCertificate {
  bool negative_definite = false;
  /// Leading principal minors of -m, all positive iff negative definite.
  RVector minors;
  /// When not negative definite: a nonzero x with x^T m x >= 0.
  std::optional<RVector> witness;
};

/// Throws std::invalid_argument on non-square or non-symmetric input.
DefinitenessCertificate negative_definite_certificate(const RMatrix& m);

std::string format_vector(const RVector& v);

}  // namespace kleinstab
