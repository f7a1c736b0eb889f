#include "kleinstab/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace kleinstab {

RMatrix to_rational(const std::vector<std::vector<int>>& m) {
  RMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

RMatrix identity_matrix(std::size_t n) {
  RMatrix out(n, RVector(n));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

bool is_square(const RMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) return false;
  return true;
}

bool is_symmetric(const RMatrix& m) {
  if (!is_square(m)) return false;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m[i][j] != m[j][i]) return false;
  return true;
}

RVector mat_vec(const RMatrix& m, const RVector& x) {
  RVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != x.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!m[i][j].is_zero() && !x[j].is_zero()) out[i] += m[i][j] * x[j];
  }
  return out;
}

Rational dot(const RVector& a, const RVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Rational bilinear(const RMatrix& m, const RVector& x, const RVector& y) { return dot(x, mat_vec(m, y)); }

RMatrix scaled(const RMatrix& m, const Rational& s) {
  RMatrix out = m;
  for (auto& row : out)
    for (auto& v : row) v *= s;
  return out;
}

RMatrix add(const RMatrix& a, const RMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  RMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) throw std::invalid_argument("add: dimension mismatch");
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
  }
  return out;
}

RMatrix outer(const RVector& a, const RVector& b) {
  RMatrix out(a.size(), RVector(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i][j] = a[i] * b[j];
  return out;
}

RMatrix gram(const RMatrix& m, const RMatrix& basis) {
  const std::size_t k = basis.size();
  RMatrix out(k, RVector(k));
  std::vector<RVector> images;
  images.reserve(k);
  for (const auto& b : basis) images.push_back(mat_vec(m, b));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) out[i][j] = out[j][i] = dot(basis[i], images[j]);
  return out;
}

Rational determinant(const RMatrix& m) {
  if (!is_square(m)) throw std::invalid_argument("determinant of a non-square matrix");
  RMatrix a = m;
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    const Rational inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const Rational f = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k)
        if (!a[c][k].is_zero()) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

RVector leading_minors(const RMatrix& m) {
  if (!is_square(m)) throw std::invalid_argument("leading minors of a non-square matrix");
  RVector out;
  out.reserve(m.size());
  for (std::size_t k = 1; k <= m.size(); ++k) {
    RMatrix block(k, RVector(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) block[i][j] = m[i][j];
    out.push_back(determinant(block));
  }
  return out;
}

RVector symmetric_pivots(const RMatrix& m) {
  if (!is_symmetric(m)) throw std::invalid_argument("symmetric_pivots requires a symmetric matrix");
  RMatrix a = m;
  const std::size_t n = a.size();
  RVector pivots;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[c][c].is_zero()) break;
    pivots.push_back(a[c][c]);
    const Rational inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const Rational f = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return pivots;
}

Inertia inertia(const RMatrix& m) {
  if (!is_symmetric(m)) throw std::invalid_argument("inertia requires a symmetric matrix");
  RMatrix a = m;
  const std::size_t n = a.size();
  Inertia out;
  auto swap_index = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };
  for (std::size_t c = 0; c < n; ++c) {
    if (a[c][c].is_zero()) {
      std::size_t j = c + 1;
      while (j < n && a[j][j].is_zero()) ++j;
      if (j < n) {
        swap_index(c, j);
      } else {
        j = c + 1;
        while (j < n && a[c][j].is_zero()) ++j;
        if (j == n) {
          ++out.zero;
          continue;
        }
        // e_c -> e_c + e_j makes the diagonal 2 a_cj != 0
        for (std::size_t k = 0; k < n; ++k) a[c][k] += a[j][k];
        for (std::size_t k = 0; k < n; ++k) a[k][c] += a[k][j];
      }
    }
    const Rational piv = a[c][c];
    (piv.sign() > 0 ? out.positive : out.negative)++;
    const Rational inv = piv.inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const Rational f = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
    for (std::size_t r = c + 1; r < n; ++r) a[c][r] = 0;
  }
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational inv = a[row][c].inverse();
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      const Rational f = a[r][c];
      for (std::size_t k = 0; k < a[r].size(); ++k)
        if (!a[row][k].is_zero()) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

RMatrix nullspace(const RMatrix& m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  RMatrix a = m;
  const auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  RMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RVector v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const RMatrix& m) {
  if (m.empty()) return 0;
  RMatrix a = m;
  return rref(a, m[0].size()).size();
}

RVector solve(const RMatrix& a, const RVector& b) {
  if (!is_square(a) || a.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  const std::size_t n = a.size();
  RMatrix aug = a;
  for (std::size_t i = 0; i < n; ++i) aug[i].push_back(b[i]);
  const auto pivots = rref(aug, n);
  if (pivots.size() != n) throw DivisionByZero("solve: singular system");
  RVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

DefinitenessCertificate negative_definite_certificate(const RMatrix& m) {
  if (!is_square(m)) throw std::invalid_argument("definiteness test requires a square matrix");
  if (!is_symmetric(m)) throw std::invalid_argument("definiteness test requires a symmetric matrix");
  DefinitenessCertificate cert;
  const RMatrix neg = scaled(m, Rational(-1));
  cert.minors = leading_minors(neg);
  const std::size_t n = m.size();
  std::size_t fail = n;
  for (std::size_t k = 0; k < n; ++k) {
    if (cert.minors[k].sign() <= 0) {
      fail = k;
      break;
    }
  }
  cert.negative_definite = n > 0 && fail == n;
  if (n == 0 || cert.negative_definite) return cert;
  // the leading fail x fail block of -m is positive definite, so the Schur
  // complement of the next index gives a vector with x^T (-m) x = minor_{k+1}/minor_k <= 0
  RVector x(n);
  x[fail] = 1;
  if (fail > 0) {
    RMatrix block(fail, RVector(fail));
    RVector rhs(fail);
    for (std::size_t i = 0; i < fail; ++i) {
      for (std::size_t j = 0; j < fail; ++j) block[i][j] = neg[i][j];
      rhs[i] = -neg[i][fail];
    }
    const RVector y = solve(block, rhs);
    for (std::size_t i = 0; i < fail; ++i) x[i] = y[i];
  }
  cert.witness = std::move(x);
  return cert;
}

std::string format_vector(const RVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

}  // namespace kleinstab
