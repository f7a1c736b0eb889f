#include <doctest.h>

#include <Eigen/Dense>
#include <numeric>

#include "kleinstab/rootdata.hpp"
#include "oracles.hpp"

using namespace kleinstab;

namespace {

Eigen::MatrixXd to_eigen(const std::vector<std::vector<int>>& m) {
  const auto n = static_cast<long>(m.size());
  Eigen::MatrixXd out(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) out(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return out;
}

}  // namespace

TEST_CASE("A(3) gives A2") {
  const auto rs = root_system_for(GroupSpec::parse("A:3"));
  CHECK(rs.label == "A2");
  CHECK(rs.cartan == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  CHECK(rs.highest_root == std::vector<int>{1, 1});
  CHECK(rs.coxeter == 3);
}

TEST_CASE("highest root coefficients are the nontrivial irrep dimensions") {
  for (const char* s : {"A:4", "D:2", "D:3", "D:6", "E6", "E7", "E8"}) {
    CAPTURE(s);
    const auto& g = group(GroupSpec::parse(s));
    const auto rs = root_system_for(g);
    auto dims = g.dims();
    dims.erase(dims.begin());
    CHECK(rs.highest_root == dims);
    // 2 r_0 = sum over neighbours: (C r)_i = 0 except where rho_0 attaches
    CHECK(rs.coxeter == 1 + std::accumulate(dims.begin(), dims.end(), 0));
  }
}

TEST_CASE("root counts equal rank times Coxeter number and match the box scan") {
  for (const char* s : {"A:2", "A:3", "A:6", "D:2", "D:3", "D:5", "E6", "E7", "E8"}) {
    CAPTURE(s);
    const auto rs = root_system_for(GroupSpec::parse(s));
    const auto all = enumerate_roots(rs);
    CHECK(all.size() == static_cast<std::size_t>(rs.rank * rs.coxeter));
    CHECK(positive_roots(rs).size() * 2 == all.size());
    CHECK(oracle::brute_force_positive_roots(rs.cartan, rs.highest_root) == all.size() / 2);
    for (const auto& r : all) {
      long q = 0;
      for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) q += r[i] * rs.cartan[i][j] * r[j];
      CHECK(q == 2);
    }
  }
  CHECK(root_system_for(GroupSpec::parse("A:3")).rank * root_system_for(GroupSpec::parse("A:3")).coxeter == 6);
}

TEST_CASE("largest intersection eigenvalue is -2 + 2 cos(pi/h)") {
  for (const char* s : {"A:5", "D:4", "E6", "E7", "E8"}) {
    CAPTURE(s);
    const auto& g = group(GroupSpec::parse(s));
    const auto rs = root_system_for(g);
    const auto rep = toeplitz_lemma_check(rs, g.order);
    const double top = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(to_eigen(rs.intersection)).eigenvalues().maxCoeff();
    CHECK(rep.eta1 == doctest::Approx(top).epsilon(1e-12));
  }
}

TEST_CASE("Cartan plus rank-one certificate agrees with the spectrum") {
  for (const char* s : {"A:5", "A:12", "A:13", "A:20", "D:4", "D:9", "D:10", "E6", "E7", "E8"}) {
    CAPTURE(s);
    const auto& g = group(GroupSpec::parse(s));
    const auto rs = root_system_for(g);
    const auto rep = toeplitz_lemma_check(rs, g.order);
    Eigen::VectorXd r(rs.rank);
    for (int i = 0; i < rs.rank; ++i) r(i) = rs.highest_root[static_cast<std::size_t>(i)];
    const double n2 = static_cast<double>(g.order * g.order);
    const Eigen::MatrixXd a = to_eigen(rs.intersection) + r * r.transpose() / n2;
    const double top = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a).eigenvalues().maxCoeff();
    CHECK(rep.certificate.negative_definite == (top < 0));
    CHECK(rep.certificate.negative_definite == (rep.q < Rational(g.order * g.order)));
    if (rep.certificate.witness) {
      const RMatrix ar = add(to_rational(rs.intersection),
                             scaled(outer(RVector(rs.highest_root.begin(), rs.highest_root.end()),
                                          RVector(rs.highest_root.begin(), rs.highest_root.end())),
                                    Rational(1) / Rational(g.order * g.order)));
      CHECK(bilinear(ar, *rep.certificate.witness, *rep.certificate.witness).sign() >= 0);
    }
    // |r|^2 = N - 1
    CHECK(rep.rank_one_bound == doctest::Approx(rep.eta1 + static_cast<double>(g.order - 1) / n2));
  }
}

TEST_CASE("known definiteness boundaries") {
  auto nd = [](const char* s) {
    const auto& g = group(GroupSpec::parse(s));
    return toeplitz_lemma_check(root_system_for(g), g.order).certificate.negative_definite;
  };
  CHECK(nd("A:12"));
  CHECK_FALSE(nd("A:13"));
  CHECK(nd("D:9"));
  CHECK_FALSE(nd("D:10"));
  CHECK(nd("E8"));
}
