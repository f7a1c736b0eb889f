#include "kleinstab/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include <mpfr.h>

namespace kleinstab {

std::vector<std::pair<int, int>> dynkin_edges(const GroupSpec& spec) {
  std::vector<std::pair<int, int>> edges;
  switch (spec.family) {
    case Family::A:
      for (int k = 0; k + 2 < spec.param; ++k) edges.emplace_back(k, k + 1);
      break;
    case Family::D: {
      // nodes 0,1,2 = rho_a, rho_x, rho_xa; nodes 3..n+1 = the two-dimensional rho_1..rho_{n-1}
      const int n = spec.param;
      edges.emplace_back(1, 3);
      for (int k = 3; k < n + 1; ++k) edges.emplace_back(k, k + 1);
      edges.emplace_back(0, n + 1);
      edges.emplace_back(2, n + 1);
      break;
    }
    case Family::E6:  // rho_1, rho_2, V_0, V_1, V_2, W
      edges = {{0, 3}, {1, 4}, {2, 5}, {3, 5}, {4, 5}};
      break;
    case Family::E7:  // 1', 2, V, V', 3, 3', 4
      edges = {{2, 4}, {4, 6}, {6, 5}, {5, 3}, {3, 0}, {1, 6}};
      break;
    case Family::E8:  // V, V', 3, 3', 4, 4', 5, 6
      edges = {{0, 2}, {2, 5}, {5, 6}, {6, 7}, {7, 4}, {7, 3}, {4, 1}};
      break;
  }
  return edges;
}

namespace {

int rank_of(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::A: return spec.param - 1;
    case Family::D: return spec.param + 2;
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
  }
  return 0;
}

std::string label_of(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::A: return "A" + std::to_string(spec.param - 1);
    case Family::D: return "D" + std::to_string(spec.param + 2);
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

}  // namespace

RootSystem root_system_for(const GroupSpec& spec) {
  RootSystem rs;
  rs.label = label_of(spec);
  rs.rank = rank_of(spec);
  const auto m = static_cast<std::size_t>(rs.rank);
  rs.cartan.assign(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) rs.cartan[i][i] = 2;
  for (auto [a, b] : dynkin_edges(spec)) {
    rs.cartan[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = -1;
    rs.cartan[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = -1;
  }
  rs.intersection = rs.cartan;
  for (auto& row : rs.intersection)
    for (auto& v : row) v = -v;
  // the highest root is the unique root of maximal height
  const auto roots = enumerate_roots(rs);
  rs.highest_root = *std::max_element(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
  });
  rs.coxeter = 1 + std::accumulate(rs.highest_root.begin(), rs.highest_root.end(), 0);
  return rs;
}

RootSystem root_system_for(const KleinianGroup& g) { return root_system_for(g.spec); }

std::vector<Root> enumerate_roots(const RootSystem& rs) {
  const auto m = static_cast<std::size_t>(rs.rank);
  std::set<Root> seen;
  std::deque<Root> queue;
  for (std::size_t i = 0; i < m; ++i) {
    Root e(m, 0);
    e[i] = 1;
    if (seen.insert(e).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    const Root beta = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < m; ++i) {
      // s_i(beta) = beta - <beta, alpha_i> alpha_i
      int pairing = 0;
      for (std::size_t j = 0; j < m; ++j) pairing += rs.cartan[i][j] * beta[j];
      if (pairing == 0) continue;
      Root next = beta;
      next[i] -= pairing;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Root> positive_roots(const RootSystem& rs) {
  std::vector<Root> out;
  for (auto& r : enumerate_roots(rs))
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) out.push_back(std::move(r));
  return out;
}

DefinitenessCertificate is_negative_definite(const RMatrix& m) { return negative_definite_certificate(m); }

ToeplitzReport toeplitz_lemma_check(const RootSystem& rs, long group_order) {
  ToeplitzReport rep;
  rep.label = rs.label;
  rep.group_order = group_order;
  rep.coxeter = rs.coxeter;
  const RMatrix h = to_rational(rs.intersection);
  const RVector r(rs.highest_root.begin(), rs.highest_root.end());
  const Rational n2 = Rational(group_order) * Rational(group_order);
  const RMatrix a = add(h, scaled(outer(r, r), n2.inverse()));
  rep.certificate = is_negative_definite(a);
  rep.q = dot(r, solve(scaled(h, Rational(-1)), r));

  mpfr_t eta, tmp;
  mpfr_inits2(256, eta, tmp, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(eta, MPFR_RNDN);
  mpfr_div_ui(eta, eta, static_cast<unsigned long>(rs.coxeter), MPFR_RNDN);
  mpfr_cos(eta, eta, MPFR_RNDN);
  mpfr_mul_ui(eta, eta, 2, MPFR_RNDN);
  mpfr_sub_ui(eta, eta, 2, MPFR_RNDN);
  rep.eta1 = mpfr_get_d(eta, MPFR_RNDN);
  mpfr_set_q(tmp, Rational(Rational(rs.coxeter - 1) / n2).value().get_mpq_t(), MPFR_RNDN);
  mpfr_add(tmp, tmp, eta, MPFR_RNDU);
  rep.printed_bound = mpfr_get_d(tmp, MPFR_RNDU);
  Rational rr = dot(r, r);
  mpfr_set_q(tmp, Rational(rr / n2).value().get_mpq_t(), MPFR_RNDN);
  mpfr_add(tmp, tmp, eta, MPFR_RNDU);
  rep.rank_one_bound = mpfr_get_d(tmp, MPFR_RNDU);
  mpfr_clears(eta, tmp, static_cast<mpfr_ptr>(nullptr));
  return rep;
}

}  // namespace kleinstab
