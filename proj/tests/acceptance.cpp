// One line per acceptance criterion. Exact criteria use zero tolerance; floating
// comparisons and runtimes carry the pinned bounds printed on their line.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "kleinstab/verify.hpp"
#include "kleinstab/walls.hpp"

using namespace kleinstab;

namespace {

constexpr double kWeylTol = 1e-12;
constexpr double kLieblichSeconds = 60;
constexpr double kE8RootsSeconds = 5;
constexpr std::size_t kKernelSamples = 120;
constexpr std::size_t kSweepClasses = 10000;

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << std::setw(2) << id << ". " << name << " :: " << detail << '\n';
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<GroupSpec> groups_up_to(int a_max, int d_max) {
  std::vector<GroupSpec> out;
  for (int n = 2; n <= a_max; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= d_max; ++n) out.push_back({Family::D, n});
  for (auto f : {Family::E6, Family::E7, Family::E8}) out.push_back({f, 0});
  return out;
}

Rational f_closed(long p, long j) { return Rational(j * (j - p), 2) + Rational(p * p - 1, 12); }

std::string list(const std::vector<std::string>& items, std::size_t max = 6) {
  std::string out;
  for (std::size_t i = 0; i < items.size() && i < max; ++i) out += (i ? ", " : "") + items[i];
  if (items.size() > max) out += ", ... (" + std::to_string(items.size()) + " total)";
  return out;
}

const KleinianGroup& g_of(const char* s) { return group(GroupSpec::parse(s)); }

void criterion_1() {
  const auto& v = t_coefficients(g_of("D:2")).values;
  const std::vector<Rational> paper{Rational(13, 32), Rational(-3, 32), Rational(-3, 32), Rational(-3, 32), Rational(-1, 16)};
  std::string got;
  for (const auto& x : v) got += x.str() + " ";
  report(1, "D4 T-vector (13/32, -3/32, -3/32, -3/32, -1/16), tol 0", v == paper, got);
}

void criterion_2() {
  const auto& g = g_of("D:2");
  const auto& tc = t_coefficients(g);
  const Rational dp = delta(tc, skyscraper_fiber(g, 0));
  const Rational dv = delta(tc, skyscraper_fiber(g, *g.v_index));
  report(2, "D4 delta(O_p) = 7/8, delta(O_p (x) V) = -1/4, tol 0", dp == Rational(7, 8) && dv == Rational(-1, 4),
         dp.str() + ", " + dv.str());
}

void criterion_3() {
  const auto& v = t_coefficients(g_of("E6")).values;
  const std::vector<Rational> paper{Rational(167, 288), Rational(-25, 288), Rational(-25, 288), Rational(58, 288),
                                    Rational(-38, 288), Rational(-38, 288), Rational(-27, 288)};
  std::string got;
  for (const auto& x : v) got += (x * Rational(288)).str() + "/288 ";
  report(3, "E6 T-vector, tol 0", v == paper, got);
}

void criterion_4() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto table = lieblich_table_parallel(50);
  const double secs = seconds_since(t0);
  std::size_t checked = 0;
  std::vector<std::string> bad;
  for (long p = 2; p <= 50; ++p)
    for (long j = 0; j <= p; ++j) {
      ++checked;
      if (!(table[static_cast<std::size_t>(p - 2)][static_cast<std::size_t>(j)] == CycloNumber(f_closed(p, j))))
        bad.push_back("P=" + std::to_string(p) + ",j=" + std::to_string(j));
    }
  std::ostringstream d;
  d << checked << " (P, j) pairs, " << bad.size() << " mismatches, " << std::fixed << std::setprecision(2) << secs << " s";
  if (!bad.empty()) d << " [" << list(bad) << "]";
  report(4, "Lieblich sums = j(j-P)/2 + (P^2-1)/12 for 2 <= P <= 50, tol 0, < 60 s", bad.empty() && secs < kLieblichSeconds,
         d.str());
}

void criterion_5() {
  std::vector<std::string> bad;
  for (long n = 2; n <= 50; ++n) {
    const auto& v = t_coefficients(group({Family::A, static_cast<int>(n)})).values;
    for (long j = 0; j < n; ++j)
      if (v[static_cast<std::size_t>(j)] != f_closed(n, j) / Rational(n))
        bad.push_back("N=" + std::to_string(n) + ",j=" + std::to_string(j));
  }
  report(5, "type A: T_j = f(j)/N for N <= 50, tol 0", bad.empty(), bad.empty() ? "1274 values" : list(bad));
}

void criterion_6() {
  std::vector<std::string> bad;
  std::size_t checked = 0;
  for (const auto& s : groups_up_to(20, 12)) {
    const auto& g = group(s);
    const auto& tc = t_coefficients(g);
    const Rational n(g.order);
    for (std::size_t i = 0; i < g.irreps.size(); ++i) {
      ++checked;
      const Rational expected = i == 0 ? Rational(1) - n.inverse() : -Rational(g.irreps[i].dim) / n;
      if (delta(tc, skyscraper_fiber(g, i)) != expected) bad.push_back(s.str() + " " + g.irreps[i].label);
    }
  }
  report(6, "skyscraper lemma for A(N<=20), D(n<=12), E6, E7, E8, tol 0", bad.empty(),
         std::to_string(checked) + " irreps" + (bad.empty() ? "" : ", failing: " + list(bad)));
}

void criterion_7() {
  std::vector<std::string> bad;
  const auto specs = groups_up_to(50, 20);
  for (const auto& s : specs) {
    const auto& g = group(s);
    const Rational expected = (Rational(static_cast<long>(g.irreps.size())) - Rational(1, g.order)) / Rational(12);
    if (t_coefficients(g).values[0] != expected) bad.push_back(s.str());
  }
  const bool e6 = t_coefficients(g_of("E6")).values[0] == Rational(167, 288);
  report(7, "T_rho0 = (M + 1 - 1/N)/12 for every supported group, tol 0", bad.empty() && e6,
         std::to_string(specs.size()) + " groups, E6 gives 167/288" + (bad.empty() ? "" : ", failing: " + list(bad)));
}

void criterion_8() {
  std::vector<std::string> bad;
  const auto specs = groups_up_to(50, 20);
  for (const auto& s : specs) {
    const auto& g = group(s);
    const auto& tc = t_coefficients(g);
    Rational sum;
    for (std::size_t i = 0; i < g.irreps.size(); ++i) sum += Rational(g.irreps[i].dim) * delta(tc, skyscraper_fiber(g, i));
    if (!sum.is_zero()) bad.push_back(s.str() + ": " + sum.str());
  }
  report(8, "sum_i r_i delta(O_p (x) rho_i) = 0 for every supported group, tol 0", bad.empty(),
         std::to_string(specs.size()) + " groups" + (bad.empty() ? "" : ", failing: " + list(bad)));
}

void criterion_9() {
  std::vector<std::string> bad;
  const auto specs = groups_up_to(20, 12);
  for (const auto& s : specs) {
    const auto& g = group(s);
    if (!validate(g).ok()) {
      bad.push_back(s.str() + " table");
      continue;
    }
    // affine Dynkin adjacency: finite edges among nontrivial nodes, node 0 joined by C theta
    const auto rs = root_system_for(g);
    const auto mk = mckay_matrix(g);
    const auto m = static_cast<std::size_t>(rs.rank);
    bool ok = mk.size() == m + 1 && mk[0][0] == 0;
    for (std::size_t j = 0; ok && j < m; ++j) {
      long ct = 0;
      for (std::size_t k = 0; k < m; ++k) ct += rs.cartan[j][k] * rs.highest_root[k];
      ok = mk[0][j + 1] == ct && mk[j + 1][0] == ct;
      for (std::size_t i = 0; ok && i < m; ++i) ok = mk[i + 1][j + 1] == (i == j ? 0 : -rs.cartan[i][j]);
    }
    long edges = 0;
    for (std::size_t i = 0; i <= m; ++i)
      for (std::size_t j = i + 1; j <= m; ++j) edges += mk[i][j];
    // affine diagrams have M + 1 nodes and M + 1 edges for type A, M edges otherwise
    ok = ok && edges == static_cast<long>(s.family == Family::A ? (m == 1 ? 2 : m + 1) : m);
    if (!ok) bad.push_back(s.str() + " McKay graph");
  }
  report(9, "character tables and McKay graph = affine ADE for A(N<=20), D(n<=12), E6, E7, E8, tol 0", bad.empty(),
         std::to_string(specs.size()) + " groups" + (bad.empty() ? "" : ", failing: " + list(bad)));
}

void criterion_10() {
  std::vector<std::string> not_definite, eta_off, inconclusive, unsound;
  std::string first_witness;
  const auto specs = groups_up_to(50, 20);
  for (const auto& s : specs) {
    const auto& g = group(s);
    const auto rs = root_system_for(g);
    const auto rep = toeplitz_lemma_check(rs, g.order);
    Eigen::MatrixXd h(rs.rank, rs.rank);
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) h(i, j) = rs.intersection[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    const double eta = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(h).eigenvalues().maxCoeff();
    const double eta_formula = -2 + 2 * std::cos(std::numbers::pi / rs.coxeter);
    const double bound = eta + static_cast<double>(rs.coxeter - 1) / static_cast<double>(g.order * g.order);
    if (std::abs(eta - eta_formula) > kWeylTol || std::abs(bound - rep.printed_bound) > kWeylTol) eta_off.push_back(s.str());
    if (bound >= 0 && rep.certificate.negative_definite) inconclusive.push_back(s.str());
    if (bound < 0 && !rep.certificate.negative_definite) unsound.push_back(s.str());
    if (!rep.certificate.negative_definite) {
      not_definite.push_back(s.str() + " (q=" + rep.q.str() + ")");
      if (first_witness.empty() && rep.certificate.witness)
        first_witness = s.str() + " x=" + format_vector(*rep.certificate.witness);
    }
  }
  std::string detail = std::to_string(specs.size()) + " groups; not negative definite: " +
                       (not_definite.empty() ? "none" : list(not_definite, 4));
  if (!first_witness.empty()) detail += "; witness " + first_witness;
  const auto none_or = [](const std::vector<std::string>& v) { return v.empty() ? std::string("none") : list(v, 4); };
  detail += "; eta_1 off -2+2cos(pi/h) beyond 1e-12: " + none_or(eta_off) +
            "; Weyl bound >= 0 though exactly definite: " + none_or(inconclusive) +
            "; Weyl bound < 0 though not definite: " + none_or(unsound);
  report(10, "H + r r^T/N^2 negative definite for A(N<=50), D(n<=20), E6, E7, E8 and Weyl bound < 0 agrees",
         not_definite.empty() && eta_off.empty() && inconclusive.empty() && unsound.empty(), detail);
}

void criterion_11() {
  std::mt19937_64 gen(2024);
  std::uniform_int_distribution<long> im(-6, 6), den(1, 4), slack(1, 40), gden(2, 5), h2(1, 4);
  const std::vector<GroupSpec> specs{{Family::A, 2}, {Family::A, 3}, {Family::A, 5}, {Family::A, 8}, {Family::D, 2},
                                     {Family::D, 3}, {Family::D, 5}, {Family::E6, 0}, {Family::E7, 0}, {Family::E8, 0}};
  std::size_t sampled = 0, definite = 0, threshold_agree = 0;
  std::string witness;
  for (std::size_t k = 0; k < kKernelSamples; ++k) {
    const auto& g = group(specs[k % specs.size()]);
    LatticeContext ctx(g);
    const auto prof = SurfaceProfile::picard_rank_one(h2(gen));
    StabilityParams p{Rational(0), Rational(im(gen), den(gen)), Rational(1, (g.order - 1) * gden(gen))};
    // hypothesis: re w > (2 + gamma) D - (1 + gamma)^2 - (im w)^2 / H^2
    p.re_w = printed_kernel_bound(p, ctx, prof) + Rational(slack(gen), 20);
    ++sampled;
    const auto cert = kernel_negdef_certificate(p, ctx, prof);
    definite += cert.negative_definite;
    threshold_agree += cert.negative_definite == (p.re_w > kernel_threshold(p, ctx, prof));
    if (!cert.negative_definite && witness.empty() && cert.witness)
      witness = g.spec.str() + " re_w=" + p.re_w.str() + " im_w=" + p.im_w.str() + " gamma=" + p.gamma.str() +
                " H^2=" + prof.h_squared().str() + ": v=" + format_class(*cert.witness) + " Q0=" + cert.witness_q0.str();
  }
  std::string detail = std::to_string(definite) + "/" + std::to_string(sampled) + " certified negative definite";
  if (!witness.empty()) detail += "; first counterexample " + witness;
  detail += "; exact threshold re w > (im w)^2/(2H^2) - gamma D + (1+gamma)^2 q/(2N^2) predicts " +
            std::to_string(threshold_agree) + "/" + std::to_string(sampled);
  report(11, "Q0 negative definite on ker Z for >=100 sampled parameters meeting the kernel hypothesis, Picard rank 1",
         definite == sampled, detail);
}

void criterion_12() {
  const auto& g2 = g_of("A:2");
  LatticeContext ctx2(g2);
  const auto prof1 = SurfaceProfile::picard_rank_one(1);
  const StabilityParams worked{Rational(1), Rational(1), Rational(1, 2)};
  const bool gate = params_gate(worked, ctx2, prof1).theorem_valid;
  const auto zx = central_charge(worked, free_orbit_class(ctx2, 1), ctx2, prof1);
  const auto zp = central_charge(worked, point_class(ctx2, 1), ctx2, prof1);
  bool ok = gate && zx == ExactComplex{Rational(-1), Rational(0)} && zp == ExactComplex{Rational(-1, 4), Rational(0)};
  std::string detail = std::string("A(2) gate ") + (gate ? "passes" : "fails") + ", Z([O_x]) = " + zx.re.str() +
                       ", Z(O_p) = " + zp.re.str() + "; sweep:";
  for (const char* s : {"A:2", "A:3", "A:7", "D:2", "D:4", "E6", "E7", "E8"}) {
    const auto& g = g_of(s);
    LatticeContext ctx(g);
    const StabilityParams p = std::string(s) == "A:2" ? worked : StabilityParams{Rational(1), Rational(1), Rational(1, 2 * (g.order - 1))};
    if (!params_gate(p, ctx, prof1).theorem_valid) {
      ok = false;
      detail += std::string(" ") + s + " gate fails;";
      continue;
    }
    const auto r = stability_function_sweep_parallel(p, ctx, prof1, kSweepClasses, 99);
    ok = ok && r.checked >= kSweepClasses && r.violations == 0 && r.hodge_violations == 0;
    detail += std::string(" ") + s + " " + std::to_string(r.violations) + "/" + std::to_string(r.checked);
    if (r.first_violation) detail += " e.g. " + format_class(*r.first_violation);
  }
  report(12, "A(2) worked parameters and stability-function sweep (>=1e4 classes per group), tol 0", ok, detail);
}

void criterion_13() {
  bool ok = true;
  std::string detail;
  for (const char* s : {"A:3", "D:2", "E6", "E7", "E8"}) {
    const auto rs = root_system_for(GroupSpec::parse(s));
    const auto t0 = std::chrono::steady_clock::now();
    const auto roots = enumerate_roots(rs);
    const double secs = seconds_since(t0);
    // independent count: lattice points x >= 0 under the highest root with x^T C x = 2
    std::size_t box = 0;
    const auto m = static_cast<std::size_t>(rs.rank);
    std::vector<int> x(m, 0);
    for (;;) {
      std::size_t k = 0;
      while (k < m && x[k] == rs.highest_root[k]) x[k++] = 0;
      if (k == m) break;
      ++x[k];
      long q = 0;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) q += static_cast<long>(x[i]) * rs.cartan[i][j] * x[j];
      box += q == 2;
    }
    const bool good = roots.size() == static_cast<std::size_t>(rs.rank * rs.coxeter) && roots.size() == 2 * box &&
                      (std::string(s) != "E8" || secs < kE8RootsSeconds);
    ok = ok && good;
    std::ostringstream d;
    d << rs.label << " " << roots.size() << " (box " << 2 * box << ")";
    if (std::string(s) == "E8") d << " in " << std::fixed << std::setprecision(3) << secs << " s";
    detail += (detail.empty() ? "" : ", ") + d.str();
  }
  report(13, "root counts = M h (A2 6, D4 24, E6 72, E7 126, E8 240), E8 < 5 s", ok, detail);
}

void criterion_14() {
  std::vector<std::string> bad;
  const std::vector<const char*> specs{"A:2", "A:6", "A:12", "D:2", "D:3", "D:6", "E6", "E7", "E8"};
  for (const char* s : specs) {
    const auto& g = g_of(s);
    LatticeContext ctx(g);
    const auto prof = SurfaceProfile::picard_rank_one(1);
    const StabilityParams p{Rational(1), Rational(1), Rational(1, 2 * (g.order - 1))};
    if (!params_gate(p, ctx, prof).theorem_valid) {
      bad.push_back(std::string(s) + " gate");
      continue;
    }
    const auto lc = restrict_charge(p, ctx);
    const auto cm = chamber_membership(lc);
    if (!is_regular(lc, ctx.roots)) bad.push_back(std::string(s) + " not regular");
    if (cm.in_U || cm.boundary_components.size() != ctx.rank()) bad.push_back(std::string(s) + " not in every U_i");
    if (!destabilizers(lc, cluster_class(ctx), ctx).empty()) bad.push_back(std::string(s) + " cluster destabilized");
  }
  report(14, "sigma* restriction regular, in every U_i, clusters without strict destabilizers", bad.empty(),
         std::to_string(specs.size()) + " groups" + (bad.empty() ? "" : ", failing: " + list(bad)));
}

void criterion_15() {
  bool general_flagged = false;
  for (const auto& r : closed_form_report(g_of("D:2")))
    if (r.label.rfind("general Dic formula", 0) == 0 && !r.match) general_flagged = true;
  const auto checks = run_verification();
  bool worked_passes = false, documented = false;
  for (const auto& c : checks) {
    if (c.name.rfind("D4 T-vector", 0) == 0) worked_passes = c.status == CheckStatus::Pass;
    if (c.name == "Dic general closed form") documented = c.status == CheckStatus::DocumentedMismatch;
  }
  const bool passed = verification_passed(checks);
  report(15, "general Dic formula flagged, D4 worked example passes, verify exits 0 with documented mismatch",
         general_flagged && worked_passes && documented && passed,
         std::string("flagged ") + (general_flagged ? "yes" : "no") + ", D4 " + (worked_passes ? "PASS" : "FAIL") +
             ", verify " + (passed ? "0" : "nonzero") + ", status " + (documented ? "DOCUMENTED MISMATCH" : "other"));
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  criterion_13();
  criterion_14();
  criterion_15();
  std::cout << (15 - failures) << "/15 criteria pass (" << std::fixed << std::setprecision(1) << seconds_since(t0) << " s)\n";
  return failures == 0 ? 0 : 1;
}
