#include "kleinstab/verify.hpp"

#include <functional>
#include <sstream>

#include "kleinstab/walls.hpp"

namespace kleinstab {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::DocumentedMismatch: return "DOCUMENTED MISMATCH";
  }
  return "?";
}

bool verification_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

namespace {

const KleinianGroup& grp(const char* spec) { return group(GroupSpec::parse(spec)); }

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : ", ") + x.str();
  return out;
}

template <class T>
std::string join_plain(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os.str();
}

class Suite {
 public:
  void expect(std::string name, const std::function<std::pair<bool, std::string>()>& body) {
    run(std::move(name), CheckStatus::Fail, body);
  }
  /// The printed statement is known to disagree; a disagreement is reported as documented.
  void documented(std::string name, const std::function<std::pair<bool, std::string>()>& body) {
    run(std::move(name), CheckStatus::DocumentedMismatch, body);
  }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  void run(std::string name, CheckStatus on_false, const std::function<std::pair<bool, std::string>()>& body) {
    Check c{std::move(name), CheckStatus::Fail, ""};
    try {
      auto [ok, detail] = body();
      c.status = ok ? CheckStatus::Pass : on_false;
      c.detail = std::move(detail);
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    checks_.push_back(std::move(c));
  }
  std::vector<Check> checks_;
};

std::pair<bool, std::string> t_vector_is(const char* spec, const std::vector<Rational>& expected) {
  const auto& values = t_coefficients(grp(spec)).values;
  return {values == expected, join(values)};
}

}  // namespace

std::vector<Check> run_verification() {
  Suite s;

  s.expect("D(2) centralizer orders = 8, 8, 4, 4, 4", [] {
    std::vector<long> c;
    for (const auto& k : grp("D:2").classes) c.push_back(k.centralizer_order);
    return std::pair{c == std::vector<long>{8, 8, 4, 4, 4}, join_plain(c)};
  });
  s.expect("E6 centralizer orders = 24, 24, 4, 6, 6, 6, 6", [] {
    std::vector<long> c;
    for (const auto& k : grp("E6").classes) c.push_back(k.centralizer_order);
    return std::pair{c == std::vector<long>{24, 24, 4, 6, 6, 6, 6}, join_plain(c)};
  });
  s.expect("E6 character table passes orthogonality and class equation", [] {
    const auto f = validate(grp("E6")).failures();
    return std::pair{f.empty(), f.empty() ? std::string("7 x 7") : f.front()};
  });
  s.expect("D(2) V (x) V = 1 + rho_a + rho_x + rho_xa", [] {
    const auto& g = grp("D:2");
    const auto m = tensor_decompose(g, *g.v_index, *g.v_index);
    return std::pair{m == std::vector<long>{1, 1, 1, 1, 0}, join_plain(m)};
  });
  s.expect("E8 Coxeter number 30 with group order 120", [] {
    const auto& g = grp("E8");
    const auto rs = root_system_for(g);
    return std::pair{rs.coxeter == 30 && g.order == 120,
                     "h = " + std::to_string(rs.coxeter) + ", N = " + std::to_string(g.order)};
  });
  s.documented("Coxeter table row for D_n (h = 2n, N = 4n)", [] {
    std::string detail;
    bool ok = true;
    for (const char* spec : {"D:2", "D:3", "D:4"}) {
      const auto& g = grp(spec);
      const int n = root_system_for(g).rank;
      const int h = root_system_for(g).coxeter;
      ok = ok && h == 2 * n && g.order == 4 * n;
      detail += (detail.empty() ? "" : "; ") + std::string("D") + std::to_string(n) + ": h = " + std::to_string(h) +
                ", N = " + std::to_string(g.order);
    }
    return std::pair{ok, detail};
  });

  s.expect("D4 T-vector = 13/32, -3/32, -3/32, -3/32, -1/16", [] {
    return t_vector_is("D:2", {Rational(13, 32), Rational(-3, 32), Rational(-3, 32), Rational(-3, 32), Rational(-1, 16)});
  });
  s.expect("E6 T-vector = 167/288, -25/288, -25/288, 58/288, -38/288, -38/288, -27/288", [] {
    return t_vector_is("E6", {Rational(167, 288), Rational(-25, 288), Rational(-25, 288), Rational(58, 288),
                              Rational(-38, 288), Rational(-38, 288), Rational(-27, 288)});
  });
  s.expect("E6 T_{rho0} = 167/288", [] {
    const auto t = t_coefficients(grp("E6")).values[0];
    return std::pair{t == Rational(167, 288) && d_constant(grp("E6")) == t, t.str()};
  });
  s.expect("D4 fiber of O_p = 2*1 - V", [] {
    const auto a = skyscraper_fiber(grp("D:2"), 0);
    return std::pair{a == AVector{2, 0, 0, 0, -1}, join_plain(a)};
  });
  s.expect("D4 fiber of O_p (x) V = 2V - (1 + rho_a + rho_x + rho_xa)", [] {
    const auto& g = grp("D:2");
    LatticeContext ctx(g);
    const auto a = a_vector_of(twisted_point_class(ctx, 1, 4), ctx);
    return std::pair{a == AVector{-1, -1, -1, -1, 2}, join_plain(a)};
  });
  s.expect("D4 delta(O_p) = 7/8", [] {
    const auto d = delta(t_coefficients(grp("D:2")), {2, 0, 0, 0, -1});
    return std::pair{d == Rational(7, 8), d.str()};
  });
  s.expect("D4 delta(O_p (x) V) = -1/4", [] {
    const auto d = delta(t_coefficients(grp("D:2")), {-1, -1, -1, -1, 2});
    return std::pair{d == Rational(-1, 4), d.str()};
  });
  s.expect("skyscraper lemma: A(2) trivial = 1/2, D(2) V = -1/4", [] {
    const auto a = delta_skyscraper(grp("A:2"), 0);
    const auto d = delta_skyscraper(grp("D:2"), 4);
    return std::pair{a == Rational(1, 2) && d == Rational(-1, 4), a.str() + ", " + d.str()};
  });
  s.expect("type A: T_1 = (N^2 - 1)/(12N) for N <= 20", [] {
    for (long n = 2; n <= 20; ++n) {
      const auto t = d_constant(group(GroupSpec{Family::A, static_cast<int>(n)}));
      if (t != Rational(n * n - 1, 12 * n)) return std::pair{false, "N = " + std::to_string(n) + ": " + t.str()};
    }
    return std::pair{true, std::string("19 groups")};
  });
  s.expect("chi(O_p (x) rho_i) = 0 and chi(O_p) = 1 on a local profile", [] {
    for (const char* spec : {"A:3", "D:2", "E6"}) {
      const auto& g = grp(spec);
      const SurfaceProfileLite prof{Rational(2), Rational(0), Rational(0)};
      const Rational n(g.order);
      const Rational x0 = euler_characteristic(Rational(0), Rational(0), n.inverse(), Rational(1) - n.inverse(), prof);
      if (x0 != Rational(1)) return std::pair{false, std::string(spec) + " trivial: " + x0.str()};
      for (std::size_t i = 1; i < g.irreps.size(); ++i) {
        const Rational r(g.irreps[i].dim);
        const Rational x = euler_characteristic(Rational(0), Rational(0), r / n, delta_skyscraper(g, i), prof);
        if (!x.is_zero()) return std::pair{false, std::string(spec) + " " + g.irreps[i].label + ": " + x.str()};
      }
    }
    return std::pair{true, std::string("A(3), D(2), E6")};
  });

  s.expect("A(2), gamma = 1/2, w = 1: gate passes, Z([O_x]) = -1, Z(O_p) = -1/4", [] {
    const auto& g = grp("A:2");
    LatticeContext ctx(g);
    const auto prof = SurfaceProfile::picard_rank_one(1);
    const StabilityParams p{Rational(1), Rational(0), Rational(1, 2)};
    const auto gate = params_gate(p, ctx, prof);
    const auto zx = central_charge(p, free_orbit_class(ctx, 1), ctx, prof);
    const auto zp = central_charge(p, point_class(ctx, 1), ctx, prof);
    const bool ok = gate.theorem_valid && zx == ExactComplex{Rational(-1), Rational(0)} &&
                    zp == ExactComplex{Rational(-1, 4), Rational(0)};
    return std::pair{ok, "Z([O_x]) = " + zx.re.str() + ", Z(O_p) = " + zp.re.str()};
  });
  s.expect("sigma* restriction lies on every boundary component U_i", [] {
    for (const char* spec : {"A:2", "A:5", "D:2", "D:4", "E6", "E7", "E8"}) {
      const auto& g = grp(spec);
      LatticeContext ctx(g);
      const StabilityParams p{Rational(1), Rational(1), Rational(1, 2 * (g.order - 1))};
      const auto lc = restrict_charge(p, ctx);
      const auto cm = chamber_membership(lc);
      if (cm.in_U || cm.boundary_components.size() != ctx.rank() || !is_regular(lc, ctx.roots))
        return std::pair{false, std::string(spec)};
    }
    return std::pair{true, std::string("A(2), A(5), D(2), D(4), E6, E7, E8")};
  });
  s.expect("sigma*: clusters have no strict destabilizer (one S-equivalence class)", [] {
    for (const char* spec : {"A:2", "A:5", "D:2", "D:4", "E6", "E7", "E8"}) {
      const auto& g = grp(spec);
      LatticeContext ctx(g);
      const StabilityParams p{Rational(1), Rational(1), Rational(1, 2 * (g.order - 1))};
      const auto d = destabilizers(restrict_charge(p, ctx), cluster_class(ctx), ctx);
      if (!d.empty()) return std::pair{false, std::string(spec) + ": " + std::to_string(d.size()) + " destabilizers"};
    }
    return std::pair{true, std::string("A(2), A(5), D(2), D(4), E6, E7, E8")};
  });

  s.expect("D4 worked example agrees with the direct sum", [] {
    return t_vector_is("D:2", {Rational(13, 32), Rational(-3, 32), Rational(-3, 32), Rational(-3, 32), Rational(-2, 32)});
  });
  s.documented("Dic general closed form", [] {
    std::string detail;
    bool ok = true;
    for (const auto& row : closed_form_report(grp("D:2")))
      if (row.label.rfind("general Dic formula", 0) == 0 && !row.match) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + row.label + ": closed " + row.closed.str() + " vs direct " + row.direct.str();
      }
    return std::pair{ok, detail};
  });
  s.documented("Dic dihedral T_tau closed form", [] {
    std::string detail;
    bool ok = true;
    for (const auto& row : closed_form_report(grp("D:3")))
      if (row.label.rfind("dihedral T_", 0) == 0 && !row.match) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + row.label + ": closed " + row.closed.str() + " vs direct " + row.direct.str();
      }
    return std::pair{ok, detail};
  });
  s.documented("Cartan plus rank-one matrix negative definite at A(13)", [] {
    const auto& g = grp("A:13");
    const auto rep = toeplitz_lemma_check(root_system_for(g), g.order);
    return std::pair{rep.certificate.negative_definite,
                     "q = " + rep.q.str() + " vs N^2 = " + std::to_string(g.order * g.order)};
  });
  s.documented("kernel lemma hypothesis at A(2), gamma = 1/2, w = 0", [] {
    const auto& g = grp("A:2");
    LatticeContext ctx(g);
    const auto prof = SurfaceProfile::picard_rank_one(1);
    const StabilityParams p{Rational(0), Rational(0), Rational(1, 2)};
    const bool hypothesis = p.re_w > printed_kernel_bound(p, ctx, prof);
    const auto cert = kernel_negdef_certificate(p, ctx, prof);
    std::string detail = std::string("hypothesis ") + (hypothesis ? "holds" : "fails") + ", threshold " +
                         kernel_threshold(p, ctx, prof).str();
    if (cert.witness) detail += ", witness " + format_class(*cert.witness) + " with Q0 = " + cert.witness_q0.str();
    return std::pair{!hypothesis || cert.negative_definite, detail};
  });
  return s.take();
}

}  // namespace kleinstab
