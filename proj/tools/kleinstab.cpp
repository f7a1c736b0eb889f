#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "kleinstab/io.hpp"
#include "kleinstab/verify.hpp"

using namespace kleinstab;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kVerdict = 2, kInternal = 3 };

struct Options {
  std::string format = "text";
  std::string spec;
  std::string re_w = "1", im_w = "1", gamma;
  std::string profile;
  long h2 = 1;
  bool closed_form_report = false;
  std::string x_axis = "-1:1:1/2", y_axis = "-1:1:1/2";
  std::string dir_x, dir_y, point;
  std::string output;
  int digits = 6;
  bool exact = false;
  bool serial = false;
  std::string r = "0", phi, d = "0", t;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

RVector rationals(const std::string& s) {
  RVector out;
  for (const auto& x : split(s, ',')) out.push_back(Rational::parse(x));
  return out;
}

StabilityParams params_of(const Options& o, const KleinianGroup& g) {
  // default gamma sits in the middle of (0, 1/(N-1))
  const Rational gamma = o.gamma.empty() ? Rational(1, 2 * (g.order - 1)) : Rational::parse(o.gamma);
  return {Rational::parse(o.re_w), Rational::parse(o.im_w), gamma};
}

SurfaceProfile profile_of(const Options& o) {
  return o.profile.empty() ? SurfaceProfile::picard_rank_one(o.h2) : load_profile(o.profile);
}

// "re@im" pairs separated by commas, each part a rational.
std::vector<ExactComplex> complex_list(const std::string& s, std::size_t m) {
  std::vector<ExactComplex> out;
  for (const auto& item : split(s, ',')) {
    const auto at = item.find('@');
    if (at == std::string::npos) throw std::invalid_argument("direction entries look like re@im, got " + item);
    out.push_back({Rational::parse(item.substr(0, at)), Rational::parse(item.substr(at + 1))});
  }
  if (!out.empty() && out.size() != m)
    throw std::invalid_argument("direction needs " + std::to_string(m) + " entries, got " + std::to_string(out.size()));
  return out;
}

GridAxis axis_of(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) throw std::invalid_argument("grid axis must be start:stop:step, got " + s);
  return {Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2])};
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_table(const Options& o) {
  const auto& g = group(GroupSpec::parse(o.spec));
  const auto failures = validate(g).failures();
  if (o.format == "json") {
    print_json(to_json(g, failures));
  } else if (o.format == "csv") {
    std::cout << "irrep";
    for (const auto& c : g.classes) std::cout << ',' << c.label;
    std::cout << '\n' << "|C(g)|";
    for (const auto& c : g.classes) std::cout << ',' << c.centralizer_order;
    std::cout << '\n';
    for (const auto& r : g.irreps) {
      std::cout << r.label;
      for (const auto& x : r.character) std::cout << ',' << x.str();
      std::cout << '\n';
    }
  } else {
    std::vector<std::vector<std::string>> cells{{g.spec.str() + " (order " + std::to_string(g.order) + ")"}, {"|C(g)|"},
                                                {"class size"}};
    for (const auto& c : g.classes) {
      cells[0].push_back(c.label);
      cells[1].push_back(std::to_string(c.centralizer_order));
      cells[2].push_back(std::to_string(c.size));
    }
    for (const auto& r : g.irreps) {
      cells.push_back({r.label});
      for (const auto& x : r.character) cells.back().push_back(x.str());
    }
    std::vector<std::size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
      for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
    for (const auto& row : cells) {
      for (std::size_t k = 0; k < row.size(); ++k) std::cout << pad(row[k], width[k] + 2);
      std::cout << '\n';
    }
    std::cout << "orthogonality and class equation: " << (failures.empty() ? "pass" : "FAIL") << '\n';
    for (const auto& f : failures) std::cout << "  " << f << '\n';
  }
  return failures.empty() ? kOk : kInternal;
}

int cmd_trr(const Options& o) {
  const auto& g = group(GroupSpec::parse(o.spec));
  const auto& tc = t_coefficients(g);
  const auto rows = o.closed_form_report ? closed_form_report(g) : std::vector<ClosedFormRow>{};
  if (o.format == "json") {
    json j = to_json(tc);
    if (o.closed_form_report) j["closed_form_report"] = to_json(rows);
    print_json(j);
  } else if (o.format == "csv") {
    std::cout << "label,value\n";
    for (std::size_t i = 0; i < tc.values.size(); ++i) std::cout << tc.labels[i] << ',' << tc.values[i].fraction() << '\n';
    if (o.closed_form_report) {
      std::cout << "\nform,direct,closed,match\n";
      for (const auto& r : rows) std::cout << '"' << r.label << "\"," << r.direct.str() << ',' << r.closed.str() << ',' << r.match << '\n';
    }
  } else {
    for (std::size_t i = 0; i < tc.values.size(); ++i) std::cout << pad("T_" + tc.labels[i], 14) << tc.values[i] << '\n';
    if (o.closed_form_report) {
      std::cout << '\n';
      for (const auto& r : rows)
        std::cout << (r.match ? "match     " : "MISMATCH  ") << r.label << ": direct " << r.direct.str() << ", closed "
                  << r.closed.str() << '\n';
    }
  }
  return kOk;
}

int cmd_roots(const Options& o) {
  const auto& g = group(GroupSpec::parse(o.spec));
  const auto rs = root_system_for(g);
  const auto count = enumerate_roots(rs).size();
  const auto rep = toeplitz_lemma_check(rs, g.order);
  if (o.format == "json") {
    json j = to_json(rs);
    j["root_count"] = count;
    j["cartan_plus_rank_one"] = to_json(rep);
    print_json(j);
  } else if (o.format == "csv") {
    std::cout << "label,rank,roots,coxeter,group_order,negative_definite,q\n"
              << rs.label << ',' << rs.rank << ',' << count << ',' << rs.coxeter << ',' << g.order << ','
              << rep.certificate.negative_definite << ',' << rep.q.fraction() << '\n';
  } else {
    std::cout << rs.label << ": rank " << rs.rank << ", " << count << " roots, Coxeter number " << rs.coxeter << '\n';
    std::cout << "highest root " << format_vector(to_rational(std::vector<std::vector<int>>{rs.highest_root})[0]) << '\n';
    std::cout << "H + r r^T/N^2 negative definite: " << (rep.certificate.negative_definite ? "yes" : "no") << " (q = "
              << rep.q << ", N^2 = " << g.order * g.order << ")\n";
    if (rep.certificate.witness) std::cout << "  witness " << format_vector(*rep.certificate.witness) << '\n';
    std::cout << std::setprecision(10) << "eta_1 = " << rep.eta1 << ", eta_1 + (h-1)/N^2 = " << rep.printed_bound
              << ", eta_1 + (N-1)/N^2 = " << rep.rank_one_bound << '\n';
  }
  return kOk;
}

int cmd_check_params(const Options& o) {
  const auto& g = group(GroupSpec::parse(o.spec));
  const auto prof = profile_of(o);
  LatticeContext ctx(g);
  const auto p = params_of(o, g);
  const auto gate = params_gate(p, ctx, prof);
  const auto cert = kernel_negdef_certificate(p, ctx, prof);
  const bool ok = gate.theorem_valid && cert.negative_definite;
  std::optional<QForms> forms;
  try {
    forms.emplace(p, ctx, prof);
  } catch (const std::domain_error&) {
  }
  if (o.format == "json") {
    json j = {{"group", g.spec.str()}, {"params", to_json(p)}, {"gate", to_json(gate)}, {"kernel", to_json(cert)},
              {"kernel_threshold", to_json(kernel_threshold(p, ctx, prof))}};
    if (forms) j["support"] = {{"K", to_json(forms->K())}, {"S", to_json(forms->S())}};
    print_json(j);
  } else if (o.format == "csv") {
    std::cout << "key,value\n"
              << "theorem_valid," << gate.theorem_valid << "\nprestab_valid," << gate.prestab_valid
              << "\nkernel_negative_definite," << cert.negative_definite << "\nkernel_threshold,"
              << kernel_threshold(p, ctx, prof).fraction() << '\n';
    for (std::size_t i = 0; i < cert.pivots.size(); ++i) std::cout << "pivot_" << i + 1 << ',' << cert.pivots[i].fraction() << '\n';
  } else {
    std::cout << g.spec.str() << ", re w = " << p.re_w << ", im w = " << p.im_w << ", gamma = " << p.gamma << '\n';
    std::cout << "theorem conditions: " << (gate.theorem_valid ? "valid" : "invalid") << '\n';
    std::cout << "stability function: " << (gate.prestab_valid ? "valid" : "invalid") << '\n';
    for (const auto& r : gate.reasons) std::cout << "  " << r << '\n';
    std::cout << "Q0 on ker Z (rank " << cert.kernel_rank << " of " << cert.lattice_rank << "): "
              << (cert.degenerate ? "degenerate kernel" : cert.negative_definite ? "negative definite" : "NOT negative definite")
              << '\n';
    std::cout << "  pivots " << format_vector(cert.pivots) << '\n';
    std::cout << "  exact threshold: re w > " << kernel_threshold(p, ctx, prof) << '\n';
    if (cert.witness) std::cout << "  witness " << format_class(*cert.witness) << ", Q0 = " << cert.witness_q0 << '\n';
    if (forms) std::cout << "K = " << forms->K() << ", S = " << forms->S() << '\n';
  }
  return ok ? kOk : kVerdict;
}

int cmd_charge(const Options& o) {
  const auto& g = group(GroupSpec::parse(o.spec));
  const auto prof = profile_of(o);
  LatticeContext ctx(g);
  const auto p = params_of(o, g);
  StackClass v{Rational::parse(o.r), rationals(o.phi), Rational::parse(o.d), rationals(o.t)};
  if (v.phi.empty()) v.phi.assign(static_cast<std::size_t>(prof.ns_rank), Rational(0));
  if (v.t.empty()) v.t.assign(ctx.rank(), Rational(0));
  const auto z = central_charge(p, v, ctx, prof);
  const auto ch2 = ch2_of(v, ctx);
  const auto dl = delta_of(v, ctx);
  const auto disc = delta_orb(v, prof, ctx);
  std::optional<AVector> a;
  try {
    a = a_vector_of(v, ctx);
  } catch (const std::invalid_argument&) {
  }
  if (o.format == "json") {
    json j = {{"class", to_json(v)}, {"ch2", to_json(ch2)},   {"delta", to_json(dl)},
              {"delta_orb", to_json(disc)}, {"Z", to_json(z)}, {"params", to_json(p)}};
    if (a) j["a_vector"] = *a;
    print_json(j);
  } else if (o.format == "csv") {
    std::cout << "ch2,delta,delta_orb,re_Z,im_Z\n"
              << ch2.fraction() << ',' << dl.fraction() << ',' << disc.fraction() << ',' << z.re.fraction() << ','
              << z.im.fraction() << '\n';
  } else {
    std::cout << format_class(v) << '\n'
              << "ch2 = " << ch2 << ", delta = " << dl << ", Delta_orb = " << disc << '\n'
              << "Z = " << z.re << " + " << z.im << " i\n";
    if (a) {
      std::cout << "a-vector";
      for (long x : *a) std::cout << ' ' << x;
      std::cout << '\n';
    }
  }
  return kOk;
}

PointClass point_of(const std::string& s, const LatticeContext& ctx) {
  if (s.empty()) return cluster_class(ctx);
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("point class looks like trivial:m1,...,mM, got " + s);
  PointClass v{std::stol(s.substr(0, colon)), {}};
  for (const auto& x : split(s.substr(colon + 1), ',')) v.multiplicities.push_back(std::stol(x));
  return v;
}

int cmd_walls(const Options& o) {
  const auto& g = group(GroupSpec::parse(o.spec));
  LatticeContext ctx(g);
  const std::size_t m = ctx.rank();
  SliceSpec s;
  s.base = params_of(o, g);
  s.dir_x = complex_list(o.dir_x, m);
  s.dir_y = complex_list(o.dir_y, m);
  // default plane: x lifts every Im Z(alpha_i), y shifts Re Z(alpha_1)
  if (s.dir_x.empty()) s.dir_x.assign(m, ExactComplex{Rational(0), Rational(1)});
  if (s.dir_y.empty()) {
    s.dir_y.assign(m, ExactComplex{});
    s.dir_y[0] = ExactComplex{Rational(1), Rational(0)};
  }
  s.x = axis_of(o.x_axis);
  s.y = axis_of(o.y_axis);
  s.v = point_of(o.point, ctx);
  const auto rows = o.serial ? scan_slice_serial(s, ctx) : scan_slice_parallel(s, ctx);

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) throw std::invalid_argument("cannot write " + o.output);
  }
  std::ostream& out = o.output.empty() ? std::cout : file;
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"x", to_json(r.x)}, {"y", to_json(r.y)}, {"regular", r.regular}, {"walls", r.wall_signs}});
    out << json{{"group", g.spec.str()}, {"rows", arr}}.dump(2) << '\n';
  } else {
    write_scan_csv(out, rows, m, o.digits, o.exact);
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  const auto checks = run_verification();
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back({{"check", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
    print_json({{"passed", verification_passed(checks)}, {"checks", arr}});
  } else if (o.format == "csv") {
    std::cout << "check,status,detail\n";
    for (const auto& c : checks) std::cout << '"' << c.name << "\"," << status_name(c.status) << ",\"" << c.detail << "\"\n";
  } else {
    for (const auto& c : checks) {
      std::cout << c.name << " : " << status_name(c.status) << '\n';
      if (c.status != CheckStatus::Pass && !c.detail.empty()) std::cout << "    " << c.detail << '\n';
    }
  }
  return verification_passed(checks) ? kOk : kVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice data for stability conditions on Kleinian orbisurfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->envname("KLEINSTAB_FORMAT")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  auto add_spec = [&](CLI::App* cmd) { cmd->add_option("group", o.spec, "A:N, D:n, E6, E7 or E8")->required(); };
  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--re-w", o.re_w, "Re w")->capture_default_str();
    cmd->add_option("--im-w", o.im_w, "Im w")->capture_default_str();
    cmd->add_option("--gamma", o.gamma, "gamma (default 1/(2(N-1)))");
  };
  auto add_profile = [&](CLI::App* cmd) {
    cmd->add_option("--profile", o.profile, "Surface profile JSON");
    cmd->add_option("--h2", o.h2, "H^2 of the Picard rank one profile used without --profile")->capture_default_str();
  };

  auto* table = app.add_subcommand("table", "Character table and its validation");
  add_spec(table);
  auto* trr = app.add_subcommand("trr", "Riemann-Roch correction coefficients T_i");
  add_spec(trr);
  trr->add_flag("--closed-form-report", o.closed_form_report, "Compare printed closed forms with the direct sum");
  auto* roots = app.add_subcommand("roots", "Root system, root count and the Cartan plus rank-one certificate");
  add_spec(roots);
  auto* check = app.add_subcommand("check-params", "Parameter conditions and the kernel certificate");
  add_spec(check);
  add_params(check);
  add_profile(check);
  auto* charge = app.add_subcommand("charge", "Invariants and central charge of a stack class");
  add_spec(charge);
  add_params(charge);
  add_profile(charge);
  charge->add_option("--r", o.r, "rank")->capture_default_str();
  charge->add_option("--phi", o.phi, "NS coordinates, comma separated");
  charge->add_option("--d", o.d, "d coordinate")->capture_default_str();
  charge->add_option("--t", o.t, "exceptional coordinates t_1..t_M, comma separated");
  auto* walls = app.add_subcommand("walls", "Scan a two-dimensional slice of charges on the root lattice");
  add_spec(walls);
  add_params(walls);
  walls->add_option("--x", o.x_axis, "start:stop:step, stop exclusive")->capture_default_str();
  walls->add_option("--y", o.y_axis, "start:stop:step, stop exclusive")->capture_default_str();
  walls->add_option("--dir-x", o.dir_x, "re@im per simple root, comma separated (default i on every root)");
  walls->add_option("--dir-y", o.dir_y, "re@im per simple root, comma separated (default 1 on the first root)");
  walls->add_option("--class", o.point, "trivial:m1,...,mM (default the cluster class)");
  walls->add_option("--digits", o.digits, "decimal digits")->capture_default_str();
  walls->add_flag("--exact", o.exact, "add num/den columns");
  walls->add_flag("--serial", o.serial, "use the serial scan");
  walls->add_option("-o,--output", o.output, "write CSV to a file");
  auto* verify = app.add_subcommand("verify", "Run the worked-example test vectors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*table) return cmd_table(o);
    if (*trr) return cmd_trr(o);
    if (*roots) return cmd_roots(o);
    if (*check) return cmd_check_params(o);
    if (*charge) return cmd_charge(o);
    if (*walls) return cmd_walls(o);
    if (*verify) return cmd_verify(o);
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency check failed: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
