#include "kleinstab/io.hpp"

#include <fstream>

namespace kleinstab {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ProfileError("expected a rational as \"num/den\" or an integer, got " + j.dump());
}

json to_json(const Rational& q) { return q.fraction(); }

json to_json(const ExactComplex& z) { return {{"re", to_json(z.re)}, {"im", to_json(z.im)}}; }

json to_json(const RVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

namespace {

std::vector<int> int_row(const json& j, const char* what) {
  if (!j.is_array()) throw ProfileError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ProfileError(std::string(what) + " must contain integers only");
    out.push_back(x.get<int>());
  }
  return out;
}

Rational optional_rational(const json& j, const char* key) {
  if (!j.contains(key)) return Rational(0);
  try {
    return rational_from_json(j.at(key));
  } catch (const std::invalid_argument& e) {
    throw ProfileError(std::string(key) + ": " + e.what());
  }
}

}  // namespace

SurfaceProfile profile_from_json(const json& j) {
  if (!j.is_object()) throw ProfileError("profile must be a JSON object");
  for (const char* key : {"ns_rank", "intersection", "ample"})
    if (!j.contains(key)) throw ProfileError(std::string("profile is missing \"") + key + "\"");
  SurfaceProfile p;
  if (!j.at("ns_rank").is_number_integer()) throw ProfileError("ns_rank must be an integer");
  p.ns_rank = j.at("ns_rank").get<int>();
  const json& m = j.at("intersection");
  if (!m.is_array()) throw ProfileError("intersection must be an array");
  const bool nested = !m.empty() && m.front().is_array();
  if (nested) {
    for (const auto& row : m) p.intersection.push_back(int_row(row, "intersection row"));
  } else {
    const auto flat = int_row(m, "intersection");
    const auto n = static_cast<std::size_t>(std::max(p.ns_rank, 0));
    if (flat.size() != n * n) throw ProfileError("intersection must have ns_rank^2 entries");
    for (std::size_t r = 0; r < n; ++r) p.intersection.emplace_back(flat.begin() + static_cast<long>(r * n), flat.begin() + static_cast<long>((r + 1) * n));
  }
  p.ample = int_row(j.at("ample"), "ample");
  if (j.contains("c_H")) {
    p.c_H = optional_rational(j, "c_H");
  } else if (p.ns_rank != 1) {
    throw ProfileError("c_H is required when ns_rank > 1");
  }
  p.lite.chi_O = optional_rational(j, "chi_O");
  p.lite.HK = optional_rational(j, "HK");
  p.lite.K2 = optional_rational(j, "K2");
  if (const auto problems = p.check(); !problems.empty()) throw ProfileError("invalid profile: " + problems.front());
  return p;
}

SurfaceProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProfileError("cannot read profile " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ProfileError("malformed profile " + path + ": " + e.what());
  }
  return profile_from_json(j);
}

json to_json(const SurfaceProfile& p) {
  json flat = json::array();
  for (const auto& row : p.intersection)
    for (int x : row) flat.push_back(x);
  return {{"ns_rank", p.ns_rank}, {"intersection", flat},         {"ample", p.ample},
          {"c_H", to_json(p.c_H)}, {"chi_O", to_json(p.lite.chi_O)}, {"HK", to_json(p.lite.HK)},
          {"K2", to_json(p.lite.K2)}};
}

json to_json(const KleinianGroup& g, const std::vector<std::string>& validation_failures) {
  json classes = json::array();
  for (const auto& c : g.classes)
    classes.push_back({{"label", c.label}, {"size", c.size}, {"centralizer_order", c.centralizer_order}, {"chi_V", c.chi_v.str()}});
  json irreps = json::array();
  for (const auto& r : g.irreps) {
    json chars = json::array();
    for (const auto& x : r.character) chars.push_back(x.str());
    irreps.push_back({{"label", r.label}, {"dim", r.dim}, {"character", chars}});
  }
  return {{"group", g.spec.str()},
          {"order", g.order},
          {"classes", classes},
          {"irreps", irreps},
          {"valid", validation_failures.empty()},
          {"failures", validation_failures}};
}

json to_json(const TCoefficients& tc) {
  json values = json::array();
  for (const auto& v : tc.values) values.push_back(to_json(v));
  return {{"group", tc.group.str()}, {"labels", tc.labels}, {"values", values}};
}

json to_json(const std::vector<ClosedFormRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"label", r.label}, {"direct", r.direct.str()}, {"closed", r.closed.str()}, {"match", r.match}});
  return out;
}

json to_json(const RootSystem& rs) {
  return {{"label", rs.label},   {"rank", rs.rank},         {"cartan", rs.cartan},
          {"highest_root", rs.highest_root}, {"coxeter", rs.coxeter}};
}

json to_json(const ToeplitzReport& rep) {
  json out = {{"label", rep.label},
              {"group_order", rep.group_order},
              {"coxeter", rep.coxeter},
              {"negative_definite", rep.certificate.negative_definite},
              {"minors", to_json(rep.certificate.minors)},
              {"q", to_json(rep.q)},
              {"eta1", rep.eta1},
              {"printed_bound", rep.printed_bound},
              {"rank_one_bound", rep.rank_one_bound}};
  if (rep.certificate.witness) out["witness"] = to_json(*rep.certificate.witness);
  return out;
}

json to_json(const StackClass& v) {
  return {{"r", to_json(v.r)}, {"phi", to_json(v.phi)}, {"d", to_json(v.d)}, {"t", to_json(v.t)}};
}

json to_json(const StabilityParams& p) {
  return {{"re_w", to_json(p.re_w)}, {"im_w", to_json(p.im_w)}, {"gamma", to_json(p.gamma)}};
}

json to_json(const GateVerdict& v) {
  return {{"theorem_valid", v.theorem_valid}, {"prestab_valid", v.prestab_valid}, {"reasons", v.reasons}};
}

json to_json(const KernelCertificate& c) {
  json out = {{"negative_definite", c.negative_definite},
              {"degenerate", c.degenerate},
              {"lattice_rank", c.lattice_rank},
              {"kernel_rank", c.kernel_rank},
              {"pivots", to_json(c.pivots)}};
  if (c.witness) {
    out["witness"] = to_json(*c.witness);
    out["witness_q0"] = to_json(c.witness_q0);
  }
  return out;
}

}  // namespace kleinstab
