#include "kleinstab/groups.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <stdexcept>

namespace kleinstab {

namespace {

CycloNumber z(long order, long exponent) { return CycloNumber::root(order, exponent); }

std::vector<CycloNumber> ints(std::initializer_list<int> values) {
  std::vector<CycloNumber> out;
  for (int v : values) out.emplace_back(v);
  return out;
}

KleinianGroup cyclic(int n) {
  KleinianGroup g;
  g.spec = {Family::A, n};
  g.order = n;
  std::vector<long> exps{0};
  if (n % 2 == 0) exps.push_back(n / 2);
  for (long k = 1; k < n; ++k)
    if (2 * k != n) exps.push_back(k);
  for (long k : exps) {
    g.classes.push_back({k == 0 ? "1" : "g^" + std::to_string(k), 1, n, z(n, k) + z(n, -k)});
  }
  for (long j = 0; j < n; ++j) {
    Irrep r{j == 0 ? "1" : "chi^" + std::to_string(j), 1, {}};
    for (long k : exps) r.character.push_back(z(n, j * k));
    g.irreps.push_back(std::move(r));
  }
  return g;
}

KleinianGroup binary_dihedral(int n) {
  KleinianGroup g;
  g.spec = {Family::D, n};
  g.order = 4L * n;
  const long m = 2L * n;  // a has order 2n
  g.classes.push_back({"1", 1, 4L * n, CycloNumber(2)});
  g.classes.push_back({"-1", 1, 4L * n, CycloNumber(-2)});
  for (long k = 1; k < n; ++k) g.classes.push_back({"a^" + std::to_string(k), 2, m, z(m, k) + z(m, -k)});
  g.classes.push_back({"xa", n, 4, CycloNumber(0)});
  g.classes.push_back({"x", n, 4, CycloNumber(0)});

  auto one_dim = [&](const std::string& label, const CycloNumber& chi_a, const CycloNumber& chi_x) {
    Irrep r{label, 1, {}};
    CycloNumber power(1);
    for (int k = 0; k < n; ++k) power *= chi_a;
    r.character.push_back(CycloNumber(1));
    r.character.push_back(power);
    CycloNumber ak(1);
    for (long k = 1; k < n; ++k) {
      ak *= chi_a;
      r.character.push_back(ak);
    }
    r.character.push_back(chi_x * chi_a);
    r.character.push_back(chi_x);
    return r;
  };
  const CycloNumber eps = n % 2 == 0 ? CycloNumber(1) : z(4, 1);
  g.irreps.push_back(one_dim("1", CycloNumber(1), CycloNumber(1)));
  g.irreps.push_back(one_dim("rho_a", CycloNumber(-1), eps));
  g.irreps.push_back(one_dim("rho_x", CycloNumber(1), CycloNumber(-1)));
  g.irreps.push_back(one_dim("rho_xa", CycloNumber(-1), -eps));
  for (long l = 1; l < n; ++l) {
    // l odd: quaternionic, l = 1 is V; l even: dihedral of index l/2
    std::string label = l == 1 ? "V" : (l % 2 == 1 ? "sigma_" + std::to_string(l) : "tau_" + std::to_string(l / 2));
    Irrep r{label, 2, {}};
    r.character.push_back(CycloNumber(2));
    r.character.push_back(CycloNumber(l % 2 == 0 ? 2 : -2));
    for (long k = 1; k < n; ++k) r.character.push_back(z(m, l * k) + z(m, -l * k));
    r.character.push_back(CycloNumber(0));
    r.character.push_back(CycloNumber(0));
    g.irreps.push_back(std::move(r));
  }
  g.v_index = 4;
  return g;
}

KleinianGroup binary_tetrahedral() {
  KleinianGroup g;
  g.spec = {Family::E6, 0};
  g.order = 24;
  const CycloNumber w = z(3, 1);
  const CycloNumber w2 = z(3, 2);
  const CycloNumber one(1), zero(0);
  g.classes = {{"1", 1, 24, CycloNumber(2)},  {"-1", 1, 24, CycloNumber(-2)}, {"i", 6, 4, zero},
               {"a", 4, 6, CycloNumber(1)},   {"b", 4, 6, CycloNumber(1)},    {"c", 4, 6, CycloNumber(-1)},
               {"d", 4, 6, CycloNumber(-1)}};
  g.irreps = {
      {"rho_0", 1, ints({1, 1, 1, 1, 1, 1, 1})},
      {"rho_1", 1, {one, one, one, w, w2, w2, w}},
      {"rho_2", 1, {one, one, one, w2, w, w, w2}},
      {"V_0", 2, ints({2, -2, 0, 1, 1, -1, -1})},
      {"V_1", 2, {CycloNumber(2), CycloNumber(-2), zero, w, w2, -w2, -w}},
      {"V_2", 2, {CycloNumber(2), CycloNumber(-2), zero, w2, w, -w, -w2}},
      {"W", 3, ints({3, 3, -1, 0, 0, 0, 0})},
  };
  g.v_index = 3;
  return g;
}

KleinianGroup binary_octahedral() {
  KleinianGroup g;
  g.spec = {Family::E7, 0};
  g.order = 48;
  const CycloNumber r2 = z(8, 1) + z(8, 7);  // sqrt(2)
  const CycloNumber zero(0);
  g.classes = {{"1", 1, 48, CycloNumber(2)}, {"-1", 1, 48, CycloNumber(-2)}, {"4a", 6, 8, zero},
               {"8a", 6, 8, r2},             {"8b", 6, 8, -r2},             {"6", 8, 6, CycloNumber(1)},
               {"3", 8, 6, CycloNumber(-1)}, {"4b", 12, 4, zero}};
  g.irreps = {
      {"1", 1, ints({1, 1, 1, 1, 1, 1, 1, 1})},
      {"1'", 1, ints({1, 1, 1, -1, -1, 1, 1, -1})},
      {"2", 2, ints({2, 2, 2, 0, 0, -1, -1, 0})},
      {"V", 2, {CycloNumber(2), CycloNumber(-2), zero, r2, -r2, CycloNumber(1), CycloNumber(-1), zero}},
      {"V'", 2, {CycloNumber(2), CycloNumber(-2), zero, -r2, r2, CycloNumber(1), CycloNumber(-1), zero}},
      {"3", 3, ints({3, 3, -1, 1, 1, 0, 0, -1})},
      {"3'", 3, ints({3, 3, -1, -1, -1, 0, 0, 1})},
      {"4", 4, ints({4, -4, 0, 0, 0, -1, 1, 0})},
  };
  g.v_index = 3;
  return g;
}

KleinianGroup binary_icosahedral() {
  KleinianGroup g;
  g.spec = {Family::E8, 0};
  g.order = 120;
  const CycloNumber tau = CycloNumber(1) + z(5, 1) + z(5, 4);  // golden ratio
  const CycloNumber sig = CycloNumber(1) - tau;
  const CycloNumber zero(0), one(1), mone(-1);
  g.classes = {{"1", 1, 120, CycloNumber(2)}, {"-1", 1, 120, CycloNumber(-2)}, {"4", 30, 4, zero},
               {"6", 20, 6, one},             {"3", 20, 6, mone},              {"10a", 12, 10, tau},
               {"10b", 12, 10, sig},          {"5a", 12, 10, -sig},            {"5b", 12, 10, -tau}};
  g.irreps = {
      {"1", 1, ints({1, 1, 1, 1, 1, 1, 1, 1, 1})},
      {"V", 2, {CycloNumber(2), CycloNumber(-2), zero, one, mone, tau, sig, -sig, -tau}},
      {"V'", 2, {CycloNumber(2), CycloNumber(-2), zero, one, mone, sig, tau, -tau, -sig}},
      {"3", 3, {CycloNumber(3), CycloNumber(3), mone, zero, zero, tau, sig, sig, tau}},
      {"3'", 3, {CycloNumber(3), CycloNumber(3), mone, zero, zero, sig, tau, tau, sig}},
      {"4", 4, ints({4, 4, 0, 1, 1, -1, -1, -1, -1})},
      {"4'", 4, ints({4, -4, 0, -1, 1, 1, 1, -1, -1})},
      {"5", 5, ints({5, 5, 1, -1, -1, 0, 0, 0, 0})},
      {"6", 6, ints({6, -6, 0, 0, 0, -1, -1, 1, 1})},
  };
  g.v_index = 1;
  return g;
}

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
  if (text == "E6") return {Family::E6, 0};
  if (text == "E7") return {Family::E7, 0};
  if (text == "E8") return {Family::E8, 0};
  if (text.size() > 2 && (text[0] == 'A' || text[0] == 'D') && text[1] == ':') {
    int value = 0;
    const char* first = text.data() + 2;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc() && ptr == last) {
      if (value < 2) throw std::invalid_argument("group parameter must be at least 2: '" + std::string(text) + "'");
      return {text[0] == 'A' ? Family::A : Family::D, value};
    }
  }
  throw std::invalid_argument("unknown group spec '" + std::string(text) + "' (expected A:N, D:n, E6, E7 or E8)");
}

std::string GroupSpec::str() const {
  switch (family) {
    case Family::A: return "A:" + std::to_string(param);
    case Family::D: return "D:" + std::to_string(param);
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

std::vector<int> KleinianGroup::dims() const {
  std::vector<int> out;
  for (const auto& r : irreps) out.push_back(r.dim);
  return out;
}

std::optional<std::size_t> KleinianGroup::minus_identity_class() const {
  if (spec.family == Family::A && spec.param % 2 == 1) return std::nullopt;
  return 1;
}

std::vector<CycloNumber> v_character(const KleinianGroup& g) {
  std::vector<CycloNumber> out;
  for (const auto& c : g.classes) out.push_back(c.chi_v);
  return out;
}

CycloNumber class_inner(const KleinianGroup& g, const std::vector<CycloNumber>& a, const std::vector<CycloNumber>& b) {
  if (a.size() != g.classes.size() || b.size() != g.classes.size())
    throw std::invalid_argument("class function length does not match the class count");
  CycloNumber sum;
  for (std::size_t c = 0; c < g.classes.size(); ++c) {
    if (a[c].is_zero() || b[c].is_zero()) continue;
    sum += (a[c] * b[c].conjugate()).scaled(Rational(g.classes[c].size));
  }
  return sum.scaled(Rational(1, g.order));
}

std::vector<long> decompose(const KleinianGroup& g, const std::vector<CycloNumber>& chi) {
  std::vector<long> out;
  for (const auto& r : g.irreps) {
    const auto q = class_inner(g, chi, r.character).as_rational();
    if (!q || !q->is_integer()) throw ConsistencyError("non-integral multiplicity in " + g.spec.str() + " for " + r.label);
    out.push_back(q->numerator().get_si());
  }
  return out;
}

std::vector<long> tensor_decompose(const KleinianGroup& g, std::size_t i, std::size_t j) {
  if (i >= g.irreps.size() || j >= g.irreps.size()) throw std::out_of_range("irrep index out of range");
  std::vector<CycloNumber> chi;
  for (std::size_t c = 0; c < g.classes.size(); ++c) chi.push_back(g.irreps[i].character[c] * g.irreps[j].character[c]);
  auto m = decompose(g, chi);
  for (long v : m)
    if (v < 0) throw ConsistencyError("negative multiplicity in a tensor product for " + g.spec.str());
  return m;
}

std::vector<std::vector<int>> mckay_matrix(const KleinianGroup& g) {
  const auto v = v_character(g);
  std::vector<std::vector<int>> out;
  for (const auto& r : g.irreps) {
    std::vector<CycloNumber> chi;
    for (std::size_t c = 0; c < g.classes.size(); ++c) chi.push_back(v[c] * r.character[c]);
    auto m = decompose(g, chi);
    out.emplace_back(m.begin(), m.end());
  }
  return out;
}

bool ValidationReport::ok() const { return failures().empty(); }

std::vector<std::string> ValidationReport::failures() const {
  std::vector<std::string> out;
  if (!row_orthogonality) out.emplace_back("row orthogonality");
  if (!column_orthogonality) out.emplace_back("column orthogonality");
  if (!class_equation) out.emplace_back("class equation");
  if (!dimension_sum) out.emplace_back("sum of squared dimensions");
  if (!counts_match) out.emplace_back("irrep count equals class count");
  if (!chi_v_real) out.emplace_back("chi_V real");
  if (!chi_v_not_two) out.emplace_back("chi_V != 2 off the identity");
  if (!identity_is_dim) out.emplace_back("character at identity equals dimension");
  if (!minus_identity) out.emplace_back("chi_V(-I) = -2");
  return out;
}

namespace {

bool rows_orthonormal(const KleinianGroup& g) {
  std::vector<std::vector<CycloNumber>> weighted_conj;
  for (const auto& r : g.irreps) {
    std::vector<CycloNumber> row;
    for (std::size_t c = 0; c < g.classes.size(); ++c)
      row.push_back(r.character[c].conjugate().scaled(Rational(g.classes[c].size)));
    weighted_conj.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < g.irreps.size(); ++i) {
    for (std::size_t j = i; j < g.irreps.size(); ++j) {
      CycloNumber sum;
      for (std::size_t c = 0; c < g.classes.size(); ++c) sum += g.irreps[i].character[c] * weighted_conj[j][c];
      if (sum != CycloNumber(i == j ? g.order : 0)) return false;
    }
  }
  return true;
}

bool columns_orthogonal(const KleinianGroup& g) {
  std::vector<std::vector<CycloNumber>> conj;
  for (const auto& r : g.irreps) {
    std::vector<CycloNumber> row;
    for (const auto& v : r.character) row.push_back(v.conjugate());
    conj.push_back(std::move(row));
  }
  for (std::size_t c = 0; c < g.classes.size(); ++c) {
    for (std::size_t d = c; d < g.classes.size(); ++d) {
      CycloNumber sum;
      for (std::size_t i = 0; i < g.irreps.size(); ++i) sum += g.irreps[i].character[c] * conj[i][d];
      if (sum != CycloNumber(c == d ? g.classes[c].centralizer_order : 0)) return false;
    }
  }
  return true;
}

// Every check except column orthogonality, which follows from row orthonormality
// of a square table and is only run in the full report.
ValidationReport validate_fast(const KleinianGroup& g) {
  ValidationReport rep;
  rep.counts_match = g.irreps.size() == g.classes.size() && !g.classes.empty();
  bool shapes = rep.counts_match;
  for (const auto& r : g.irreps) shapes = shapes && r.character.size() == g.classes.size();
  if (!shapes) return rep;

  long total = 0;
  rep.class_equation = true;
  for (const auto& c : g.classes) {
    total += c.size;
    rep.class_equation = rep.class_equation && c.size * c.centralizer_order == g.order;
  }
  rep.class_equation = rep.class_equation && total == g.order && g.classes[0].size == 1;

  long dim_sq = 0;
  rep.identity_is_dim = true;
  for (const auto& r : g.irreps) {
    dim_sq += static_cast<long>(r.dim) * r.dim;
    rep.identity_is_dim = rep.identity_is_dim && r.character[0] == CycloNumber(r.dim);
  }
  rep.dimension_sum = dim_sq == g.order;

  rep.chi_v_real = true;
  rep.chi_v_not_two = true;
  for (std::size_t c = 0; c < g.classes.size(); ++c) {
    const auto& chi = g.classes[c].chi_v;
    rep.chi_v_real = rep.chi_v_real && chi == chi.conjugate();
    if (c > 0) rep.chi_v_not_two = rep.chi_v_not_two && chi != CycloNumber(2);
    if (g.v_index) rep.chi_v_real = rep.chi_v_real && g.irreps[*g.v_index].character[c] == chi;
  }
  rep.chi_v_real = rep.chi_v_real && g.classes[0].chi_v == CycloNumber(2);

  rep.minus_identity = true;
  if (auto mi = g.minus_identity_class()) rep.minus_identity = g.classes[*mi].chi_v == CycloNumber(-2);

  rep.row_orthogonality = rows_orthonormal(g);
  rep.column_orthogonality = rep.row_orthogonality;
  return rep;
}

}  // namespace

ValidationReport validate(const KleinianGroup& g) {
  ValidationReport rep = validate_fast(g);
  if (rep.counts_match) rep.column_orthogonality = columns_orthogonal(g);
  return rep;
}

KleinianGroup build_group(const GroupSpec& spec) {
  KleinianGroup g;
  switch (spec.family) {
    case Family::A:
      if (spec.param < 2) throw std::invalid_argument("A:N requires N >= 2");
      g = cyclic(spec.param);
      break;
    case Family::D:
      if (spec.param < 2) throw std::invalid_argument("D:n requires n >= 2");
      g = binary_dihedral(spec.param);
      break;
    case Family::E6: g = binary_tetrahedral(); break;
    case Family::E7: g = binary_octahedral(); break;
    case Family::E8: g = binary_icosahedral(); break;
  }
  const auto rep = validate_fast(g);
  if (!rep.ok()) {
    std::string msg = "character table of " + spec.str() + " failed validation:";
    for (const auto& f : rep.failures()) msg += " [" + f + "]";
    throw ConsistencyError(msg);
  }
  return g;
}

const KleinianGroup& group(const GroupSpec& spec) {
  static std::mutex mu;
  static std::map<std::string, KleinianGroup> cache;
  const std::string key = spec.str();
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  KleinianGroup g = build_group(spec);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(g)).first->second;
}

}  // namespace kleinstab
