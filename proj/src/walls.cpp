#include "kleinstab/walls.hpp"

#include <ostream>
#include <stdexcept>

namespace kleinstab {

LocalCharge restrict_charge(const StabilityParams& p, const LatticeContext& ctx,
                            const std::vector<ExactComplex>& deformation) {
  if (!deformation.empty() && deformation.size() != ctx.rank())
    throw std::invalid_argument("deformation has " + std::to_string(deformation.size()) + " entries, expected " +
                                std::to_string(ctx.rank()));
  LocalCharge lc;
  for (std::size_t i = 1; i <= ctx.rank(); ++i) {
    const StackClass a = twisted_point_class(ctx, 0, i);
    ExactComplex z{-ch2_of(a, ctx) + p.gamma * delta_of(a, ctx), Rational(0)};
    if (!deformation.empty()) z = z + deformation[i - 1];
    lc.values.push_back(z);
  }
  return lc;
}

bool is_regular(const LocalCharge& lc, const std::vector<Root>& positive) {
  for (const auto& alpha : positive) {
    ExactComplex z;
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (alpha[i] != 0) z = z + lc.values[i] * Rational(alpha[i]);
    if (z.is_zero()) return false;
  }
  return true;
}

bool is_regular(const LocalCharge& lc, const RootSystem& rs) { return is_regular(lc, positive_roots(rs)); }

ChamberMembership chamber_membership(const LocalCharge& lc) {
  ChamberMembership out;
  out.in_U = true;
  for (std::size_t i = 0; i < lc.values.size(); ++i) {
    const int s = lc.values[i].im.sign();
    if (s <= 0) out.in_U = false;
    if (s == 0) out.boundary_components.push_back(i + 1);
  }
  return out;
}

namespace {

// Position of the phase window: 0 for phase 0, 1 for (0, 1), 2 for phase 1, 3 for (1, 2).
int phase_sector(const ExactComplex& z) {
  if (z.im.sign() > 0) return 1;
  if (z.im.sign() < 0) return 3;
  return z.re.sign() > 0 ? 0 : 2;
}

}  // namespace

bool wall_condition(const ExactComplex& zv, const ExactComplex& zu) {
  if (zv.is_zero() || zu.is_zero()) return false;
  return cross(zv, zu).is_zero();
}

bool phase_exceeds(const ExactComplex& u, const ExactComplex& v) {
  if (u.is_zero() || v.is_zero()) return false;
  const int su = phase_sector(u);
  const int sv = phase_sector(v);
  if (su != sv) return su > sv;
  return cross(v, u).sign() > 0;
}

ExactComplex trivial_factor_charge(const LocalCharge& lc, const LatticeContext& ctx) {
  ExactComplex z{Rational(-1), Rational(0)};
  for (std::size_t i = 0; i < ctx.rank(); ++i) z = z - lc.values[i] * ctx.dims[i];
  return z;
}

ExactComplex point_class_charge(const LocalCharge& lc, const PointClass& v, const LatticeContext& ctx) {
  ExactComplex z = trivial_factor_charge(lc, ctx) * Rational(v.trivial_count);
  for (std::size_t i = 0; i < v.multiplicities.size(); ++i) z = z + lc.values[i] * Rational(v.multiplicities[i]);
  return z;
}

PointClass cluster_class(const LatticeContext& ctx) {
  PointClass v{1, {}};
  for (const auto& r : ctx.dims) v.multiplicities.push_back(r.numerator().get_si());
  return v;
}

std::vector<PointClass> destabilizers(const LocalCharge& lc, const PointClass& cluster, const LatticeContext& ctx) {
  if (cluster.multiplicities.size() != ctx.rank())
    throw std::invalid_argument("point class has the wrong number of multiplicities");
  const ExactComplex total = point_class_charge(lc, cluster, ctx);
  if (total.is_zero()) throw std::domain_error("point class has zero charge");

  // digit 0 is the trivial factor, digit i >= 1 is alpha_i
  std::vector<long> limit{cluster.trivial_count};
  std::vector<ExactComplex> step{trivial_factor_charge(lc, ctx)};
  for (std::size_t i = 0; i < ctx.rank(); ++i) {
    limit.push_back(cluster.multiplicities[i]);
    step.push_back(lc.values[i]);
  }
  for (long l : limit)
    if (l < 0) throw std::invalid_argument("negative multiplicity in point class");

  std::vector<PointClass> out;
  std::vector<long> digit(limit.size(), 0);
  ExactComplex z;
  for (;;) {
    std::size_t k = 0;
    while (k < digit.size() && digit[k] == limit[k]) {
      z = z - step[k] * Rational(digit[k]);
      digit[k] = 0;
      ++k;
    }
    if (k == digit.size()) break;
    ++digit[k];
    z = z + step[k];
    if (digit == limit) continue;
    if (phase_exceeds(z, total)) out.push_back({digit[0], std::vector<long>(digit.begin() + 1, digit.end())});
  }
  return out;
}

std::vector<Rational> GridAxis::nodes() const {
  if (step.sign() <= 0) throw std::invalid_argument("grid step must be positive");
  std::vector<Rational> out;
  for (Rational x = start; x < stop; x += step) out.push_back(x);
  return out;
}

namespace {

ScanRow scan_node(const SliceSpec& s, const LatticeContext& ctx, const std::vector<Root>& positive, const Rational& x,
                  const Rational& y) {
  std::vector<ExactComplex> deformation(ctx.rank());
  for (std::size_t i = 0; i < ctx.rank(); ++i) {
    if (!s.dir_x.empty()) deformation[i] = deformation[i] + s.dir_x[i] * x;
    if (!s.dir_y.empty()) deformation[i] = deformation[i] + s.dir_y[i] * y;
  }
  const LocalCharge lc = restrict_charge(s.base, ctx, deformation);
  const ExactComplex zv = point_class_charge(lc, s.v, ctx);
  ScanRow row{x, y, is_regular(lc, positive), {}};
  for (const auto& za : lc.values) row.wall_signs.push_back(zv.is_zero() || za.is_zero() ? 0 : cross(zv, za).sign());
  return row;
}

void check_slice(const SliceSpec& s, const LatticeContext& ctx) {
  for (const auto* dir : {&s.dir_x, &s.dir_y})
    if (!dir->empty() && dir->size() != ctx.rank()) throw std::invalid_argument("slice direction has the wrong length");
  if (s.v.multiplicities.size() != ctx.rank()) throw std::invalid_argument("point class has the wrong number of multiplicities");
}

}  // namespace

std::vector<ScanRow> scan_slice_serial(const SliceSpec& s, const LatticeContext& ctx) {
  check_slice(s, ctx);
  const auto positive = positive_roots(ctx.roots);
  std::vector<ScanRow> rows;
  for (const auto& y : s.y.nodes())
    for (const auto& x : s.x.nodes()) rows.push_back(scan_node(s, ctx, positive, x, y));
  return rows;
}

std::vector<ScanRow> scan_slice_parallel(const SliceSpec& s, const LatticeContext& ctx) {
  check_slice(s, ctx);
  const auto positive = positive_roots(ctx.roots);
  const auto xs = s.x.nodes();
  const auto ys = s.y.nodes();
  std::vector<ScanRow> rows(xs.size() * ys.size());
  const long total = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long k = 0; k < total; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    rows[idx] = scan_node(s, ctx, positive, xs[idx % xs.size()], ys[idx / xs.size()]);
  }
  return rows;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows, std::size_t m, int digits, bool exact) {
  out << "x,y,regular";
  for (std::size_t i = 1; i <= m; ++i) out << ",wall_" << i;
  if (exact) out << ",x_exact,y_exact";
  out << '\n';
  for (const auto& row : rows) {
    out << row.x.decimal(digits) << ',' << row.y.decimal(digits) << ',' << (row.regular ? 1 : 0);
    for (int s : row.wall_signs) out << ',' << s;
    if (exact) out << ',' << row.x.fraction() << ',' << row.y.fraction();
    out << '\n';
  }
}

}  // namespace kleinstab
