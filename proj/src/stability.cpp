#include "kleinstab/stability.hpp"

#include <random>
#include <stdexcept>

namespace kleinstab {

namespace {

Rational floor_of(const Rational& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.value().get_num_mpz_t(), x.value().get_den_mpz_t());
  return Rational(mpq_class(f));
}

long to_long(const Rational& x, const char* what) {
  if (!x.is_integer() || !x.numerator().fits_slong_p())
    throw std::invalid_argument(std::string("a-vector needs an integral ") + what + ", got " + x.str());
  return x.numerator().get_si();
}

Rational weighted_t(const StackClass& v, const LatticeContext& ctx) {
  if (v.t.size() != ctx.rank())
    throw std::invalid_argument("class has " + std::to_string(v.t.size()) + " exceptional coordinates, expected " +
                                std::to_string(ctx.rank()));
  return dot(ctx.dims, v.t) / ctx.n;
}

Rational phi_square(const RVector& phi, const SurfaceProfile& profile) {
  if (phi.size() != static_cast<std::size_t>(profile.ns_rank))
    throw std::invalid_argument("NS coordinates do not match the profile rank");
  return bilinear(to_rational(profile.intersection), phi, phi);
}

}  // namespace

Rational SurfaceProfile::h_squared() const {
  const RVector h(ample.begin(), ample.end());
  return bilinear(to_rational(intersection), h, h);
}

RVector SurfaceProfile::h_dual() const { return mat_vec(to_rational(intersection), RVector(ample.begin(), ample.end())); }

std::vector<std::string> SurfaceProfile::check() const {
  std::vector<std::string> out;
  const auto n = static_cast<std::size_t>(ns_rank);
  if (ns_rank < 1) out.emplace_back("ns_rank must be positive");
  if (intersection.size() != n) out.emplace_back("intersection matrix must be ns_rank x ns_rank");
  for (const auto& row : intersection)
    if (row.size() != n) {
      out.emplace_back("intersection matrix must be ns_rank x ns_rank");
      break;
    }
  if (ample.size() != n) out.emplace_back("ample class must have ns_rank entries");
  if (c_H.sign() < 0) out.emplace_back("c_H must be non-negative");
  if (!out.empty()) return out;
  const RMatrix m = to_rational(intersection);
  if (!is_symmetric(m)) {
    out.emplace_back("intersection matrix is not symmetric");
    return out;
  }
  const Inertia in = inertia(m);
  if (in.positive != 1 || in.negative != ns_rank - 1)
    out.emplace_back("intersection form has signature (" + std::to_string(in.positive) + ", " +
                     std::to_string(in.negative) + "), expected (1, " + std::to_string(ns_rank - 1) + ")");
  if (h_squared().sign() <= 0) out.emplace_back("H^2 must be positive");
  return out;
}

SurfaceProfile SurfaceProfile::picard_rank_one(long h2, const Rational& c_h) {
  SurfaceProfile p;
  p.ns_rank = 1;
  p.intersection = {{static_cast<int>(h2)}};
  p.ample = {1};
  p.c_H = c_h;
  return p;
}

LatticeContext::LatticeContext(const KleinianGroup& g)
    : group(&g), roots(root_system_for(g)), tc(&t_coefficients(g)), n(g.order) {
  for (std::size_t i = 1; i < g.irreps.size(); ++i) dims.emplace_back(g.irreps[i].dim);
  D = d_constant(g);
  q = dot(dims, solve(scaled(to_rational(roots.intersection), Rational(-1)), dims));
  for (std::size_t i = 0; i < g.irreps.size(); ++i) fibers.push_back(skyscraper_fiber(g, i));
}

ResolutionClass to_resolution(const StackClass& v) { return {v.r, v.phi, v.t, v.d}; }

StackClass to_stack(const ResolutionClass& w) { return {w.r, w.phi, w.ch2, w.exceptional}; }

StackClass structure_sheaf_class(const LatticeContext& ctx, int ns_rank) {
  return {Rational(1), RVector(static_cast<std::size_t>(ns_rank)), Rational(0), RVector(ctx.rank())};
}

StackClass point_class(const LatticeContext& ctx, int ns_rank) {
  StackClass v{Rational(0), RVector(static_cast<std::size_t>(ns_rank)), Rational(1), RVector(ctx.rank())};
  for (std::size_t i = 0; i < ctx.rank(); ++i) v.t[i] = -ctx.dims[i];
  return v;
}

StackClass twisted_point_class(const LatticeContext& ctx, int ns_rank, std::size_t i) {
  if (i == 0) return point_class(ctx, ns_rank);
  if (i > ctx.rank()) throw std::out_of_range("irrep index out of range");
  StackClass v{Rational(0), RVector(static_cast<std::size_t>(ns_rank)), Rational(0), RVector(ctx.rank())};
  v.t[i - 1] = 1;
  return v;
}

StackClass free_orbit_class(const LatticeContext& ctx, int ns_rank) {
  return {Rational(0), RVector(static_cast<std::size_t>(ns_rank)), Rational(1), RVector(ctx.rank())};
}

Rational ch2_of(const StackClass& v, const LatticeContext& ctx) { return v.d + weighted_t(v, ctx); }

AVector a_vector_of(const StackClass& v, const LatticeContext& ctx) {
  const long r = to_long(v.r, "rank");
  const long d = to_long(v.d, "d");
  AVector a(ctx.fibers.size(), 0);
  a[0] += r;
  auto add_fiber = [&](std::size_t i, long mult) {
    if (mult == 0) return;
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += mult * ctx.fibers[i][k];
  };
  add_fiber(0, d);
  for (std::size_t i = 0; i < ctx.rank(); ++i) {
    const long ti = to_long(v.t[i], "t coordinate");
    add_fiber(i + 1, ti + d * ctx.dims[i].numerator().get_si());
  }
  return a;
}

Rational delta_of(const StackClass& v, const LatticeContext& ctx) {
  const Rational closed = v.r * ctx.D - weighted_t(v, ctx);
  bool integral = v.r.is_integer() && v.d.is_integer();
  for (const auto& x : v.t) integral = integral && x.is_integer();
  if (integral) {
    const Rational via_t = delta(*ctx.tc, a_vector_of(v, ctx));
    if (via_t != closed)
      throw ConsistencyError("delta of " + format_class(v) + ": closed form " + closed.str() + ", T-vector " + via_t.str());
  }
  return closed;
}

Rational discriminant(const ResolutionClass& w, const SurfaceProfile& profile, const RootSystem& rs) {
  const Rational c1sq = phi_square(w.phi, profile) + bilinear(to_rational(rs.intersection), w.exceptional, w.exceptional);
  return c1sq - Rational(2) * w.r * w.ch2;
}

Rational delta_orb(const StackClass& v, const SurfaceProfile& profile, const LatticeContext& ctx) {
  return discriminant(to_resolution(v), profile, ctx.roots);
}

Rational stack_discriminant(const StackClass& v, const SurfaceProfile& profile, const LatticeContext& ctx) {
  return phi_square(v.phi, profile) - Rational(2) * v.r * ch2_of(v, ctx);
}

ExactComplex central_charge(const StabilityParams& p, const StackClass& v, const LatticeContext& ctx,
                            const SurfaceProfile& profile) {
  const Rational s = weighted_t(v, ctx);
  const Rational ch2 = v.d + s;
  const Rational dl = v.r * ctx.D - s;
  return {-ch2 + p.re_w * v.r + p.gamma * dl, p.im_w * v.r + dot(profile.h_dual(), v.phi)};
}

GateVerdict params_gate(const StabilityParams& p, const LatticeContext& ctx, const SurfaceProfile& profile) {
  GateVerdict out;
  for (auto& reason : profile.check()) out.reasons.push_back("profile: " + reason);
  if (!out.reasons.empty()) return out;
  const Rational h2 = profile.h_squared();
  const Rational n = ctx.n;
  const Rational im2 = p.im_w * p.im_w / h2;
  const bool gamma_ok = p.gamma.sign() > 0 && p.gamma < (n - Rational(1)).inverse();
  if (!gamma_ok) out.reasons.push_back("gamma out of (0, 1/(N-1)): gamma = " + p.gamma.str());

  const Rational point_shift = p.gamma * (ctx.D - (n - Rational(1)) / n);
  const Rational prestab = p.re_w - im2 / Rational(2) + point_shift;
  const bool prestab_ok = prestab.sign() > 0;
  if (!prestab_ok) out.reasons.push_back("stability-function inequality fails: re_w - im_w^2/(2H^2) + gamma(D - (N-1)/N) = " + prestab.str());

  const Rational bound_i = -im2 + (Rational(2) + p.gamma) * ctx.D - (Rational(1) + p.gamma) * (Rational(1) + p.gamma);
  const bool cond_i = p.re_w > bound_i;
  if (!cond_i) out.reasons.push_back("condition (i) fails: re_w must exceed " + bound_i.str());

  const Rational bound_ii = im2 / Rational(2) - point_shift;
  const bool cond_ii_a = p.re_w > bound_ii;
  const bool cond_ii_b = bound_ii.sign() > 0;
  if (!cond_ii_a) out.reasons.push_back("condition (ii) fails: re_w must exceed " + bound_ii.str());
  if (!cond_ii_b) out.reasons.push_back("condition (ii) fails: im_w^2/(2H^2) - gamma(D - (N-1)/N) = " + bound_ii.str() + " is not positive");

  out.prestab_valid = gamma_ok && prestab_ok;
  out.theorem_valid = gamma_ok && cond_i && cond_ii_a && cond_ii_b;
  return out;
}

QForms::QForms(const StabilityParams& p, const LatticeContext& ctx, const SurfaceProfile& profile)
    : params_(p), ctx_(&ctx), profile_(&profile) {
  const int rho = profile.ns_rank;
  k_ = central_charge(p, point_class(ctx, rho), ctx, profile).re;
  for (std::size_t i = 1; i <= ctx.rank(); ++i) {
    const Rational z = central_charge(p, twisted_point_class(ctx, rho, i), ctx, profile).re;
    if (z > k_) k_ = z;
  }
  if (k_.sign() >= 0) throw std::domain_error("a skyscraper class has non-negative central charge " + k_.str());
  s_ = floor_of(Rational(2) * ctx.n / (k_ * k_)) + Rational(1);
}

Rational QForms::q0(const StackClass& v) const { return delta_orb(v, *profile_, *ctx_); }

Rational QForms::q1(const StackClass& v) const {
  const Rational im = central_charge(params_, v, *ctx_, *profile_).im;
  return q0(v) + profile_->c_H * im * im;
}

Rational QForms::q(const StackClass& v) const {
  const Rational re = central_charge(params_, v, *ctx_, *profile_).re;
  return q1(v) + s_ * re * re;
}

namespace {

// Coordinates x = (r, phi_1..phi_rho, d, t_1..t_M).
StackClass from_coords(const RVector& x, std::size_t rho, std::size_t m) {
  StackClass v;
  v.r = x[0];
  v.phi.assign(x.begin() + 1, x.begin() + 1 + static_cast<long>(rho));
  v.d = x[1 + rho];
  v.t.assign(x.begin() + 2 + static_cast<long>(rho), x.begin() + 2 + static_cast<long>(rho + m));
  return v;
}

}  // namespace

KernelCertificate kernel_negdef_certificate(const StabilityParams& p, const LatticeContext& ctx,
                                            const SurfaceProfile& profile) {
  const auto rho = static_cast<std::size_t>(profile.ns_rank);
  const std::size_t m = ctx.rank();
  const std::size_t dim = 2 + rho + m;
  const std::size_t id = 1 + rho;
  const std::size_t it = 2 + rho;

  RMatrix q0(dim, RVector(dim));
  const RMatrix ns = to_rational(profile.intersection);
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = 0; j < rho; ++j) q0[1 + i][1 + j] = ns[i][j];
  q0[0][id] = q0[id][0] = Rational(-1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) q0[it + i][it + j] = Rational(ctx.roots.intersection[i][j]);

  RMatrix functionals(2, RVector(dim));
  functionals[0][0] = p.re_w + p.gamma * ctx.D;
  functionals[0][id] = Rational(-1);
  const Rational wt = -(Rational(1) + p.gamma) / ctx.n;
  for (std::size_t i = 0; i < m; ++i) functionals[0][it + i] = wt * ctx.dims[i];
  functionals[1][0] = p.im_w;
  const RVector hd = profile.h_dual();
  for (std::size_t i = 0; i < rho; ++i) functionals[1][1 + i] = hd[i];

  KernelCertificate cert;
  cert.lattice_rank = dim;
  const RMatrix basis = nullspace(functionals);
  cert.kernel_rank = basis.size();
  if (basis.size() != dim - 2) {
    cert.degenerate = true;
    return cert;
  }
  const RMatrix g = gram(q0, basis);
  cert.pivots = symmetric_pivots(g);
  const auto sylvester = negative_definite_certificate(g);
  bool all_negative = cert.pivots.size() == g.size();
  for (const auto& piv : cert.pivots) all_negative = all_negative && piv.sign() < 0;
  if (all_negative != sylvester.negative_definite)
    throw ConsistencyError("pivot and minor certificates disagree on the kernel form");
  cert.negative_definite = all_negative;
  if (sylvester.witness) {
    RVector x(dim);
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t j = 0; j < dim; ++j) x[j] += (*sylvester.witness)[k] * basis[k][j];
    cert.witness = from_coords(x, rho, m);
    cert.witness_q0 = bilinear(q0, x, x);
  }
  return cert;
}

Rational kernel_threshold(const StabilityParams& p, const LatticeContext& ctx, const SurfaceProfile& profile) {
  const Rational h2 = profile.h_squared();
  const Rational g1 = Rational(1) + p.gamma;
  return p.im_w * p.im_w / (Rational(2) * h2) - p.gamma * ctx.D + g1 * g1 * ctx.q / (Rational(2) * ctx.n * ctx.n);
}

Rational printed_kernel_bound(const StabilityParams& p, const LatticeContext& ctx, const SurfaceProfile& profile) {
  const Rational g1 = Rational(1) + p.gamma;
  return (Rational(2) + p.gamma) * ctx.D - g1 * g1 - p.im_w * p.im_w / profile.h_squared();
}

std::vector<KernelCertificate> kernel_sweep_serial(const std::vector<StabilityParams>& params, const LatticeContext& ctx,
                                                   const SurfaceProfile& profile) {
  std::vector<KernelCertificate> out;
  out.reserve(params.size());
  for (const auto& p : params) out.push_back(kernel_negdef_certificate(p, ctx, profile));
  return out;
}

std::vector<KernelCertificate> kernel_sweep_parallel(const std::vector<StabilityParams>& params,
                                                     const LatticeContext& ctx, const SurfaceProfile& profile) {
  std::vector<KernelCertificate> out(params.size());
  const long n = static_cast<long>(params.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = kernel_negdef_certificate(params[static_cast<std::size_t>(k)], ctx, profile);
  return out;
}

StackClass sample_positive_class(const StabilityParams& p, const LatticeContext& ctx, const SurfaceProfile& profile,
                                 std::uint64_t seed, std::uint64_t k) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
  std::mt19937_64 rng(seq);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };

  const RVector u = profile.h_dual();
  const auto rho = u.size();
  std::size_t j = 0;
  while (j < rho && u[j].is_zero()) ++j;
  if (j == rho) throw std::invalid_argument("ample class pairs to zero with NS(S)");
  const Rational uj = u[j];
  const Rational im_num(mpq_class(p.im_w.numerator()));
  const Rational im_den(mpq_class(p.im_w.denominator()));
  const Rational n_minus_1 = ctx.n - Rational(1);

  for (;;) {
    StackClass v;
    v.r = im_den * uj.abs() * Rational(uniform(1, 4));
    v.phi.assign(rho, Rational(0));
    Rational rest;
    for (std::size_t i = 0; i < rho; ++i) {
      if (i == j) continue;
      v.phi[i] = uj * Rational(uniform(-3, 3));
      rest += u[i] * v.phi[i];
    }
    // Im Z = im_w r + u.phi = 0
    v.phi[j] = (-p.im_w * v.r - rest) / uj;
    v.t.assign(ctx.rank(), Rational(0));
    for (auto& x : v.t) x = Rational(uniform(-4, 4));
    // delta >= r (D - (N-1)/N)  <=>  sum r_i t_i <= r (N - 1)
    if (dot(ctx.dims, v.t) > v.r * n_minus_1) continue;
    const Rational s = dot(ctx.dims, v.t) / ctx.n;
    const Rational phi2 = phi_square(v.phi, profile);
    // stack discriminant phi^2 - 2 r (d + s) >= 0
    v.d = floor_of(phi2 / (Rational(2) * v.r) - s) - Rational(uniform(0, 3));
    return v;
  }
}

namespace {

void check_class(const StabilityParams& p, const LatticeContext& ctx, const SurfaceProfile& profile, const StackClass& v,
                 const Rational& hodge_bound_per_r2, SweepResult& res) {
  ++res.checked;
  const ExactComplex z = central_charge(p, v, ctx, profile);
  if (!z.im.is_zero()) throw ConsistencyError("sampled class has nonzero imaginary charge");
  if (z.re.sign() <= 0) {
    ++res.violations;
    if (!res.first_violation) res.first_violation = v;
  }
  if (phi_square(v.phi, profile) > hodge_bound_per_r2 * v.r * v.r) ++res.hodge_violations;
}

}  // namespace

SweepResult stability_function_sweep_serial(const StabilityParams& p, const LatticeContext& ctx,
                                            const SurfaceProfile& profile, std::size_t count, std::uint64_t seed) {
  SweepResult res;
  const Rational hb = p.im_w * p.im_w / profile.h_squared();
  for (std::size_t k = 0; k < count; ++k) check_class(p, ctx, profile, sample_positive_class(p, ctx, profile, seed, k), hb, res);
  return res;
}

SweepResult stability_function_sweep_parallel(const StabilityParams& p, const LatticeContext& ctx,
                                              const SurfaceProfile& profile, std::size_t count, std::uint64_t seed) {
  const Rational hb = p.im_w * p.im_w / profile.h_squared();
  std::vector<SweepResult> partial(count);
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    check_class(p, ctx, profile, sample_positive_class(p, ctx, profile, seed, idx), hb, partial[idx]);
  }
  SweepResult res;
  for (auto& part : partial) {
    res.checked += part.checked;
    res.violations += part.violations;
    res.hodge_violations += part.hodge_violations;
    if (!res.first_violation && part.first_violation) res.first_violation = part.first_violation;
  }
  return res;
}

std::string format_class(const StackClass& v) {
  return "(r=" + v.r.str() + ", phi=" + format_vector(v.phi) + ", d=" + v.d.str() + ", t=" + format_vector(v.t) + ")";
}

}  // namespace kleinstab
