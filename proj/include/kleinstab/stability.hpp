#pragma once

// Numerical classes on a Kleinian orbisurface, the central charge Z_{w,gamma},
// its parameter conditions, and exact certificates for the support property.
//
// A stack class is stored in the coordinates (r, phi, d, t) of
//   v = r[O] + phi + d[O_p] + sum_i (t_i + d r_i)[O_p (x) rho_i],   i >= 1,
// where O_p is the skyscraper at the stacky point with trivial action, so that
// d = 1, t = 0 is the class of a free orbit [O_x]. The resolution image of v is
// (r, phi + sum t_j C_j, d) with ch2 = d.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kleinstab/rootdata.hpp"
#include "kleinstab/trr.hpp"

namespace kleinstab {

struct SurfaceProfile {
  int ns_rank = 1;
  std::vector<std::vector<int>> intersection;  // on NS(S)
  std::vector<int> ample;                      // H
  Rational c_H;
  SurfaceProfileLite lite;

  Rational h_squared() const;
  /// Intersection vector M H, so that H.phi = (M H) . phi.
  RVector h_dual() const;
  /// Hodge index signature (1, rho - 1), H^2 > 0 and shapes; reasons for failure.
  std::vector<std::string> check() const;

  /// The profile NS = Z H, H^2 = h2.
  static SurfaceProfile picard_rank_one(long h2, const Rational& c_h = Rational(0));
};

struct StackClass {
  Rational r;
  RVector phi;
  Rational d;
  RVector t;
  friend bool operator==(const StackClass&, const StackClass&) = default;
};

struct ResolutionClass {
  Rational r;
  RVector phi;
  RVector exceptional;
  Rational ch2;
  friend bool operator==(const ResolutionClass&, const ResolutionClass&) = default;
};

struct StabilityParams {
  Rational re_w;
  Rational im_w;
  Rational gamma;
};

/// Group, root and T data needed by every lattice computation.
struct LatticeContext {
  const KleinianGroup* group = nullptr;
  RootSystem roots;
  const TCoefficients* tc = nullptr;
  Rational n;    // group order N
  RVector dims;  // r_i, i >= 1
  Rational D;    // delta(O_S)
  Rational q;    // r^T (-intersection)^-1 r
  std::vector<AVector> fibers;  // skyscraper_fiber(i) for every irrep

  explicit LatticeContext(const KleinianGroup& g);
  std::size_t rank() const { return dims.size(); }
};

ResolutionClass to_resolution(const StackClass& v);
StackClass to_stack(const ResolutionClass& w);

/// Classes of O_S, O_p (trivial action), O_p (x) rho_i (i >= 1) and O_x.
StackClass structure_sheaf_class(const LatticeContext& ctx, int ns_rank);
StackClass point_class(const LatticeContext& ctx, int ns_rank);
StackClass twisted_point_class(const LatticeContext& ctx, int ns_rank, std::size_t i);
StackClass free_orbit_class(const LatticeContext& ctx, int ns_rank);

Rational ch2_of(const StackClass& v, const LatticeContext& ctx);
/// Closed form rD - (1/N) sum r_i t_i; for integral classes also checked against
/// the T-vector applied to a_vector_of (ConsistencyError on disagreement).
Rational delta_of(const StackClass& v, const LatticeContext& ctx);
/// Throws std::invalid_argument for non-integral r, d or t.
AVector a_vector_of(const StackClass& v, const LatticeContext& ctx);

Rational discriminant(const ResolutionClass& w, const SurfaceProfile& profile, const RootSystem& rs);
Rational delta_orb(const StackClass& v, const SurfaceProfile& profile, const LatticeContext& ctx);
/// phi^2 - 2 r ch2(v): the discriminant of the stack class itself.
Rational stack_discriminant(const StackClass& v, const SurfaceProfile& profile, const LatticeContext& ctx);

ExactComplex central_charge(const StabilityParams& p, const StackClass& v, const LatticeContext& ctx,
                            const SurfaceProfile& profile);

struct GateVerdict {
  bool theorem_valid = false;
  bool prestab_valid = false;
  std::vector<std::string> reasons;
};

GateVerdict params_gate(const StabilityParams& p, const LatticeContext& ctx, const SurfaceProfile& profile);

/// Q0 = Delta_orb, Q1 = Q0 + C_H (Im Z)^2, Q = Q1 + S (Re Z)^2.
class QForms {
 public:
  /// Throws std::domain_error if a skyscraper charge is not negative.
  QForms(const StabilityParams& p, const LatticeContext& ctx, const SurfaceProfile& profile);
  Rational K() const { return k_; }
  Rational S() const { return s_; }
  Rational q0(const StackClass& v) const;
  Rational q1(const StackClass& v) const;
  Rational q(const StackClass& v) const;

 private:
  StabilityParams params_;
  const LatticeContext* ctx_;
  const SurfaceProfile* profile_;
  Rational k_;
  Rational s_;
};

struct KernelCertificate {
  bool negative_definite = false;
  bool degenerate = false;
  std::size_t lattice_rank = 0;
  std::size_t kernel_rank = 0;
  RVector pivots;
  /// Nonzero kernel vector in (r, phi, d, t) coordinates with Q0 >= 0, when not definite.
  std::optional<StackClass> witness;
  Rational witness_q0;
};

KernelCertificate kernel_negdef_certificate(const StabilityParams& p, const LatticeContext& ctx,
                                            const SurfaceProfile& profile);

/// Q0 is negative definite on ker Z iff re_w exceeds this value.
Rational kernel_threshold(const StabilityParams& p, const LatticeContext& ctx, const SurfaceProfile& profile);
/// The bound (2 + gamma) D - (1 + gamma)^2 - im_w^2 / H^2 assumed for the kernel.
Rational printed_kernel_bound(const StabilityParams& p, const LatticeContext& ctx, const SurfaceProfile& profile);

std::vector<KernelCertificate> kernel_sweep_serial(const std::vector<StabilityParams>& params, const LatticeContext& ctx,
                                                   const SurfaceProfile& profile);
std::vector<KernelCertificate> kernel_sweep_parallel(const std::vector<StabilityParams>& params,
                                                     const LatticeContext& ctx, const SurfaceProfile& profile);

/// Random integral classes with r > 0, Im Z = 0, stack discriminant >= 0 and
/// delta >= r (D - (N - 1)/N); the class with index k depends only on (seed, k).
StackClass sample_positive_class(const StabilityParams& p, const LatticeContext& ctx, const SurfaceProfile& profile,
                                 std::uint64_t seed, std::uint64_t k);

struct SweepResult {
  std::size_t checked = 0;
  std::size_t violations = 0;        // Re Z <= 0
  std::size_t hodge_violations = 0;  // phi^2 > im_w^2 r^2 / H^2
  std::optional<StackClass> first_violation;
};

SweepResult stability_function_sweep_serial(const StabilityParams& p, const LatticeContext& ctx,
                                            const SurfaceProfile& profile, std::size_t count, std::uint64_t seed);
SweepResult stability_function_sweep_parallel(const StabilityParams& p, const LatticeContext& ctx,
                                              const SurfaceProfile& profile, std::size_t count, std::uint64_t seed);

std::string format_class(const StackClass& v);

}  // namespace kleinstab
