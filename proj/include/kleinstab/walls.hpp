#pragma once

// Central charges restricted to the root lattice K(T) spanned by the nontrivial
// skyscrapers alpha_i = [O_p (x) rho_i], the regular locus, the chamber U, walls
// for point classes and destabilizing sub-multisets.

#include <iosfwd>
#include <optional>
#include <vector>

#include "kleinstab/stability.hpp"

namespace kleinstab {

struct LocalCharge {
  std::vector<ExactComplex> values;  // Z(alpha_i), i = 1..M
};

/// A point class as a multiset of composition factors: trivial_count copies of
/// O_p (trivial action) and multiplicities[i-1] copies of alpha_i.
struct PointClass {
  long trivial_count = 0;
  std::vector<long> multiplicities;
  friend bool operator==(const PointClass&, const PointClass&) = default;
};

/// Z(alpha_i) under the parameters, plus an optional deformation added termwise.
LocalCharge restrict_charge(const StabilityParams& p, const LatticeContext& ctx,
                            const std::vector<ExactComplex>& deformation = {});

/// Z(alpha) != 0 for every root; only positive roots need to be passed.
bool is_regular(const LocalCharge& lc, const std::vector<Root>& positive);
bool is_regular(const LocalCharge& lc, const RootSystem& rs);

struct ChamberMembership {
  bool in_U = false;
  std::vector<std::size_t> boundary_components;  // 1-based irrep indices i with Im Z(alpha_i) = 0
};

ChamberMembership chamber_membership(const LocalCharge& lc);

/// Both nonzero and real-proportional.
bool wall_condition(const ExactComplex& zv, const ExactComplex& zu);

/// Phase of u strictly above phase of v, phases lifted to [0, 2): the negative real
/// ray has phase 1 and the lower half plane continues past it, as a factor does when
/// it is deformed off the ray at phase 1. False if either charge is zero.
bool phase_exceeds(const ExactComplex& u, const ExactComplex& v);

/// Charge of O_p normalized by Z([O_x]) = -1, i.e. -1 - sum r_i Z(alpha_i).
ExactComplex trivial_factor_charge(const LocalCharge& lc, const LatticeContext& ctx);
ExactComplex point_class_charge(const LocalCharge& lc, const PointClass& v, const LatticeContext& ctx);

/// The class of [O_x]: one trivial factor and r_i copies of alpha_i.
PointClass cluster_class(const LatticeContext& ctx);

/// Proper nonzero sub-multisets of the cluster whose phase strictly exceeds the cluster's.
std::vector<PointClass> destabilizers(const LocalCharge& lc, const PointClass& cluster, const LatticeContext& ctx);

struct GridAxis {
  Rational start;
  Rational stop;  // exclusive
  Rational step;
  std::vector<Rational> nodes() const;
};

struct SliceSpec {
  StabilityParams base;
  std::vector<ExactComplex> dir_x;  // deformation of Z(alpha_i) per unit x
  std::vector<ExactComplex> dir_y;
  GridAxis x;
  GridAxis y;
  PointClass v;
};

struct ScanRow {
  Rational x;
  Rational y;
  bool regular = false;
  std::vector<int> wall_signs;  // sign of cross(Z(v), Z(alpha_i)); 0 on a wall
};

/// Rows ordered by (y, x) grid index.
std::vector<ScanRow> scan_slice_serial(const SliceSpec& s, const LatticeContext& ctx);
std::vector<ScanRow> scan_slice_parallel(const SliceSpec& s, const LatticeContext& ctx);

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows, std::size_t m, int digits, bool exact);

}  // namespace kleinstab
