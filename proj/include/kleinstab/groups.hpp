#pragma once

// Character tables of the finite subgroups of SL(2,C).
//
// Families: cyclic A(N) = mu_N, binary dihedral D(n) = Dic_n of order 4n,
// binary tetrahedral E6, binary octahedral E7, binary icosahedral E8.
// Classes start with the identity, then -I when the group contains it.
// Irreps start with the trivial representation.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kleinstab/cyclo.hpp"

namespace kleinstab {

enum class Family { A, D, E6, E7, E8 };

struct GroupSpec {
  Family family = Family::A;
  int param = 2;  // N for A, n for D; unused for E

  /// Accepts "A:N", "D:n", "E6", "E7", "E8". Throws std::invalid_argument.
  static GroupSpec parse(std::string_view text);
  std::string str() const;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

struct ConjClass {
  std::string label;
  long size = 1;
  long centralizer_order = 1;
  CycloNumber chi_v;
};

struct Irrep {
  std::string label;
  int dim = 1;
  std::vector<CycloNumber> character;
};

struct KleinianGroup {
  GroupSpec spec;
  long order = 1;
  std::vector<ConjClass> classes;
  std::vector<Irrep> irreps;
  /// Index of V among the irreps; empty for the cyclic family, where V is reducible.
  std::optional<std::size_t> v_index;

  std::size_t num_irreps() const { return irreps.size(); }
  /// Number of nontrivial irreps (the rank of the paired root system).
  std::size_t rank() const { return irreps.size() - 1; }
  std::vector<int> dims() const;
  std::optional<std::size_t> minus_identity_class() const;
};

/// Builds and validates; throws std::invalid_argument on bad parameters and
/// ConsistencyError if the table fails validation.
KleinianGroup build_group(const GroupSpec& spec);
/// Cached, validated group; thread-safe.
const KleinianGroup& group(const GroupSpec& spec);

/// Outcome of every table check, for reporting.
struct ValidationReport {
  bool row_orthogonality = false;
  bool column_orthogonality = false;
  bool class_equation = false;
  bool dimension_sum = false;
  bool counts_match = false;
  bool chi_v_real = false;
  bool chi_v_not_two = false;
  bool identity_is_dim = false;
  bool minus_identity = false;
  bool ok() const;
  std::vector<std::string> failures() const;
};

ValidationReport validate(const KleinianGroup& g);

/// Hermitian inner product <a, b> = (1/N) sum size * a * conj(b).
CycloNumber class_inner(const KleinianGroup& g, const std::vector<CycloNumber>& a, const std::vector<CycloNumber>& b);

/// Multiplicity of each irrep in the virtual character `chi`; ConsistencyError if not integral.
std::vector<long> decompose(const KleinianGroup& g, const std::vector<CycloNumber>& chi);

/// Multiplicities of each irrep in rho_i (x) rho_j.
std::vector<long> tensor_decompose(const KleinianGroup& g, std::size_t i, std::size_t j);

/// V as a class function.
std::vector<CycloNumber> v_character(const KleinianGroup& g);

/// Entry (i, j): multiplicity of rho_j in V (x) rho_i.
std::vector<std::vector<int>> mckay_matrix(const KleinianGroup& g);

}  // namespace kleinstab
