#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lieaut/groupclass.hpp"
#include "lieaut/kernels.hpp"

namespace lieaut {

/// Smallest genus for which the automorphism presentation holds.
inline constexpr int kMinPresentationGenus = 4;

/// One summand Pic(C)[order] = (Z/order)^{2g} of H^1(C, Z(G)).
struct TorsionBlock {
  std::int64_t order = 0;
  int multiplicity = 0; // 2g
};

/// How one element of Out(G, delta) acts on H^1(C, Z(G)).
struct OutActionDescriptor {
  std::string element;     // cycle notation
  IntegerMatrix matrix;    // on the torsion coordinates, inverse transpose of the character action
  std::string description; // "(L,M) ↦ (M,L)", "L ↦ L^{-1}", "trivial"
};

/// H^1(C, Z(G)) ⋊ (Out(G, delta) × Aut(C)).
struct AutPresentation {
  std::string group;
  int genus = 0;
  Element delta;
  FiniteAbelianGroup pi1;
  FiniteAbelianGroup center_chars;
  std::vector<TorsionBlock> torsion_part;
  OutGroup outer_part;
  std::vector<OutActionDescriptor> actions;
  std::string curve_action = "σ.Z = σ^*Z";

  /// |H^1(C, Z(G))| as a decimal string (it overflows 64 bits quickly).
  std::string torsion_order() const;
  /// "(Pic(C)[2])^2", "Pic(C)[4]", or "" when Z(G) is trivial.
  std::string torsion_string() const;
  /// "Pic(C)[4] ⋊ (Z/2Z × Aut(C))"
  std::string render() const;
};

/// Throws GenusOutOfRange for g < 4 and InvalidDegree for delta outside pi_1(G).
AutPresentation aut_presentation(const GroupForm& gf, const Element& delta, int genus);

/// A set of degrees sharing one presentation, with its display label.
struct DeltaClass {
  FiniteAbelianGroup pi1;
  std::vector<Element> elements; // lexicographic
  std::string label;             // "δ ∈ {0}", "δ = 0,2 ∈ Z/4Z", "δ ≠ (0,0) ∈ (Z/2Z)^2"
};

std::string delta_label(const FiniteAbelianGroup& pi1, const std::vector<Element>& elements);

/// Partition of pi_1(G) by Out(G)-orbits.
std::vector<std::vector<Element>> delta_orbits(const GroupForm& gf);

/// Degrees grouped by identical presentation, classes ordered by their smallest element.
std::vector<DeltaClass> delta_classes(const GroupForm& gf, int genus);

struct TableRow {
  std::string type;
  std::string group;
  std::string delta;
  std::string presentation;
  std::vector<Element> delta_values;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

std::string to_string(const TableRow& row); // "D4 | Spin_8 | δ ∈ {0} | ..."

/// Rows for every form of every admissible type of rank <= max_rank, ordered
/// by type, then form, then degree class. Types are processed in parallel.
std::vector<TableRow> corollary_b_table(int genus, int max_rank, kernels::Exec exec = kernels::Exec::parallel);
std::vector<TableRow> table_rows(const GroupForm& gf, int genus);

struct HitchinReport {
  std::string group;
  int genus = 0;
  int rank = 0;
  std::size_t num_roots = 0;
  std::int64_t dim_G = 0;
  std::int64_t dim_center = 0;
  std::int64_t dim_basis = 0;          // Riemann-Roch sum
  std::int64_t dim_basis_closed = 0;   // dim G (g-1) + dim Z(G)
  std::vector<int> weights;            // G_m-weights d_i on the basis
  std::int64_t coxeter_number = 0;
  std::int64_t fiber_dim = 0;
  std::int64_t higgs_stack_dim = 0;
  std::size_t m_ab_components = 0;     // W-orbits on roots
  std::size_t n_extra_components = 0;  // W-orbits on pairs of distinct hyperplanes
  std::size_t phi_times_phi_orbits = 0; // W-orbits on ordered pairs of roots

  friend bool operator==(const HitchinReport&, const HitchinReport&) = default;
};

/// sum d_i (2g-2) + r (1-g) + #{d_i = 1}
std::int64_t riemann_roch_basis_dim(const std::vector<int>& degrees, int genus);

/// Requires g >= 2 (GenusOutOfRange). Throws std::logic_error if the two
/// dimension counts disagree.
HitchinReport hitchin_report(const GroupForm& gf, int genus);

struct RamificationEntry {
  std::int64_t degree = 0;          // deg_p(a^* D)
  std::int64_t stab_rank_drop = 0;  // dim t - dim t^{W_x}
};

using RamificationProfile = std::vector<RamificationEntry>;

/// (deg - drop) / 2. Throws InconsistentProfile when negative or odd.
std::int64_t delta_local(const RamificationEntry& p);
std::int64_t delta_total(const RamificationProfile& rp);

/// Local data of t^2 = x^m: (m, 0) for m even, (m, 1) for m odd.
RamificationEntry local_model(std::int64_t m);

struct DegreeIdentity {
  std::size_t num_roots = 0;
  int rank = 0;
  std::int64_t coxeter_number = 0;
};

/// |Phi| = r h with h the Coxeter order and the top degree. Throws std::logic_error otherwise.
DegreeIdentity degree_identity_check(const RootDatum& rd);

} // namespace lieaut
