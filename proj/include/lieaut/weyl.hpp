#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "lieaut/finabel.hpp"
#include "lieaut/kernels.hpp"
#include "lieaut/rootdata.hpp"

namespace lieaut {

using IntMatrix64 = std::vector<std::vector<std::int64_t>>;

/// An element of W, kept both as an ambient rational matrix and as an
/// integer matrix on the root lattice in the simple-root basis (column j is
/// the image of alpha_j).
struct WeylElement {
  std::vector<int> word; // s_{word[0]} s_{word[1]} ...
  RationalMatrix ambient;
  IntMatrix64 on_roots;

  RationalVector apply(const RationalVector& v) const { return lieaut::apply(ambient, v); }
  std::vector<std::int64_t> apply_coords(const std::vector<std::int64_t>& c) const;
  bool is_identity() const;
};

WeylElement weyl_identity(const RootDatum& rd);
WeylElement simple_reflection(const RootDatum& rd, int i);
WeylElement from_word(const RootDatum& rd, const std::vector<int>& word);
WeylElement compose(const WeylElement& a, const WeylElement& b);
/// Multiplicative order; throws std::logic_error past `limit`.
std::int64_t element_order(const WeylElement& w, std::int64_t limit = 10000);

struct OrbitDecomposition {
  std::size_t num_items = 0;
  std::vector<std::uint32_t> labels;          // smallest item of each item's orbit
  std::vector<std::vector<std::size_t>> orbits; // ordered by representative
  std::vector<std::size_t> representatives;

  std::size_t count() const { return orbits.size(); }
};

OrbitDecomposition decompose(const std::vector<std::uint32_t>& labels);

/// Permutation of the roots induced by each simple reflection.
std::vector<kernels::ActionTable> simple_reflection_tables(const RootDatum& rd,
                                                           kernels::Exec exec = kernels::Exec::parallel);

OrbitDecomposition orbits_on_roots(const RootDatum& rd, kernels::Exec exec = kernels::Exec::parallel);

struct PairOrbits {
  /// Orbits on unordered pairs of distinct root hyperplanes; items are
  /// indexed by kernels::pair_index over root_hyperplanes(rd).
  OrbitDecomposition hyperplane_pairs;
  /// Orbits of the diagonal action on ordered pairs in Phi x Phi.
  std::size_t phi_times_phi = 0;
};

/// Throws EmptyPairSet in rank one.
PairOrbits orbits_on_hyperplane_pairs(const RootDatum& rd, kernels::Exec exec = kernels::Exec::parallel);

/// Number of orbits of the diagonal action on ordered pairs in Phi x Phi.
std::size_t orbits_on_root_pairs(const RootDatum& rd, kernels::Exec exec = kernels::Exec::parallel);

/// s_1 s_2 ... s_r
WeylElement coxeter_element(const RootDatum& rd);
std::int64_t coxeter_number(const RootDatum& rd);

/// Integer coefficients, constant term first.
using IntPolynomial = std::vector<BigInt>;

IntPolynomial characteristic_polynomial(const IntMatrix64& m);
IntPolynomial cyclotomic_polynomial(int d);
/// Multiplicity of each cyclotomic factor Phi_d, d | bound. Throws
/// std::domain_error if p is not a product of such factors.
std::map<int, int> cyclotomic_factorization(const IntPolynomial& p, int bound);

/// Exponents m_i read off the Coxeter element's cyclotomic factorization.
std::vector<int> exponents(const RootDatum& rd);
/// d_i = m_i + 1, ascending.
std::vector<int> invariant_degrees(const RootDatum& rd);

/// Greedy descent from the identity.
WeylElement longest_element(const RootDatum& rd);

/// sigma with -w0(alpha_i) = alpha_{sigma(i)}.
std::vector<int> opposition_permutation(const RootDatum& rd);

/// |W| by an orbit-stabilizer chain on dominant roots of nested parabolic
/// subsystems. No element enumeration.
BigInt weyl_group_order(const RootDatum& rd);
BigInt weyl_group_order(const std::vector<std::vector<int>>& cartan);

} // namespace lieaut
