#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieaut/rational.hpp"

namespace lieaut {

/// Dense integer matrix with arbitrary-precision entries.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& factor);
  void add_col(std::size_t dst, std::size_t src, const BigInt& factor);

  bool is_diagonal() const;
  std::string to_string() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
BigInt determinant(const IntegerMatrix& m);

struct SmithForm {
  IntegerMatrix diagonal; // S
  IntegerMatrix left;     // U
  IntegerMatrix right;    // V, with U * M * V == S
  std::vector<BigInt> diagonal_entries() const;
};

/// Elementary row/column reduction with the smallest nonzero entry as pivot.
/// Diagonal entries are nonnegative and each divides the next.
SmithForm smith_normal_form(const IntegerMatrix& m);

/// Coordinates of an element of a finite abelian group, one per invariant factor.
using Element = std::vector<std::int64_t>;

/// Z/l_1 x ... x Z/l_k with l_1 | l_2 | ... | l_k and every l_i >= 2.
/// The empty list is the trivial group.
class FiniteAbelianGroup {
public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors);

  /// Invariant-factor form of Z/n_1 x ... x Z/n_m for arbitrary n_i >= 1.
  static FiniteAbelianGroup from_cyclic_orders(const std::vector<std::int64_t>& orders);

  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  std::size_t num_factors() const { return factors_.size(); }
  std::int64_t order() const;
  bool is_trivial() const { return factors_.empty(); }
  bool is_cyclic() const { return factors_.size() <= 1; }

  Element zero() const { return Element(factors_.size(), 0); }
  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element multiple(std::int64_t k, const Element& a) const;
  Element reduce(const std::vector<BigInt>& coords) const;
  bool contains(const Element& a) const;
  std::int64_t element_order(const Element& a) const;

  /// All elements in lexicographic order. Throws std::length_error above 2^20 elements.
  std::vector<Element> elements() const;

  /// "{0}", "Z/3Z", "(Z/2Z)^2", "Z/2Z × Z/4Z"
  std::string to_string() const;
  std::string element_to_string(const Element& a) const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

private:
  std::vector<std::int64_t> factors_;
};

FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);

/// Invariant factors of the abelian group whose elements are listed, using
/// the ambient group operations (counts of p^j-torsion per prime p).
FiniteAbelianGroup abstract_structure(const FiniteAbelianGroup& ambient, const std::vector<Element>& elements);

struct Subgroup {
  FiniteAbelianGroup ambient;
  std::vector<Element> generators;
  std::vector<Element> elements; // sorted

  std::size_t order() const { return elements.size(); }
  bool contains(const Element& a) const;
  FiniteAbelianGroup structure() const { return abstract_structure(ambient, elements); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

Subgroup generated_subgroup(const FiniteAbelianGroup& ambient, const std::vector<Element>& generators);

/// Canonical order: by order, then lexicographically on the sorted element lists.
bool canonical_less(const Subgroup& a, const Subgroup& b);

/// Every subgroup exactly once, canonically ordered.
std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g);

/// (+)_i (Z/l_i)^{2g}: the group H^1(C, Z) for a finite center with
/// character group g. exponent_2g must be positive and even.
FiniteAbelianGroup torsion_power(const FiniteAbelianGroup& g, int exponent_2g);

/// Projection from a superlattice onto sup/sub.
class QuotientMap {
public:
  QuotientMap() = default;
  QuotientMap(std::vector<RationalVector> sup_basis, IntegerMatrix right, std::vector<std::int64_t> diagonal,
              FiniteAbelianGroup group);

  /// Class of a vector of the superlattice. Throws LatticeError otherwise.
  Element operator()(const RationalVector& v) const;
  /// Class of an integer coordinate vector in the superlattice basis.
  Element from_coordinates(const std::vector<BigInt>& coords) const;

private:
  std::vector<RationalVector> sup_basis_;
  IntegerMatrix right_;
  std::vector<std::int64_t> diagonal_;
  FiniteAbelianGroup group_;
};

struct LatticeQuotient {
  FiniteAbelianGroup group;
  QuotientMap projection;
};

/// sup/sub for full-rank lattices given by bases of rational vectors in a
/// common ambient space. Throws LatticeError on rank mismatch or non-containment.
LatticeQuotient lattice_quotient(const std::vector<RationalVector>& sup_basis,
                                 const std::vector<RationalVector>& sub_basis);

/// Apply an integer matrix (acting on column vectors) to an element.
Element apply_matrix(const FiniteAbelianGroup& g, const IntegerMatrix& m, const Element& x);

/// Well defined on g and bijective.
bool is_automorphism(const FiniteAbelianGroup& g, const IntegerMatrix& m);

/// Named automorphisms of a finite abelian group.
struct AbelianAction {
  struct Actor {
    std::string name;
    IntegerMatrix matrix;
  };

  FiniteAbelianGroup group;
  std::vector<Actor> actors;

  Element apply(std::size_t actor, const Element& x) const;
  bool is_valid() const;
  /// Actors that fix x.
  std::vector<std::size_t> stabilizer(const Element& x) const;
};

/// First tuple (in candidate order) forming a basis of g adapted to its
/// invariant factors, i.e. x_i of order l_i generating a direct sum.
std::optional<std::vector<Element>> find_basis(const FiniteAbelianGroup& g, const std::vector<Element>& candidates);

/// Coordinates relative to a chosen basis of g.
struct Rebasing {
  FiniteAbelianGroup group;            // same invariant factors as the source
  std::vector<Element> basis;          // in source coordinates
  std::map<Element, Element> to_new;   // source coords -> new coords
  std::map<Element, Element> to_old;
};

Rebasing rebase(const FiniteAbelianGroup& g, const std::vector<Element>& basis);

} // namespace lieaut
