#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieaut/rational.hpp"

namespace lieaut {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

/// A Dynkin type of a simple Lie algebra. Only the admissible pairs
/// (A n>=1, B n>=2, C n>=3, D n>=4, E 6/7/8, F4, G2) can be constructed.
struct DynkinType {
  Family family = Family::A;
  int rank = 1;

  static DynkinType make(Family family, int rank);
  std::string name() const; // "E6", "D4", ...

  friend auto operator<=>(const DynkinType&, const DynkinType&) = default;
};

bool is_admissible(Family family, int rank);

/// "E6", "d4", "A1". Throws InvalidType.
DynkinType parse_dynkin_type(std::string_view text);

/// Every admissible type of rank <= max_rank, ordered by family then rank.
std::vector<DynkinType> admissible_types(int max_rank);

struct RootDatum {
  DynkinType dynkin;
  std::size_t ambient_dim = 0;
  std::vector<RationalVector> simple_roots;
  std::vector<RationalVector> simple_coroots;
  /// cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<std::vector<int>> cartan;
  /// Lexicographically sorted.
  std::vector<RationalVector> roots;
  /// root_coords[k] expresses roots[k] in the simple-root basis.
  std::vector<std::vector<std::int64_t>> root_coords;
  std::vector<RationalVector> coroots;
  std::vector<RationalVector> fundamental_weights;
  std::vector<RationalVector> fundamental_coweights;
  std::vector<std::size_t> positive_roots;

  int rank() const { return dynkin.rank; }
  std::size_t num_roots() const { return roots.size(); }
  std::optional<std::size_t> index_of(const RationalVector& v) const;
  std::size_t negative_of(std::size_t root) const;
  bool is_positive(std::size_t root) const;

  // Lookup tables filled by build_root_datum.
  std::map<RationalVector, std::size_t> index;
  std::vector<std::size_t> negatives;
};

RootDatum build_root_datum(DynkinType t);

/// Simple roots of t in its ambient realization.
std::vector<RationalVector> simple_roots_of(DynkinType t);

/// alpha^vee = 2 alpha / (alpha, alpha)
RationalVector coroot(const RationalVector& alpha);

/// s_alpha(v) = v - <v, alpha^vee> alpha
RationalVector reflect(const RationalVector& v, const RationalVector& alpha);

/// Breadth-first closure of `seeds` under the reflections in `mirrors`,
/// returned in lexicographic order.
std::vector<RationalVector> reflection_closure(const std::vector<RationalVector>& seeds,
                                               const std::vector<RationalVector>& mirrors);

/// A root hyperplane, as the unordered pair {alpha, -alpha}.
struct Hyperplane {
  std::size_t positive = 0;
  std::size_t negative = 0;
};

std::vector<Hyperplane> root_hyperplanes(const RootDatum& rd);

} // namespace lieaut
