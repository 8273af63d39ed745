#pragma once

// Data-parallel kernels behind the Weyl-group orbit computations. Every
// kernel has a serial reference path and an OpenMP path; both must return
// identical results for identical input.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lieaut::kernels {

enum class Exec { serial, parallel };

/// table[x] = image of item x; one table per generator.
using ActionTable = std::vector<std::uint32_t>;

/// For each simple reflection s_i, the permutation it induces on the roots.
/// Roots are given by their simple-root coordinates; cartan[i][j] is
/// <alpha_j, alpha_i^vee>.
std::vector<ActionTable> reflection_tables(const std::vector<std::vector<std::int64_t>>& root_coords,
                                           const std::vector<std::vector<int>>& cartan, Exec exec);

/// Induced action on unordered pairs {a < b} of distinct points, indexed by
/// pair_index(a, b, n).
std::vector<ActionTable> unordered_pair_tables(const std::vector<ActionTable>& point_tables, std::size_t n, Exec exec);

/// Induced diagonal action on ordered pairs (a, b), indexed a * n + b.
std::vector<ActionTable> ordered_pair_tables(const std::vector<ActionTable>& point_tables, std::size_t n, Exec exec);

std::size_t pair_index(std::size_t a, std::size_t b, std::size_t n);

/// label[x] = smallest item in the orbit of x under the group generated by
/// the permutations in `tables`.
std::vector<std::uint32_t> orbit_labels(std::size_t n, const std::vector<ActionTable>& tables, Exec exec);

} // namespace lieaut::kernels
