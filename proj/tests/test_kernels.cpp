#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include <omp.h>

#include "lieaut/kernels.hpp"
#include "lieaut/weyl.hpp"

using namespace lieaut;
using kernels::Exec;

namespace {

std::vector<kernels::ActionTable> random_permutations(std::mt19937& rng, std::size_t n, std::size_t count) {
  std::vector<kernels::ActionTable> tables;
  for (std::size_t i = 0; i < count; ++i) {
    kernels::ActionTable t(n);
    std::iota(t.begin(), t.end(), 0u);
    // A few transpositions give many small orbits instead of one big one.
    for (std::size_t k = 0; k < n / 8 + 1; ++k) std::swap(t[rng() % n], t[rng() % n]);
    tables.push_back(std::move(t));
  }
  return tables;
}

} // namespace

TEST_CASE("pair_index enumerates unordered pairs") {
  const std::size_t n = 7;
  std::vector<bool> hit(n * (n - 1) / 2, false);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto k = kernels::pair_index(a, b, n);
      REQUIRE(k < hit.size());
      CHECK_FALSE(hit[k]);
      hit[k] = true;
    }
}

TEST_CASE("serial and parallel kernels agree on root data") {
  omp_set_num_threads(4);
  for (const char* name : {"A3", "B4", "D5", "E6", "F4", "E8"}) {
    CAPTURE(name);
    const auto rd = build_root_datum(parse_dynkin_type(name));
    const auto serial = kernels::reflection_tables(rd.root_coords, rd.cartan, Exec::serial);
    CHECK(kernels::reflection_tables(rd.root_coords, rd.cartan, Exec::parallel) == serial);
    const std::size_t n = rd.num_roots();
    const auto ordered = kernels::ordered_pair_tables(serial, n, Exec::serial);
    CHECK(kernels::ordered_pair_tables(serial, n, Exec::parallel) == ordered);
    const auto unordered = kernels::unordered_pair_tables(serial, n, Exec::serial);
    CHECK(kernels::unordered_pair_tables(serial, n, Exec::parallel) == unordered);
    CHECK(kernels::orbit_labels(n * n, ordered, Exec::parallel) == kernels::orbit_labels(n * n, ordered, Exec::serial));
    CHECK(orbits_on_hyperplane_pairs(rd, Exec::parallel).hyperplane_pairs.labels ==
          orbits_on_hyperplane_pairs(rd, Exec::serial).hyperplane_pairs.labels);
  }
}

TEST_CASE("serial and parallel orbit labels agree on random permutations") {
  omp_set_num_threads(4);
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 500;
    const auto tables = random_permutations(rng, n, 1 + rng() % 4);
    const auto serial = kernels::orbit_labels(n, tables, Exec::serial);
    CHECK(kernels::orbit_labels(n, tables, Exec::parallel) == serial);
    // Each label is the smallest item of a set closed under the generators.
    for (std::size_t x = 0; x < n; ++x) {
      CHECK(serial[x] <= x);
      for (const auto& t : tables) CHECK(serial[t[x]] == serial[x]);
    }
  }
}
