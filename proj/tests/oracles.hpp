#pragma once
// Independent reference computations used only by the tests. Nothing here
// calls the library code it is meant to check.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "lieaut/finabel.hpp"
#include "lieaut/rootdata.hpp"

namespace oracle {

using lieaut::Rational;
using lieaut::RationalVector;

inline Rational inner(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RationalVector mirror(const RationalVector& v, const RationalVector& a) {
  const Rational c = 2 * inner(v, a) / inner(a, a);
  RationalVector out = v;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] -= c * a[i];
  return out;
}

/// Distinct vectors reachable from the simple roots by simple reflections.
inline std::set<RationalVector> root_closure(const std::vector<RationalVector>& simple) {
  std::set<RationalVector> seen(simple.begin(), simple.end());
  std::deque<RationalVector> queue(simple.begin(), simple.end());
  while (!queue.empty()) {
    const RationalVector v = queue.front();
    queue.pop_front();
    for (const auto& a : simple) {
      RationalVector w = mirror(v, a);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen;
}

using Perm = std::vector<std::size_t>;

/// Every element of W as a permutation of rd.roots, by closure of the
/// simple-reflection permutations. Only for small groups.
inline std::vector<Perm> weyl_elements(const lieaut::RootDatum& rd) {
  const std::size_t n = rd.roots.size();
  std::map<RationalVector, std::size_t> index;
  for (std::size_t k = 0; k < n; ++k) index[rd.roots[k]] = k;
  std::vector<Perm> gens;
  for (const auto& a : rd.simple_roots) {
    Perm p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = index.at(mirror(rd.roots[k], a));
    gens.push_back(p);
  }
  Perm id(n);
  for (std::size_t k = 0; k < n; ++k) id[k] = k;
  std::set<Perm> seen{id};
  std::deque<Perm> queue{id};
  while (!queue.empty()) {
    const Perm w = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      Perm ws(n);
      for (std::size_t k = 0; k < n; ++k) ws[k] = w[s[k]];
      if (seen.insert(ws).second) queue.push_back(ws);
    }
  }
  return {seen.begin(), seen.end()};
}

/// (alpha, rho) > 0 with rho the sum of the fundamental weights.
inline bool is_positive_root(const lieaut::RootDatum& rd, std::size_t k) {
  RationalVector rho(rd.ambient_dim, Rational(0));
  for (const auto& w : rd.fundamental_weights)
    for (std::size_t i = 0; i < rho.size(); ++i) rho[i] += w[i];
  return inner(rd.roots[k], rho) > 0;
}

/// Number of W-orbits on unordered pairs of distinct hyperplanes {±a}, {±b}.
inline std::size_t hyperplane_pair_orbits(const lieaut::RootDatum& rd) {
  const auto elements = weyl_elements(rd);
  const std::size_t n = rd.roots.size();
  std::map<RationalVector, std::size_t> index;
  for (std::size_t k = 0; k < n; ++k) index[rd.roots[k]] = k;
  std::vector<std::size_t> plane(n);
  for (std::size_t k = 0; k < n; ++k) {
    RationalVector neg = rd.roots[k];
    for (auto& x : neg) x = -x;
    plane[k] = std::min(k, index.at(neg));
  }
  std::set<std::pair<std::size_t, std::size_t>> orbit_keys;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (plane[a] != a || plane[b] != b || a >= b) continue;
      std::pair<std::size_t, std::size_t> best{n, n};
      for (const auto& w : elements) {
        std::size_t x = plane[w[a]], y = plane[w[b]];
        if (x > y) std::swap(x, y);
        best = std::min(best, std::make_pair(x, y));
      }
      orbit_keys.insert(best);
    }
  return orbit_keys.size();
}

/// Subgroups of g found by closing every subset of its elements.
inline std::set<std::vector<lieaut::Element>> subgroups_by_subsets(const lieaut::FiniteAbelianGroup& g) {
  const auto elems = g.elements();
  const std::size_t n = elems.size();
  std::map<lieaut::Element, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[elems[i]] = i;
  std::vector<std::vector<std::size_t>> sum(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sum[i][j] = index.at(g.add(elems[i], elems[j]));
  const std::uint64_t zero_bit = std::uint64_t{1} << index.at(g.zero());
  std::set<std::uint64_t> closed;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::uint64_t s = mask | zero_bit, prev = 0;
    while (s != prev) {
      prev = s;
      for (std::size_t i = 0; i < n; ++i)
        if (prev >> i & 1)
          for (std::size_t j = 0; j < n; ++j)
            if (prev >> j & 1) s |= std::uint64_t{1} << sum[i][j];
    }
    closed.insert(s);
  }
  std::set<std::vector<lieaut::Element>> out;
  for (auto s : closed) {
    std::vector<lieaut::Element> members;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1) members.push_back(elems[i]);
    out.insert(members);
  }
  return out;
}

/// h^0(C, omega^d) on a genus-g curve: g for d = 1, (2d-1)(g-1) for d >= 2.
inline std::int64_t sections_of_canonical_power(int d, int g) { return d == 1 ? g : (2 * d - 1) * (g - 1); }

inline lieaut::IntegerMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  lieaut::IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

} // namespace oracle
