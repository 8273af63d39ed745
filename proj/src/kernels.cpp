#include "lieaut/kernels.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <omp.h>

namespace lieaut::kernels {

namespace {

using Coords = std::vector<std::int64_t>;

std::uint32_t reflected_index(const std::map<Coords, std::uint32_t>& index, const Coords& c,
                              const std::vector<int>& cartan_row, std::size_t i) {
  std::int64_t pairing = 0;
  for (std::size_t j = 0; j < c.size(); ++j) pairing += c[j] * cartan_row[j];
  Coords w = c;
  w[i] -= pairing;
  auto it = index.find(w);
  if (it == index.end()) throw std::logic_error("root set not closed under a simple reflection");
  return it->second;
}

} // namespace

std::vector<ActionTable> reflection_tables(const std::vector<std::vector<std::int64_t>>& root_coords,
                                           const std::vector<std::vector<int>>& cartan, Exec exec) {
  const std::size_t n = root_coords.size();
  const std::size_t r = cartan.size();
  std::map<Coords, std::uint32_t> index;
  for (std::size_t k = 0; k < n; ++k) index.emplace(root_coords[k], static_cast<std::uint32_t>(k));

  std::vector<ActionTable> tables(r, ActionTable(n));
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < n; ++k) tables[i][k] = reflected_index(index, root_coords[k], cartan[i], i);
    return tables;
  }
  const auto total = static_cast<std::int64_t>(n * r);
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < total; ++t) {
    const auto i = static_cast<std::size_t>(t) / n;
    const auto k = static_cast<std::size_t>(t) % n;
    tables[i][k] = reflected_index(index, root_coords[k], cartan[i], i);
  }
  return tables;
}

std::size_t pair_index(std::size_t a, std::size_t b, std::size_t n) {
  if (a > b) std::swap(a, b);
  // rows a = 0..n-2, each holding pairs (a, a+1..n-1)
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

namespace {

// Inverse of pair_index, filled once per n.
std::vector<std::pair<std::uint32_t, std::uint32_t>> pair_list(std::size_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(n * (n - 1) / 2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) out.emplace_back(a, b);
  return out;
}

} // namespace

std::vector<ActionTable> unordered_pair_tables(const std::vector<ActionTable>& point_tables, std::size_t n, Exec exec) {
  const auto pairs = pair_list(n);
  const std::size_t m = pairs.size();
  std::vector<ActionTable> out(point_tables.size(), ActionTable(m));
  for (std::size_t g = 0; g < point_tables.size(); ++g) {
    const auto& t = point_tables[g];
    auto& o = out[g];
    const auto mm = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (std::int64_t x = 0; x < mm; ++x) {
      const auto [a, b] = pairs[static_cast<std::size_t>(x)];
      o[static_cast<std::size_t>(x)] = static_cast<std::uint32_t>(pair_index(t[a], t[b], n));
    }
  }
  return out;
}

std::vector<ActionTable> ordered_pair_tables(const std::vector<ActionTable>& point_tables, std::size_t n, Exec exec) {
  const std::size_t m = n * n;
  std::vector<ActionTable> out(point_tables.size(), ActionTable(m));
  for (std::size_t g = 0; g < point_tables.size(); ++g) {
    const auto& t = point_tables[g];
    auto& o = out[g];
    const auto mm = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (std::int64_t x = 0; x < mm; ++x) {
      const auto a = static_cast<std::size_t>(x) / n;
      const auto b = static_cast<std::size_t>(x) % n;
      o[static_cast<std::size_t>(x)] = static_cast<std::uint32_t>(t[a] * n + t[b]);
    }
  }
  return out;
}

std::vector<std::uint32_t> orbit_labels(std::size_t n, const std::vector<ActionTable>& tables, Exec exec) {
  std::vector<std::uint32_t> label(n);
  std::iota(label.begin(), label.end(), 0u);

  if (exec == Exec::serial) {
    // Breadth-first search from each unvisited item in increasing order.
    std::vector<bool> seen(n, false);
    std::vector<std::uint32_t> queue;
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      queue.assign(1, static_cast<std::uint32_t>(s));
      for (std::size_t q = 0; q < queue.size(); ++q) {
        const auto x = queue[q];
        label[x] = static_cast<std::uint32_t>(s);
        for (const auto& t : tables) {
          const auto y = t[x];
          if (!seen[y]) {
            seen[y] = true;
            queue.push_back(y);
          }
        }
      }
    }
    return label;
  }

  // Min-label propagation with pointer jumping. Generators are permutations,
  // so every edge lies on a cycle and pulling the minimum along g converges
  // to the orbit minimum.
  std::vector<std::uint32_t> next(n);
  const auto nn = static_cast<std::int64_t>(n);
  bool changed = true;
  while (changed) {
    changed = false;
#pragma omp parallel for schedule(static) reduction(|| : changed)
    for (std::int64_t xi = 0; xi < nn; ++xi) {
      const auto x = static_cast<std::size_t>(xi);
      std::uint32_t best = label[x];
      for (const auto& t : tables) best = std::min(best, label[t[x]]);
      best = std::min(best, label[best]);
      next[x] = best;
      if (best != label[x]) changed = true;
    }
    label.swap(next);
  }
  return label;
}

} // namespace lieaut::kernels
