#include "lieaut/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lieaut/errors.hpp"

namespace lieaut {

namespace {

IntMatrix64 int_identity(std::size_t n) {
  IntMatrix64 m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix64 int_multiply(const IntMatrix64& a, const IntMatrix64& b) {
  const std::size_t n = a.size();
  IntMatrix64 c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// s_i on the root lattice in the simple-root basis.
IntMatrix64 reflection_on_roots(const std::vector<std::vector<int>>& cartan, std::size_t i) {
  IntMatrix64 m = int_identity(cartan.size());
  for (std::size_t j = 0; j < cartan.size(); ++j) m[i][j] -= cartan[i][j];
  return m;
}

RationalMatrix reflection_ambient(const RationalVector& alpha) {
  const RationalVector cv = coroot(alpha);
  RationalMatrix m = identity_matrix(alpha.size());
  for (std::size_t a = 0; a < alpha.size(); ++a)
    for (std::size_t b = 0; b < alpha.size(); ++b) m[a][b] -= alpha[a] * cv[b];
  return m;
}

std::int64_t pairing(const std::vector<std::int64_t>& coords, const std::vector<int>& cartan_row) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < coords.size(); ++j) s += coords[j] * cartan_row[j];
  return s;
}

IntPolynomial poly_trim(IntPolynomial p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

// Division by a monic polynomial; returns nullopt when the remainder is nonzero.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
  if (num.size() < den.size()) return std::nullopt;
  IntPolynomial rem = num;
  IntPolynomial q(num.size() - den.size() + 1, BigInt(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigInt c = rem[k + den.size() - 1];
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= c * den[j];
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  return poly_trim(q);
}

} // namespace

std::vector<std::int64_t> WeylElement::apply_coords(const std::vector<std::int64_t>& c) const {
  std::vector<std::int64_t> out(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) out[i] += on_roots[i][j] * c[j];
  return out;
}

bool WeylElement::is_identity() const { return on_roots == int_identity(on_roots.size()); }

WeylElement weyl_identity(const RootDatum& rd) {
  return WeylElement{{}, identity_matrix(rd.ambient_dim), int_identity(static_cast<std::size_t>(rd.rank()))};
}

WeylElement simple_reflection(const RootDatum& rd, int i) {
  const auto k = static_cast<std::size_t>(i);
  return WeylElement{{i}, reflection_ambient(rd.simple_roots.at(k)), reflection_on_roots(rd.cartan, k)};
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  WeylElement c;
  c.word = a.word;
  c.word.insert(c.word.end(), b.word.begin(), b.word.end());
  c.ambient = multiply(a.ambient, b.ambient);
  c.on_roots = int_multiply(a.on_roots, b.on_roots);
  return c;
}

WeylElement from_word(const RootDatum& rd, const std::vector<int>& word) {
  WeylElement w = weyl_identity(rd);
  for (int i : word) w = compose(w, simple_reflection(rd, i));
  return w;
}

std::int64_t element_order(const WeylElement& w, std::int64_t limit) {
  const IntMatrix64 id = int_identity(w.on_roots.size());
  IntMatrix64 p = w.on_roots;
  for (std::int64_t k = 1; k <= limit; ++k) {
    if (p == id) return k;
    p = int_multiply(p, w.on_roots);
  }
  throw std::logic_error("element order exceeds limit");
}

OrbitDecomposition decompose(const std::vector<std::uint32_t>& labels) {
  OrbitDecomposition d;
  d.num_items = labels.size();
  d.labels = labels;
  std::map<std::uint32_t, std::size_t> slot;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto [it, fresh] = slot.emplace(labels[x], d.orbits.size());
    if (fresh) {
      d.orbits.emplace_back();
      d.representatives.push_back(labels[x]);
    }
    d.orbits[it->second].push_back(x);
  }
  return d;
}

std::vector<kernels::ActionTable> simple_reflection_tables(const RootDatum& rd, kernels::Exec exec) {
  return kernels::reflection_tables(rd.root_coords, rd.cartan, exec);
}

OrbitDecomposition orbits_on_roots(const RootDatum& rd, kernels::Exec exec) {
  const auto tables = simple_reflection_tables(rd, exec);
  return decompose(kernels::orbit_labels(rd.num_roots(), tables, exec));
}

PairOrbits orbits_on_hyperplane_pairs(const RootDatum& rd, kernels::Exec exec) {
  if (rd.rank() < 2) throw EmptyPairSet(rd.dynkin.name() + " has a single root hyperplane");
  const auto root_tables = simple_reflection_tables(rd, exec);
  const auto planes = root_hyperplanes(rd);
  std::vector<std::uint32_t> plane_of(rd.num_roots());
  for (std::size_t h = 0; h < planes.size(); ++h) {
    plane_of[planes[h].positive] = static_cast<std::uint32_t>(h);
    plane_of[planes[h].negative] = static_cast<std::uint32_t>(h);
  }
  std::vector<kernels::ActionTable> plane_tables;
  for (const auto& t : root_tables) {
    kernels::ActionTable pt(planes.size());
    for (std::size_t h = 0; h < planes.size(); ++h) pt[h] = plane_of[t[planes[h].positive]];
    plane_tables.push_back(std::move(pt));
  }
  const std::size_t hp = planes.size();
  PairOrbits out;
  const auto pair_tables = kernels::unordered_pair_tables(plane_tables, hp, exec);
  out.hyperplane_pairs = decompose(kernels::orbit_labels(hp * (hp - 1) / 2, pair_tables, exec));

  out.phi_times_phi = orbits_on_root_pairs(rd, exec);
  return out;
}

std::size_t orbits_on_root_pairs(const RootDatum& rd, kernels::Exec exec) {
  const auto root_tables = simple_reflection_tables(rd, exec);
  const std::size_t n = rd.num_roots();
  const auto phi_tables = kernels::ordered_pair_tables(root_tables, n, exec);
  const auto phi_labels = kernels::orbit_labels(n * n, phi_tables, exec);
  std::set<std::uint32_t> distinct(phi_labels.begin(), phi_labels.end());
  return distinct.size();
}

WeylElement coxeter_element(const RootDatum& rd) {
  std::vector<int> word(static_cast<std::size_t>(rd.rank()));
  std::iota(word.begin(), word.end(), 0);
  return from_word(rd, word);
}

std::int64_t coxeter_number(const RootDatum& rd) { return element_order(coxeter_element(rd)); }

IntPolynomial characteristic_polynomial(const IntMatrix64& m) {
  // Faddeev-LeVerrier; every division below is exact.
  const std::size_t n = m.size();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  IntPolynomial c(n + 1, BigInt(0));
  c[n] = 1;
  std::vector<std::vector<BigInt>> mk(n, std::vector<BigInt>(n, BigInt(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += a[i][l] * mk[l][j];
      }
      next[i][i] += c[n - k + 1];
    }
    mk = std::move(next);
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * mk[l][i];
    c[n - k] = -trace / static_cast<long long>(k);
  }
  return c;
}

IntPolynomial cyclotomic_polynomial(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic index must be positive");
  IntPolynomial p(static_cast<std::size_t>(d) + 1, BigInt(0));
  p[0] = -1;
  p[static_cast<std::size_t>(d)] = 1;
  for (int e = 1; e < d; ++e)
    if (d % e == 0) p = *divide_exact(p, cyclotomic_polynomial(e));
  return p;
}

std::map<int, int> cyclotomic_factorization(const IntPolynomial& p, int bound) {
  std::map<int, int> mult;
  IntPolynomial rest = poly_trim(p);
  for (int d = 1; d <= bound; ++d) {
    if (bound % d != 0) continue;
    const IntPolynomial phi = cyclotomic_polynomial(d);
    while (auto q = divide_exact(rest, phi)) {
      rest = *q;
      ++mult[d];
    }
  }
  if (rest.size() != 1 || abs(rest[0]) != 1)
    throw std::domain_error("polynomial is not a product of cyclotomic factors of order dividing " +
                            std::to_string(bound));
  return mult;
}

std::vector<int> exponents(const RootDatum& rd) {
  const WeylElement c = coxeter_element(rd);
  const auto h = static_cast<int>(element_order(c));
  const auto factors = cyclotomic_factorization(characteristic_polynomial(c.on_roots), h);
  std::vector<int> ms;
  for (const auto& [d, k] : factors)
    for (int m = 0; m < h; ++m)
      if (h / std::gcd(m, h) == d)
        for (int j = 0; j < k; ++j) ms.push_back(m);
  std::sort(ms.begin(), ms.end());
  return ms;
}

std::vector<int> invariant_degrees(const RootDatum& rd) {
  std::vector<int> d = exponents(rd);
  for (auto& x : d) ++x;
  return d;
}

WeylElement longest_element(const RootDatum& rd) {
  WeylElement w = weyl_identity(rd);
  const auto r = static_cast<std::size_t>(rd.rank());
  while (true) {
    int ascent = -1;
    for (std::size_t i = 0; i < r && ascent < 0; ++i) {
      bool positive = false;
      for (std::size_t k = 0; k < r; ++k)
        if (w.on_roots[k][i] != 0) {
          positive = w.on_roots[k][i] > 0;
          break;
        }
      if (positive) ascent = static_cast<int>(i);
    }
    if (ascent < 0) return w;
    w = compose(w, simple_reflection(rd, ascent));
  }
}

std::vector<int> opposition_permutation(const RootDatum& rd) {
  const WeylElement w0 = longest_element(rd);
  const auto r = static_cast<std::size_t>(rd.rank());
  std::vector<int> sigma(r, -1);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::int64_t> e(r, 0);
    e[i] = 1;
    const auto img = w0.apply_coords(e);
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<std::int64_t> target(r, 0);
      target[j] = -1;
      if (img == target) sigma[i] = static_cast<int>(j);
    }
    if (sigma[i] < 0) throw std::logic_error("-w0 does not permute the simple roots");
  }
  return sigma;
}

BigInt weyl_group_order(const std::vector<std::vector<int>>& cartan) {
  const std::size_t r = cartan.size();
  if (r == 0) return 1;
  // Roots of this (possibly reducible) subsystem in simple-root coordinates.
  std::set<std::vector<std::int64_t>> roots;
  std::deque<std::vector<std::int64_t>> queue;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::int64_t> e(r, 0);
    e[i] = 1;
    roots.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < r; ++i) {
      auto w = v;
      w[i] -= pairing(v, cartan[i]);
      if (roots.insert(w).second) queue.push_back(w);
    }
  }
  // A dominant root: the highest root of some component.
  std::vector<std::int64_t> top;
  std::int64_t best = 0;
  for (const auto& v : roots) {
    bool dominant = true;
    for (std::size_t i = 0; i < r && dominant; ++i) dominant = pairing(v, cartan[i]) >= 0;
    const std::int64_t height = std::accumulate(v.begin(), v.end(), std::int64_t{0});
    if (dominant && height > best) {
      best = height;
      top = v;
    }
  }
  // Orbit of the dominant root.
  std::set<std::vector<std::int64_t>> orbit{top};
  queue.assign(1, top);
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < r; ++i) {
      auto w = v;
      w[i] -= pairing(v, cartan[i]);
      if (orbit.insert(w).second) queue.push_back(w);
    }
  }
  // Its stabilizer is the parabolic subgroup on the simple roots orthogonal to it.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < r; ++i)
    if (pairing(top, cartan[i]) == 0) keep.push_back(i);
  std::vector<std::vector<int>> sub(keep.size(), std::vector<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) sub[a][b] = cartan[keep[a]][keep[b]];
  return BigInt(orbit.size()) * weyl_group_order(sub);
}

BigInt weyl_group_order(const RootDatum& rd) { return weyl_group_order(rd.cartan); }

} // namespace lieaut
