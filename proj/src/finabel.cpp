#include "lieaut/finabel.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lieaut/errors.hpp"

namespace lieaut {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod(const BigInt& a, std::int64_t m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Build invariant factors from per-prime exponent partitions (descending).
std::vector<std::int64_t> combine_primary(const std::map<std::int64_t, std::vector<int>>& parts) {
  std::size_t width = 0;
  for (const auto& [p, es] : parts) width = std::max(width, es.size());
  std::vector<std::int64_t> factors(width, 1);
  for (const auto& [p, es] : parts)
    for (std::size_t i = 0; i < es.size(); ++i) factors[i] *= ipow(p, es[i]);
  std::vector<std::int64_t> out;
  for (auto f : factors)
    if (f > 1) out.push_back(f);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

// --- IntegerMatrix ---------------------------------------------------------

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (auto x : row) data_.emplace_back(x);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntegerMatrix::add_col(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

bool IntegerMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

BigInt determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<BigInt> SmithForm::diagonal_entries() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i) d.push_back(diagonal(i, i));
  return d;
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  IntegerMatrix v = IntegerMatrix::identity(m.cols());
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      // Smallest nonzero |entry| in the trailing block.
      std::size_t pi = rows, pj = cols;
      BigInt best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          BigInt mag = abs(a(i, j));
          if (pi == rows || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) break; // trailing block is zero
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
      a.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const BigInt q = a(i, t) / a(t, t);
        a.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const BigInt q = a(t, j) / a(t, t);
        a.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      a.add_row(t, bad, 1);
      u.add_row(t, bad, 1);
    }
    if (a(t, t) < 0) {
      a.add_row(t, t, -2);
      u.add_row(t, t, -2);
    }
  }
  return SmithForm{std::move(a), std::move(u), std::move(v)};
}

// --- FiniteAbelianGroup ----------------------------------------------------

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw std::invalid_argument("invariant factors must be >= 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
}

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(const std::vector<std::int64_t>& orders) {
  std::map<std::int64_t, std::vector<int>> parts;
  for (auto n : orders) {
    if (n < 1) throw std::invalid_argument("cyclic orders must be positive");
    for (auto [p, e] : factorize(n)) parts[p].push_back(e);
  }
  for (auto& [p, es] : parts) std::sort(es.rbegin(), es.rend());
  return FiniteAbelianGroup(combine_primary(parts));
}

std::int64_t FiniteAbelianGroup::order() const {
  std::int64_t n = 1;
  for (auto f : factors_) n *= f;
  return n;
}

Element FiniteAbelianGroup::add(const Element& a, const Element& b) const {
  Element r(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) r[i] = mod(a[i] + b[i], factors_[i]);
  return r;
}

Element FiniteAbelianGroup::negate(const Element& a) const {
  Element r(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) r[i] = mod(-a[i], factors_[i]);
  return r;
}

Element FiniteAbelianGroup::multiple(std::int64_t k, const Element& a) const {
  Element r(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) r[i] = mod(mod(k, factors_[i]) * a[i], factors_[i]);
  return r;
}

Element FiniteAbelianGroup::reduce(const std::vector<BigInt>& coords) const {
  Element r(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) r[i] = mod(coords.at(i), factors_[i]);
  return r;
}

bool FiniteAbelianGroup::contains(const Element& a) const {
  if (a.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < 0 || a[i] >= factors_[i]) return false;
  return true;
}

std::int64_t FiniteAbelianGroup::element_order(const Element& a) const {
  std::int64_t n = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) n = std::lcm(n, factors_[i] / std::gcd(a[i], factors_[i]));
  return n;
}

std::vector<Element> FiniteAbelianGroup::elements() const {
  if (order() > (1 << 20)) throw std::length_error("group too large to enumerate: " + to_string());
  std::vector<Element> out;
  Element cur = zero();
  while (true) {
    out.push_back(cur);
    std::size_t i = factors_.size();
    while (i > 0) {
      --i;
      if (++cur[i] < factors_[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (factors_.empty()) return out;
  }
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "{0}";
  std::string s;
  std::size_t i = 0;
  while (i < factors_.size()) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    const std::string cyc = "Z/" + std::to_string(factors_[i]) + "Z";
    if (!s.empty()) s += " × ";
    s += (j - i == 1) ? cyc : "(" + cyc + ")^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::string FiniteAbelianGroup::element_to_string(const Element& a) const {
  if (factors_.size() <= 1) return a.empty() ? "0" : std::to_string(a[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
  std::vector<std::int64_t> orders = a.invariant_factors();
  orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  return FiniteAbelianGroup::from_cyclic_orders(orders);
}

FiniteAbelianGroup abstract_structure(const FiniteAbelianGroup& ambient, const std::vector<Element>& elements) {
  const auto n = static_cast<std::int64_t>(elements.size());
  std::map<std::int64_t, std::vector<int>> parts;
  for (auto [p, e_total] : factorize(n)) {
    // counts[j] = log_p |{x : p^j x = 0}|, restricted to the p-part.
    std::vector<int> counts{0};
    std::int64_t pj = 1;
    while (counts.back() < e_total) {
      pj *= p;
      std::int64_t killed = 0;
      for (const auto& x : elements)
        if (ambient.multiple(pj, x) == ambient.zero()) ++killed;
      int lg = 0;
      while (killed % p == 0 && killed > 1) {
        killed /= p;
        ++lg;
      }
      // p-part of the p^j-torsion; any prime-to-p factor is absent by construction.
      counts.push_back(lg);
    }
    // number of cyclic p-factors with exponent >= j is counts[j] - counts[j-1]
    std::vector<int> at_least;
    for (std::size_t j = 1; j < counts.size(); ++j) at_least.push_back(counts[j] - counts[j - 1]);
    std::vector<int> exps;
    const int width = at_least.empty() ? 0 : at_least.front();
    for (int i = 1; i <= width; ++i) {
      int e = 0;
      for (auto c : at_least)
        if (c >= i) ++e;
      exps.push_back(e);
    }
    parts[p] = exps;
  }
  return FiniteAbelianGroup(combine_primary(parts));
}

// --- Subgroups -------------------------------------------------------------

bool Subgroup::contains(const Element& a) const { return std::binary_search(elements.begin(), elements.end(), a); }

Subgroup generated_subgroup(const FiniteAbelianGroup& ambient, const std::vector<Element>& generators) {
  std::set<Element> seen{ambient.zero()};
  std::vector<Element> frontier{ambient.zero()};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        Element y = ambient.add(x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return Subgroup{ambient, generators, {seen.begin(), seen.end()}};
}

bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements < b.elements;
}

std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g) {
  const std::vector<Element> all = g.elements();
  std::vector<Subgroup> found;
  std::set<std::vector<Element>> seen;
  auto record = [&](const std::vector<Element>& gens) {
    Subgroup s = generated_subgroup(g, gens);
    if (seen.insert(s.elements).second) found.push_back(std::move(s));
  };
  record({});
  // Every subgroup needs at most num_factors generators.
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!idx.empty()) {
      std::vector<Element> gens;
      for (auto i : idx) gens.push_back(all[i]);
      record(gens);
    }
    if (idx.size() == g.num_factors()) return;
    for (std::size_t i = start; i < all.size(); ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(1);
  for (auto& s : found) {
    // Canonical generators: a basis adapted to the subgroup's own structure.
    const FiniteAbelianGroup st = s.structure();
    std::vector<Element> gens;
    if (!st.is_trivial()) {
      // choose generators greedily by element order among subgroup elements
      std::vector<Element> cands = s.elements;
      std::optional<std::vector<Element>> basis;
      std::vector<Element> pick;
      std::function<bool(std::size_t)> search = [&](std::size_t k) {
        if (k == st.num_factors()) {
          return generated_subgroup(g, pick).elements == s.elements;
        }
        for (const auto& c : cands) {
          if (g.element_order(c) != st.invariant_factors()[k]) continue;
          pick.push_back(c);
          if (search(k + 1)) return true;
          pick.pop_back();
        }
        return false;
      };
      if (search(0)) gens = pick;
    }
    s.generators = gens;
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

FiniteAbelianGroup torsion_power(const FiniteAbelianGroup& g, int exponent_2g) {
  if (exponent_2g <= 0 || exponent_2g % 2 != 0) throw std::invalid_argument("exponent must be 2g with g >= 1");
  std::vector<std::int64_t> orders;
  for (auto l : g.invariant_factors())
    for (int i = 0; i < exponent_2g; ++i) orders.push_back(l);
  return FiniteAbelianGroup::from_cyclic_orders(orders);
}

// --- Lattice quotients -----------------------------------------------------

QuotientMap::QuotientMap(std::vector<RationalVector> sup_basis, IntegerMatrix right, std::vector<std::int64_t> diagonal,
                         FiniteAbelianGroup group)
    : sup_basis_(std::move(sup_basis)), right_(std::move(right)), diagonal_(std::move(diagonal)),
      group_(std::move(group)) {}

Element QuotientMap::from_coordinates(const std::vector<BigInt>& coords) const {
  const std::size_t k = coords.size();
  std::vector<BigInt> y(k, BigInt(0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) y[j] += coords[i] * right_(i, j);
  std::vector<BigInt> kept;
  for (std::size_t j = 0; j < k; ++j)
    if (diagonal_[j] != 1) kept.push_back(y[j]);
  return group_.reduce(kept);
}

Element QuotientMap::operator()(const RationalVector& v) const {
  auto c = coordinates_in_basis(sup_basis_, v);
  if (!c) throw LatticeError("vector " + to_string(v) + " is not in the span of the superlattice");
  std::vector<BigInt> ints;
  for (const auto& q : *c) {
    if (!is_integral(q)) throw LatticeError("vector " + to_string(v) + " is not in the superlattice");
    ints.push_back(boost::multiprecision::numerator(q));
  }
  return from_coordinates(ints);
}

LatticeQuotient lattice_quotient(const std::vector<RationalVector>& sup_basis,
                                 const std::vector<RationalVector>& sub_basis) {
  if (sup_basis.size() != sub_basis.size() || sup_basis.empty())
    throw LatticeError("lattice ranks differ (" + std::to_string(sup_basis.size()) + " vs " +
                       std::to_string(sub_basis.size()) + ")");
  const std::size_t k = sup_basis.size();
  IntegerMatrix a(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    auto c = coordinates_in_basis(sup_basis, sub_basis[i]);
    if (!c) throw LatticeError("sublattice vector " + to_string(sub_basis[i]) + " outside the superlattice span");
    for (std::size_t j = 0; j < k; ++j) {
      if (!is_integral((*c)[j]))
        throw LatticeError("sublattice vector " + to_string(sub_basis[i]) + " not in the superlattice");
      a(i, j) = boost::multiprecision::numerator((*c)[j]);
    }
  }
  SmithForm snf = smith_normal_form(a);
  std::vector<std::int64_t> diag;
  std::vector<std::int64_t> factors;
  for (std::size_t j = 0; j < k; ++j) {
    const BigInt& d = snf.diagonal(j, j);
    if (d == 0) throw LatticeError("sublattice has smaller rank than the superlattice");
    diag.push_back(static_cast<std::int64_t>(d));
    if (d != 1) factors.push_back(static_cast<std::int64_t>(d));
  }
  FiniteAbelianGroup group(factors);
  return LatticeQuotient{group, QuotientMap(sup_basis, snf.right, diag, group)};
}

// --- Actions ---------------------------------------------------------------

Element apply_matrix(const FiniteAbelianGroup& g, const IntegerMatrix& m, const Element& x) {
  const auto& f = g.invariant_factors();
  Element y(f.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < f.size(); ++j) s += m(i, j) * x[j];
    y[i] = mod(s, f[i]);
  }
  return y;
}

bool is_automorphism(const FiniteAbelianGroup& g, const IntegerMatrix& m) {
  const auto& f = g.invariant_factors();
  if (m.rows() != f.size() || m.cols() != f.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      if (mod(m(i, j) * f[j], f[i]) != 0) return false;
  std::set<Element> image;
  for (const auto& x : g.elements()) image.insert(apply_matrix(g, m, x));
  return static_cast<std::int64_t>(image.size()) == g.order();
}

Element AbelianAction::apply(std::size_t actor, const Element& x) const {
  return apply_matrix(group, actors.at(actor).matrix, x);
}

bool AbelianAction::is_valid() const {
  return std::all_of(actors.begin(), actors.end(), [&](const Actor& a) { return is_automorphism(group, a.matrix); });
}

std::vector<std::size_t> AbelianAction::stabilizer(const Element& x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < actors.size(); ++i)
    if (apply(i, x) == x) out.push_back(i);
  return out;
}

std::optional<std::vector<Element>> find_basis(const FiniteAbelianGroup& g, const std::vector<Element>& candidates) {
  const auto& f = g.invariant_factors();
  std::vector<Element> pick;
  std::function<bool(std::size_t)> search = [&](std::size_t k) {
    if (k == f.size()) return static_cast<std::int64_t>(generated_subgroup(g, pick).order()) == g.order();
    for (const auto& c : candidates) {
      if (g.element_order(c) != f[k]) continue;
      if (std::find(pick.begin(), pick.end(), c) != pick.end()) continue;
      pick.push_back(c);
      if (search(k + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (search(0)) return pick;
  return std::nullopt;
}

Rebasing rebase(const FiniteAbelianGroup& g, const std::vector<Element>& basis) {
  Rebasing rb{g, basis, {}, {}};
  for (const auto& c : g.elements()) {
    Element x = g.zero();
    for (std::size_t i = 0; i < basis.size(); ++i) x = g.add(x, g.multiple(c[i], basis[i]));
    rb.to_new[x] = c;
    rb.to_old[c] = x;
  }
  if (static_cast<std::int64_t>(rb.to_new.size()) != g.order())
    throw std::invalid_argument("rebase: elements do not form a basis");
  return rb;
}

} // namespace lieaut
