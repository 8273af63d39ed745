#include "lieaut/rational.hpp"

#include <cassert>
#include <sstream>
#include <utility>

namespace lieaut {

Rational dot(const RationalVector& a, const RationalVector& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RationalVector sub(const RationalVector& a, const RationalVector& b) {
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RationalVector scale(const Rational& s, const RationalVector& v) {
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

RationalVector negate(const RationalVector& v) { return scale(Rational(-1), v); }

RationalVector unit_vector(std::size_t dim, std::size_t i) {
  RationalVector r(dim, Rational(0));
  r[i] = 1;
  return r;
}

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k == 0 ? 0 : b[0].size();
  RationalMatrix c(n, RationalVector(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

RationalVector apply(const RationalMatrix& m, const RationalVector& v) {
  RationalVector r(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

RationalMatrix transpose(const RationalMatrix& m) {
  if (m.empty()) return {};
  RationalMatrix t(m[0].size(), RationalVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  RationalMatrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::optional<RationalVector> coordinates_in_basis(const std::vector<RationalVector>& basis,
                                                   const RationalVector& v) {
  const std::size_t k = basis.size();
  const std::size_t dim = v.size();
  // Augmented system: dim equations, k unknowns.
  RationalMatrix a(dim, RationalVector(k + 1));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = basis[j][i];
    a[i][k] = v[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < dim; ++col) {
    std::size_t piv = row;
    while (piv < dim && a[piv][col] == 0) ++piv;
    if (piv == dim) continue;
    std::swap(a[piv], a[row]);
    const Rational p = a[row][col];
    for (std::size_t j = col; j <= k; ++j) a[row][j] /= p;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < dim; ++i)
    if (a[i][k] != 0) return std::nullopt;
  RationalVector x(k, Rational(0));
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = a[r][k];
  return x;
}

bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string to_string(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

} // namespace lieaut
