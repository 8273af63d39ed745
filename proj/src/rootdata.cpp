#include "lieaut/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "lieaut/errors.hpp"

namespace lieaut {

namespace {

RationalVector vec(std::size_t dim, std::initializer_list<std::pair<std::size_t, Rational>> entries) {
  RationalVector v(dim, Rational(0));
  for (const auto& [i, q] : entries) v[i] = q;
  return v;
}

// e_i - e_j in R^dim (0-based)
RationalVector diff(std::size_t dim, std::size_t i, std::size_t j) {
  return vec(dim, {{i, Rational(1)}, {j, Rational(-1)}});
}

// Simple roots of E8 in R^8; E6 and E7 take the first 6 or 7 of them, which
// places E6 inside {x8 = -x6, x7 = x6}.
std::vector<RationalVector> e_series(int rank) {
  const std::size_t dim = 8;
  const Rational half(1, 2);
  std::vector<RationalVector> s;
  RationalVector a1(dim, -half);
  a1[0] = half;
  a1[7] = half;
  s.push_back(a1);
  s.push_back(vec(dim, {{0, Rational(1)}, {1, Rational(1)}}));
  for (std::size_t k = 1; k <= 6; ++k) s.push_back(diff(dim, k, k - 1));
  s.resize(static_cast<std::size_t>(rank));
  return s;
}

} // namespace

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

bool is_admissible(Family family, int rank) {
  switch (family) {
  case Family::A: return rank >= 1;
  case Family::B: return rank >= 2;
  case Family::C: return rank >= 3;
  case Family::D: return rank >= 4;
  case Family::E: return rank >= 6 && rank <= 8;
  case Family::F: return rank == 4;
  case Family::G: return rank == 2;
  }
  return false;
}

DynkinType DynkinType::make(Family family, int rank) {
  if (!is_admissible(family, rank))
    throw InvalidType(std::string("inadmissible Dynkin type ") + family_letter(family) +
                      std::to_string(rank));
  return DynkinType{family, rank};
}

std::string DynkinType::name() const { return family_letter(family) + std::to_string(rank); }

DynkinType parse_dynkin_type(std::string_view text) {
  if (text.size() < 2) throw InvalidType("cannot parse Dynkin type '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  const std::string_view digits = text.substr(1);
  if (letter < 'A' || letter > 'G' || digits.size() > 3 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw InvalidType("cannot parse Dynkin type '" + std::string(text) + "'");
  return DynkinType::make(static_cast<Family>(letter - 'A'), std::stoi(std::string(digits)));
}

std::vector<DynkinType> admissible_types(int max_rank) {
  std::vector<DynkinType> out;
  for (int f = 0; f < 7; ++f)
    for (int n = 1; n <= max_rank; ++n)
      if (is_admissible(static_cast<Family>(f), n)) out.push_back(DynkinType{static_cast<Family>(f), n});
  return out;
}

std::vector<RationalVector> simple_roots_of(DynkinType t) {
  const auto n = static_cast<std::size_t>(t.rank);
  std::vector<RationalVector> s;
  switch (t.family) {
  case Family::A:
    for (std::size_t i = 0; i < n; ++i) s.push_back(diff(n + 1, i, i + 1));
    break;
  case Family::B:
    for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(diff(n, i, i + 1));
    s.push_back(unit_vector(n, n - 1));
    break;
  case Family::C:
    for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(diff(n, i, i + 1));
    s.push_back(scale(Rational(2), unit_vector(n, n - 1)));
    break;
  case Family::D:
    for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(diff(n, i, i + 1));
    s.push_back(vec(n, {{n - 2, Rational(1)}, {n - 1, Rational(1)}}));
    break;
  case Family::E:
    s = e_series(t.rank);
    break;
  case Family::F: {
    const Rational half(1, 2);
    s.push_back(diff(4, 1, 2));
    s.push_back(diff(4, 2, 3));
    s.push_back(unit_vector(4, 3));
    s.push_back(RationalVector{half, -half, -half, -half});
    break;
  }
  case Family::G:
    s.push_back(diff(3, 0, 1));
    s.push_back(RationalVector{Rational(-2), Rational(1), Rational(1)});
    break;
  }
  return s;
}

RationalVector coroot(const RationalVector& alpha) { return scale(Rational(2) / dot(alpha, alpha), alpha); }

RationalVector reflect(const RationalVector& v, const RationalVector& alpha) {
  const Rational c = 2 * dot(v, alpha) / dot(alpha, alpha);
  if (c == 0) return v;
  return sub(v, scale(c, alpha));
}

std::vector<RationalVector> reflection_closure(const std::vector<RationalVector>& seeds,
                                               const std::vector<RationalVector>& mirrors) {
  std::set<RationalVector> seen(seeds.begin(), seeds.end());
  std::deque<RationalVector> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    RationalVector v = std::move(queue.front());
    queue.pop_front();
    for (const auto& m : mirrors) {
      RationalVector w = reflect(v, m);
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }
  return {seen.begin(), seen.end()};
}

std::optional<std::size_t> RootDatum::index_of(const RationalVector& v) const {
  auto it = index.find(v);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::size_t RootDatum::negative_of(std::size_t root) const { return negatives.at(root); }

bool RootDatum::is_positive(std::size_t root) const {
  for (auto c : root_coords[root])
    if (c != 0) return c > 0;
  return false;
}

RootDatum build_root_datum(DynkinType t) {
  t = DynkinType::make(t.family, t.rank);
  RootDatum rd;
  rd.dynkin = t;
  rd.simple_roots = simple_roots_of(t);
  rd.ambient_dim = rd.simple_roots.front().size();
  const auto r = static_cast<std::size_t>(t.rank);

  for (const auto& a : rd.simple_roots) rd.simple_coroots.push_back(coroot(a));
  rd.cartan.assign(r, std::vector<int>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Rational c = dot(rd.simple_roots[j], rd.simple_coroots[i]);
      rd.cartan[i][j] = static_cast<int>(boost::multiprecision::numerator(c));
    }

  // Breadth-first closure, tracking simple-root coordinates alongside.
  std::map<RationalVector, std::vector<std::int64_t>> found;
  std::deque<RationalVector> queue;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::int64_t> c(r, 0);
    c[i] = 1;
    found.emplace(rd.simple_roots[i], c);
    queue.push_back(rd.simple_roots[i]);
  }
  while (!queue.empty()) {
    RationalVector v = std::move(queue.front());
    queue.pop_front();
    const std::vector<std::int64_t> coords = found.at(v);
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t pairing = 0;
      for (std::size_t j = 0; j < r; ++j) pairing += coords[j] * rd.cartan[i][j];
      if (pairing == 0) continue;
      RationalVector w = sub(v, scale(Rational(pairing), rd.simple_roots[i]));
      if (found.count(w)) continue;
      std::vector<std::int64_t> wc = coords;
      wc[i] -= pairing;
      found.emplace(w, std::move(wc));
      queue.push_back(std::move(w));
    }
  }
  for (auto& [v, c] : found) {
    rd.index.emplace(v, rd.roots.size());
    rd.roots.push_back(v);
    rd.root_coords.push_back(c);
  }
  rd.negatives.resize(rd.roots.size());
  for (std::size_t k = 0; k < rd.roots.size(); ++k) {
    rd.coroots.push_back(coroot(rd.roots[k]));
    rd.negatives[k] = rd.index.at(negate(rd.roots[k]));
    if (rd.is_positive(k)) rd.positive_roots.push_back(k);
  }

  // w_i = sum_k M[i][k] alpha_k with M = (C^T)^{-1};
  // w_i^vee = sum_k N[i][k] alpha_k^vee with N = C^{-1}.
  RationalMatrix cm(r, RationalVector(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) cm[i][j] = rd.cartan[i][j];
  const RationalMatrix n_mat = *inverse(cm);
  const RationalMatrix m_mat = transpose(n_mat);
  for (std::size_t i = 0; i < r; ++i) {
    RationalVector w(rd.ambient_dim, Rational(0));
    RationalVector wv(rd.ambient_dim, Rational(0));
    for (std::size_t k = 0; k < r; ++k) {
      w = add(w, scale(m_mat[i][k], rd.simple_roots[k]));
      wv = add(wv, scale(n_mat[i][k], rd.simple_coroots[k]));
    }
    rd.fundamental_weights.push_back(std::move(w));
    rd.fundamental_coweights.push_back(std::move(wv));
  }
  return rd;
}

std::vector<Hyperplane> root_hyperplanes(const RootDatum& rd) {
  std::vector<Hyperplane> out;
  out.reserve(rd.positive_roots.size());
  for (auto p : rd.positive_roots) out.push_back({p, rd.negative_of(p)});
  return out;
}

} // namespace lieaut
