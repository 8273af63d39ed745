#include "lieaut/groupclass.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

#include "lieaut/errors.hpp"

namespace lieaut {

namespace {

Rational fractional_part(const Rational& q) {
  const BigInt n = boost::multiprecision::numerator(q);
  const BigInt d = boost::multiprecision::denominator(q);
  BigInt r = n % d;
  if (r < 0) r += d;
  return Rational(r, d);
}

struct Candidate {
  Element element;
  int key; // fundamental index, or a large value for fallback candidates
};

// Ordered candidates: nonzero fundamental classes by descending index (first
// occurrence wins), then every remaining element of `pool`.
std::vector<Candidate> preferred_candidates(const FiniteAbelianGroup& g, const std::vector<Element>& fundamental,
                                            const std::vector<Element>& pool,
                                            const std::function<bool(const Element&)>& admit) {
  std::vector<Candidate> out;
  std::set<Element> used{g.zero()};
  for (std::size_t i = fundamental.size(); i-- > 0;) {
    const Element& e = fundamental[i];
    if (!admit(e) || !used.insert(e).second) continue;
    out.push_back({e, static_cast<int>(i)});
  }
  for (const auto& e : pool)
    if (admit(e) && used.insert(e).second) out.push_back({e, 1 << 20});
  return out;
}

// A tuple of candidates with the given orders generating `target` (a set of
// elements of g), searched in candidate order; equal-order runs are then
// sorted by key.
std::vector<Element> choose_basis(const FiniteAbelianGroup& g, const std::vector<std::int64_t>& orders,
                                  const std::vector<Candidate>& candidates, const std::vector<Element>& target) {
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t)> search = [&](std::size_t k) {
    if (k == orders.size()) {
      std::vector<Element> gens;
      for (auto i : pick) gens.push_back(candidates[i].element);
      return generated_subgroup(g, gens).elements == target;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (g.element_order(candidates[i].element) != orders[k]) continue;
      if (std::find(pick.begin(), pick.end(), i) != pick.end()) continue;
      pick.push_back(i);
      if (search(k + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (!search(0)) throw std::logic_error("no adapted basis among candidates");
  std::size_t s = 0;
  while (s < pick.size()) {
    std::size_t e = s;
    while (e < pick.size() && orders[e] == orders[s]) ++e;
    std::sort(pick.begin() + static_cast<std::ptrdiff_t>(s), pick.begin() + static_cast<std::ptrdiff_t>(e),
              [&](std::size_t a, std::size_t b) { return candidates[a].key < candidates[b].key; });
    s = e;
  }
  std::vector<Element> basis;
  for (auto i : pick) basis.push_back(candidates[i].element);
  return basis;
}

ClassGroup build_class_group(const std::vector<RationalVector>& fundamental, const std::vector<RationalVector>& sub) {
  LatticeQuotient lq = lattice_quotient(fundamental, sub);
  const FiniteAbelianGroup& raw = lq.group;
  std::vector<Element> raw_classes;
  for (const auto& w : fundamental) raw_classes.push_back(lq.projection(w));

  const auto all = raw.elements();
  const auto candidates = preferred_candidates(raw, raw_classes, all, [](const Element&) { return true; });
  const auto basis = choose_basis(raw, raw.invariant_factors(), candidates, all);

  ClassGroup cg;
  cg.group = raw;
  cg.fundamental_basis = fundamental;
  cg.projection = lq.projection;
  cg.rebasing = rebase(raw, basis);
  for (const auto& c : raw_classes) cg.fundamental_classes.push_back(cg.rebasing.to_new.at(c));

  // Lifts by breadth-first search over sums of fundamental classes.
  const std::size_t r = fundamental.size();
  std::deque<Element> queue{cg.group.zero()};
  cg.lifts[cg.group.zero()] = std::vector<std::int64_t>(r, 0);
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < r; ++i) {
      Element y = cg.group.add(x, cg.fundamental_classes[i]);
      if (cg.lifts.count(y)) continue;
      auto lift = cg.lifts.at(x);
      ++lift[i];
      cg.lifts.emplace(y, std::move(lift));
      queue.push_back(std::move(y));
    }
  }
  return cg;
}

RationalVector lift_vector(const ClassGroup& cg, const Element& x) {
  const auto& c = cg.lifts.at(x);
  RationalVector v(cg.fundamental_basis.front().size(), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) v = add(v, scale(Rational(c[i]), cg.fundamental_basis[i]));
  return v;
}

Element act(const ClassGroup& cg, const std::vector<int>& sigma, const Element& x) {
  const auto& c = cg.lifts.at(x);
  Element y = cg.group.zero();
  for (std::size_t i = 0; i < c.size(); ++i)
    y = cg.group.add(y, cg.group.multiple(c[i], cg.fundamental_classes[static_cast<std::size_t>(sigma[i])]));
  return y;
}

LocalGroup make_local(const ClassGroup& cg, const Subgroup& sub) {
  LocalGroup lg;
  lg.subgroup = sub;
  lg.group = sub.structure();
  const auto candidates = preferred_candidates(cg.group, cg.fundamental_classes, sub.elements,
                                               [&](const Element& e) { return sub.contains(e); });
  lg.basis = choose_basis(cg.group, lg.group.invariant_factors(), candidates, sub.elements);
  for (const auto& c : lg.group.elements()) {
    Element x = cg.group.zero();
    for (std::size_t i = 0; i < lg.basis.size(); ++i) x = cg.group.add(x, cg.group.multiple(c[i], lg.basis[i]));
    lg.to_local[x] = c;
    lg.to_ambient[c] = x;
  }
  return lg;
}

Subgroup image_subgroup(const ClassGroup& cg, const std::vector<int>& sigma, const Subgroup& s) {
  std::vector<Element> gens;
  for (const auto& x : s.elements) gens.push_back(act(cg, sigma, x));
  return generated_subgroup(cg.group, gens);
}

std::string cycle_notation(const std::vector<int>& sigma) {
  std::string out;
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i] || sigma[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      out += (first ? "" : " ") + std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(sigma[j]);
    }
    out += ")";
  }
  return out.empty() ? "1" : out;
}

IntegerMatrix local_matrix(const LocalGroup& lg, const std::function<Element(const Element&)>& f) {
  const std::size_t k = lg.basis.size();
  IntegerMatrix m(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    const Element img = lg.to_local.at(f(lg.basis[j]));
    for (std::size_t i = 0; i < k; ++i) m(i, j) = img[i];
  }
  return m;
}

OutKind kind_of(std::size_t order) {
  switch (order) {
  case 1: return OutKind::Trivial;
  case 2: return OutKind::Z2;
  case 6: return OutKind::S3;
  default: throw std::logic_error("unexpected outer automorphism group of order " + std::to_string(order));
  }
}

} // namespace

Element ClassGroup::classify(const RationalVector& v) const { return rebasing.to_new.at(projection(v)); }

Element TypeData::act_on_weights(std::size_t automorphism, const Element& x) const {
  return act(weights, diagram_automorphisms.at(automorphism), x);
}

Element TypeData::act_on_coweights(std::size_t automorphism, const Element& y) const {
  return act(coweights, diagram_automorphisms.at(automorphism), y);
}

Rational TypeData::pair(const Element& x, const Element& y) const {
  Rational s = 0;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < y.size(); ++b) s += Rational(x[a] * y[b]) * pairing[a][b];
  return fractional_part(s);
}

std::vector<std::vector<int>> diagram_automorphisms(const std::vector<std::vector<int>>& cartan) {
  const std::size_t r = cartan.size();
  std::vector<std::vector<int>> out;
  std::vector<int> sigma;
  std::vector<bool> used(r, false);
  std::function<void()> extend = [&]() {
    const std::size_t i = sigma.size();
    if (i == r) {
      out.push_back(sigma);
      return;
    }
    for (std::size_t c = 0; c < r; ++c) {
      if (used[c]) continue;
      bool ok = cartan[c][c] == cartan[i][i];
      for (std::size_t j = 0; j < i && ok; ++j) {
        const auto sj = static_cast<std::size_t>(sigma[j]);
        ok = cartan[c][sj] == cartan[i][j] && cartan[sj][c] == cartan[j][i];
      }
      if (!ok) continue;
      used[c] = true;
      sigma.push_back(static_cast<int>(c));
      extend();
      sigma.pop_back();
      used[c] = false;
    }
  };
  extend();
  // identity first, then lexicographic
  std::sort(out.begin(), out.end());
  return out;
}

RationalVector apply_diagram_automorphism(const RootDatum& rd, const std::vector<int>& sigma, const RationalVector& v) {
  auto c = coordinates_in_basis(rd.simple_roots, v);
  if (!c) throw std::invalid_argument("vector outside the span of the roots: " + to_string(v));
  RationalVector out(rd.ambient_dim, Rational(0));
  for (std::size_t i = 0; i < c->size(); ++i)
    if ((*c)[i] != 0) out = add(out, scale((*c)[i], rd.simple_roots[static_cast<std::size_t>(sigma[i])]));
  return out;
}

std::shared_ptr<const TypeData> make_type_data(DynkinType t) {
  auto td = std::make_shared<TypeData>();
  td->root_datum = build_root_datum(t);
  const RootDatum& rd = td->root_datum;
  td->weights = build_class_group(rd.fundamental_weights, rd.simple_roots);
  td->coweights = build_class_group(rd.fundamental_coweights, rd.simple_coroots);
  td->diagram_automorphisms = diagram_automorphisms(rd.cartan);

  const auto& xb = td->weights.rebasing.basis;
  const auto& yb = td->coweights.rebasing.basis;
  td->pairing.assign(xb.size(), std::vector<Rational>(yb.size()));
  for (std::size_t a = 0; a < xb.size(); ++a)
    for (std::size_t b = 0; b < yb.size(); ++b) {
      const Element xa = td->weights.rebasing.to_new.at(xb[a]);
      const Element yb_local = td->coweights.rebasing.to_new.at(yb[b]);
      td->pairing[a][b] = fractional_part(dot(lift_vector(td->weights, xa), lift_vector(td->coweights, yb_local)));
    }
  return td;
}

std::string form_name(const TypeData& type, const Subgroup& mu) {
  const DynkinType t = type.dynkin();
  const auto order = static_cast<std::int64_t>(mu.order());
  const std::int64_t full = type.coweights.group.order();
  const bool sc = order == 1;
  const bool adjoint = order == full;
  const std::string n = std::to_string(t.rank);
  switch (t.family) {
  case Family::A: {
    const std::string dim = std::to_string(t.rank + 1);
    if (sc) return "SL_" + dim;
    if (adjoint) return "PSL_" + dim;
    return "SL_" + dim + "/mu_" + std::to_string(order);
  }
  case Family::B: return (sc ? "Spin_" : "SO_") + std::to_string(2 * t.rank + 1);
  case Family::C: return (sc ? "Sp_" : "PSp_") + std::to_string(2 * t.rank);
  case Family::D: {
    const std::string dim = std::to_string(2 * t.rank);
    if (sc) return "Spin_" + dim;
    if (adjoint) return "PSO_" + dim;
    if (mu.contains(type.coweights.fundamental_classes.front())) return "SO_" + dim;
    return "SemiSpin_" + dim;
  }
  case Family::E:
    if (full == 1) return "E" + n;
    return "E" + n + (sc ? "_sc" : "_ad");
  case Family::F: return "F4";
  case Family::G: return "G2";
  }
  return t.name();
}

GroupForm make_group_form(std::shared_ptr<const TypeData> type, Subgroup mu) {
  std::string name = form_name(*type, mu);
  return GroupForm{std::move(type), std::move(mu), std::move(name)};
}

std::string to_string(OutKind k) {
  switch (k) {
  case OutKind::Trivial: return "{1}";
  case OutKind::Z2: return "Z/2Z";
  case OutKind::S3: return "S_3";
  }
  return "?";
}

LocalGroup center_characters(const GroupForm& gf) {
  const TypeData& td = *gf.type;
  std::vector<Element> annihilator;
  for (const auto& x : td.weights.group.elements()) {
    bool kills = true;
    for (const auto& y : gf.mu.elements)
      if (td.pair(x, y) != 0) {
        kills = false;
        break;
      }
    if (kills) annihilator.push_back(x);
  }
  return make_local(td.weights, generated_subgroup(td.weights.group, annihilator));
}

FiniteAbelianGroup center_char_group(const GroupForm& gf) { return center_characters(gf).group; }

LocalGroup fundamental_group_local(const GroupForm& gf) { return make_local(gf.type->coweights, gf.mu); }

FiniteAbelianGroup fundamental_group(const GroupForm& gf) { return fundamental_group_local(gf).group; }

OutGroup out_group(const GroupForm& gf) {
  const TypeData& td = *gf.type;
  const LocalGroup pi1 = fundamental_group_local(gf);
  const LocalGroup chars = center_characters(gf);
  OutGroup out;
  for (std::size_t a = 0; a < td.diagram_automorphisms.size(); ++a) {
    const auto& sigma = td.diagram_automorphisms[a];
    if (!(image_subgroup(td.coweights, sigma, gf.mu) == gf.mu)) continue;
    OutElement e;
    e.name = cycle_notation(sigma);
    e.automorphism = a;
    e.on_pi1 = local_matrix(pi1, [&](const Element& y) { return td.act_on_coweights(a, y); });
    e.on_center_chars = local_matrix(chars, [&](const Element& x) { return td.act_on_weights(a, x); });
    out.elements.push_back(std::move(e));
  }
  out.kind = kind_of(out.elements.size());
  return out;
}

namespace {

AbelianAction as_action(const FiniteAbelianGroup& g, const OutGroup& out, bool pi1) {
  AbelianAction act;
  act.group = g;
  for (const auto& e : out.elements) act.actors.push_back({e.name, pi1 ? e.on_pi1 : e.on_center_chars});
  return act;
}

} // namespace

AbelianAction out_action_on_pi1(const GroupForm& gf) { return as_action(fundamental_group(gf), out_group(gf), true); }

AbelianAction out_action_on_center_chars(const GroupForm& gf) {
  return as_action(center_char_group(gf), out_group(gf), false);
}

OutGroup out_stabilizer(const GroupForm& gf, const Element& delta) {
  const FiniteAbelianGroup pi1 = fundamental_group(gf);
  if (!pi1.contains(delta))
    throw InvalidDegree("degree " + pi1.element_to_string(delta) + " is not an element of pi_1(" + gf.display_name +
                        ") = " + pi1.to_string());
  const OutGroup full = out_group(gf);
  OutGroup out;
  for (const auto& e : full.elements)
    if (apply_matrix(pi1, e.on_pi1, delta) == delta) out.elements.push_back(e);
  out.kind = kind_of(out.elements.size());
  return out;
}

std::vector<GroupForm> enumerate_forms(std::shared_ptr<const TypeData> type) {
  const TypeData& td = *type;
  const auto subs = enumerate_subgroups(td.coweights.group);
  std::vector<bool> taken(subs.size(), false);
  std::vector<GroupForm> forms;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (taken[i]) continue;
    std::vector<std::size_t> orbit;
    for (const auto& sigma : td.diagram_automorphisms) {
      const Subgroup img = image_subgroup(td.coweights, sigma, subs[i]);
      for (std::size_t j = i; j < subs.size(); ++j)
        if (!taken[j] && subs[j] == img) {
          taken[j] = true;
          orbit.push_back(j);
        }
    }
    std::sort(orbit.begin(), orbit.end());
    std::size_t rep = orbit.front();
    for (auto j : orbit)
      if (subs[j].contains(td.coweights.fundamental_classes.front()) && subs[j].order() > 1) {
        rep = j;
        break;
      }
    Subgroup mu = subs[rep];
    mu.generators = make_local(td.coweights, mu).basis;
    forms.push_back(make_group_form(type, std::move(mu)));
  }
  return forms;
}

GroupForm canonical_form(std::shared_ptr<const TypeData> type, const Subgroup& mu) {
  for (auto& form : enumerate_forms(type))
    for (const auto& sigma : type->diagram_automorphisms)
      if (image_subgroup(type->coweights, sigma, mu) == form.mu) return form;
  throw std::logic_error("subgroup is not a subgroup of the center");
}

std::vector<GroupForm> enumerate_forms(DynkinType t) { return enumerate_forms(make_type_data(t)); }

} // namespace lieaut
