#include "lieaut/moduli.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>
#include <stdexcept>

#include "lieaut/errors.hpp"
#include "lieaut/weyl.hpp"

namespace lieaut {

namespace {

bool acts_trivially(const FiniteAbelianGroup& g, const IntegerMatrix& m) {
  for (std::size_t j = 0; j < g.num_factors(); ++j) {
    Element e = g.zero();
    e[j] = 1;
    if (apply_matrix(g, m, e) != e) return false;
  }
  return true;
}

// Inverse of a finite-order automorphism: m^{k-1} where m^k acts trivially.
IntegerMatrix finite_order_inverse(const FiniteAbelianGroup& g, const IntegerMatrix& m) {
  IntegerMatrix prev = IntegerMatrix::identity(g.num_factors());
  IntegerMatrix power = m;
  for (int k = 1; k <= 1000; ++k) {
    if (acts_trivially(g, power)) return prev;
    prev = power;
    power = power * m;
  }
  throw std::logic_error("automorphism of " + g.to_string() + " has no finite order");
}

std::int64_t reduce_mod(const BigInt& v, std::int64_t l) {
  BigInt r = v % l;
  if (r < 0) r += l;
  return static_cast<std::int64_t>(r);
}

std::string variable(std::size_t i) {
  static const char* names[] = {"L", "M", "N", "K"};
  return i < 4 ? names[i] : "L" + std::to_string(i + 1);
}

std::string describe_action(const FiniteAbelianGroup& g, const IntegerMatrix& m) {
  const std::size_t k = g.num_factors();
  if (k == 0 || acts_trivially(g, m)) return "trivial";
  std::vector<std::string> images;
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t l = g.invariant_factors()[i];
    std::string term;
    for (std::size_t j = 0; j < k; ++j) {
      std::int64_t e = reduce_mod(m(i, j), l);
      if (e == 0) continue;
      if (2 * e > l) e -= l;
      if (!term.empty()) term += "⊗";
      term += variable(j);
      if (e != 1) term += "^{" + std::to_string(e) + "}";
    }
    images.push_back(term.empty() ? "O" : term);
  }
  if (k == 1) return variable(0) + " ↦ " + images[0];
  std::string from = "(", to = "(";
  for (std::size_t i = 0; i < k; ++i) {
    from += (i ? "," : "") + variable(i);
    to += (i ? "," : "") + images[i];
  }
  return from + ") ↦ " + to + ")";
}

} // namespace

std::string AutPresentation::torsion_order() const {
  BigInt n = 1;
  for (const auto& b : torsion_part)
    for (int i = 0; i < b.multiplicity; ++i) n *= b.order;
  return n.str();
}

std::string AutPresentation::torsion_string() const {
  std::string out;
  std::size_t i = 0;
  while (i < torsion_part.size()) {
    std::size_t j = i;
    while (j < torsion_part.size() && torsion_part[j].order == torsion_part[i].order) ++j;
    const std::string pic = "Pic(C)[" + std::to_string(torsion_part[i].order) + "]";
    if (!out.empty()) out += " × ";
    out += j - i == 1 ? pic : "(" + pic + ")^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string AutPresentation::render() const {
  const std::string t = torsion_string();
  const bool has_outer = outer_part.kind != OutKind::Trivial;
  const std::string o = has_outer ? to_string(outer_part.kind) + " × Aut(C)" : "Aut(C)";
  if (t.empty()) return o;
  return t + " ⋊ " + (has_outer ? "(" + o + ")" : o);
}

AutPresentation aut_presentation(const GroupForm& gf, const Element& delta, int genus) {
  if (genus < kMinPresentationGenus)
    throw GenusOutOfRange("the automorphism presentation needs genus >= " + std::to_string(kMinPresentationGenus) +
                          ", got " + std::to_string(genus));
  AutPresentation p;
  p.group = gf.display_name;
  p.genus = genus;
  p.delta = delta;
  p.pi1 = fundamental_group(gf);
  p.outer_part = out_stabilizer(gf, delta);
  const LocalGroup chars = center_characters(gf);
  p.center_chars = chars.group;
  for (auto l : chars.group.invariant_factors()) p.torsion_part.push_back({l, 2 * genus});

  const FiniteAbelianGroup& x = chars.group;
  for (const auto& e : p.outer_part.elements) {
    // Z(G) = Hom(X, G_m), so Out acts on the torsion coordinates by the
    // inverse transpose of its action on the characters X.
    const IntegerMatrix inv = finite_order_inverse(x, e.on_center_chars);
    IntegerMatrix m(x.num_factors(), x.num_factors());
    for (std::size_t i = 0; i < x.num_factors(); ++i)
      for (std::size_t j = 0; j < x.num_factors(); ++j) m(i, j) = reduce_mod(inv(j, i), x.invariant_factors()[i]);
    p.actions.push_back({e.name, m, describe_action(x, m)});
  }
  return p;
}

std::string delta_label(const FiniteAbelianGroup& pi1, const std::vector<Element>& elements) {
  const std::string g = pi1.to_string();
  const auto order = static_cast<std::size_t>(pi1.order());
  const std::string zero = pi1.element_to_string(pi1.zero());
  const bool has_zero = std::find(elements.begin(), elements.end(), pi1.zero()) != elements.end();
  if (elements.size() == order) return "δ ∈ " + g;
  if (elements.size() == 1 && has_zero) return "δ = " + zero + " ∈ " + g;
  if (elements.size() + 1 == order && !has_zero && order > 2) return "δ ≠ " + zero + " ∈ " + g;
  std::string list;
  for (const auto& e : elements) list += (list.empty() ? "" : ",") + pi1.element_to_string(e);
  return "δ = " + list + " ∈ " + g;
}

std::vector<std::vector<Element>> delta_orbits(const GroupForm& gf) {
  const AbelianAction act = out_action_on_pi1(gf);
  std::set<Element> seen;
  std::vector<std::vector<Element>> orbits;
  for (const auto& d : act.group.elements()) {
    if (seen.count(d)) continue;
    std::set<Element> orbit;
    for (std::size_t a = 0; a < act.actors.size(); ++a) orbit.insert(act.apply(a, d));
    seen.insert(orbit.begin(), orbit.end());
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  return orbits;
}

std::vector<DeltaClass> delta_classes(const GroupForm& gf, int genus) {
  const FiniteAbelianGroup pi1 = fundamental_group(gf);
  std::vector<DeltaClass> classes;
  std::map<std::string, std::size_t> by_presentation;
  for (const auto& d : pi1.elements()) {
    const std::string key = aut_presentation(gf, d, genus).render();
    auto [it, fresh] = by_presentation.emplace(key, classes.size());
    if (fresh) classes.push_back({pi1, {}, ""});
    classes[it->second].elements.push_back(d);
  }
  for (auto& c : classes) c.label = delta_label(pi1, c.elements);
  return classes;
}

std::vector<TableRow> table_rows(const GroupForm& gf, int genus) {
  std::vector<TableRow> rows;
  for (const auto& c : delta_classes(gf, genus))
    rows.push_back({gf.dynkin().name(), gf.display_name, c.label,
                    aut_presentation(gf, c.elements.front(), genus).render(), c.elements});
  return rows;
}

std::string to_string(const TableRow& row) {
  return row.type + " | " + row.group + " | " + row.delta + " | " + row.presentation;
}

std::vector<TableRow> corollary_b_table(int genus, int max_rank, kernels::Exec exec) {
  if (genus < kMinPresentationGenus)
    throw GenusOutOfRange("the table needs genus >= " + std::to_string(kMinPresentationGenus) + ", got " +
                          std::to_string(genus));
  const auto types = admissible_types(max_rank);
  const auto n = static_cast<std::ptrdiff_t>(types.size());
  std::vector<std::vector<TableRow>> blocks(types.size());
  std::vector<std::exception_ptr> errors(types.size());
#pragma omp parallel for schedule(dynamic, 1) if (exec == kernels::Exec::parallel)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      for (const auto& gf : enumerate_forms(types[k]))
        for (auto& row : table_rows(gf, genus)) blocks[k].push_back(std::move(row));
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  std::vector<TableRow> rows;
  for (std::size_t k = 0; k < types.size(); ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    rows.insert(rows.end(), blocks[k].begin(), blocks[k].end());
  }
  return rows;
}

std::int64_t riemann_roch_basis_dim(const std::vector<int>& degrees, int genus) {
  // h^0(omega^d) = (2d-1)(g-1) for d >= 2, and g for d = 1.
  std::int64_t sum = 0;
  for (int d : degrees) sum += static_cast<std::int64_t>(d) * (2 * genus - 2) + (1 - genus) + (d == 1 ? 1 : 0);
  return sum;
}

HitchinReport hitchin_report(const GroupForm& gf, int genus) {
  if (genus < 2) throw GenusOutOfRange("Hitchin numerology needs genus >= 2, got " + std::to_string(genus));
  const RootDatum& rd = gf.type->root_datum;
  HitchinReport h;
  h.group = gf.display_name;
  h.genus = genus;
  h.rank = rd.rank();
  h.num_roots = rd.num_roots();
  h.dim_G = h.rank + static_cast<std::int64_t>(h.num_roots);
  h.dim_center = 0;
  h.weights = invariant_degrees(rd);
  h.dim_basis = riemann_roch_basis_dim(h.weights, genus);
  h.dim_basis_closed = h.dim_G * (genus - 1) + h.dim_center;
  if (h.dim_basis != h.dim_basis_closed)
    throw std::logic_error("basis dimension mismatch for " + h.group + ": " + std::to_string(h.dim_basis) +
                           " vs " + std::to_string(h.dim_basis_closed));
  h.coxeter_number = coxeter_number(rd);
  h.fiber_dim = h.dim_G * (genus - 1);
  h.higgs_stack_dim = 2 * h.dim_G * (genus - 1) + h.dim_center;
  h.m_ab_components = orbits_on_roots(rd).count();
  h.phi_times_phi_orbits = orbits_on_root_pairs(rd);
  if (rd.rank() >= 2) h.n_extra_components = orbits_on_hyperplane_pairs(rd).hyperplane_pairs.count();
  return h;
}

std::int64_t delta_local(const RamificationEntry& p) {
  const std::string entry = std::to_string(p.degree) + ":" + std::to_string(p.stab_rank_drop);
  if (p.degree < 0 || p.stab_rank_drop < 0)
    throw InconsistentProfile("entry " + entry + ": degree and rank drop must be nonnegative");
  if (p.degree < p.stab_rank_drop) throw InconsistentProfile("entry " + entry + ": degree is below the rank drop");
  if ((p.degree - p.stab_rank_drop) % 2 != 0)
    throw InconsistentProfile("entry " + entry + ": degree minus rank drop is odd");
  return (p.degree - p.stab_rank_drop) / 2;
}

std::int64_t delta_total(const RamificationProfile& rp) {
  std::int64_t sum = 0;
  for (const auto& p : rp) sum += delta_local(p);
  return sum;
}

RamificationEntry local_model(std::int64_t m) { return {m, m % 2 == 0 ? 0 : 1}; }

DegreeIdentity degree_identity_check(const RootDatum& rd) {
  DegreeIdentity d{rd.num_roots(), rd.rank(), coxeter_number(rd)};
  const auto degrees = invariant_degrees(rd);
  if (static_cast<std::int64_t>(d.num_roots) != d.rank * d.coxeter_number || degrees.back() != d.coxeter_number)
    throw std::logic_error("degree identity fails for " + rd.dynkin.name());
  return d;
}

} // namespace lieaut
