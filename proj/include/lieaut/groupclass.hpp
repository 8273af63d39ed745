#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lieaut/finabel.hpp"
#include "lieaut/rootdata.hpp"

namespace lieaut {

/// A finite quotient of lattices (P/Q or P^vee/Q^vee) in coordinates whose
/// basis is chosen among classes of fundamental (co)weights where possible.
struct ClassGroup {
  FiniteAbelianGroup group;
  /// Class of each fundamental (co)weight, index i -> w_{i+1}.
  std::vector<Element> fundamental_classes;
  /// A lift of every class, as integer coordinates in the fundamental basis.
  std::map<Element, std::vector<std::int64_t>> lifts;

  Element classify(const RationalVector& v) const;

  // Internals used by classify.
  std::vector<RationalVector> fundamental_basis;
  QuotientMap projection;
  Rebasing rebasing;
};

/// A subgroup of a ClassGroup in its own invariant-factor coordinates.
struct LocalGroup {
  Subgroup subgroup;                    // in the ambient class-group coordinates
  FiniteAbelianGroup group;             // abstract invariant factors
  std::vector<Element> basis;           // ambient coordinates of the local generators
  std::map<Element, Element> to_local;  // ambient -> local coords
  std::map<Element, Element> to_ambient;
};

/// Per-type lattice data shared by all forms of that type.
struct TypeData {
  RootDatum root_datum;
  ClassGroup weights;   // P/Q = Hom(Z(G^sc), G_m)
  ClassGroup coweights; // P^vee/Q^vee = Z(G^sc)
  /// Dynkin diagram automorphisms as permutations of the simple roots; the identity comes first.
  std::vector<std::vector<int>> diagram_automorphisms;
  /// pairing[a][b] = <x_a, y_b> mod 1 for the chosen bases of P/Q and P^vee/Q^vee.
  std::vector<std::vector<Rational>> pairing;

  DynkinType dynkin() const { return root_datum.dynkin; }
  /// Image of a P/Q (resp. P^vee/Q^vee) class under a diagram automorphism.
  Element act_on_weights(std::size_t automorphism, const Element& x) const;
  Element act_on_coweights(std::size_t automorphism, const Element& y) const;
  /// <x, y> in [0, 1).
  Rational pair(const Element& weight_class, const Element& coweight_class) const;
};

std::shared_ptr<const TypeData> make_type_data(DynkinType t);

/// Permutations sigma of the simple roots with cartan[sigma i][sigma j] == cartan[i][j].
std::vector<std::vector<int>> diagram_automorphisms(const std::vector<std::vector<int>>& cartan);

/// Linear map on the span of the roots sending alpha_i to alpha_{sigma(i)}.
RationalVector apply_diagram_automorphism(const RootDatum& rd, const std::vector<int>& sigma, const RationalVector& v);

/// G = G^sc / mu with mu a subgroup of Z(G^sc) = P^vee/Q^vee.
struct GroupForm {
  std::shared_ptr<const TypeData> type;
  Subgroup mu;
  std::string display_name;

  DynkinType dynkin() const { return type->dynkin(); }
};

GroupForm make_group_form(std::shared_ptr<const TypeData> type, Subgroup mu);

/// Canonical name of the isomorphism class of G^sc/mu.
std::string form_name(const TypeData& type, const Subgroup& mu);

enum class OutKind { Trivial, Z2, S3 };

std::string to_string(OutKind k);

struct OutElement {
  std::string name;             // cycle notation on the diagram nodes, "1" for the identity
  std::size_t automorphism = 0; // index into TypeData::diagram_automorphisms
  IntegerMatrix on_pi1;         // in local coordinates of pi_1(G)
  IntegerMatrix on_center_chars; // in local coordinates of Hom(Z(G), G_m)
};

struct OutGroup {
  OutKind kind = OutKind::Trivial;
  std::vector<OutElement> elements;

  std::size_t order() const { return elements.size(); }
};

/// Hom(Z(G), G_m): the annihilator of mu in P/Q.
LocalGroup center_characters(const GroupForm& gf);
FiniteAbelianGroup center_char_group(const GroupForm& gf);

/// pi_1(G) = mu, in local coordinates.
LocalGroup fundamental_group_local(const GroupForm& gf);
FiniteAbelianGroup fundamental_group(const GroupForm& gf);

OutGroup out_group(const GroupForm& gf);
AbelianAction out_action_on_pi1(const GroupForm& gf);
AbelianAction out_action_on_center_chars(const GroupForm& gf);

/// Out(G, delta); delta in local coordinates of pi_1(G). Throws InvalidDegree.
OutGroup out_stabilizer(const GroupForm& gf, const Element& delta);

/// One form per isomorphism class: subgroups of Z(G^sc) up to diagram automorphisms.
std::vector<GroupForm> enumerate_forms(DynkinType t);
std::vector<GroupForm> enumerate_forms(std::shared_ptr<const TypeData> type);

/// The enumerated form whose subgroup is a diagram-automorphism image of mu.
GroupForm canonical_form(std::shared_ptr<const TypeData> type, const Subgroup& mu);

} // namespace lieaut
