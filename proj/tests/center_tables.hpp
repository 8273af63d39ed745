#pragma once

// Centers, fundamental groups and outer automorphism groups of every
// almost-simple group, written out per family from closed formulas and
// compared against the lattice computations.

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lieaut/groupclass.hpp"

namespace center_tables {

// How the nontrivial outer automorphisms act on a group in the table.
enum class Action { identity, inverse, swap, gl2 };

struct Row {
  std::string type;
  std::string name;
  lieaut::OutKind out;
  std::vector<std::int64_t> chars; // invariant factors of Hom(Z(G), G_m)
  std::vector<std::int64_t> pi1;
  Action chars_action = Action::identity;
  Action pi1_action = Action::identity;
};

inline std::vector<std::int64_t> cyclic(std::int64_t k) {
  return k == 1 ? std::vector<std::int64_t>{} : std::vector<std::int64_t>{k};
}

// Inversion on a cyclic group of order <= 2 is the identity.
inline Action inverse_on(std::int64_t k) { return k <= 2 ? Action::identity : Action::inverse; }

inline std::vector<Row> table_a(int max_rank) {
  using lieaut::OutKind;
  std::vector<Row> rows;
  if (max_rank >= 1) {
    rows.push_back({"A1", "SL_2", OutKind::Trivial, {2}, {}});
    rows.push_back({"A1", "PSL_2", OutKind::Trivial, {}, {2}});
  }
  for (int n = 3; n <= max_rank + 1; ++n)
    for (int r = 1; r <= n; ++r) {
      if (n % r) continue;
      const std::string name = r == 1 ? "SL_" + std::to_string(n)
                               : r == n ? "PSL_" + std::to_string(n)
                                        : "SL_" + std::to_string(n) + "/mu_" + std::to_string(r);
      rows.push_back({"A" + std::to_string(n - 1), name, OutKind::Z2, cyclic(n / r), cyclic(r), inverse_on(n / r),
                      inverse_on(r)});
    }
  return rows;
}

inline std::vector<Row> table_bc(int max_rank) {
  using lieaut::OutKind;
  std::vector<Row> rows;
  for (int n = 2; n <= max_rank; ++n) {
    const std::string t = "B" + std::to_string(n), dim = std::to_string(2 * n + 1);
    rows.push_back({t, "Spin_" + dim, OutKind::Trivial, {2}, {}});
    rows.push_back({t, "SO_" + dim, OutKind::Trivial, {}, {2}});
  }
  for (int n = 3; n <= max_rank; ++n) {
    const std::string t = "C" + std::to_string(n), dim = std::to_string(2 * n);
    rows.push_back({t, "Sp_" + dim, OutKind::Trivial, {2}, {}});
    rows.push_back({t, "PSp_" + dim, OutKind::Trivial, {}, {2}});
  }
  return rows;
}

inline std::vector<Row> table_d(int max_rank) {
  using lieaut::OutKind;
  std::vector<Row> rows;
  if (max_rank >= 4) {
    rows.push_back({"D4", "Spin_8", OutKind::S3, {2, 2}, {}, Action::gl2});
    rows.push_back({"D4", "SO_8", OutKind::Z2, {2}, {2}});
    rows.push_back({"D4", "PSO_8", OutKind::S3, {}, {2, 2}, Action::identity, Action::gl2});
  }
  for (int n = 5; n <= max_rank; ++n) {
    const std::string t = "D" + std::to_string(n), dim = std::to_string(2 * n);
    if (n % 2 == 0) {
      rows.push_back({t, "Spin_" + dim, OutKind::Z2, {2, 2}, {}, Action::swap});
      rows.push_back({t, "SemiSpin_" + dim, OutKind::Trivial, {2}, {2}});
      rows.push_back({t, "SO_" + dim, OutKind::Z2, {2}, {2}});
      rows.push_back({t, "PSO_" + dim, OutKind::Z2, {}, {2, 2}, Action::identity, Action::swap});
    } else {
      rows.push_back({t, "Spin_" + dim, OutKind::Z2, {4}, {}, Action::inverse});
      rows.push_back({t, "SO_" + dim, OutKind::Z2, {2}, {2}});
      rows.push_back({t, "PSO_" + dim, OutKind::Z2, {}, {4}, Action::identity, Action::inverse});
    }
  }
  return rows;
}

inline std::vector<Row> table_e6(int max_rank) {
  using lieaut::OutKind;
  if (max_rank < 6) return {};
  return {{"E6", "E6_sc", OutKind::Z2, {3}, {}, Action::inverse},
          {"E6", "E6_ad", OutKind::Z2, {}, {3}, Action::identity, Action::inverse}};
}

inline std::vector<Row> table_rest(int max_rank) {
  using lieaut::OutKind;
  std::vector<Row> rows;
  if (max_rank >= 2) rows.push_back({"G2", "G2", OutKind::Trivial, {}, {}});
  if (max_rank >= 4) rows.push_back({"F4", "F4", OutKind::Trivial, {}, {}});
  if (max_rank >= 7) {
    rows.push_back({"E7", "E7_sc", OutKind::Trivial, {2}, {}});
    rows.push_back({"E7", "E7_ad", OutKind::Trivial, {}, {2}});
  }
  if (max_rank >= 8) rows.push_back({"E8", "E8", OutKind::Trivial, {}, {}});
  return rows;
}

inline bool action_matches(const lieaut::FiniteAbelianGroup& g, const lieaut::OutGroup& out, bool on_pi1, Action a) {
  using lieaut::Element;
  const auto elems = g.elements();
  std::vector<std::vector<Element>> images;
  for (const auto& e : out.elements) {
    std::vector<Element> img;
    for (const auto& x : elems) img.push_back(lieaut::apply_matrix(g, on_pi1 ? e.on_pi1 : e.on_center_chars, x));
    images.push_back(img);
  }
  switch (a) {
  case Action::identity:
    for (const auto& img : images)
      if (img != elems) return false;
    return true;
  case Action::inverse:
    for (std::size_t k = 1; k < images.size(); ++k)
      for (std::size_t i = 0; i < elems.size(); ++i)
        if (images[k][i] != g.negate(elems[i])) return false;
    return images.front() == elems;
  case Action::swap:
    // (Z/2)^2 with the nontrivial element exchanging (1,0) and (0,1).
    return images.size() == 2 && images[0] == elems &&
           images[1] == std::vector<Element>{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  case Action::gl2: {
    // All six automorphisms of (Z/2)^2, each once.
    std::vector<std::vector<Element>> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() && images.size() == 6;
  }
  }
  return false;
}

/// Mismatches between a hand table and the lattice computation; empty when all agree.
inline std::vector<std::string> compare(const std::vector<Row>& expected) {
  std::vector<std::string> problems;
  std::map<std::string, std::vector<lieaut::GroupForm>> forms;
  std::map<std::string, std::size_t> expected_count;
  for (const auto& row : expected) {
    ++expected_count[row.type];
    if (!forms.count(row.type)) forms[row.type] = lieaut::enumerate_forms(lieaut::parse_dynkin_type(row.type));
    const lieaut::GroupForm* gf = nullptr;
    for (const auto& f : forms[row.type])
      if (f.display_name == row.name) gf = &f;
    if (!gf) {
      problems.push_back(row.type + ": no form " + row.name);
      continue;
    }
    const auto out = lieaut::out_group(*gf);
    const auto chars = lieaut::center_char_group(*gf);
    const auto pi1 = lieaut::fundamental_group(*gf);
    std::ostringstream where;
    where << row.type << " " << row.name << ": ";
    if (out.kind != row.out)
      problems.push_back(where.str() + "Out = " + lieaut::to_string(out.kind));
    if (chars.invariant_factors() != row.chars) problems.push_back(where.str() + "characters = " + chars.to_string());
    if (pi1.invariant_factors() != row.pi1) problems.push_back(where.str() + "pi1 = " + pi1.to_string());
    if (!action_matches(chars, out, false, row.chars_action))
      problems.push_back(where.str() + "Out action on characters");
    if (!action_matches(pi1, out, true, row.pi1_action)) problems.push_back(where.str() + "Out action on pi1");
  }
  for (const auto& [type, count] : expected_count)
    if (forms[type].size() != count)
      problems.push_back(type + ": " + std::to_string(forms[type].size()) + " forms, expected " +
                         std::to_string(count));
  return problems;
}

} // namespace center_tables
