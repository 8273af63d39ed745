#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieaut/moduli.hpp"

namespace lieaut {

using IntRows = std::vector<std::vector<std::int64_t>>;

struct OutElementSummary {
  std::string name;
  IntRows on_pi1;
  IntRows on_center_chars;
  friend bool operator==(const OutElementSummary&, const OutElementSummary&) = default;
};

struct GroupSummary {
  std::string type;
  std::string spec; // "D4:adjoint"
  std::string name; // "PSO_8"
  std::vector<std::int64_t> center_chars; // invariant factors of Hom(Z(G), G_m)
  std::vector<std::int64_t> pi1;
  std::string out_kind;
  std::vector<OutElementSummary> out_elements;
  friend bool operator==(const GroupSummary&, const GroupSummary&) = default;
};

struct ActionSummary {
  std::string element;
  IntRows matrix;
  std::string description;
  friend bool operator==(const ActionSummary&, const ActionSummary&) = default;
};

struct PresentationSummary {
  int genus = 0;
  std::vector<std::int64_t> delta;
  std::vector<std::pair<std::int64_t, int>> torsion; // (l, 2g)
  std::string torsion_order;
  std::string outer_kind;
  std::vector<std::string> outer_elements;
  std::vector<ActionSummary> actions;
  std::string curve_action;
  std::string rendered;
  friend bool operator==(const PresentationSummary&, const PresentationSummary&) = default;
};

struct ReportDocument {
  GroupSummary group;
  std::optional<PresentationSummary> presentation; // absent for genus < 4
  HitchinReport hitchin;
  std::vector<std::string> notes;
  std::vector<std::string> warnings;
  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

struct TableDocument {
  int genus = 0;
  int max_rank = 0;
  std::vector<TableRow> rows;
  friend bool operator==(const TableDocument&, const TableDocument&) = default;
};

struct RootDataDocument {
  std::string type;
  int rank = 0;
  std::size_t ambient_dim = 0;
  std::vector<std::string> simple_roots;
  std::vector<std::vector<int>> cartan;
  std::vector<std::string> roots;
  std::vector<int> degrees;
  std::vector<int> exponents;
  std::int64_t coxeter_number = 0;
  std::string weyl_order;
  std::string weight_quotient;   // P/Q
  std::string coweight_quotient; // P^vee/Q^vee
  std::size_t diagram_automorphisms = 0;
  std::size_t root_orbits = 0;           // m
  std::size_t hyperplane_pair_orbits = 0; // n, 0 in rank one
  std::size_t phi_times_phi_orbits = 0;
  friend bool operator==(const RootDataDocument&, const RootDataDocument&) = default;
};

/// The form keyword accepted by the group-spec grammar ("sc", "adjoint", "so", "semispin", "mu2").
std::string form_keyword(const GroupForm& gf);

ReportDocument make_report(const GroupForm& gf, const Element& delta, int genus);
TableDocument make_table(int genus, int max_rank);
RootDataDocument make_rootdata(DynkinType t);

std::string render_text(const ReportDocument& doc);
std::string render_json(const ReportDocument& doc);
std::string render_latex(const ReportDocument& doc);
ReportDocument parse_report_json(const std::string& text);

std::string render_text(const TableDocument& doc);
std::string render_json(const TableDocument& doc);
std::string render_latex(const TableDocument& doc);
TableDocument parse_table_json(const std::string& text);

std::string render_text(const RootDataDocument& doc);
std::string render_json(const RootDataDocument& doc);
std::string render_latex(const RootDataDocument& doc);
RootDataDocument parse_rootdata_json(const std::string& text);

/// LaTeX math for the strings produced by the table and presentation renderers.
std::string latex_math(const std::string& text);

} // namespace lieaut
