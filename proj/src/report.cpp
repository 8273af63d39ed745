#include "lieaut/report.hpp"

#include <regex>
#include <sstream>

#include <json.hpp>

#include "lieaut/weyl.hpp"

namespace lieaut {

using nlohmann::json;

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OutElementSummary, name, on_pi1, on_center_chars)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(GroupSummary, type, spec, name, center_chars, pi1, out_kind, out_elements)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ActionSummary, element, matrix, description)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PresentationSummary, genus, delta, torsion, torsion_order, outer_kind,
                                   outer_elements, actions, curve_action, rendered)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(HitchinReport, group, genus, rank, num_roots, dim_G, dim_center, dim_basis,
                                   dim_basis_closed, weights, coxeter_number, fiber_dim, higgs_stack_dim,
                                   m_ab_components, n_extra_components, phi_times_phi_orbits)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TableRow, type, group, delta, presentation, delta_values)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TableDocument, genus, max_rank, rows)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RootDataDocument, type, rank, ambient_dim, simple_roots, cartan, roots, degrees,
                                   exponents, coxeter_number, weyl_order, weight_quotient, coweight_quotient,
                                   diagram_automorphisms, root_orbits, hyperplane_pair_orbits, phi_times_phi_orbits)

void to_json(json& j, const ReportDocument& d) {
  j = json{{"group", d.group}, {"hitchin", d.hitchin}, {"notes", d.notes}, {"warnings", d.warnings}};
  j["presentation"] = d.presentation ? json(*d.presentation) : json(nullptr);
}

void from_json(const json& j, ReportDocument& d) {
  j.at("group").get_to(d.group);
  j.at("hitchin").get_to(d.hitchin);
  j.at("notes").get_to(d.notes);
  j.at("warnings").get_to(d.warnings);
  const auto& p = j.at("presentation");
  if (p.is_null())
    d.presentation.reset();
  else
    d.presentation = p.get<PresentationSummary>();
}

namespace {

IntRows to_rows(const IntegerMatrix& m) {
  IntRows rows(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = static_cast<std::int64_t>(m(i, j));
  return rows;
}

std::string group_string(const std::vector<std::int64_t>& factors) { return FiniteAbelianGroup(factors).to_string(); }

template <class T> std::string join(const std::vector<T>& v, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string rows_string(const IntRows& rows) {
  std::vector<std::string> parts;
  for (const auto& r : rows) parts.push_back("[" + join(r, ",") + "]");
  return "[" + join(parts, ",") + "]";
}

// E8, F4 and G2 name both a type and its unique group.
std::string latex_group(const std::string& name) {
  static const std::regex unique(R"(^([EFG])(\d)$)");
  if (std::regex_match(name, unique)) return std::regex_replace(name, unique, "\\mathbb{$1}_$2");
  return latex_math(name);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string form_keyword(const GroupForm& gf) {
  const auto order = static_cast<std::int64_t>(gf.mu.order());
  if (order == 1) return "sc";
  if (order == gf.type->coweights.group.order()) return "adjoint";
  const std::string& name = gf.display_name;
  if (name.rfind("SO_", 0) == 0) return "so";
  if (name.rfind("SemiSpin_", 0) == 0) return "semispin";
  return "mu" + std::to_string(order);
}

ReportDocument make_report(const GroupForm& gf, const Element& delta, int genus) {
  ReportDocument doc;
  GroupSummary& g = doc.group;
  g.type = gf.dynkin().name();
  g.spec = g.type + ":" + form_keyword(gf);
  g.name = gf.display_name;
  g.center_chars = center_char_group(gf).invariant_factors();
  g.pi1 = fundamental_group(gf).invariant_factors();
  const OutGroup out = out_group(gf);
  g.out_kind = to_string(out.kind);
  for (const auto& e : out.elements) g.out_elements.push_back({e.name, to_rows(e.on_pi1), to_rows(e.on_center_chars)});

  if (genus >= kMinPresentationGenus) {
    const AutPresentation p = aut_presentation(gf, delta, genus);
    PresentationSummary s;
    s.genus = genus;
    s.delta = delta;
    for (const auto& b : p.torsion_part) s.torsion.emplace_back(b.order, b.multiplicity);
    s.torsion_order = p.torsion_order();
    s.outer_kind = to_string(p.outer_part.kind);
    for (const auto& e : p.outer_part.elements) s.outer_elements.push_back(e.name);
    for (const auto& a : p.actions) s.actions.push_back({a.element, to_rows(a.matrix), a.description});
    s.curve_action = p.curve_action;
    s.rendered = p.render();
    doc.presentation = std::move(s);
  } else {
    doc.warnings.push_back("genus " + std::to_string(genus) + " < " + std::to_string(kMinPresentationGenus) +
                           ": automorphism presentation omitted, Hitchin numbers only");
  }
  doc.hitchin = hitchin_report(gf, genus);
  doc.notes = {
      "dim_center is 0 for almost-simple groups",
      "n_extra_components counts W-orbits on pairs of distinct root hyperplanes; "
      "phi_times_phi_orbits is the orbit count on ordered pairs of roots",
      "Out actions on the torsion part are the inverse transpose of the action on Hom(Z(G), G_m)",
  };
  return doc;
}

TableDocument make_table(int genus, int max_rank) { return {genus, max_rank, corollary_b_table(genus, max_rank)}; }

RootDataDocument make_rootdata(DynkinType t) {
  const auto td = make_type_data(t);
  const RootDatum& rd = td->root_datum;
  RootDataDocument d;
  d.type = t.name();
  d.rank = rd.rank();
  d.ambient_dim = rd.ambient_dim;
  for (const auto& a : rd.simple_roots) d.simple_roots.push_back(to_string(a));
  d.cartan = rd.cartan;
  for (const auto& a : rd.roots) d.roots.push_back(to_string(a));
  d.degrees = invariant_degrees(rd);
  d.exponents = exponents(rd);
  d.coxeter_number = coxeter_number(rd);
  d.weyl_order = weyl_group_order(rd).str();
  d.weight_quotient = td->weights.group.to_string();
  d.coweight_quotient = td->coweights.group.to_string();
  d.diagram_automorphisms = td->diagram_automorphisms.size();
  d.root_orbits = orbits_on_roots(rd).count();
  d.phi_times_phi_orbits = orbits_on_root_pairs(rd);
  if (rd.rank() >= 2) d.hyperplane_pair_orbits = orbits_on_hyperplane_pairs(rd).hyperplane_pairs.count();
  return d;
}

std::string render_text(const ReportDocument& doc) {
  std::ostringstream os;
  const GroupSummary& g = doc.group;
  os << "group: " << g.name << " (" << g.spec << ")\n";
  os << "Hom(Z(G), G_m): " << group_string(g.center_chars) << "\n";
  os << "π1(G): " << group_string(g.pi1) << "\n";
  os << "Out(G): " << g.out_kind << "\n";
  for (const auto& e : g.out_elements)
    os << "  " << e.name << ": on π1 " << rows_string(e.on_pi1) << ", on characters " << rows_string(e.on_center_chars)
       << "\n";
  if (doc.presentation) {
    const PresentationSummary& p = *doc.presentation;
    os << "δ: " << FiniteAbelianGroup(g.pi1).element_to_string(p.delta) << "\n";
    os << "Aut: " << p.rendered << "\n";
    os << "  |H^1(C, Z(G))| = " << p.torsion_order << " (g = " << p.genus << ")\n";
    os << "  Out(G, δ): " << p.outer_kind << " = {" << join(p.outer_elements, ", ") << "}\n";
    for (const auto& a : p.actions)
      os << "  " << a.element << (a.description == "trivial" ? " acts trivially" : " acts by " + a.description) << "\n";
    os << "  Aut(C) acts by " << p.curve_action << "\n";
  }
  const HitchinReport& h = doc.hitchin;
  os << "Hitchin (g = " << h.genus << "):\n";
  os << "  dim G: " << h.dim_G << "\n";
  os << "  weights: [" << join(h.weights, ", ") << "]\n";
  os << "  Coxeter number: " << h.coxeter_number << "\n";
  os << "  dim A: " << h.dim_basis << "\n";
  os << "  fiber dim: " << h.fiber_dim << "\n";
  os << "  Higgs stack dim: " << h.higgs_stack_dim << "\n";
  os << "  m (ab components): " << h.m_ab_components << "\n";
  os << "  n (extra components): " << h.n_extra_components << "\n";
  os << "  W-orbits on Φ×Φ: " << h.phi_times_phi_orbits << "\n";
  return os.str();
}

std::string render_json(const ReportDocument& doc) { return dump(json(doc)); }

ReportDocument parse_report_json(const std::string& text) { return json::parse(text).get<ReportDocument>(); }

std::string render_latex(const ReportDocument& doc) {
  std::ostringstream os;
  const GroupSummary& g = doc.group;
  os << "\\begin{tabular}{|l|l|}\n\\hline\n";
  os << "$G$ & $" << latex_group(g.name) << "$\\\\\n";
  os << "$\\operatorname{Hom}(\\mathscr Z(G),\\mathbb G_m)$ & $" << latex_math(group_string(g.center_chars))
     << "$\\\\\n";
  os << "$\\pi_1(G)$ & $" << latex_math(group_string(g.pi1)) << "$\\\\\n";
  os << "$\\operatorname{Out}(G)$ & $" << latex_math(g.out_kind) << "$\\\\\n";
  if (doc.presentation) {
    os << "$\\delta$ & $" << FiniteAbelianGroup(g.pi1).element_to_string(doc.presentation->delta) << "$\\\\\n";
    os << "$\\operatorname{Aut}$ & $" << latex_math(doc.presentation->rendered) << "$\\\\\n";
  }
  const HitchinReport& h = doc.hitchin;
  os << "$\\dim G$ & " << h.dim_G << "\\\\\n";
  os << "weights & " << join(h.weights, ", ") << "\\\\\n";
  os << "$\\dim\\mathbb A$ & " << h.dim_basis << "\\\\\n";
  os << "$m$ & " << h.m_ab_components << "\\\\\n";
  os << "$n$ & " << h.n_extra_components << "\\\\\n";
  os << "\\hline\n\\end{tabular}\n";
  return os.str();
}

std::string render_text(const TableDocument& doc) {
  std::ostringstream os;
  os << "# type | G | δ ∈ π1(G) | Aut(M_G^δ(C)), genus " << doc.genus << "\n";
  for (const auto& r : doc.rows) os << to_string(r) << "\n";
  return os.str();
}

std::string render_json(const TableDocument& doc) { return dump(json(doc)); }

TableDocument parse_table_json(const std::string& text) { return json::parse(text).get<TableDocument>(); }

std::string render_latex(const TableDocument& doc) {
  std::ostringstream os;
  os << "\\begin{longtable}{|>{$}l<{$}|>{$}l<{$}|>{$}l<{$}|>{$}l<{$}|}\n";
  os << "\\hline\n\\mathfrak g & G & \\delta\\in\\pi_1(G) & \\operatorname{Aut}(\\overline{\\mathcal M}^\\delta_G(C))\\\\\n";
  os << "\\hline\n\\endhead\n";
  std::string previous;
  for (const auto& r : doc.rows) {
    if (r.type != previous && !previous.empty()) os << "\\hline\n";
    os << (r.type != previous ? latex_math(r.type) : "") << " & " << latex_group(r.group) << " & "
       << latex_math(r.delta) << " & " << latex_math(r.presentation) << "\\\\\n";
    previous = r.type;
  }
  os << "\\hline\n\\end{longtable}\n";
  return os.str();
}

std::string render_text(const RootDataDocument& d) {
  std::ostringstream os;
  os << "type: " << d.type << "\n";
  os << "rank: " << d.rank << ", ambient dimension: " << d.ambient_dim << "\n";
  os << "simple roots:\n";
  for (const auto& a : d.simple_roots) os << "  " << a << "\n";
  os << "Cartan matrix:\n";
  for (const auto& row : d.cartan) os << "  [" << join(row, ", ") << "]\n";
  os << "roots: " << d.roots.size() << "\n";
  for (const auto& a : d.roots) os << "  " << a << "\n";
  os << "degrees: [" << join(d.degrees, ", ") << "]\n";
  os << "exponents: [" << join(d.exponents, ", ") << "]\n";
  os << "Coxeter number: " << d.coxeter_number << "\n";
  os << "|W|: " << d.weyl_order << "\n";
  os << "P/Q: " << d.weight_quotient << "\n";
  os << "P∨/Q∨: " << d.coweight_quotient << "\n";
  os << "diagram automorphisms: " << d.diagram_automorphisms << "\n";
  os << "m (W-orbits on Φ): " << d.root_orbits << "\n";
  os << "n (W-orbits on hyperplane pairs): " << d.hyperplane_pair_orbits << "\n";
  os << "W-orbits on Φ×Φ: " << d.phi_times_phi_orbits << "\n";
  return os.str();
}

std::string render_json(const RootDataDocument& d) { return dump(json(d)); }

RootDataDocument parse_rootdata_json(const std::string& text) { return json::parse(text).get<RootDataDocument>(); }

std::string render_latex(const RootDataDocument& d) {
  std::ostringstream os;
  os << "\\begin{tabular}{|l|l|}\n\\hline\n";
  os << "type & $" << latex_math(d.type) << "$\\\\\n";
  os << "$|\\Phi|$ & " << d.roots.size() << "\\\\\n";
  os << "degrees & " << join(d.degrees, ", ") << "\\\\\n";
  os << "$h$ & " << d.coxeter_number << "\\\\\n";
  os << "$|W|$ & " << d.weyl_order << "\\\\\n";
  os << "$P/Q$ & $" << latex_math(d.weight_quotient) << "$\\\\\n";
  os << "$m$ & " << d.root_orbits << "\\\\\n";
  os << "$n$ & " << d.hyperplane_pair_orbits << "\\\\\n";
  os << "\\hline\n\\end{tabular}\n";
  return os.str();
}

std::string latex_math(const std::string& text) {
  static const std::vector<std::pair<std::regex, std::string>> rules = {
      {std::regex(R"(\{0\})"), "\\{0\\}"},
      {std::regex(R"(\{1\})"), "\\{1\\}"},
      {std::regex(R"(^([A-G])(\d+)$)"), "$1_{$2}"},
      {std::regex(R"(^E(\d)_sc$)"), "\\mathbb{E}_$1^{\\operatorname{sc}}"},
      {std::regex(R"(^E(\d)_ad$)"), "\\mathbb{E}_$1^{\\operatorname{ad}}"},
      {std::regex(R"(\b(SL|PSL|Spin|SO|PSO|SemiSpin|Sp|PSp)_(\d+))"), "\\operatorname{$1}_{$2}"},
      {std::regex(R"(/mu_(\d+))"), "/\\mu_{$1}"},
      {std::regex(R"(Z/(\d+)Z)"), "\\mathbb Z/$1\\mathbb Z"},
      {std::regex(R"(Pic\(C\))"), "\\operatorname{Pic}(C)"},
      {std::regex(R"(Aut\(C\))"), "\\operatorname{Aut}(C)"},
      {std::regex("⋊"), "\\rtimes "},
      {std::regex("×"), "\\times "},
      {std::regex("δ"), "\\delta"},
      {std::regex("∈"), "\\in "},
      {std::regex("≠"), "\\neq "},
      {std::regex("↦"), "\\mapsto "},
      {std::regex("⊗"), "\\otimes "},
  };
  std::string out = text;
  for (const auto& [re, replacement] : rules) out = std::regex_replace(out, re, replacement);
  static const std::regex spaces(" {2,}");
  return std::regex_replace(out, spaces, " ");
}

} // namespace lieaut
