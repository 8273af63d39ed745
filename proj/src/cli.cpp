#include "lieaut/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lieaut/errors.hpp"
#include "lieaut/report.hpp"

namespace lieaut {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(trim(cur));
  return parts;
}

DynkinType make_type(Family f, long rank, const std::string& token) {
  if (rank < 1 || rank > 64 || !is_admissible(f, static_cast<int>(rank)))
    throw ParseError("'" + token + "' does not name an admissible Dynkin type");
  return DynkinType::make(f, static_cast<int>(rank));
}

struct SpecParts {
  DynkinType type;
  std::string form;
};

SpecParts parse_alias(const std::string& s) {
  static const std::regex classical(R"(^(sl|psl|pgl|spin|so|pso|semispin|sp|psp)_?(\d+)(?:/mu_?(\d+))?$)",
                                    std::regex::icase);
  static const std::regex exceptional(R"(^e([67])_?(sc|ad)$)", std::regex::icase);
  std::smatch m;
  if (std::regex_match(s, m, exceptional))
    return {make_type(Family::E, std::stol(m[1]), s), lower(m[2]) == "sc" ? "sc" : "adjoint"};
  if (!std::regex_match(s, m, classical)) throw ParseError("unknown group spec '" + s + "'");
  const std::string name = lower(m[1]);
  const long n = std::stol(m[2]);
  const bool even = n % 2 == 0;
  if (m[3].matched && name != "sl") throw ParseError("'/mu' is only accepted after SL in '" + s + "'");
  if (name == "sl" || name == "psl" || name == "pgl") {
    std::string form = name == "sl" ? "sc" : "adjoint";
    if (m[3].matched) form = "mu" + m[3].str();
    return {make_type(Family::A, n - 1, s), form};
  }
  if (name == "spin") return {even ? make_type(Family::D, n / 2, s) : make_type(Family::B, (n - 1) / 2, s), "sc"};
  if (name == "so") return even ? SpecParts{make_type(Family::D, n / 2, s), "so"} : SpecParts{make_type(Family::B, (n - 1) / 2, s), "adjoint"};
  if (!even) throw ParseError("'" + s + "' needs an even dimension");
  if (name == "pso") return {make_type(Family::D, n / 2, s), "adjoint"};
  if (name == "semispin") return {make_type(Family::D, n / 2, s), "semispin"};
  return {make_type(Family::C, n / 2, s), name == "sp" ? "sc" : "adjoint"};
}

Subgroup resolve_form(const TypeData& td, const std::string& form, const std::string& spec) {
  const ClassGroup& z = td.coweights;
  const DynkinType t = td.dynkin();
  const auto all = z.group.elements();
  if (form == "sc") return generated_subgroup(z.group, {});
  if (form == "adjoint" || form == "ad") return generated_subgroup(z.group, all);
  if (form == "so") {
    if (t.family == Family::B) return generated_subgroup(z.group, all);
    if (t.family == Family::D) return generated_subgroup(z.group, {z.fundamental_classes.front()});
    throw ParseError("form 'so' needs type B or D in '" + spec + "'");
  }
  if (form == "semispin") {
    if (t.family == Family::D && t.rank % 2 == 0) return generated_subgroup(z.group, {z.fundamental_classes.back()});
    throw ParseError("form 'semispin' needs type D with even rank in '" + spec + "'");
  }
  static const std::regex mu(R"(^mu_?(\d+)$)");
  std::smatch m;
  if (std::regex_match(form, m, mu)) {
    if (!z.group.is_cyclic()) throw ParseError("form '" + form + "' needs a cyclic center in '" + spec + "'");
    const long k = std::stol(m[1]);
    for (const auto& s : enumerate_subgroups(z.group))
      if (static_cast<long>(s.order()) == k) return s;
    throw ParseError("the center " + z.group.to_string() + " has no subgroup of order " + m[1].str() + " in '" +
                     spec + "'");
  }
  throw ParseError("unknown form '" + form + "' in '" + spec + "'");
}

bool color_enabled() {
  const char* v = std::getenv("LIEAUT_COLOR");
  if (!v) return false;
  const std::string s = lower(v);
  return s == "1" || s == "always" || s == "on" || s == "true" || s == "yes";
}

std::string decorate(const std::string& text, OutputFormat f) {
  if (f != OutputFormat::text || !color_enabled()) return text;
  const auto nl = text.find('\n');
  return "\033[1m" + text.substr(0, nl) + "\033[0m" + text.substr(nl);
}

CommandResult usage_error(const std::string& message) { return {1, "", "error: " + message + "\n"}; }

template <class Doc> std::string render(const Doc& doc, OutputFormat f) {
  switch (f) {
  case OutputFormat::json: return render_json(doc);
  case OutputFormat::latex: return render_latex(doc);
  case OutputFormat::text: break;
  }
  return decorate(render_text(doc), f);
}

} // namespace

OutputFormat parse_format(const std::string& text) {
  const std::string s = lower(trim(text));
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  if (s == "latex") return OutputFormat::latex;
  throw ParseError("unknown format '" + text + "' (expected text, json or latex)");
}

GroupForm parse_group_spec(const std::string& spec) {
  const std::string s = trim(spec);
  if (s.empty()) throw ParseError("empty group spec");
  static const std::regex canonical(R"(^([A-Ga-g])(\d+)(?::([A-Za-z0-9_]*))?$)");
  std::smatch m;
  SpecParts parts;
  if (std::regex_match(s, m, canonical)) {
    try {
      parts.type = parse_dynkin_type(m[1].str() + m[2].str());
    } catch (const InvalidType&) {
      throw ParseError("'" + m[1].str() + m[2].str() + "' does not name an admissible Dynkin type");
    }
    parts.form = lower(m[3].str());
  } else {
    parts = parse_alias(s);
  }
  const auto td = make_type_data(parts.type);
  if (parts.form.empty()) {
    const auto forms = enumerate_forms(td);
    if (forms.size() == 1) return forms.front();
    parts.form = "sc";
  }
  return canonical_form(td, resolve_form(*td, parts.form, s));
}

Element parse_delta(const GroupForm& gf, const std::string& text) {
  const FiniteAbelianGroup pi1 = fundamental_group(gf);
  auto invalid = [&]() {
    std::string values;
    for (const auto& e : pi1.elements()) values += (values.empty() ? "" : "; ") + pi1.element_to_string(e);
    return InvalidDegree("δ = '" + text + "' is not an element of π1(" + gf.display_name + ") = " + pi1.to_string() +
                         "; valid values: " + values);
  };
  const std::string s = trim(text);
  if (s.empty()) return pi1.zero();
  static const std::regex number(R"(^\d+$)");
  std::vector<std::int64_t> coords;
  for (const auto& part : split(s, ',')) {
    if (!std::regex_match(part, number) || part.size() > 9) throw invalid();
    coords.push_back(std::stoll(part));
  }
  if (pi1.is_trivial()) {
    if (coords.size() == 1 && coords[0] == 0) return pi1.zero();
    throw invalid();
  }
  if (coords.size() != pi1.num_factors() || !pi1.contains(coords)) throw invalid();
  return coords;
}

RamificationProfile parse_profile(const std::string& text) {
  RamificationProfile rp;
  const std::string s = trim(text);
  if (s.empty()) return rp;
  static const std::regex entry(R"(^(-?\d{1,12})\s*:\s*(-?\d{1,12})$)");
  for (const auto& part : split(s, ',')) {
    std::smatch m;
    if (!std::regex_match(part, m, entry))
      throw ParseError("malformed profile entry '" + part + "' (expected <deg>:<drop>)");
    rp.push_back({std::stoll(m[1]), std::stoll(m[2])});
  }
  return rp;
}

CommandResult cmd_report(const ReportOptions& o) {
  try {
    const GroupForm gf = parse_group_spec(o.group);
    if (o.genus < 2) return usage_error("genus must be at least 2, got " + std::to_string(o.genus));
    const Element delta = parse_delta(gf, o.delta);
    const ReportDocument doc = make_report(gf, delta, o.genus);
    CommandResult r{0, render(doc, o.format), ""};
    for (const auto& w : doc.warnings) r.err += "warning: " + w + "\n";
    return r;
  } catch (const ParseError& e) {
    return usage_error(e.what());
  } catch (const InvalidDegree& e) {
    return usage_error(e.what());
  }
}

CommandResult cmd_table(const TableOptions& o) {
  if (o.genus < kMinPresentationGenus)
    return usage_error("the table needs genus >= " + std::to_string(kMinPresentationGenus) + ", got " +
                       std::to_string(o.genus));
  if (o.max_rank < 1) return usage_error("--max-rank must be positive, got " + std::to_string(o.max_rank));
  return {0, render(make_table(o.genus, o.max_rank), o.format), ""};
}

CommandResult cmd_delta(const DeltaOptions& o) {
  RamificationProfile rp;
  try {
    rp = parse_profile(o.profile);
  } catch (const ParseError& e) {
    return usage_error(e.what());
  }
  std::vector<std::int64_t> local;
  for (std::size_t i = 0; i < rp.size(); ++i) {
    try {
      local.push_back(delta_local(rp[i]));
    } catch (const InconsistentProfile& e) {
      return {2, "", "error: point " + std::to_string(i + 1) + ": " + e.what() + "\n"};
    }
  }
  std::int64_t total = 0;
  for (auto d : local) total += d;
  std::ostringstream os;
  if (o.format == OutputFormat::json) {
    nlohmann::json j;
    j["points"] = nlohmann::json::array();
    for (std::size_t i = 0; i < rp.size(); ++i)
      j["points"].push_back({{"degree", rp[i].degree}, {"drop", rp[i].stab_rank_drop}, {"delta", local[i]}});
    j["delta"] = total;
    os << j.dump(2) << "\n";
    return {0, os.str(), ""};
  }
  if (o.format == OutputFormat::latex) {
    os << "\\delta = ";
    for (std::size_t i = 0; i < local.size(); ++i) os << (i ? " + " : "") << local[i];
    os << (local.empty() ? "0" : local.size() > 1 ? " = " + std::to_string(total) : "") << "\n";
    return {0, os.str(), ""};
  }
  for (std::size_t i = 0; i < rp.size(); ++i)
    os << "point " << i + 1 << " (" << rp[i].degree << ":" << rp[i].stab_rank_drop << "): δ_p = " << local[i] << "\n";
  os << "δ = " << total << "\n";
  return {0, decorate(os.str(), o.format), ""};
}

CommandResult cmd_rootdata(const RootDataOptions& o) {
  DynkinType t;
  try {
    t = parse_dynkin_type(trim(o.type));
  } catch (const InvalidType& e) {
    return usage_error(e.what());
  }
  return {0, render(make_rootdata(t), o.format), ""};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Automorphism groups of moduli of G-bundles, and Hitchin numerology", "lieaut"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json", "latex"};

  ReportOptions ro;
  std::string report_format = "text";
  auto* report = app.add_subcommand("report", "Center, π1, Out and automorphism presentation of one group");
  report->add_option("--group,-G", ro.group, "Group spec, e.g. D4:adjoint, A5:mu3, Spin8")->required();
  report->add_option("--genus,-g", ro.genus, "Genus of the curve")->capture_default_str();
  report->add_option("--delta,-d", ro.delta, "Degree in π1(G), comma-separated coordinates");
  report->add_option("--format,-f", report_format, "text, json or latex")->check(CLI::IsMember(formats));

  TableOptions to;
  std::string table_format = "text";
  auto* table = app.add_subcommand("table", "Automorphism groups for every form of every type up to a rank");
  table->add_option("--genus,-g", to.genus, "Genus of the curve")->capture_default_str();
  table->add_option("--max-rank,-r", to.max_rank, "Largest rank included")->capture_default_str();
  table->add_option("--format,-f", table_format, "text, json or latex")->check(CLI::IsMember(formats));

  DeltaOptions dopt;
  std::string delta_format = "text";
  auto* delta = app.add_subcommand("delta", "Local and total δ-invariant of a ramification profile");
  delta->add_option("--profile,-p", dopt.profile, "Entries <deg>:<drop>, comma-separated")->required();
  delta->add_option("--format,-f", delta_format, "text, json or latex")->check(CLI::IsMember(formats));

  RootDataOptions rdo;
  std::string rootdata_format = "text";
  auto* rootdata = app.add_subcommand("rootdata", "Roots, Cartan matrix, degrees and orbit counts of a type");
  rootdata->add_option("--type,-t", rdo.type, "Dynkin type, e.g. E6")->required();
  rootdata->add_option("--format,-f", rootdata_format, "text, json or latex")->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  CommandResult r;
  if (report->parsed()) {
    ro.format = parse_format(report_format);
    r = cmd_report(ro);
  } else if (table->parsed()) {
    to.format = parse_format(table_format);
    r = cmd_table(to);
  } else if (delta->parsed()) {
    dopt.format = parse_format(delta_format);
    r = cmd_delta(dopt);
  } else {
    rdo.format = parse_format(rootdata_format);
    r = cmd_rootdata(rdo);
  }
  out << r.out;
  err << r.err;
  return r.exit_code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"lieaut"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace lieaut
