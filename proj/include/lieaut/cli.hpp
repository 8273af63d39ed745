#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "lieaut/groupclass.hpp"
#include "lieaut/moduli.hpp"

namespace lieaut {

enum class OutputFormat { text, json, latex };

OutputFormat parse_format(const std::string& text);

/// `<TYPE><rank>[:<form>]` with form in {sc, adjoint, so, semispin, mu<k>},
/// or an alias such as Spin8, PSL4, Sp6, SL6/mu2, E6_ad. Throws ParseError.
GroupForm parse_group_spec(const std::string& spec);

/// Comma-separated coordinates in pi_1(gf). An empty string means 0.
/// Throws InvalidDegree naming the valid values.
Element parse_delta(const GroupForm& gf, const std::string& text);

/// "4:0,3:1". Throws ParseError on malformed entries.
RamificationProfile parse_profile(const std::string& text);

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

struct ReportOptions {
  std::string group;
  int genus = kMinPresentationGenus;
  std::string delta;
  OutputFormat format = OutputFormat::text;
};

struct TableOptions {
  int genus = kMinPresentationGenus;
  int max_rank = 8;
  OutputFormat format = OutputFormat::text;
};

struct DeltaOptions {
  std::string profile;
  OutputFormat format = OutputFormat::text;
};

struct RootDataOptions {
  std::string type;
  OutputFormat format = OutputFormat::text;
};

CommandResult cmd_report(const ReportOptions& o);
CommandResult cmd_table(const TableOptions& o);
CommandResult cmd_delta(const DeltaOptions& o);
CommandResult cmd_rootdata(const RootDataOptions& o);

/// Exit codes: 0 success, 1 usage or parse error, 2 mathematical inconsistency.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lieaut
