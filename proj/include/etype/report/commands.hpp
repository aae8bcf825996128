#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "etype/report/report.hpp"
#include "etype/report/run_config.hpp"
#include "etype/soliton/theorem_case.hpp"

namespace etype::report {

enum ExitCode : int { kExitPass = 0, kExitIdentityFailure = 1, kExitConfigError = 2 };

struct CommandResult {
  Envelope envelope;
  /// Human-readable summary, one line per item.
  std::string text;
  /// Tabular form of the result.
  CsvTable csv;
};

/// Builds the theorem case named by the config; c comes from --c, from
/// -mu/beta, or defaults to -1 for case IV. Throws ConfigError when beta and
/// mu are given but classify to a different case.
soliton::TheoremCase case_from_config(const RunConfig& config);

CommandResult run_verify(const RunConfig& config);
CommandResult run_classify(const RunConfig& config);
CommandResult run_integrate(const RunConfig& config);
CommandResult run_sweep(const RunConfig& config);
CommandResult run_table(const RunConfig& config);

CommandResult run_command(const RunConfig& config);

/// Runs the command, writes the report (to --out or to `out`), and maps the
/// outcome to an exit code: 0 pass, 1 identity failure or stiffness, 2
/// configuration error.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace etype::report
