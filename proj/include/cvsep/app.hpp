#pragma once

// Subcommand bodies for the cvsep command-line tool. They write results to
// `out`, one-line diagnostics to `err`, and return the process exit code.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cvsep/config.hpp"

namespace cvsep::app {

enum ExitCode : int {
  ok = 0,
  usage_or_config = 2,
  numerical = 3,
  output_unwritable = 4,
  expression = 5,
};

// Every configured witness on the configured state, as JSON.
nlohmann::ordered_json evaluate_report(const Config& config);

nlohmann::ordered_json report_json(const CriterionReport& r);

int cmd_evaluate(const std::string& config_path, const Overrides& overrides, std::ostream& out,
                 std::ostream& err);

// Sweep cutoff: state.cutoff when the config has a bell_xp state, else the
// --cutoff override, else 3x3.
int cmd_sweep(const std::string& config_path, const std::string& output_path,
              const Overrides& overrides, std::ostream& err);

int cmd_expr(const std::string& text, const std::string& config_path, const Overrides& overrides,
             std::ostream& out, std::ostream& err);

}  // namespace cvsep::app
