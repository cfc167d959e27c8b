// cvsep: entanglement witnesses for two-mode bosonic states.
//
//   cvsep evaluate <config.json>
//   cvsep sweep <config.json> <out.csv>
//   cvsep expr "<text>" <config.json>
//
// Common flags: --cutoff A B, --tol X.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cvsep/app.hpp"
#include "cvsep/errors.hpp"

int main(int argc, char** argv) {
  CLI::App cli{"Entanglement witnesses for two-mode bosonic states in a truncated Fock space"};
  cli.require_subcommand(1);

  std::vector<std::size_t> cutoff;
  std::optional<double> tol;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cutoff", cutoff, "Override the Fock cutoff per mode (A B)")
        ->expected(2);
    sub->add_option("--tol", tol, "Override the truncation tolerance");
  };

  std::string config_path, output_path, expression;

  CLI::App* evaluate = cli.add_subcommand("evaluate", "Run every witness on the configured state");
  evaluate->add_option("config", config_path, "JSON config")->required();
  add_common(evaluate);

  CLI::App* sweep = cli.add_subcommand("sweep", "Sweep the Bell-type family, write CSV");
  sweep->add_option("config", config_path, "JSON config")->required();
  sweep->add_option("output", output_path, "CSV output path")->required();
  add_common(sweep);

  CLI::App* expr = cli.add_subcommand("expr", "Evaluate an operator-language query");
  expr->add_option("expression", expression, "Query text, e.g. \"E[ad*a]\"")->required();
  expr->add_option("config", config_path, "JSON config")->required();
  add_common(expr);

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : cvsep::app::usage_or_config;
  }

  cvsep::Overrides overrides;
  try {
    if (!cutoff.empty()) overrides.cutoff = cvsep::Cutoff(cutoff[0], cutoff[1]);
  } catch (const cvsep::Error& e) {
    std::cerr << "config: --cutoff: " << e.what() << '\n';
    return cvsep::app::usage_or_config;
  }
  if (tol) {
    if (!(*tol >= 0.0 && *tol < 1.0)) {
      std::cerr << "config: --tol: must lie in [0, 1)\n";
      return cvsep::app::usage_or_config;
    }
    overrides.trunc_tol = tol;
  }

  if (*evaluate) return cvsep::app::cmd_evaluate(config_path, overrides, std::cout, std::cerr);
  if (*sweep) return cvsep::app::cmd_sweep(config_path, output_path, overrides, std::cerr);
  return cvsep::app::cmd_expr(expression, config_path, overrides, std::cout, std::cerr);
}
