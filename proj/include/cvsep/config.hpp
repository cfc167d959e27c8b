#pragma once

// JSON configuration shared by the evaluate, sweep and expr subcommands:
//
//   {
//     "state": {
//       "kind": "bell_xp" | "tmsv" | "photon_subtracted_tmsv" | "product_coherent",
//       "alpha": {"re": .., "im": ..}, "beta": {..},        // bell_xp
//       "r": .., "phi": ..,                                 // tmsv family
//       "alpha_a": {..}, "alpha_b": {..},                   // product_coherent
//       "cutoff": {"d_a": .., "d_b": ..},                   // optional
//       "trunc_tol": ..                                     // optional, 1e-8
//     },
//     "witnesses": {"duan_m": [1, ..], "su11_modes": ["ladder", "quadrature"]},
//     "sweep": {"n_theta": .., "n_phi": .., "m_values": [..]}
//   }
//
// Complex numbers may also be given as plain reals.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cvsep/criteria.hpp"
#include "cvsep/fock.hpp"
#include "cvsep/states.hpp"
#include "cvsep/sweep.hpp"

namespace cvsep {

enum class StateKind { bell_xp, tmsv, photon_subtracted_tmsv, product_coherent };

std::string to_string(StateKind kind);

struct StateSpec {
  StateKind kind = StateKind::bell_xp;
  Complex alpha;
  Complex beta;
  double r = 0.0;
  double phi = 0.0;
  Complex alpha_a;
  Complex alpha_b;
  std::optional<Cutoff> cutoff;  // default_cutoff() when absent
  double trunc_tol = default_trunc_tol;
};

struct WitnessOptions {
  std::vector<double> duan_m{1.0};
  std::vector<Su11Mode> su11_modes{Su11Mode::ladder, Su11Mode::quadrature};
};

struct Config {
  std::optional<StateSpec> state;
  WitnessOptions witnesses;
  std::optional<SweepSpec> sweep;
};

// Command-line overrides applied after parsing.
struct Overrides {
  std::optional<Cutoff> cutoff;
  std::optional<double> trunc_tol;
};

// Throw ConfigError on schema violations.
Config parse_config(const nlohmann::json& doc);
Config load_config(const std::string& path);
void apply_overrides(Config& config, const Overrides& overrides);

// Default cutoff when the config gives none: 3x3 for bell_xp, 12x12 for the
// squeezed vacuum, 16x16 after photon subtraction, and
// ceil(|alpha|^2 + 6|alpha| + 10) per mode for coherent products.
Cutoff default_cutoff(const StateSpec& spec);
Cutoff effective_cutoff(const StateSpec& spec);

struct BuiltState {
  DensityOperator rho;
  TruncationReport truncation;
};

BuiltState build_state(const StateSpec& spec);

}  // namespace cvsep
