#include "cvsep/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "cvsep/errors.hpp"

namespace cvsep {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError(where + ": missing '" + key + "'");
  return obj.at(key);
}

double as_real(const json& v, const std::string& where) {
  if (!v.is_number()) throw ConfigError(where + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(where + ": expected a finite number");
  return x;
}

int as_count(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ConfigError(where + ": expected an integer");
  const auto x = v.get<long long>();
  if (x < 1 || x > 1000000) throw ConfigError(where + ": must be between 1 and 1000000");
  return static_cast<int>(x);
}

Complex as_complex(const json& v, const std::string& where) {
  if (v.is_number()) return {as_real(v, where), 0.0};
  if (!v.is_object()) throw ConfigError(where + ": expected {\"re\": .., \"im\": ..} or a number");
  reject_unknown(v, {"re", "im"}, where);
  const double re = v.contains("re") ? as_real(v.at("re"), where + ".re") : 0.0;
  const double im = v.contains("im") ? as_real(v.at("im"), where + ".im") : 0.0;
  return {re, im};
}

std::vector<double> as_m_list(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) throw ConfigError(where + ": expected a non-empty array");
  std::vector<double> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double m = as_real(v[k], where + "[" + std::to_string(k) + "]");
    if (m == 0.0) throw ConfigError(where + ": m must be nonzero");
    out.push_back(m);
  }
  return out;
}

Cutoff as_cutoff(const json& v, const std::string& where) {
  if (!v.is_object()) throw ConfigError(where + ": expected {\"d_a\": .., \"d_b\": ..}");
  reject_unknown(v, {"d_a", "d_b"}, where);
  const int da = as_count(require(v, "d_a", where), where + ".d_a");
  const int db = as_count(require(v, "d_b", where), where + ".d_b");
  if (da < 2 || db < 2) throw ConfigError(where + ": each mode needs at least 2 levels");
  if (static_cast<long long>(da) * db > 4096) {
    throw ConfigError(where + ": joint dimension above 4096 is not supported");
  }
  return {static_cast<std::size_t>(da), static_cast<std::size_t>(db)};
}

StateSpec parse_state(const json& v) {
  const std::string where = "state";
  if (!v.is_object()) throw ConfigError("state: expected an object");
  const json& kind = require(v, "kind", where);
  if (!kind.is_string()) throw ConfigError("state.kind: expected a string");
  const std::string k = kind.get<std::string>();

  StateSpec spec;
  std::set<std::string> allowed{"kind", "cutoff", "trunc_tol"};
  if (k == "bell_xp") {
    spec.kind = StateKind::bell_xp;
    allowed.insert({"alpha", "beta"});
    spec.alpha = as_complex(require(v, "alpha", where), "state.alpha");
    spec.beta = as_complex(require(v, "beta", where), "state.beta");
  } else if (k == "tmsv" || k == "photon_subtracted_tmsv") {
    spec.kind = k == "tmsv" ? StateKind::tmsv : StateKind::photon_subtracted_tmsv;
    allowed.insert({"r", "phi"});
    spec.r = as_real(require(v, "r", where), "state.r");
    spec.phi = v.contains("phi") ? as_real(v.at("phi"), "state.phi") : 0.0;
    if (spec.r < 0.0) throw ConfigError("state.r: must be >= 0");
  } else if (k == "product_coherent") {
    spec.kind = StateKind::product_coherent;
    allowed.insert({"alpha_a", "alpha_b"});
    spec.alpha_a = as_complex(require(v, "alpha_a", where), "state.alpha_a");
    spec.alpha_b = as_complex(require(v, "alpha_b", where), "state.alpha_b");
  } else {
    throw ConfigError("state.kind: unknown kind '" + k + "'");
  }
  reject_unknown(v, allowed, where);
  if (v.contains("cutoff")) spec.cutoff = as_cutoff(v.at("cutoff"), "state.cutoff");
  if (v.contains("trunc_tol")) {
    spec.trunc_tol = as_real(v.at("trunc_tol"), "state.trunc_tol");
    if (spec.trunc_tol < 0.0 || spec.trunc_tol >= 1.0) {
      throw ConfigError("state.trunc_tol: must lie in [0, 1)");
    }
  }
  return spec;
}

WitnessOptions parse_witnesses(const json& v) {
  if (!v.is_object()) throw ConfigError("witnesses: expected an object");
  reject_unknown(v, {"duan_m", "su11_modes"}, "witnesses");
  WitnessOptions out;
  if (v.contains("duan_m")) out.duan_m = as_m_list(v.at("duan_m"), "witnesses.duan_m");
  if (v.contains("su11_modes")) {
    const json& modes = v.at("su11_modes");
    if (!modes.is_array() || modes.empty()) {
      throw ConfigError("witnesses.su11_modes: expected a non-empty array");
    }
    out.su11_modes.clear();
    for (const json& m : modes) {
      if (m == "ladder") {
        out.su11_modes.push_back(Su11Mode::ladder);
      } else if (m == "quadrature") {
        out.su11_modes.push_back(Su11Mode::quadrature);
      } else {
        throw ConfigError("witnesses.su11_modes: expected \"ladder\" or \"quadrature\"");
      }
    }
  }
  return out;
}

SweepSpec parse_sweep(const json& v) {
  if (!v.is_object()) throw ConfigError("sweep: expected an object");
  reject_unknown(v, {"n_theta", "n_phi", "m_values"}, "sweep");
  SweepSpec spec;
  spec.n_theta = as_count(require(v, "n_theta", "sweep"), "sweep.n_theta");
  spec.n_phi = as_count(require(v, "n_phi", "sweep"), "sweep.n_phi");
  if (v.contains("m_values")) spec.m_values = as_m_list(v.at("m_values"), "sweep.m_values");
  return spec;
}

std::size_t coherent_levels(Complex alpha) {
  const double mag = std::abs(alpha);
  return std::max<std::size_t>(3, static_cast<std::size_t>(std::ceil(mag * mag + 6.0 * mag + 10.0)));
}

}  // namespace

std::string to_string(StateKind kind) {
  switch (kind) {
    case StateKind::bell_xp: return "bell_xp";
    case StateKind::tmsv: return "tmsv";
    case StateKind::photon_subtracted_tmsv: return "photon_subtracted_tmsv";
    case StateKind::product_coherent: return "product_coherent";
  }
  return "?";
}

Config parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("top level: expected an object");
  reject_unknown(doc, {"state", "witnesses", "sweep"}, "top level");
  Config config;
  if (doc.contains("state")) config.state = parse_state(doc.at("state"));
  if (doc.contains("witnesses")) config.witnesses = parse_witnesses(doc.at("witnesses"));
  if (doc.contains("sweep")) config.sweep = parse_sweep(doc.at("sweep"));
  return config;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(doc);
}

void apply_overrides(Config& config, const Overrides& overrides) {
  if (!config.state) return;
  if (overrides.cutoff) config.state->cutoff = overrides.cutoff;
  if (overrides.trunc_tol) config.state->trunc_tol = *overrides.trunc_tol;
}

Cutoff default_cutoff(const StateSpec& spec) {
  switch (spec.kind) {
    case StateKind::bell_xp: return {3, 3};
    case StateKind::tmsv: return {12, 12};
    case StateKind::photon_subtracted_tmsv: return {16, 16};
    case StateKind::product_coherent:
      return {coherent_levels(spec.alpha_a), coherent_levels(spec.alpha_b)};
  }
  return {3, 3};
}

Cutoff effective_cutoff(const StateSpec& spec) { return spec.cutoff.value_or(default_cutoff(spec)); }

BuiltState build_state(const StateSpec& spec) {
  const Cutoff c = effective_cutoff(spec);
  switch (spec.kind) {
    case StateKind::bell_xp:
      return {density_from_pure(bell_xp_state({spec.alpha, spec.beta}, c)), {}};
    case StateKind::tmsv: {
      auto t = two_mode_squeezed_vacuum({spec.r, spec.phi}, c, spec.trunc_tol);
      return {density_from_pure(t.state), t.report};
    }
    case StateKind::photon_subtracted_tmsv: {
      auto t = photon_subtracted_tmsv({spec.r, spec.phi}, c, spec.trunc_tol);
      return {density_from_pure(t.state), t.report};
    }
    case StateKind::product_coherent: {
      auto t = product_coherent(spec.alpha_a, spec.alpha_b, c, spec.trunc_tol);
      return {density_from_pure(t.state), t.report};
    }
  }
  throw ConfigError("state: unsupported kind");
}

}  // namespace cvsep
