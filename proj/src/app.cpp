#include "cvsep/app.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "cvsep/dsl.hpp"
#include "cvsep/errors.hpp"

namespace cvsep::app {

namespace {

using nlohmann::ordered_json;

ordered_json complex_json(Complex c) { return {{"re", c.real()}, {"im", c.imag()}}; }

ordered_json state_json(const StateSpec& s) {
  const Cutoff c = effective_cutoff(s);
  ordered_json j;
  j["kind"] = to_string(s.kind);
  switch (s.kind) {
    case StateKind::bell_xp:
      j["alpha"] = complex_json(s.alpha);
      j["beta"] = complex_json(s.beta);
      break;
    case StateKind::tmsv:
    case StateKind::photon_subtracted_tmsv:
      j["r"] = s.r;
      j["phi"] = s.phi;
      break;
    case StateKind::product_coherent:
      j["alpha_a"] = complex_json(s.alpha_a);
      j["alpha_b"] = complex_json(s.alpha_b);
      break;
  }
  j["cutoff"] = {{"d_a", c.d_a}, {"d_b", c.d_b}};
  j["trunc_tol"] = s.trunc_tol;
  return j;
}

// Maps library exceptions onto exit codes with a one-line prefixed message.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "config: " << e.what() << '\n';
    return usage_or_config;
  } catch (const OutputError& e) {
    err << "output: " << e.what() << '\n';
    return output_unwritable;
  } catch (const Error& e) {
    err << "numerical: " << e.what() << '\n';
    return numerical;
  }
}

const StateSpec& require_state(const Config& config) {
  if (!config.state) throw ConfigError("top level: missing 'state'");
  return *config.state;
}

}  // namespace

ordered_json report_json(const CriterionReport& r) {
  ordered_json j;
  j["name"] = r.name;
  for (const auto& [k, v] : r.quantities) j[k] = v;
  j["separable_bound_holds"] = r.separable_bound_holds;
  j["entangled_detected"] = r.entangled_detected;
  j["conventions"] = r.conventions;
  return j;
}

ordered_json evaluate_report(const Config& config) {
  const StateSpec& spec = require_state(config);
  const BuiltState built = build_state(spec);
  const DensityOperator& rho = built.rho;

  ordered_json j;
  j["state"] = state_json(spec);
  j["truncation"] = {{"kept_weight", built.truncation.kept_weight},
                     {"renormalized", built.truncation.renormalized}};

  j["mancini"] = report_json(mancini_witness(rho));
  ordered_json all = ordered_json::array();
  for (double m : config.witnesses.duan_m) all.push_back(report_json(duan_witness(rho, m)));
  j["duan"] = all.front();
  j["duan_all"] = all;
  const DuanMancini dm = duan_mancini_relation(rho);
  j["duan_mancini"] = {{"M", dm.M}, {"M_minus", dm.M_minus}, {"M_x", dm.M_x}};
  j["su2_pt"] = report_json(su2_pt_witness(rho));
  for (Su11Mode mode : config.witnesses.su11_modes) {
    const char* key = mode == Su11Mode::ladder ? "su11_pt" : "su11_pt_quadrature";
    j[key] = report_json(su11_pt_witness(rho, mode));
  }
  j["ppt"] = report_json(ppt_witness(rho));

  if (spec.kind == StateKind::bell_xp) {
    const double m = config.witnesses.duan_m.front();
    const BellClosedForms cf = bell_closed_forms(spec.alpha, spec.beta, m);
    j["bell_closed_forms"] = {{"m", m},
                              {"M_closed", cf.M_closed},
                              {"Mx_closed", cf.Mx_closed},
                              {"su11_reduced", cf.su11_reduced},
                              {"ppt_spectrum", cf.ppt_spectrum}};
  }
  return j;
}

int cmd_evaluate(const std::string& config_path, const Overrides& overrides, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    Config config = load_config(config_path);
    apply_overrides(config, overrides);
    require_state(config);
    out << evaluate_report(config).dump(2) << '\n';
    return ok;
  });
}

int cmd_sweep(const std::string& config_path, const std::string& output_path,
              const Overrides& overrides, std::ostream& err) {
  return guarded(err, [&] {
    Config config = load_config(config_path);
    apply_overrides(config, overrides);
    if (!config.sweep) throw ConfigError("top level: missing 'sweep'");
    Cutoff cutoff = overrides.cutoff.value_or(Cutoff{3, 3});
    if (config.state && config.state->kind == StateKind::bell_xp && config.state->cutoff) {
      cutoff = *config.state->cutoff;
    }
    const std::vector<SweepRow> rows = run_sweep(*config.sweep, cutoff);

    std::ostringstream csv;
    write_sweep_csv(csv, rows);
    std::ofstream file(output_path, std::ios::binary | std::ios::trunc);
    if (!file) throw OutputError("cannot open '" + output_path + "' for writing");
    file << csv.str();
    file.flush();
    if (!file) throw OutputError("failed writing '" + output_path + "'");
    return ok;
  });
}

int cmd_expr(const std::string& text, const std::string& config_path, const Overrides& overrides,
             std::ostream& out, std::ostream& err) {
  dsl::Query query;
  try {
    query = dsl::parse(text);
  } catch (const DslError& e) {
    err << "parse: " << e.what() << '\n';
    err << "  " << text << '\n';
    err << "  " << std::string(e.position(), ' ') << "^\n";
    return expression;
  }
  return guarded(err, [&] {
    Config config = load_config(config_path);
    apply_overrides(config, overrides);
    const BuiltState built = build_state(require_state(config));
    dsl::QueryResult result;
    try {
      result = dsl::evaluate(query, built.rho);
    } catch (const DslError& e) {
      err << "expr: " << e.what() << '\n';
      return static_cast<int>(expression);
    }
    ordered_json j;
    j["expression"] = text;
    if (result.verdict) {
      j["lhs"] = result.verdict->lhs;
      j["rhs"] = result.verdict->rhs;
      j["relation"] = result.verdict->relation == dsl::Relation::GreaterEqual ? ">=" : "<";
      j["holds"] = result.verdict->holds;
    } else {
      j["re"] = result.value.real();
      j["im"] = result.value.imag();
    }
    out << j.dump(2) << '\n';
    return static_cast<int>(ok);
  });
}

}  // namespace cvsep::app
