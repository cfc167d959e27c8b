#include "cvsep/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>

#include "cvsep/criteria.hpp"
#include "cvsep/errors.hpp"
#include "cvsep/states.hpp"

namespace cvsep {

namespace {

void put(std::ostream& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out << buf;
}

}  // namespace

void validate(const SweepSpec& spec) {
  if (spec.n_theta < 1 || spec.n_phi < 1) {
    throw ConfigError("sweep: n_theta and n_phi must be >= 1");
  }
  if (spec.m_values.empty()) throw ConfigError("sweep: m_values must not be empty");
  for (double m : spec.m_values) {
    if (m == 0.0 || !std::isfinite(m)) throw ConfigError("sweep: m values must be nonzero");
  }
}

double sweep_theta(const SweepSpec& spec, int i) {
  if (spec.n_theta == 1) return 0.0;
  return M_PI_2 * static_cast<double>(i) / static_cast<double>(spec.n_theta - 1);
}

double sweep_phi(const SweepSpec& spec, int j) {
  return 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(spec.n_phi);
}

SweepRow sweep_point(double theta, double phi_r, const Cutoff& cutoff,
                     const std::vector<double>& m_values) {
  SweepRow row;
  row.theta = theta;
  row.phi_r = phi_r;
  row.alpha = std::polar(std::cos(theta), phi_r);
  row.beta = Complex(std::sin(theta), 0.0);

  const DensityOperator rho = density_from_pure(bell_xp_state({row.alpha, row.beta}, cutoff));

  for (std::size_t k = 0; k < m_values.size(); ++k) {
    const CriterionReport duan = duan_witness(rho, m_values[k]);
    if (k == 0) row.M = duan.at("M");
    row.duan_detected = row.duan_detected || duan.entangled_detected;
  }
  const DuanMancini dm = duan_mancini_relation(rho);
  row.M_minus = dm.M_minus;
  row.M_x = dm.M_x;
  row.mancini_detected = mancini_witness(rho).entangled_detected;

  const CriterionReport su2 = su2_pt_witness(rho);
  row.su2_lhs = su2.at("lhs");
  row.su2_rhs = su2.at("rhs");
  row.su2_detected = su2.entangled_detected;

  const CriterionReport su11 = su11_pt_witness(rho, Su11Mode::ladder);
  row.su11_lhs = su11.at("lhs");
  row.su11_rhs = su11.at("rhs");
  row.su11_detected = su11.entangled_detected;
  row.su11_reduced = bell_closed_forms(row.alpha, row.beta, 1.0).su11_reduced;

  const CriterionReport ppt = ppt_witness(rho);
  row.ppt_min_eig = ppt.at("min_eigenvalue");
  row.negativity = ppt.at("negativity");
  row.ppt_detected = ppt.entangled_detected;
  return row;
}

std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec, const Cutoff& cutoff) {
  validate(spec);
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(spec.n_theta) * static_cast<std::size_t>(spec.n_phi));
  for (int i = 0; i < spec.n_theta; ++i) {
    for (int j = 0; j < spec.n_phi; ++j) {
      rows.push_back(sweep_point(sweep_theta(spec, i), sweep_phi(spec, j), cutoff, spec.m_values));
    }
  }
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const Cutoff& cutoff) {
  validate(spec);
  const long total = static_cast<long>(spec.n_theta) * spec.n_phi;
  std::vector<SweepRow> rows(static_cast<std::size_t>(total));
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < total; ++idx) {
    const int i = static_cast<int>(idx / spec.n_phi);
    const int j = static_cast<int>(idx % spec.n_phi);
    try {
      rows[static_cast<std::size_t>(idx)] =
          sweep_point(sweep_theta(spec, i), sweep_phi(spec, j), cutoff, spec.m_values);
    } catch (...) {
#pragma omp critical(cvsep_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }

  if (failure) std::rethrow_exception(failure);
  return rows;
}

const std::string& sweep_csv_header() {
  static const std::string header =
      "theta,phi_r,alpha_re,alpha_im,beta_re,beta_im,M,M_minus,M_x,su2_lhs,su2_rhs,su11_lhs,"
      "su11_rhs,su11_reduced,ppt_min_eig,negativity,mancini_detected,duan_detected,su2_detected,"
      "su11_detected,ppt_detected";
  return header;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << sweep_csv_header() << '\n';
  for (const SweepRow& r : rows) {
    const double values[] = {r.theta,   r.phi_r,     r.alpha.real(), r.alpha.imag(),
                             r.beta.real(), r.beta.imag(), r.M,    r.M_minus,
                             r.M_x,     r.su2_lhs,   r.su2_rhs,      r.su11_lhs,
                             r.su11_rhs, r.su11_reduced, r.ppt_min_eig, r.negativity};
    for (double v : values) {
      put(out, v);
      out << ',';
    }
    const bool flags[] = {r.mancini_detected, r.duan_detected, r.su2_detected, r.su11_detected,
                          r.ppt_detected};
    for (std::size_t k = 0; k < 5; ++k) {
      out << (flags[k] ? "true" : "false") << (k + 1 < 5 ? "," : "\n");
    }
  }
}

}  // namespace cvsep
