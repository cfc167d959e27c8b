#pragma once

// Grid sweep of every witness over the Bell-type family
// alpha = cos(theta) e^{i phi_r}, beta = sin(theta), theta in [0, pi/2]
// (endpoints included), phi_r in [0, 2 pi) (2 pi excluded).
//
// run_sweep evaluates grid points in parallel with OpenMP; run_sweep_serial
// is the single-threaded reference. Both return rows in row-major order
// (theta outer, phi_r inner) and produce identical values.

#include <iosfwd>
#include <string>
#include <vector>

#include "cvsep/fock.hpp"

namespace cvsep {

struct SweepSpec {
  int n_theta = 1;
  int n_phi = 1;
  // Duan parameters; the M column reports the first, duan_detected is true
  // when any of them detects.
  std::vector<double> m_values{1.0};
};

struct SweepRow {
  double theta = 0.0;
  double phi_r = 0.0;
  Complex alpha;
  Complex beta;
  double M = 0.0;
  double M_minus = 0.0;
  double M_x = 0.0;
  double su2_lhs = 0.0;
  double su2_rhs = 0.0;
  double su11_lhs = 0.0;
  double su11_rhs = 0.0;
  double su11_reduced = 0.0;
  double ppt_min_eig = 0.0;
  double negativity = 0.0;
  bool mancini_detected = false;
  bool duan_detected = false;
  bool su2_detected = false;
  bool su11_detected = false;
  bool ppt_detected = false;
};

// Throws ConfigError for grid counts < 1, an empty m list or m = 0.
void validate(const SweepSpec& spec);

double sweep_theta(const SweepSpec& spec, int i);
double sweep_phi(const SweepSpec& spec, int j);

SweepRow sweep_point(double theta, double phi_r, const Cutoff& cutoff,
                     const std::vector<double>& m_values);

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const Cutoff& cutoff);
std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec, const Cutoff& cutoff);

const std::string& sweep_csv_header();
// Floats with 17 significant digits, booleans as true/false.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace cvsep
