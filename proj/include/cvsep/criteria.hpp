#pragma once

// Separability witnesses for two-mode bosonic states: the second-order
// quadrature criteria (product and sum forms), the partially transposed
// SU(2) and SU(1,1) uncertainty relations built from fourth-order moments,
// and the exact partial-transpose eigenvalue test.

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cvsep/fock.hpp"
#include "cvsep/moments.hpp"

namespace cvsep {

enum class WitnessKind { Mancini, Duan, SU2PT, SU11PT, PPT };

struct CriterionReport {
  WitnessKind kind = WitnessKind::PPT;
  std::string name;
  std::vector<std::pair<std::string, double>> quantities;
  bool separable_bound_holds = true;
  bool entangled_detected = false;
  std::string conventions;

  // Throws std::out_of_range for unknown names.
  double at(std::string_view quantity) const;
};

// Strict detection with a relative margin: lhs < rhs - tol::psd * max(1, |rhs|).
bool violates(double lhs, double rhs);

// Var(x_a + x_b) * Var(p_a - p_b) >= 1, i.e. Delta U Delta V >= 1/2 for the
// 1/sqrt(2)-normalized pair.
CriterionReport mancini_witness(const DensityOperator& rho);

// M = Var(u) + Var(v) >= m^2 + 1/m^2 with u = |m| x_a + x_b / m,
// v = |m| p_a - p_b / m. Throws PreconditionError for m = 0.
CriterionReport duan_witness(const DensityOperator& rho, double m);

struct DuanMancini {
  double M = 0.0;
  double M_minus = 0.0;
  double M_x = 0.0;
};

// Quantities for u = x_a + x_b, v = p_a - p_b; M^2 = M_minus^2 + 4 M_x.
DuanMancini duan_mancini_relation(const DensityOperator& rho);

CriterionReport su2_pt_witness(const DensityOperator& rho);

enum class Su11Mode { ladder, quadrature };
CriterionReport su11_pt_witness(const DensityOperator& rho, Su11Mode mode = Su11Mode::ladder);

CriterionReport ppt_witness(const DensityOperator& rho);

// Analytic predictions for alpha|1,0> + beta|0,1>.
struct BellClosedForms {
  double M_closed = 0.0;      // m^2 + 1/m^2 + 2(|alpha|^2 m^2 + |beta|^2 / m^2)
  double Mx_closed = 0.0;     // 4 - 4 Re(alpha beta*)^2, for m = 1
  double su11_reduced = 0.0;  // |a* b|^2 - 2 Re(a* b)^2 Im(a* b)^2
  std::array<double, 4> ppt_spectrum{};  // ascending
};

BellClosedForms bell_closed_forms(Complex alpha, Complex beta, double m);

// For the Bell-type state the literal SU(1,1) inequality evaluates to
// lhs - rhs = su11_scale * su11_reduced.
inline constexpr double su11_scale = -8.0;

// Operators used by the witnesses, paired with their operator-language text.
struct BuiltinOperator {
  std::string name;
  std::string text;
  OperatorPoly poly;
};

std::vector<BuiltinOperator> builtin_operators(double m = 1.0);

// Full witness inequalities in the query language ("lhs >= rhs").
struct BuiltinQuery {
  std::string name;
  std::string text;
};

std::vector<BuiltinQuery> builtin_queries();

}  // namespace cvsep
