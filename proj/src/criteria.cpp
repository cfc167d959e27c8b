#include "cvsep/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "cvsep/errors.hpp"

namespace cvsep {

namespace {

using P = OperatorPoly;

// Fourth-order pieces of the partially transposed uncertainty relations.
// `sum_terms` is the bracket's moment sum with the plus signs, `diff_terms`
// the one with minus signs; `herm` and `anti` the second-order combinations
// that are squared.
struct PtBrackets {
  P sum_terms;
  P herm;
  P diff_terms;
  P anti;
  P rhs;
};

PtBrackets su2_brackets() {
  const P a = P::a(), ad = P::ad(), b = P::b(), bd = P::bd();
  return {
      ad * a * b * bd + a * ad * bd * b + ad * ad * bd * bd + a * a * b * b,
      ad * bd + a * b,
      ad * a * b * bd + a * ad * bd * b - ad * ad * bd * bd - a * a * b * b,
      ad * bd - a * b,
      ad * a - bd * b,
  };
}

PtBrackets su11_brackets() {
  const P a = P::a(), ad = P::ad(), b = P::b(), bd = P::bd();
  return {
      ad * a * bd * b + a * ad * b * bd + ad * ad * b * b + a * a * bd * bd,
      ad * b + a * bd,
      ad * a * bd * b + a * ad * b * bd - ad * ad * b * b - a * a * bd * bd,
      ad * b - a * bd,
      ad * a + b * bd,
  };
}

struct QuadratureOps {
  P xa_xb, pa_pb, xa_pa_pb_xb, pa_xa_xb_pb;
  P xa_pb, pa_xb, xa_pa_xb_pb, pa_xa_pb_xb;
  P xa2, pa2, xb2, pb2;
};

QuadratureOps quadrature_ops() {
  const P xa = quadrature(Quadrature::xa), pa = quadrature(Quadrature::pa);
  const P xb = quadrature(Quadrature::xb), pb = quadrature(Quadrature::pb);
  return {xa * xb,      pa * pb,      xa * pa * pb * xb, pa * xa * xb * pb,
          xa * pb,      pa * xb,      xa * pa * xb * pb, pa * xa * pb * xb,
          xa * xa,      pa * pa,      xb * xb,           pb * pb};
}

P duan_u(double m) { return quadrature_poly({{Quadrature::xa, std::abs(m)}, {Quadrature::xb, 1.0 / m}}); }
P duan_v(double m) { return quadrature_poly({{Quadrature::pa, std::abs(m)}, {Quadrature::pb, -1.0 / m}}); }

double real_checked(Complex v, const char* what) {
  if (std::abs(v.imag()) > tol::herm * std::max(1.0, std::abs(v.real()))) {
    throw PreconditionError(std::string(what) + ": expected a real value, imaginary part " +
                            std::to_string(v.imag()));
  }
  return v.real();
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CriterionReport inequality_report(WitnessKind kind, std::string name,
                                  std::vector<std::pair<std::string, double>> q, double lhs,
                                  double rhs, std::string conventions) {
  CriterionReport r;
  r.kind = kind;
  r.name = std::move(name);
  r.quantities = std::move(q);
  r.quantities.emplace_back("lhs", lhs);
  r.quantities.emplace_back("rhs", rhs);
  r.entangled_detected = violates(lhs, rhs);
  r.separable_bound_holds = !r.entangled_detected;
  r.conventions = std::move(conventions);
  return r;
}

CriterionReport pt_report(const DensityOperator& rho, const PtBrackets& ops, WitnessKind kind,
                          const char* name, std::string conventions) {
  const Complex h = expectation_poly(rho, ops.herm);
  const Complex n = expectation_poly(rho, ops.anti);
  const double first = real_checked(expectation_poly(rho, ops.sum_terms) - h * h, name);
  const double second = real_checked(expectation_poly(rho, ops.diff_terms) + n * n, name);
  const double rhs = std::norm(expectation_poly(rho, ops.rhs));
  return inequality_report(kind, name, {{"bracket1", first}, {"bracket2", second}},
                           first * second, rhs, std::move(conventions));
}

}  // namespace

double CriterionReport::at(std::string_view quantity) const {
  for (const auto& [k, v] : quantities) {
    if (k == quantity) return v;
  }
  throw std::out_of_range("criterion report " + name + " has no quantity " +
                          std::string(quantity));
}

bool violates(double lhs, double rhs) {
  return lhs < rhs - tol::psd * std::max(1.0, std::abs(rhs));
}

CriterionReport mancini_witness(const DensityOperator& rho) {
  const double var_u = variance(rho, duan_u(1.0));
  const double var_v = variance(rho, duan_v(1.0));
  const double mx = var_u * var_v;
  return inequality_report(
      WitnessKind::Mancini, "Mancini",
      {{"var_u", var_u}, {"var_v", var_v}, {"M_x", mx}, {"delta_product", std::sqrt(mx) / 2.0}},
      mx, 1.0,
      "u = x_a + x_b, v = p_a - p_b, x = (a + ad)/sqrt2, p = (a - ad)/(i sqrt2); "
      "lhs = M_x = Var(u) Var(v) >= 1 is Delta U Delta V >= 1/2 with U = u/sqrt2, V = v/sqrt2 "
      "(delta_product^2 = M_x / 4)");
}

CriterionReport duan_witness(const DensityOperator& rho, double m) {
  if (m == 0.0 || !std::isfinite(m)) {
    throw PreconditionError("duan_witness: m must be finite and nonzero");
  }
  const double var_u = variance(rho, duan_u(m));
  const double var_v = variance(rho, duan_v(m));
  const double M = var_u + var_v;
  const double bound = m * m + 1.0 / (m * m);
  const double lower = std::abs(m * m - 1.0 / (m * m));
  return inequality_report(WitnessKind::Duan, "Duan(m=" + fmt(m) + ")",
                           {{"m", m},
                            {"var_u", var_u},
                            {"var_v", var_v},
                            {"M", M},
                            {"bound", bound},
                            {"lower_bound", lower},
                            {"lower_bound_holds", M >= lower ? 1.0 : 0.0}},
                           M, bound,
                           "u = |m| x_a + x_b/m, v = |m| p_a - p_b/m; separable => "
                           "M >= m^2 + 1/m^2; lower bound |m^2 - 1/m^2| reported only");
}

DuanMancini duan_mancini_relation(const DensityOperator& rho) {
  const double var_u = variance(rho, duan_u(1.0));
  const double var_v = variance(rho, duan_v(1.0));
  return {var_u + var_v, var_u - var_v, var_u * var_v};
}

CriterionReport su2_pt_witness(const DensityOperator& rho) {
  return pt_report(rho, su2_brackets(), WitnessKind::SU2PT, "SU2PT",
                   "[<ad a b bd> + <a ad bd b> + <ad^2 bd^2> + <a^2 b^2> - <ad bd + a b>^2] x "
                   "[<ad a b bd> + <a ad bd b> - <ad^2 bd^2> - <a^2 b^2> + <ad bd - a b>^2] >= "
                   "|<ad a - bd b>|^2; second square is of an anti-Hermitian mean (<= 0)");
}

CriterionReport su11_pt_witness(const DensityOperator& rho, Su11Mode mode) {
  if (mode == Su11Mode::ladder) {
    return pt_report(rho, su11_brackets(), WitnessKind::SU11PT, "SU11PT(ladder)",
                     "[<ad a bd b> + <a ad b bd> + <ad^2 b^2> + <a^2 bd^2> - <ad b + a bd>^2] x "
                     "[<ad a bd b> + <a ad b bd> - <ad^2 b^2> - <a^2 bd^2> + <ad b - a bd>^2] >= "
                     "|<ad a + b bd>|^2; on alpha|1,0> + beta|0,1> lhs - rhs = -8 (|a* b|^2 - "
                     "2 Re(a* b)^2 Im(a* b)^2)");
  }
  const QuadratureOps q = quadrature_ops();
  const auto E = [&](const P& f) { return expectation_poly(rho, f); };
  const auto V = [&](const P& f) { return variance(rho, f); };
  const double first =
      real_checked(V(q.xa_xb) + V(q.pa_pb) + E(q.xa_pa_pb_xb) + E(q.pa_xa_xb_pb) -
                       2.0 * E(q.xa_xb) * E(q.pa_pb),
                   "SU11PT(quadrature)");
  const double second =
      real_checked(V(q.xa_pb) + V(q.pa_xb) - E(q.xa_pa_xb_pb) - E(q.pa_xa_pb_xb) +
                       2.0 * E(q.xa_pb) * E(q.pa_xb),
                   "SU11PT(quadrature)");
  const double rhs = 0.25 * std::norm(E(q.xa2) + E(q.pa2) + E(q.xb2) + E(q.pb2));
  return inequality_report(
      WitnessKind::SU11PT, "SU11PT(quadrature)", {{"bracket1", first}, {"bracket2", second}},
      first * second, rhs,
      "[D2(xa xb) + D2(pa pb) + <xa pa pb xb> + <pa xa xb pb> - 2<xa xb><pa pb>] x "
      "[D2(xa pb) + D2(pa xb) - <xa pa xb pb> - <pa xa pb xb> + 2<xa pb><pa xb>] >= "
      "|<xa^2> + <pa^2> + <xb^2> + <pb^2>|^2 / 4; equal to the ladder form term by term");
}

CriterionReport ppt_witness(const DensityOperator& rho) {
  const std::vector<double> ev = hermitian_eigenvalues(partial_transpose_b(rho.as_operator()));
  double negativity = 0.0;
  for (double v : ev) {
    if (v < 0.0) negativity -= v;
  }
  CriterionReport r;
  r.kind = WitnessKind::PPT;
  r.name = "PPT";
  r.quantities = {{"min_eigenvalue", ev.front()},
                  {"max_eigenvalue", ev.back()},
                  {"negativity", negativity}};
  r.entangled_detected = ev.front() < -tol::psd;
  r.separable_bound_holds = !r.entangled_detected;
  r.conventions = "partial transpose on mode b: <na,nb|rho^PT|na',nb'> = <na,nb'|rho|na',nb>; "
                  "negativity = sum of |negative eigenvalues|";
  return r;
}

BellClosedForms bell_closed_forms(Complex alpha, Complex beta, double m) {
  const double w = std::norm(alpha) + std::norm(beta);
  if (std::abs(w - 1.0) > tol::norm) {
    throw PreconditionError("bell_closed_forms: |alpha|^2 + |beta|^2 = " + fmt(w) +
                            ", expected 1");
  }
  if (m == 0.0 || !std::isfinite(m)) {
    throw PreconditionError("bell_closed_forms: m must be finite and nonzero");
  }
  const double m2 = m * m;
  const double re = (alpha * std::conj(beta)).real();
  const Complex z = std::conj(alpha) * beta;
  const double zr = z.real();
  const double zi = z.imag();
  BellClosedForms out;
  out.M_closed = m2 + 1.0 / m2 + 2.0 * (std::norm(alpha) * m2 + std::norm(beta) / m2);
  out.Mx_closed = 4.0 - 4.0 * re * re;
  out.su11_reduced = std::norm(z) - 2.0 * zr * zr * zi * zi;
  const double cross = std::abs(alpha) * std::abs(beta);
  out.ppt_spectrum = {-cross, std::norm(alpha), std::norm(beta), cross};
  std::sort(out.ppt_spectrum.begin(), out.ppt_spectrum.end());
  return out;
}

std::vector<BuiltinOperator> builtin_operators(double m) {
  if (m == 0.0 || !std::isfinite(m)) {
    throw PreconditionError("builtin_operators: m must be finite and nonzero");
  }
  const P a = P::a(), ad = P::ad(), b = P::b(), bd = P::bd();
  const P one = P::scalar(1.0);
  const Complex half = Complex(1.0) / Complex(2.0);
  const Complex half_i = Complex(1.0) / Complex(0.0, 2.0);
  const PtBrackets s2 = su2_brackets();
  const PtBrackets s11 = su11_brackets();
  const QuadratureOps q = quadrature_ops();

  std::vector<BuiltinOperator> out = {
      {"mancini_u", "xa + xb", duan_u(1.0)},
      {"mancini_v", "pa - pb", duan_v(1.0)},
      {"duan_u", fmt(std::abs(m)) + "*xa + " + fmt(1.0 / m) + "*xb", duan_u(m)},
      {"duan_v", fmt(std::abs(m)) + "*pa - " + fmt(1.0 / m) + "*pb", duan_v(m)},
      {"S_x", "(ad*b + a*bd)/2", (ad * b + a * bd) * half},
      {"S_y", "(ad*b - a*bd)/(2*i)", (ad * b - a * bd) * half_i},
      {"S_z", "(ad*a - bd*b)/2", (ad * a - bd * b) * half},
      {"K_x", "(ad*bd + a*b)/2", (ad * bd + a * b) * half},
      {"K_y", "(ad*bd - a*b)/(2*i)", (ad * bd - a * b) * half_i},
      {"K_z", "(ad*a + bd*b + 1)/2", (ad * a + bd * b + one) * half},
      {"su2_sum_terms", "ad*a*b*bd + a*ad*bd*b + ad^2*bd^2 + a^2*b^2", s2.sum_terms},
      {"su2_herm", "ad*bd + a*b", s2.herm},
      {"su2_diff_terms", "ad*a*b*bd + a*ad*bd*b - ad^2*bd^2 - a^2*b^2", s2.diff_terms},
      {"su2_anti", "ad*bd - a*b", s2.anti},
      {"su2_rhs", "ad*a - bd*b", s2.rhs},
      {"su11_sum_terms", "ad*a*bd*b + a*ad*b*bd + ad^2*b^2 + a^2*bd^2", s11.sum_terms},
      {"su11_herm", "ad*b + a*bd", s11.herm},
      {"su11_diff_terms", "ad*a*bd*b + a*ad*b*bd - ad^2*b^2 - a^2*bd^2", s11.diff_terms},
      {"su11_anti", "ad*b - a*bd", s11.anti},
      {"su11_rhs", "ad*a + b*bd", s11.rhs},
      {"xa_xb", "xa*xb", q.xa_xb},
      {"pa_pb", "pa*pb", q.pa_pb},
      {"xa_pa_pb_xb", "xa*pa*pb*xb", q.xa_pa_pb_xb},
      {"pa_xa_xb_pb", "pa*xa*xb*pb", q.pa_xa_xb_pb},
      {"xa_pb", "xa*pb", q.xa_pb},
      {"pa_xb", "pa*xb", q.pa_xb},
      {"xa_pa_xb_pb", "xa*pa*xb*pb", q.xa_pa_xb_pb},
      {"pa_xa_pb_xb", "pa*xa*pb*xb", q.pa_xa_pb_xb},
      {"quadrature_energy", "xa^2 + pa^2 + xb^2 + pb^2", q.xa2 + q.pa2 + q.xb2 + q.pb2},
  };
  return out;
}

std::vector<BuiltinQuery> builtin_queries() {
  return {
      {"mancini", "Var[xa + xb] * Var[pa - pb] >= 1"},
      {"duan_m1", "Var[xa + xb] + Var[pa - pb] >= 2"},
      {"su2_pt",
       "(E[ad*a*b*bd + a*ad*bd*b + ad^2*bd^2 + a^2*b^2] - E[ad*bd + a*b]*E[ad*bd + a*b])"
       " * (E[ad*a*b*bd + a*ad*bd*b - ad^2*bd^2 - a^2*b^2] + E[ad*bd - a*b]*E[ad*bd - a*b])"
       " >= abs2(E[ad*a - bd*b])"},
      {"su11_pt_ladder",
       "(E[ad*a*bd*b + a*ad*b*bd + ad^2*b^2 + a^2*bd^2] - E[ad*b + a*bd]*E[ad*b + a*bd])"
       " * (E[ad*a*bd*b + a*ad*b*bd - ad^2*b^2 - a^2*bd^2] + E[ad*b - a*bd]*E[ad*b - a*bd])"
       " >= abs2(E[ad*a + b*bd])"},
      {"su11_pt_quadrature",
       "(Var[xa*xb] + Var[pa*pb] + E[xa*pa*pb*xb] + E[pa*xa*xb*pb] - 2*E[xa*xb]*E[pa*pb])"
       " * (Var[xa*pb] + Var[pa*xb] - E[xa*pa*xb*pb] - E[pa*xa*pb*xb] + 2*E[xa*pb]*E[pa*xb])"
       " >= abs2(E[xa^2] + E[pa^2] + E[xb^2] + E[pb^2]) / 4"},
  };
}

}  // namespace cvsep
