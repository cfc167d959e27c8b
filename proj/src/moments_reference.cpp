#include "cvsep/moments_reference.hpp"

namespace cvsep::reference {

Matrix single_mode_word(std::size_t d, std::uint32_t create, std::uint32_t annihilate) {
  const Matrix lower = lowering_matrix(d);
  const Matrix raise = lower.adjoint();
  const auto n = static_cast<Eigen::Index>(d);
  Matrix out = Matrix::Identity(n, n);
  for (std::uint32_t k = 0; k < create; ++k) out = out * raise;
  for (std::uint32_t k = 0; k < annihilate; ++k) out = out * lower;
  return out;
}

JointOperator monomial_matrix(const Cutoff& c, const Monomial& mono) {
  return embed(single_mode_word(c.d_a, mono.m, mono.n), single_mode_word(c.d_b, mono.p, mono.q));
}

JointOperator poly_matrix(const Cutoff& c, const OperatorPoly& f) {
  const auto n = static_cast<Eigen::Index>(c.dim());
  Matrix out = Matrix::Zero(n, n);
  for (const auto& [mono, coef] : f.terms()) out += coef * monomial_matrix(c, mono).matrix();
  return {c, std::move(out)};
}

Complex moment_dense(const DensityOperator& rho, const Monomial& mono) {
  check_power_guard(rho.cutoff(), OperatorPoly::term(mono));
  return expectation(rho, monomial_matrix(rho.cutoff(), mono));
}

Complex expectation_poly_dense(const DensityOperator& rho, const OperatorPoly& f) {
  check_power_guard(rho.cutoff(), f);
  return expectation(rho, poly_matrix(rho.cutoff(), f));
}

}  // namespace cvsep::reference
