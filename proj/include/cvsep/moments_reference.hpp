#pragma once

// Serial dense-matrix route for moments: every word is materialized as a
// joint matrix built from truncated ladder matrices and traced against rho.
// Kept as the reference the direct kernels in moments.hpp are tested and
// benchmarked against.

#include "cvsep/fock.hpp"
#include "cvsep/moments.hpp"

namespace cvsep::reference {

// (a^dagger)^create a^annihilate on a single mode of dimension d.
Matrix single_mode_word(std::size_t d, std::uint32_t create, std::uint32_t annihilate);

JointOperator monomial_matrix(const Cutoff& c, const Monomial& mono);
JointOperator poly_matrix(const Cutoff& c, const OperatorPoly& f);

Complex moment_dense(const DensityOperator& rho, const Monomial& mono);
Complex expectation_poly_dense(const DensityOperator& rho, const OperatorPoly& f);

}  // namespace cvsep::reference
