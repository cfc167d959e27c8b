#pragma once

// Dense complex linear algebra on a truncated two-mode number basis.
//
// Basis convention, shared by every module: the joint basis state
// |n_a, n_b> has index k = n_a * d_b + n_b.

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace cvsep {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

namespace tol {
inline constexpr double herm = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double norm = 1e-10;
inline constexpr double eig = 1e-10;
inline constexpr double psd = 1e-10;
}  // namespace tol

// Number-basis dimension per mode; levels 0..d-1 are kept.
struct Cutoff {
  std::size_t d_a = 2;
  std::size_t d_b = 2;

  Cutoff() = default;
  Cutoff(std::size_t da, std::size_t db);

  std::size_t dim() const noexcept { return d_a * d_b; }
  std::size_t index(std::size_t n_a, std::size_t n_b) const noexcept {
    return n_a * d_b + n_b;
  }

  friend bool operator==(const Cutoff&, const Cutoff&) = default;
};

// Square matrix on the joint truncated space.
class JointOperator {
 public:
  JointOperator(Cutoff cutoff, Matrix entries);

  static JointOperator identity(Cutoff cutoff);

  const Cutoff& cutoff() const noexcept { return cutoff_; }
  const Matrix& matrix() const noexcept { return entries_; }

 private:
  Cutoff cutoff_;
  Matrix entries_;
};

// Amplitudes over the joint basis, unit norm.
class PureState {
 public:
  PureState(Cutoff cutoff, Vector amplitudes);

  const Cutoff& cutoff() const noexcept { return cutoff_; }
  const Vector& amplitudes() const noexcept { return amplitudes_; }
  Complex amplitude(std::size_t n_a, std::size_t n_b) const {
    return amplitudes_(static_cast<Eigen::Index>(cutoff_.index(n_a, n_b)));
  }

 private:
  Cutoff cutoff_;
  Vector amplitudes_;
};

// Hermitian, unit-trace operator. Positivity is not enforced here because
// partial transposes share this type; see is_positive().
class DensityOperator {
 public:
  DensityOperator(Cutoff cutoff, Matrix entries);

  const Cutoff& cutoff() const noexcept { return cutoff_; }
  const Matrix& matrix() const noexcept { return entries_; }

  JointOperator as_operator() const { return {cutoff_, entries_}; }

  // Smallest eigenvalue >= -tol::psd.
  bool is_positive() const;

 private:
  Cutoff cutoff_;
  Matrix entries_;
};

// a|n> = sqrt(n)|n-1>, so entry (n-1, n) = sqrt(n).
Matrix lowering_matrix(std::size_t d);

// Kronecker product under the row-major (n_a, n_b) index convention.
JointOperator embed(const Matrix& op_a, const Matrix& op_b);

// <n_a, n_b| X^PT |n_a', n_b'> = <n_a, n_b'| X |n_a', n_b>.
JointOperator partial_transpose_b(const JointOperator& op);
DensityOperator partial_transpose_b(const DensityOperator& rho);

// Full ascending spectrum of a Hermitian operator.
std::vector<double> hermitian_eigenvalues(const JointOperator& h);
std::vector<double> hermitian_eigenvalues(const DensityOperator& rho);

// trace(rho * op)
Complex expectation(const DensityOperator& rho, const JointOperator& op);

// Largest entry of |m - m^dagger|.
double hermiticity_defect(const Matrix& m);

}  // namespace cvsep
