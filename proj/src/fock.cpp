#include "cvsep/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "cvsep/errors.hpp"

namespace cvsep {

namespace {

void check_square(const Cutoff& c, const Matrix& m, const char* what) {
  const auto n = static_cast<Eigen::Index>(c.dim());
  if (m.rows() != n || m.cols() != n) {
    throw ShapeError(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + ", cutoff requires " + std::to_string(n) + "x" +
                     std::to_string(n));
  }
}

Matrix transpose_b(const Cutoff& c, const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t na = 0; na < c.d_a; ++na) {
    for (std::size_t nb = 0; nb < c.d_b; ++nb) {
      const auto row = static_cast<Eigen::Index>(c.index(na, nb));
      for (std::size_t ma = 0; ma < c.d_a; ++ma) {
        for (std::size_t mb = 0; mb < c.d_b; ++mb) {
          out(row, static_cast<Eigen::Index>(c.index(ma, mb))) =
              m(static_cast<Eigen::Index>(c.index(na, mb)),
                static_cast<Eigen::Index>(c.index(ma, nb)));
        }
      }
    }
  }
  return out;
}

std::vector<double> spectrum(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw PreconditionError("hermitian_eigenvalues: eigensolver did not converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Cutoff::Cutoff(std::size_t da, std::size_t db) : d_a(da), d_b(db) {
  if (da < 2 || db < 2) {
    throw ShapeError("cutoff: each mode needs at least two levels, got " + std::to_string(da) +
                     "x" + std::to_string(db));
  }
}

JointOperator::JointOperator(Cutoff cutoff, Matrix entries)
    : cutoff_(cutoff), entries_(std::move(entries)) {
  check_square(cutoff_, entries_, "joint operator");
}

JointOperator JointOperator::identity(Cutoff cutoff) {
  const auto n = static_cast<Eigen::Index>(cutoff.dim());
  return {cutoff, Matrix::Identity(n, n)};
}

PureState::PureState(Cutoff cutoff, Vector amplitudes)
    : cutoff_(cutoff), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != static_cast<Eigen::Index>(cutoff_.dim())) {
    throw ShapeError("pure state: " + std::to_string(amplitudes_.size()) +
                     " amplitudes for a basis of size " + std::to_string(cutoff_.dim()));
  }
  const double n = amplitudes_.norm();
  if (std::abs(n - 1.0) > tol::norm) {
    throw PreconditionError("pure state: norm " + std::to_string(n) + " is not 1");
  }
}

DensityOperator::DensityOperator(Cutoff cutoff, Matrix entries)
    : cutoff_(cutoff), entries_(std::move(entries)) {
  check_square(cutoff_, entries_, "density operator");
  const double defect = hermiticity_defect(entries_);
  if (defect > tol::herm) {
    throw PreconditionError("density operator: not Hermitian (defect " + std::to_string(defect) +
                            ")");
  }
  const Complex tr = entries_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol::trace) {
    throw PreconditionError("density operator: trace " + std::to_string(tr.real()) + " is not 1");
  }
}

bool DensityOperator::is_positive() const { return spectrum(entries_).front() >= -tol::psd; }

Matrix lowering_matrix(std::size_t d) {
  if (d == 0) throw ShapeError("lowering_matrix: dimension must be positive");
  const auto n = static_cast<Eigen::Index>(d);
  Matrix out = Matrix::Zero(n, n);
  for (Eigen::Index k = 1; k < n; ++k) {
    out(k - 1, k) = std::sqrt(static_cast<double>(k));
  }
  return out;
}

JointOperator embed(const Matrix& op_a, const Matrix& op_b) {
  if (op_a.rows() != op_a.cols() || op_b.rows() != op_b.cols()) {
    throw ShapeError("embed: single-mode operators must be square");
  }
  const Cutoff c(static_cast<std::size_t>(op_a.rows()), static_cast<std::size_t>(op_b.rows()));
  const Eigen::Index da = op_a.rows();
  const Eigen::Index db = op_b.rows();
  Matrix out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = op_a(i, j) * op_b;
    }
  }
  return {c, std::move(out)};
}

JointOperator partial_transpose_b(const JointOperator& op) {
  return {op.cutoff(), transpose_b(op.cutoff(), op.matrix())};
}

DensityOperator partial_transpose_b(const DensityOperator& rho) {
  return {rho.cutoff(), transpose_b(rho.cutoff(), rho.matrix())};
}

std::vector<double> hermitian_eigenvalues(const JointOperator& h) {
  const double defect = hermiticity_defect(h.matrix());
  if (defect > tol::herm) {
    throw PreconditionError("hermitian_eigenvalues: input not Hermitian (defect " +
                            std::to_string(defect) + ")");
  }
  return spectrum(h.matrix());
}

std::vector<double> hermitian_eigenvalues(const DensityOperator& rho) {
  return spectrum(rho.matrix());
}

Complex expectation(const DensityOperator& rho, const JointOperator& op) {
  if (!(rho.cutoff() == op.cutoff())) throw ShapeError("expectation: cutoff mismatch");
  // trace(A B) = sum_ij A_ij B_ji
  return rho.matrix().cwiseProduct(op.matrix().transpose()).sum();
}

double hermiticity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace cvsep
