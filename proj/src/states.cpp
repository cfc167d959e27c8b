#include "cvsep/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cvsep/errors.hpp"

namespace cvsep {

namespace {

// Keeps the given (already normalized in infinite dimension) amplitudes,
// enforcing the truncation tolerance before renormalizing.
Truncated<PureState> finish(Cutoff c, Vector amps, double trunc_tol, const char* what) {
  const double kept = amps.squaredNorm();
  if (kept < 1.0 - trunc_tol) {
    throw TruncationError(std::string(what) + ": cutoff " + std::to_string(c.d_a) + "x" +
                          std::to_string(c.d_b) + " keeps weight " + std::to_string(kept) +
                          ", below 1 - " + std::to_string(trunc_tol));
  }
  TruncationReport report{kept, false};
  if (kept != 1.0) {
    amps /= std::sqrt(kept);
    report.renormalized = true;
  }
  return {PureState(c, std::move(amps)), report};
}

Vector coherent_amplitudes(Complex alpha, std::size_t d) {
  Vector out(static_cast<Eigen::Index>(d));
  Complex c = std::exp(-0.5 * std::norm(alpha));
  for (std::size_t n = 0; n < d; ++n) {
    if (n > 0) c *= alpha / std::sqrt(static_cast<double>(n));
    out(static_cast<Eigen::Index>(n)) = c;
  }
  return out;
}

}  // namespace

PureState bell_xp_state(const BellXPParams& p, Cutoff c) {
  const double w = std::norm(p.alpha) + std::norm(p.beta);
  if (std::abs(w - 1.0) > tol::norm) {
    throw PreconditionError("bell_xp_state: |alpha|^2 + |beta|^2 = " + std::to_string(w) +
                            ", expected 1");
  }
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(c.dim()));
  amps(static_cast<Eigen::Index>(c.index(1, 0))) = p.alpha;
  amps(static_cast<Eigen::Index>(c.index(0, 1))) = p.beta;
  return {c, std::move(amps)};
}

Truncated<PureState> two_mode_squeezed_vacuum(const TmsvParams& p, Cutoff c, double trunc_tol) {
  if (!(p.r >= 0.0)) throw PreconditionError("two_mode_squeezed_vacuum: r must be >= 0");
  const double t = std::tanh(p.r);
  const double norm0 = 1.0 / std::cosh(p.r);
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(c.dim()));
  const std::size_t levels = std::min(c.d_a, c.d_b);
  for (std::size_t n = 0; n < levels; ++n) {
    const double k = static_cast<double>(n);
    amps(static_cast<Eigen::Index>(c.index(n, n))) =
        norm0 * std::polar(std::pow(t, k), k * p.phi);
  }
  return finish(c, std::move(amps), trunc_tol, "two_mode_squeezed_vacuum");
}

Truncated<PureState> photon_subtracted_tmsv(const TmsvParams& p, Cutoff c, double trunc_tol) {
  if (!(p.r > 0.0)) {
    throw PreconditionError("photon_subtracted_tmsv: r must be > 0 (ab|0,0> = 0)");
  }
  // a b sum_n z^n |n,n> = sum_k (k+1) z^(k+1) |k,k>, z = e^{i phi} tanh r.
  // Infinite norm^2: sum_{n>=1} n^2 x^n = x(1+x)/(1-x)^3 with x = tanh^2 r.
  const double t = std::tanh(p.r);
  const double x = t * t;
  const double total = x * (1.0 + x) / std::pow(1.0 - x, 3);
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw PreconditionError("photon_subtracted_tmsv: degenerate state for r = " +
                            std::to_string(p.r));
  }
  const double scale = 1.0 / std::sqrt(total);
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(c.dim()));
  const std::size_t levels = std::min(c.d_a, c.d_b);
  for (std::size_t k = 0; k < levels; ++k) {
    const double n = static_cast<double>(k + 1);
    amps(static_cast<Eigen::Index>(c.index(k, k))) =
        scale * n * std::polar(std::pow(t, n), n * p.phi);
  }
  return finish(c, std::move(amps), trunc_tol, "photon_subtracted_tmsv");
}

Truncated<PureState> product_coherent(Complex alpha_a, Complex alpha_b, Cutoff c,
                                      double trunc_tol) {
  const Vector va = coherent_amplitudes(alpha_a, c.d_a);
  const Vector vb = coherent_amplitudes(alpha_b, c.d_b);
  Vector amps(static_cast<Eigen::Index>(c.dim()));
  for (std::size_t na = 0; na < c.d_a; ++na) {
    for (std::size_t nb = 0; nb < c.d_b; ++nb) {
      amps(static_cast<Eigen::Index>(c.index(na, nb))) =
          va(static_cast<Eigen::Index>(na)) * vb(static_cast<Eigen::Index>(nb));
    }
  }
  return finish(c, std::move(amps), trunc_tol, "product_coherent");
}

DensityOperator density_from_pure(const PureState& psi) {
  const Vector& v = psi.amplitudes();
  if (std::abs(v.norm() - 1.0) > tol::norm) {
    throw PreconditionError("density_from_pure: state is not normalized");
  }
  return {psi.cutoff(), v * v.adjoint()};
}

}  // namespace cvsep
