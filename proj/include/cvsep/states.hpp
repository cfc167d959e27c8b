#pragma once

// Constructors for the test states: the Bell-type superposition of one
// photon in either mode, two-mode squeezed vacuum (plus its photon-subtracted
// variant) and product coherent states.

#include "cvsep/fock.hpp"

namespace cvsep {

inline constexpr double default_trunc_tol = 1e-8;

// alpha|1,0> + beta|0,1>, |alpha|^2 + |beta|^2 = 1.
struct BellXPParams {
  Complex alpha;
  Complex beta;
};

// Amplitudes proportional to (e^{i phi} tanh r)^n on |n,n>. With phi = pi
// the pair u = x_a + x_b, v = p_a - p_b is the squeezed one.
struct TmsvParams {
  double r = 0.0;
  double phi = 0.0;
};

struct TruncationReport {
  double kept_weight = 1.0;  // squared norm retained before renormalizing
  bool renormalized = false;
};

template <typename State>
struct Truncated {
  State state;
  TruncationReport report;
};

PureState bell_xp_state(const BellXPParams& p, Cutoff c);

Truncated<PureState> two_mode_squeezed_vacuum(const TmsvParams& p, Cutoff c,
                                              double trunc_tol = default_trunc_tol);

// a b applied to the squeezed vacuum, renormalized. Requires r > 0.
Truncated<PureState> photon_subtracted_tmsv(const TmsvParams& p, Cutoff c,
                                            double trunc_tol = default_trunc_tol);

// |alpha_a> (x) |alpha_b>. Cutoff guidance: d >= |alpha|^2 + 6|alpha| + 10
// per mode; only trunc_tol is enforced.
Truncated<PureState> product_coherent(Complex alpha_a, Complex alpha_b, Cutoff c,
                                      double trunc_tol = default_trunc_tol);

DensityOperator density_from_pure(const PureState& psi);

}  // namespace cvsep
