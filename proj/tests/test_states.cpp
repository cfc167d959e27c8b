#include <doctest.h>

#include <cmath>
#include <random>

#include "cvsep/criteria.hpp"
#include "cvsep/errors.hpp"
#include "cvsep/moments.hpp"
#include "cvsep/states.hpp"
#include "support.hpp"

using namespace cvsep;
using namespace cvsep::testing;

namespace {

Complex amp(const PureState& psi, std::size_t na, std::size_t nb) {
  return psi.amplitudes()(static_cast<Eigen::Index>(psi.cutoff().index(na, nb)));
}

// Squeezed-vacuum amplitudes before renormalization, straight from the
// definition, for cross-checks.
Vector raw_tmsv(double r, double phi, const Cutoff& c) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(c.dim()));
  const double t = std::tanh(r);
  for (std::size_t n = 0; n < std::min(c.d_a, c.d_b); ++n)
    v(static_cast<Eigen::Index>(c.index(n, n))) =
        std::polar(std::pow(t, static_cast<double>(n)) / std::cosh(r), phi * static_cast<double>(n));
  return v;
}

}  // namespace

TEST_CASE("bell_xp_state") {
  const Cutoff c{2, 2};
  {
    const PureState psi = bell_xp_state({1.0, 0.0}, c);
    CHECK(amp(psi, 1, 0) == Complex(1.0));
    CHECK(psi.amplitudes().norm() == 1.0);
  }
  {
    const double s = 1.0 / std::sqrt(2.0);
    const PureState psi = bell_xp_state({s, s}, c);
    CHECK(amp(psi, 1, 0) == Complex(s));
    CHECK(amp(psi, 0, 1) == Complex(s));
  }
  {
    const PureState psi = bell_xp_state({0.6, Complex(0.0, 0.8)}, Cutoff{3, 3});
    CHECK(amp(psi, 1, 0) == Complex(0.6));
    CHECK(amp(psi, 0, 1) == Complex(0.0, 0.8));
  }
  CHECK_THROWS_AS(bell_xp_state({1.0, 1.0}, c), PreconditionError);
  CHECK_THROWS_AS(bell_xp_state({0.6, 0.8000001}, c), PreconditionError);
}

TEST_CASE("bell_xp_state is supported on {(1,0),(0,1)} in every cutoff") {
  std::mt19937_64 rng(21);
  for (const Cutoff c : {Cutoff{2, 2}, Cutoff{3, 5}, Cutoff{6, 2}, Cutoff{7, 7}}) {
    const auto [alpha, beta] = random_bell_pair(rng);
    const PureState psi = bell_xp_state({alpha, beta}, c);
    for (std::size_t na = 0; na < c.d_a; ++na) {
      for (std::size_t nb = 0; nb < c.d_b; ++nb) {
        const bool support = (na == 1 && nb == 0) || (na == 0 && nb == 1);
        if (!support) CHECK(amp(psi, na, nb) == Complex(0.0));
      }
    }
    CHECK(amp(psi, 1, 0) == alpha);
    CHECK(amp(psi, 0, 1) == beta);
  }
}

TEST_CASE("global phase leaves the density operator unchanged") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const auto [alpha, beta] = random_bell_pair(rng);
    const Complex ph = std::polar(1.0, std::uniform_real_distribution<double>(0, 6.3)(rng));
    const DensityOperator r1 = density_from_pure(bell_xp_state({alpha, beta}, Cutoff{3, 3}));
    const DensityOperator r2 = density_from_pure(bell_xp_state({ph * alpha, ph * beta}, Cutoff{3, 3}));
    CHECK(max_abs(r1.matrix() - r2.matrix()) < 1e-12);
  }
}

TEST_CASE("density_from_pure") {
  const Cutoff c{2, 3};
  Vector v = Vector::Zero(6);
  v(0) = 1.0;
  const DensityOperator rho = density_from_pure(PureState(c, v));
  CHECK(rho.matrix()(0, 0) == Complex(1.0));
  CHECK(max_abs(rho.matrix()) == 1.0);
  CHECK(std::abs(rho.matrix().sum() - 1.0) == 0.0);

  const double s = 1.0 / std::sqrt(2.0);
  const DensityOperator bell = density_from_pure(bell_xp_state({s, s}, Cutoff{2, 2}));
  const auto k10 = static_cast<Eigen::Index>(Cutoff{2, 2}.index(1, 0));
  const auto k01 = static_cast<Eigen::Index>(Cutoff{2, 2}.index(0, 1));
  CHECK(std::abs(bell.matrix()(k10, k10) - 0.5) < 1e-15);
  CHECK(std::abs(bell.matrix()(k01, k01) - 0.5) < 1e-15);
  CHECK(std::abs(bell.matrix()(k10, k01) - 0.5) < 1e-15);
  CHECK(std::abs(bell.matrix()(k01, k10) - 0.5) < 1e-15);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    Vector w(6);
    for (auto& x : w) x = random_complex(rng);
    w.normalize();
    CHECK(std::abs(density_from_pure(PureState(c, w)).matrix().trace() - 1.0) < 1e-14);
  }
  CHECK_THROWS_AS(PureState(c, 2.0 * v), PreconditionError);
}

TEST_CASE("two_mode_squeezed_vacuum") {
  {
    const auto t = two_mode_squeezed_vacuum({0.0, 0.0}, Cutoff{4, 4});
    CHECK(amp(t.state, 0, 0) == Complex(1.0));
    CHECK(t.report.kept_weight == 1.0);
    CHECK_FALSE(t.report.renormalized);
  }
  {
    const auto t = two_mode_squeezed_vacuum({0.5, M_PI}, Cutoff{12, 12});
    const double tail = std::pow(std::tanh(0.5), 24);  // sum over n >= 12 of (1 - t^2) t^{2n}
    CHECK(t.report.kept_weight >= 1.0 - 1e-8);
    CHECK(std::abs(t.report.kept_weight - (1.0 - tail)) < 1e-15);
    CHECK(t.report.renormalized);
    CHECK(std::abs(t.state.amplitudes().norm() - 1.0) < 1e-14);
  }
  CHECK_THROWS_AS(two_mode_squeezed_vacuum({0.5, 0.0}, Cutoff{5, 5}), TruncationError);
  CHECK_THROWS_AS(two_mode_squeezed_vacuum({-0.1, 0.0}, Cutoff{5, 5}), PreconditionError);
  // A looser tolerance admits the same cutoff.
  CHECK_NOTHROW(two_mode_squeezed_vacuum({0.5, 0.0}, Cutoff{5, 5}, 1e-2));
}

TEST_CASE("squeezed vacuum amplitudes decay geometrically") {
  for (double r : {0.1, 0.5, 0.9}) {
    const Cutoff c{14, 14};
    const auto t = two_mode_squeezed_vacuum({r, 1.3}, c, 1e-2);
    for (std::size_t n = 0; n + 1 < 14; ++n) {
      const double ratio = std::abs(amp(t.state, n + 1, n + 1)) / std::abs(amp(t.state, n, n));
      CHECK(std::abs(ratio - std::tanh(r)) < 1e-13);
      const double dphase = std::arg(amp(t.state, n + 1, n + 1) / amp(t.state, n, n));
      CHECK(std::abs(std::remainder(dphase - 1.3, 2 * M_PI)) < 1e-12);
    }
    // Off-diagonal (n_a != n_b) entries vanish.
    CHECK(amp(t.state, 1, 0) == Complex(0.0));
    CHECK(amp(t.state, 2, 5) == Complex(0.0));

    // kept_weight equals the squared norm before renormalization.
    const Vector raw = raw_tmsv(r, 1.3, c);
    CHECK(std::abs(t.report.kept_weight - raw.squaredNorm()) < 1e-14);
    CHECK(max_abs(t.state.amplitudes() - raw / raw.norm()) < 1e-14);
  }
}

TEST_CASE("squeezed vacuum phase pi squeezes u = xa + xb and v = pa - pb") {
  // Dense quadrature matrices at cutoff 13; the state lives on levels <= 11
  // so u^2 acting on it is exact.
  const Cutoff big{13, 13};
  const auto t = two_mode_squeezed_vacuum({0.5, M_PI}, Cutoff{12, 12});
  Vector padded = Vector::Zero(static_cast<Eigen::Index>(big.dim()));
  for (std::size_t n = 0; n < 12; ++n)
    padded(static_cast<Eigen::Index>(big.index(n, n))) = amp(t.state, n, n);
  const Matrix rho = padded * padded.adjoint();
  const Matrix l = lowering_matrix(13);
  const Matrix id = Matrix::Identity(13, 13);
  const Matrix x = (l + l.adjoint()) / std::sqrt(2.0);
  const Matrix p = (l - l.adjoint()) / Complex(0.0, std::sqrt(2.0));
  const Matrix u = embed(x, id).matrix() + embed(id, x).matrix();
  const Matrix v = embed(p, id).matrix() - embed(id, p).matrix();
  const auto var = [&](const Matrix& o) {
    const Complex m1 = trace_product(rho, o);
    return (trace_product(rho, o * o) - m1 * m1).real();
  };
  const double oracle = var(u) + var(v);
  CHECK(std::abs(oracle - 2.0 * std::exp(-1.0)) < 1e-6);

  const DensityOperator rho12 = density_from_pure(t.state);
  const double M = duan_witness(rho12, 1.0).at("M");
  CHECK(std::abs(M - oracle) < 1e-6);
  CHECK(std::abs(M - 2.0 * std::exp(-1.0)) < 1e-6);
  CHECK(std::abs(var(u) - std::exp(-1.0)) < 1e-6);

  // phi = 0 squeezes the other pair instead.
  const auto t0 = two_mode_squeezed_vacuum({0.5, 0.0}, Cutoff{12, 12});
  CHECK(duan_witness(density_from_pure(t0.state), 1.0).at("M") > 2.0);
}

TEST_CASE("photon_subtracted_tmsv") {
  CHECK_THROWS_AS(photon_subtracted_tmsv({0.0, 0.0}, Cutoff{6, 6}), PreconditionError);
  {
    const auto ps = photon_subtracted_tmsv({0.3, 0.0}, Cutoff{10, 10});
    CHECK(std::abs(ps.state.amplitudes().norm() - 1.0) < 1e-10);
  }

  // Oracle: squeezed vacuum on a cutoff one level larger, ab applied as a
  // dense matrix, restricted back, compared after normalization.
  for (double phi : {M_PI, 0.7}) {
    const double r = 0.5;
    const Cutoff c{16, 16};
    const Cutoff big{17, 17};
    const Vector raw = raw_tmsv(r, phi, big);
    const Vector sub = embed(lowering_matrix(17), lowering_matrix(17)).matrix() * raw;
    Vector restricted = Vector::Zero(static_cast<Eigen::Index>(c.dim()));
    for (std::size_t na = 0; na < 16; ++na)
      for (std::size_t nb = 0; nb < 16; ++nb)
        restricted(static_cast<Eigen::Index>(c.index(na, nb))) =
            sub(static_cast<Eigen::Index>(big.index(na, nb)));
    const auto ps = photon_subtracted_tmsv({r, phi}, c);
    const Vector expect = restricted / restricted.norm();
    CHECK(max_abs(ps.state.amplitudes() - expect) < 1e-12);
    CHECK(ps.report.kept_weight >= 1.0 - 1e-8);
    CHECK(ps.report.kept_weight < 1.0);
  }
  CHECK_THROWS_AS(photon_subtracted_tmsv({0.5, M_PI}, Cutoff{8, 8}), TruncationError);
}

TEST_CASE("product_coherent") {
  {
    const auto v = product_coherent(0.0, 0.0, Cutoff{3, 3});
    CHECK(amp(v.state, 0, 0) == Complex(1.0));
    CHECK(v.report.kept_weight == 1.0);
  }
  {
    const auto c = product_coherent(1.0, 0.0, Cutoff{16, 2});
    CHECK(c.report.kept_weight >= 1.0 - 1e-8);
    // Poisson tail of mean 1 beyond n = 15.
    double tail = 0.0, term = std::exp(-1.0);
    for (int n = 0; n < 60; ++n) {
      if (n >= 16) tail += term;
      term /= (n + 1);
    }
    CHECK(std::abs((1.0 - c.report.kept_weight) - tail) < 1e-15);
  }
  {
    const Complex aa(0.4, -0.3), ab(-0.2, 0.5);
    const Cutoff cut{14, 14};
    const auto c = product_coherent(aa, ab, cut);
    double fact = 1.0;
    std::vector<double> sqrt_fact;
    for (int n = 0; n < 14; ++n) {
      if (n > 0) fact *= n;
      sqrt_fact.push_back(std::sqrt(fact));
    }
    Vector raw(static_cast<Eigen::Index>(cut.dim()));
    for (std::size_t na = 0; na < 14; ++na)
      for (std::size_t nb = 0; nb < 14; ++nb)
        raw(static_cast<Eigen::Index>(cut.index(na, nb))) =
            std::exp(-(std::norm(aa) + std::norm(ab)) / 2.0) * std::pow(aa, static_cast<int>(na)) /
            sqrt_fact[na] * std::pow(ab, static_cast<int>(nb)) / sqrt_fact[nb];
    CHECK(std::abs(c.report.kept_weight - raw.squaredNorm()) < 1e-14);
    CHECK(max_abs(c.state.amplitudes() - raw / raw.norm()) < 1e-14);
  }
  CHECK_THROWS_AS(product_coherent(2.0, 0.0, Cutoff{4, 4}), TruncationError);
}
