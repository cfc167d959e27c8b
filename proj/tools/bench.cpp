// Timing of the parallel kernels against their serial references:
//   - sweep grid: run_sweep (OpenMP) vs run_sweep_serial
//   - moments: direct kernel vs dense matrix trace
//
//   cvsep_bench [n_theta n_phi] [cutoff]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include <omp.h>

#include "cvsep/moments.hpp"
#include "cvsep/moments_reference.hpp"
#include "cvsep/states.hpp"
#include "cvsep/sweep.hpp"

namespace {

template <typename F>
double seconds(F&& f, int reps = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace cvsep;
  SweepSpec spec;
  spec.n_theta = argc > 2 ? std::atoi(argv[1]) : 41;
  spec.n_phi = argc > 2 ? std::atoi(argv[2]) : 32;
  const std::size_t d = argc > 3 ? static_cast<std::size_t>(std::atoi(argv[3])) : 10;

  std::printf("threads: %d\n", omp_get_max_threads());

  const Cutoff bell_cut{3, 3};
  std::vector<SweepRow> par, ser;
  const double t_ser = seconds([&] { ser = run_sweep_serial(spec, bell_cut); });
  const double t_par = seconds([&] { par = run_sweep(spec, bell_cut); });
  std::printf("sweep %dx%d  serial %.4fs  parallel %.4fs  speedup %.2f\n", spec.n_theta,
              spec.n_phi, t_ser, t_par, t_ser / t_par);

  const Cutoff c{d, d};
  const auto tmsv = two_mode_squeezed_vacuum({0.3, 0.0}, c, 1.0);
  const DensityOperator rho = density_from_pure(tmsv.state);
  const OperatorPoly f = poly_multiply(quadrature(Quadrature::xa) + quadrature(Quadrature::xb),
                                       quadrature(Quadrature::pa) - quadrature(Quadrature::pb));
  const OperatorPoly g = poly_multiply(f, f);
  Complex direct{}, dense{};
  const double t_direct = seconds([&] { direct = expectation_poly(rho, g); }, 50);
  const double t_dense = seconds([&] { dense = reference::expectation_poly_dense(rho, g); }, 5);
  std::printf("moments d=%zu  direct %.6fs  dense %.6fs  ratio %.1f  |diff| %.2e\n", d, t_direct,
              t_dense, t_dense / t_direct, std::abs(direct - dense));
  return 0;
}
