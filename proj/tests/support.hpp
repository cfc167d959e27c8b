#pragma once

// Shared generators and brute-force oracles for the test suites. Nothing in
// here goes through the normal-ordering code: operator words are multiplied
// as dense truncated ladder matrices in written order.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "cvsep/fock.hpp"
#include "cvsep/moments.hpp"

namespace cvsep::testing {

enum class Sym { a, ad, b, bd };

using Word = std::vector<Sym>;

inline Matrix single_mode(std::size_t d, bool create) {
  const Matrix l = lowering_matrix(d);
  return create ? Matrix(l.adjoint()) : l;
}

// Dense matrix of a word, multiplied left to right without reordering.
inline Matrix dense_word(const Cutoff& c, const Word& w) {
  const auto n = static_cast<Eigen::Index>(c.dim());
  const auto id_a = Matrix::Identity(static_cast<Eigen::Index>(c.d_a), static_cast<Eigen::Index>(c.d_a));
  const auto id_b = Matrix::Identity(static_cast<Eigen::Index>(c.d_b), static_cast<Eigen::Index>(c.d_b));
  Matrix out = Matrix::Identity(n, n);
  for (Sym s : w) {
    switch (s) {
      case Sym::a: out = out * embed(single_mode(c.d_a, false), id_b).matrix(); break;
      case Sym::ad: out = out * embed(single_mode(c.d_a, true), id_b).matrix(); break;
      case Sym::b: out = out * embed(id_a, single_mode(c.d_b, false)).matrix(); break;
      case Sym::bd: out = out * embed(id_a, single_mode(c.d_b, true)).matrix(); break;
    }
  }
  return out;
}

// Dense matrix of a normal-ordered polynomial, each monomial expanded into
// its word ad^m a^n bd^p b^q and multiplied out.
inline Matrix dense_poly(const Cutoff& c, const OperatorPoly& f) {
  const auto n = static_cast<Eigen::Index>(c.dim());
  Matrix out = Matrix::Zero(n, n);
  for (const auto& [mono, coef] : f.terms()) {
    Word w;
    w.insert(w.end(), mono.m, Sym::ad);
    w.insert(w.end(), mono.n, Sym::a);
    w.insert(w.end(), mono.p, Sym::bd);
    w.insert(w.end(), mono.q, Sym::b);
    out += coef * dense_word(c, w);
  }
  return out;
}

inline OperatorPoly word_poly(const Word& w) {
  OperatorPoly out = OperatorPoly::scalar(1.0);
  for (Sym s : w) {
    switch (s) {
      case Sym::a: out = poly_multiply(out, OperatorPoly::a()); break;
      case Sym::ad: out = poly_multiply(out, OperatorPoly::ad()); break;
      case Sym::b: out = poly_multiply(out, OperatorPoly::b()); break;
      case Sym::bd: out = poly_multiply(out, OperatorPoly::bd()); break;
    }
  }
  return out;
}

inline Complex trace_product(const Matrix& rho, const Matrix& op) { return (rho * op).trace(); }

inline Complex random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  return {g(rng), g(rng)};
}

// Mixed state G G^dagger / tr with G a (dim x rank) complex Gaussian matrix.
inline DensityOperator random_density(const Cutoff& c, std::mt19937_64& rng, int rank = 0) {
  const auto n = static_cast<Eigen::Index>(c.dim());
  const Eigen::Index k = rank > 0 ? rank : n;
  Matrix g(n, k);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < k; ++j) g(i, j) = random_complex(rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return {c, rho};
}

inline Matrix random_hermitian(const Cutoff& c, std::mt19937_64& rng) {
  const auto n = static_cast<Eigen::Index>(c.dim());
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = random_complex(rng);
  return 0.5 * (m + m.adjoint());
}

inline Matrix random_matrix(const Cutoff& c, std::mt19937_64& rng) {
  const auto n = static_cast<Eigen::Index>(c.dim());
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = random_complex(rng);
  return m;
}

// Random normal-ordered polynomial with total degree <= max_degree.
inline OperatorPoly random_poly(std::mt19937_64& rng, std::uint32_t max_degree = 4, int terms = 5) {
  std::uniform_int_distribution<std::uint32_t> pw(0, max_degree);
  OperatorPoly out;
  for (int t = 0; t < terms; ++t) {
    Monomial mono;
    std::uint32_t budget = pw(rng);
    std::uint32_t* slots[] = {&mono.m, &mono.n, &mono.p, &mono.q};
    while (budget > 0) {
      *slots[std::uniform_int_distribution<int>(0, 3)(rng)] += 1;
      --budget;
    }
    out.accumulate(mono, random_complex(rng));
  }
  return out;
}

inline Word random_word(std::mt19937_64& rng, int length) {
  Word w;
  for (int k = 0; k < length; ++k) w.push_back(static_cast<Sym>(std::uniform_int_distribution<int>(0, 3)(rng)));
  return w;
}

// Random (alpha, beta) with |alpha|^2 + |beta|^2 = 1.
inline std::pair<Complex, Complex> random_bell_pair(std::mt19937_64& rng) {
  Complex a = random_complex(rng), b = random_complex(rng);
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  return {a / n, b / n};
}

inline double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace cvsep::testing
