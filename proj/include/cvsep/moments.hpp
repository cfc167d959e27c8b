#pragma once

// Normal-ordered polynomials in a^dagger, a, b^dagger, b and their
// evaluation against density operators.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "cvsep/fock.hpp"

namespace cvsep {

// The word a^dagger^m a^n b^dagger^p b^q.
struct Monomial {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::uint32_t p = 0;
  std::uint32_t q = 0;

  std::uint32_t degree() const noexcept { return m + n + p + q; }
  bool is_identity() const noexcept { return degree() == 0; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Canonical form: each monomial at most once, no zero coefficients.
// Products are normal ordered eagerly.
class OperatorPoly {
 public:
  using Terms = std::map<Monomial, Complex>;

  OperatorPoly() = default;
  OperatorPoly(std::initializer_list<std::pair<const Monomial, Complex>> terms);

  static OperatorPoly scalar(Complex c);
  static OperatorPoly term(Monomial mono, Complex c = 1.0);
  static OperatorPoly a() { return term({0, 1, 0, 0}); }
  static OperatorPoly ad() { return term({1, 0, 0, 0}); }
  static OperatorPoly b() { return term({0, 0, 0, 1}); }
  static OperatorPoly bd() { return term({0, 0, 1, 0}); }

  const Terms& terms() const noexcept { return terms_; }
  Complex coefficient(const Monomial& mono) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_scalar() const noexcept;
  std::uint32_t degree() const noexcept;

  OperatorPoly& operator+=(const OperatorPoly& rhs);
  OperatorPoly& operator-=(const OperatorPoly& rhs);
  OperatorPoly& operator*=(Complex c);
  OperatorPoly& operator*=(const OperatorPoly& rhs);
  OperatorPoly operator-() const;

  friend OperatorPoly operator+(OperatorPoly lhs, const OperatorPoly& rhs) { return lhs += rhs; }
  friend OperatorPoly operator-(OperatorPoly lhs, const OperatorPoly& rhs) { return lhs -= rhs; }
  friend OperatorPoly operator*(OperatorPoly lhs, Complex c) { return lhs *= c; }
  friend OperatorPoly operator*(Complex c, OperatorPoly rhs) { return rhs *= c; }
  friend OperatorPoly operator*(const OperatorPoly& lhs, const OperatorPoly& rhs);
  friend bool operator==(const OperatorPoly&, const OperatorPoly&) = default;

  // Adds c to the coefficient of mono, dropping it if the sum is zero.
  void accumulate(const Monomial& mono, Complex c);

 private:
  Terms terms_;
};

OperatorPoly poly_multiply(const OperatorPoly& f, const OperatorPoly& g);
OperatorPoly poly_adjoint(const OperatorPoly& f);

// b <-> b^dagger on every word: (m, n, p, q) -> (m, n, q, p).
OperatorPoly poly_partial_transpose_b(const OperatorPoly& f);

// Largest |coefficient difference| between f and its adjoint.
double hermiticity_defect(const OperatorPoly& f);

// x = (a + a^dagger)/sqrt(2), p = (a - a^dagger)/(i sqrt(2)), [x, p] = i.
enum class Quadrature { xa, pa, xb, pb };

OperatorPoly quadrature(Quadrature sym);
OperatorPoly quadrature_poly(std::initializer_list<std::pair<Quadrature, double>> combo);

// trace(rho * word). Rejects words with m + n >= d_a or p + q >= d_b.
Complex moment(const DensityOperator& rho, const Monomial& mono);
Complex expectation_poly(const DensityOperator& rho, const OperatorPoly& f);

// <f^2> - <f>^2 for Hermitian f, clamped at zero inside tol::psd.
double variance(const DensityOperator& rho, const OperatorPoly& f);

// Checks the moment power guard for every word of f.
void check_power_guard(const Cutoff& c, const OperatorPoly& f);

// Canonical text form, valid operator-language input:
// "(1 + 0*i)*ad*a + (0.5 + 0*i)*bd^2".
std::string to_string(const Monomial& mono);
std::string to_string(const OperatorPoly& f);

}  // namespace cvsep
