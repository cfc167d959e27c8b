#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "cvsep/dsl.hpp"
#include "cvsep/errors.hpp"

namespace cvsep::dsl {

namespace {

Complex literal_value(const Expr& e) {
  if (e.text == "i") return {0.0, 1.0};
  return {std::strtod(e.text.c_str(), nullptr), 0.0};
}

OperatorPoly symbol_poly(const std::string& s) {
  if (s == "a") return OperatorPoly::a();
  if (s == "ad") return OperatorPoly::ad();
  if (s == "b") return OperatorPoly::b();
  if (s == "bd") return OperatorPoly::bd();
  if (s == "xa") return quadrature(Quadrature::xa);
  if (s == "pa") return quadrature(Quadrature::pa);
  if (s == "xb") return quadrature(Quadrature::xb);
  return quadrature(Quadrature::pb);
}

double real_side(Complex v, std::size_t pos) {
  if (std::abs(v.imag()) > tol::herm * std::max(1.0, std::abs(v.real()))) {
    throw PreconditionError("comparison at column " + std::to_string(pos + 1) +
                            ": operand has imaginary part " + std::to_string(v.imag()));
  }
  return v.real();
}

Complex eval(const Query& q, const DensityOperator& rho) {
  switch (q.kind) {
    case QueryKind::Number: return {std::strtod(q.text.c_str(), nullptr), 0.0};
    case QueryKind::Expect: return expectation_poly(rho, lower(*q.expr));
    case QueryKind::Var: {
      const OperatorPoly f = lower(*q.expr);
      if (hermiticity_defect(f) > 1e-12) {
        throw LowerError("Var at column " + std::to_string(q.position + 1) +
                             ": operator is not Hermitian: " + to_string(f),
                         q.position);
      }
      return variance(rho, f);
    }
    case QueryKind::Abs2: return std::norm(eval(q.children[0], rho));
    case QueryKind::Paren: return eval(q.children[0], rho);
    case QueryKind::Add: return eval(q.children[0], rho) + eval(q.children[1], rho);
    case QueryKind::Sub: return eval(q.children[0], rho) - eval(q.children[1], rho);
    case QueryKind::Mul: return eval(q.children[0], rho) * eval(q.children[1], rho);
    case QueryKind::Div: {
      const Complex den = eval(q.children[1], rho);
      if (den == Complex{}) {
        throw PreconditionError("division by zero at column " + std::to_string(q.position + 1));
      }
      return eval(q.children[0], rho) / den;
    }
    case QueryKind::Compare: break;
  }
  throw PreconditionError("comparison nested inside arithmetic");
}

}  // namespace

OperatorPoly lower(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Literal: return OperatorPoly::scalar(literal_value(e));
    case ExprKind::Symbol: return symbol_poly(e.text);
    case ExprKind::Neg: return -lower(e.children[0]);
    case ExprKind::Add: return lower(e.children[0]) + lower(e.children[1]);
    case ExprKind::Sub: return lower(e.children[0]) - lower(e.children[1]);
    case ExprKind::Mul: return poly_multiply(lower(e.children[0]), lower(e.children[1]));
    case ExprKind::Div: {
      const OperatorPoly den = lower(e.children[1]);
      if (!den.is_scalar()) {
        throw LowerError("division at column " + std::to_string(e.position + 1) +
                             " by an operator: " + to_string(den),
                         e.position);
      }
      const Complex c = den.coefficient({});
      if (c == Complex{}) {
        throw LowerError("division by zero at column " + std::to_string(e.position + 1),
                         e.position);
      }
      return lower(e.children[0]) * (Complex(1.0) / c);
    }
    case ExprKind::Pow: {
      const OperatorPoly base = lower(e.children[0]);
      OperatorPoly out = base;
      for (std::uint32_t k = 1; k < e.exponent; ++k) out = poly_multiply(out, base);
      return out;
    }
    case ExprKind::Paren: return lower(e.children[0]);
  }
  return {};
}

OperatorPoly lower(std::string_view expression_text) {
  return lower(parse_expression(expression_text));
}

QueryResult evaluate(const Query& q, const DensityOperator& rho) {
  if (q.kind != QueryKind::Compare) return {eval(q, rho), std::nullopt};
  Verdict v;
  v.lhs = real_side(eval(q.children[0], rho), q.children[0].position);
  v.rhs = real_side(eval(q.children[1], rho), q.children[1].position);
  v.relation = q.relation;
  const bool ge = v.lhs >= v.rhs - tol::psd * std::max(1.0, std::abs(v.rhs));
  v.holds = q.relation == Relation::GreaterEqual ? ge : !ge;
  return {Complex(v.lhs - v.rhs, 0.0), v};
}

}  // namespace cvsep::dsl
