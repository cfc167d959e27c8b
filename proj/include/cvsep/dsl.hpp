#pragma once

// A small text language for moment inequalities.
//
//   query    := compare | arith
//   compare  := arith (">=" | "<") arith
//   arith    := aterm (("+"|"-") aterm)*
//   aterm    := afact (("*"|"/") afact)*
//   afact    := "E" "[" expr "]" | "Var" "[" expr "]" | "abs2" "(" arith ")"
//             | number | "(" arith ")"
//   expr     := term (("+"|"-") term)*
//   term     := factor (("*"|"/") factor)*
//   factor   := primary ("^" posint)? | "-" factor
//   primary  := "a" | "ad" | "b" | "bd" | "xa" | "pa" | "xb" | "pb" | "i"
//             | number | "(" expr ")"
//
// Operator products are kept in written order; commutation is applied only
// when lowering to a normal-ordered OperatorPoly. Division is allowed only by
// expressions that lower to a nonzero scalar. U+2212 is accepted for "-" and
// U+2265 for ">=".

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cvsep/fock.hpp"
#include "cvsep/moments.hpp"

namespace cvsep::dsl {

enum class ExprKind { Literal, Symbol, Neg, Add, Sub, Mul, Div, Pow, Paren };

// Operator-expression tree. Literal covers decimal numbers and "i"; `text`
// holds the source lexeme for literals and symbols.
struct Expr {
  ExprKind kind = ExprKind::Literal;
  std::string text;
  std::uint32_t exponent = 0;  // Pow only
  std::vector<Expr> children;
  std::size_t position = 0;  // not part of equality

  friend bool operator==(const Expr& x, const Expr& y) {
    return x.kind == y.kind && x.text == y.text && x.exponent == y.exponent &&
           x.children == y.children;
  }
};

enum class QueryKind { Number, Expect, Var, Abs2, Paren, Add, Sub, Mul, Div, Compare };
enum class Relation { GreaterEqual, Less };

struct Query {
  QueryKind kind = QueryKind::Number;
  std::string text;                 // Number lexeme
  std::optional<Expr> expr;         // Expect, Var
  std::vector<Query> children;      // Abs2/Paren: 1, binary: 2
  Relation relation = Relation::GreaterEqual;
  std::size_t position = 0;

  friend bool operator==(const Query& x, const Query& y) {
    return x.kind == y.kind && x.text == y.text && x.expr == y.expr &&
           x.children == y.children && (x.kind != QueryKind::Compare || x.relation == y.relation);
  }
};

// Throws LexError / ParseError carrying the byte offset of the failure.
Query parse(std::string_view text);
Expr parse_expression(std::string_view text);

std::string print(const Expr& e);
std::string print(const Query& q);

// Normal-ordered polynomial of an operator expression. Throws LowerError for
// division by a non-scalar or by zero.
OperatorPoly lower(const Expr& e);
OperatorPoly lower(std::string_view expression_text);

struct Verdict {
  double lhs = 0.0;
  double rhs = 0.0;
  Relation relation = Relation::GreaterEqual;
  bool holds = false;
};

struct QueryResult {
  Complex value;                  // arithmetic queries
  std::optional<Verdict> verdict;  // comparisons
};

// Compare uses a relative margin of tol::psd: ">=" holds iff
// lhs >= rhs - tol * max(1, |rhs|) and "<" is its exact complement.
QueryResult evaluate(const Query& q, const DensityOperator& rho);

}  // namespace cvsep::dsl
