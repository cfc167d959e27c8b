#include <cctype>
#include <charconv>
#include <string>

#include "cvsep/dsl.hpp"
#include "cvsep/errors.hpp"

namespace cvsep::dsl {

namespace {

constexpr std::size_t max_depth = 200;
constexpr std::uint32_t max_exponent = 64;

enum class Tok { Ident, Number, LParen, RParen, LBracket, RBracket, Plus, Minus, Star, Slash,
                 Caret, GreaterEqual, Less, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  const auto starts = [&](std::string_view lit) { return s.substr(i, lit.size()) == lit; };
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(c)) {
      while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(c) || (c == '.' && i + 1 < s.size() &&
                            std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      }
      if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
        if (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
          i = j;
        }
      }
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (starts("\xE2\x88\x92")) {  // U+2212 minus sign
      out.push_back({Tok::Minus, "-", start});
      i += 3;
      continue;
    }
    if (starts("\xE2\x89\xA5")) {  // U+2265
      out.push_back({Tok::GreaterEqual, ">=", start});
      i += 3;
      continue;
    }
    if (starts(">=")) {
      out.push_back({Tok::GreaterEqual, ">=", start});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '<': kind = Tok::Less; break;
      default: {
        std::string shown = std::isprint(c) ? std::string(1, static_cast<char>(c))
                                            : "byte 0x" + std::to_string(c);
        throw LexError("lexical error at column " + std::to_string(start + 1) +
                           ": unexpected character '" + shown + "'",
                       start);
      }
    }
    out.push_back({kind, std::string(1, static_cast<char>(c)), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

bool is_operator_symbol(const std::string& id) {
  return id == "a" || id == "ad" || id == "b" || id == "bd" || id == "xa" || id == "pa" ||
         id == "xb" || id == "pb";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  Query query() {
    Query lhs = arith();
    if (peek().kind == Tok::GreaterEqual || peek().kind == Tok::Less) {
      const Token op = next();
      Query rhs = arith();
      Query cmp;
      cmp.kind = QueryKind::Compare;
      cmp.relation = op.kind == Tok::GreaterEqual ? Relation::GreaterEqual : Relation::Less;
      cmp.position = op.pos;
      cmp.children.push_back(std::move(lhs));
      cmp.children.push_back(std::move(rhs));
      lhs = std::move(cmp);
    }
    expect(Tok::End, "operator, comparison or end of input");
    return lhs;
  }

  Expr expression_only() {
    Expr e = expr();
    expect(Tok::End, "operator or end of input");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[cursor_]; }
  Token next() { return tokens_[cursor_ == tokens_.size() - 1 ? cursor_ : cursor_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    const std::string found =
        t.kind == Tok::End ? "end of input" : std::string("'") + t.text + "'";
    throw ParseError("parse error at column " + std::to_string(t.pos + 1) + ": expected " +
                         expected + ", found " + found,
                     t.pos);
  }

  Token expect(Tok kind, const std::string& expected) {
    if (peek().kind != kind) fail(expected);
    return next();
  }

  struct DepthGuard {
    DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > max_depth) {
        throw ParseError("parse error at column " + std::to_string(p.peek().pos + 1) +
                             ": nesting too deep",
                         p.peek().pos);
      }
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  static Query binary(QueryKind kind, Query l, Query r, std::size_t pos) {
    Query q;
    q.kind = kind;
    q.position = pos;
    q.children.push_back(std::move(l));
    q.children.push_back(std::move(r));
    return q;
  }

  static Expr binary(ExprKind kind, Expr l, Expr r, std::size_t pos) {
    Expr e;
    e.kind = kind;
    e.position = pos;
    e.children.push_back(std::move(l));
    e.children.push_back(std::move(r));
    return e;
  }

  Query arith() {
    DepthGuard guard(*this);
    Query lhs = aterm();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token op = next();
      Query rhs = aterm();
      lhs = binary(op.kind == Tok::Plus ? QueryKind::Add : QueryKind::Sub, std::move(lhs),
                   std::move(rhs), op.pos);
    }
    return lhs;
  }

  Query aterm() {
    Query lhs = afact();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token op = next();
      Query rhs = afact();
      lhs = binary(op.kind == Tok::Star ? QueryKind::Mul : QueryKind::Div, std::move(lhs),
                   std::move(rhs), op.pos);
    }
    return lhs;
  }

  Query afact() {
    const Token& t = peek();
    Query q;
    q.position = t.pos;
    if (t.kind == Tok::Number) {
      q.kind = QueryKind::Number;
      q.text = next().text;
      return q;
    }
    if (t.kind == Tok::LParen) {
      next();
      q.kind = QueryKind::Paren;
      q.children.push_back(arith());
      expect(Tok::RParen, "')'");
      return q;
    }
    if (t.kind == Tok::Ident && (t.text == "E" || t.text == "Var")) {
      q.kind = t.text == "E" ? QueryKind::Expect : QueryKind::Var;
      next();
      expect(Tok::LBracket, "'['");
      q.expr = expr();
      expect(Tok::RBracket, "']'");
      return q;
    }
    if (t.kind == Tok::Ident && t.text == "abs2") {
      next();
      q.kind = QueryKind::Abs2;
      expect(Tok::LParen, "'('");
      q.children.push_back(arith());
      expect(Tok::RParen, "')'");
      return q;
    }
    fail("'E[', 'Var[', 'abs2(', number or '('");
  }

  Expr expr() {
    DepthGuard guard(*this);
    Expr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token op = next();
      Expr rhs = term();
      lhs = binary(op.kind == Tok::Plus ? ExprKind::Add : ExprKind::Sub, std::move(lhs),
                   std::move(rhs), op.pos);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token op = next();
      Expr rhs = factor();
      lhs = binary(op.kind == Tok::Star ? ExprKind::Mul : ExprKind::Div, std::move(lhs),
                   std::move(rhs), op.pos);
    }
    return lhs;
  }

  Expr factor() {
    DepthGuard guard(*this);
    if (peek().kind == Tok::Minus) {
      const Token op = next();
      Expr e;
      e.kind = ExprKind::Neg;
      e.position = op.pos;
      e.children.push_back(factor());
      return e;
    }
    Expr base = primary();
    if (peek().kind != Tok::Caret) return base;
    const Token caret = next();
    const Token& t = peek();
    std::uint32_t k = 0;
    if (t.kind != Tok::Number) fail("positive integer exponent");
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), k);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size() || k < 1 || k > max_exponent) {
      fail("positive integer exponent (1.." + std::to_string(max_exponent) + ")");
    }
    next();
    Expr e;
    e.kind = ExprKind::Pow;
    e.exponent = k;
    e.position = caret.pos;
    e.children.push_back(std::move(base));
    return e;
  }

  Expr primary() {
    const Token& t = peek();
    Expr e;
    e.position = t.pos;
    if (t.kind == Tok::Number) {
      e.kind = ExprKind::Literal;
      e.text = next().text;
      return e;
    }
    if (t.kind == Tok::Ident && t.text == "i") {
      e.kind = ExprKind::Literal;
      e.text = next().text;
      return e;
    }
    if (t.kind == Tok::Ident && is_operator_symbol(t.text)) {
      e.kind = ExprKind::Symbol;
      e.text = next().text;
      return e;
    }
    if (t.kind == Tok::LParen) {
      next();
      e.kind = ExprKind::Paren;
      e.children.push_back(expr());
      expect(Tok::RParen, "')'");
      return e;
    }
    fail("operator symbol (a, ad, b, bd, xa, pa, xb, pb), 'i', number or '('");
  }

  std::vector<Token> tokens_;
  std::size_t cursor_ = 0;
  std::size_t depth_ = 0;
};

}  // namespace

Query parse(std::string_view text) { return Parser(text).query(); }

Expr parse_expression(std::string_view text) { return Parser(text).expression_only(); }

std::string print(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Literal:
    case ExprKind::Symbol: return e.text;
    case ExprKind::Neg: return "-" + print(e.children[0]);
    case ExprKind::Add: return print(e.children[0]) + " + " + print(e.children[1]);
    case ExprKind::Sub: return print(e.children[0]) + " - " + print(e.children[1]);
    case ExprKind::Mul: return print(e.children[0]) + "*" + print(e.children[1]);
    case ExprKind::Div: return print(e.children[0]) + "/" + print(e.children[1]);
    case ExprKind::Pow: return print(e.children[0]) + "^" + std::to_string(e.exponent);
    case ExprKind::Paren: return "(" + print(e.children[0]) + ")";
  }
  return {};
}

std::string print(const Query& q) {
  switch (q.kind) {
    case QueryKind::Number: return q.text;
    case QueryKind::Expect: return "E[" + print(*q.expr) + "]";
    case QueryKind::Var: return "Var[" + print(*q.expr) + "]";
    case QueryKind::Abs2: return "abs2(" + print(q.children[0]) + ")";
    case QueryKind::Paren: return "(" + print(q.children[0]) + ")";
    case QueryKind::Add: return print(q.children[0]) + " + " + print(q.children[1]);
    case QueryKind::Sub: return print(q.children[0]) + " - " + print(q.children[1]);
    case QueryKind::Mul: return print(q.children[0]) + " * " + print(q.children[1]);
    case QueryKind::Div: return print(q.children[0]) + " / " + print(q.children[1]);
    case QueryKind::Compare:
      return print(q.children[0]) + (q.relation == Relation::GreaterEqual ? " >= " : " < ") +
             print(q.children[1]);
  }
  return {};
}

}  // namespace cvsep::dsl
