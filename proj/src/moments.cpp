#include "cvsep/moments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "cvsep/errors.hpp"

namespace cvsep {

namespace {

struct ModeTerm {
  std::uint32_t create;
  std::uint32_t annihilate;
  double coef;
};

double binomial(std::uint32_t n, std::uint32_t k) {
  double r = 1.0;
  for (std::uint32_t j = 1; j <= k; ++j) r = r * static_cast<double>(n - k + j) / j;
  return std::round(r);
}

// (ad^m1 a^n1)(ad^m2 a^n2) in normal order, using
// a^n ad^k = sum_j C(n,j) C(k,j) j! ad^(k-j) a^(n-j).
std::vector<ModeTerm> mode_product(std::uint32_t m1, std::uint32_t n1, std::uint32_t m2,
                                   std::uint32_t n2) {
  std::vector<ModeTerm> out;
  const std::uint32_t top = std::min(n1, m2);
  double fact = 1.0;
  for (std::uint32_t j = 0; j <= top; ++j) {
    if (j > 0) fact *= j;
    out.push_back({m1 + m2 - j, n1 + n2 - j, binomial(n1, j) * binomial(m2, j) * fact});
  }
  return out;
}

// Action of ad^create a^annihilate on |k>: target level and amplitude.
// Returns false when the result vanishes or leaves the truncated space.
bool apply_word(std::uint32_t create, std::uint32_t annihilate, std::size_t level, std::size_t d,
                std::size_t& target, double& amp) {
  if (level < annihilate) return false;
  const std::size_t mid = level - annihilate;
  target = mid + create;
  if (target >= d) return false;
  amp = 1.0;
  for (std::size_t j = mid + 1; j <= level; ++j) amp *= std::sqrt(static_cast<double>(j));
  for (std::size_t j = mid + 1; j <= target; ++j) amp *= std::sqrt(static_cast<double>(j));
  return true;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void append_power(std::string& out, const char* sym, std::uint32_t power) {
  if (power == 0) return;
  if (!out.empty()) out += '*';
  out += sym;
  if (power > 1) out += '^' + std::to_string(power);
}

}  // namespace

OperatorPoly::OperatorPoly(std::initializer_list<std::pair<const Monomial, Complex>> terms) {
  for (const auto& [mono, c] : terms) accumulate(mono, c);
}

OperatorPoly OperatorPoly::scalar(Complex c) { return term({}, c); }

OperatorPoly OperatorPoly::term(Monomial mono, Complex c) {
  OperatorPoly out;
  out.accumulate(mono, c);
  return out;
}

Complex OperatorPoly::coefficient(const Monomial& mono) const {
  const auto it = terms_.find(mono);
  return it == terms_.end() ? Complex{} : it->second;
}

bool OperatorPoly::is_scalar() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_identity());
}

std::uint32_t OperatorPoly::degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
  return d;
}

void OperatorPoly::accumulate(const Monomial& mono, Complex c) {
  if (c == Complex{}) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (inserted) return;
  it->second += c;
  if (it->second == Complex{}) terms_.erase(it);
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& rhs) {
  for (const auto& [mono, c] : rhs.terms_) accumulate(mono, c);
  return *this;
}

OperatorPoly& OperatorPoly::operator-=(const OperatorPoly& rhs) {
  for (const auto& [mono, c] : rhs.terms_) accumulate(mono, -c);
  return *this;
}

OperatorPoly& OperatorPoly::operator*=(Complex c) {
  if (c == Complex{}) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second == Complex{} ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

OperatorPoly& OperatorPoly::operator*=(const OperatorPoly& rhs) {
  *this = poly_multiply(*this, rhs);
  return *this;
}

OperatorPoly OperatorPoly::operator-() const {
  OperatorPoly out(*this);
  for (auto& [mono, c] : out.terms_) c = -c;
  return out;
}

OperatorPoly operator*(const OperatorPoly& lhs, const OperatorPoly& rhs) {
  return poly_multiply(lhs, rhs);
}

OperatorPoly poly_multiply(const OperatorPoly& f, const OperatorPoly& g) {
  OperatorPoly out;
  for (const auto& [u, cu] : f.terms()) {
    for (const auto& [w, cw] : g.terms()) {
      const Complex c = cu * cw;
      const auto pa = mode_product(u.m, u.n, w.m, w.n);
      const auto pb = mode_product(u.p, u.q, w.p, w.q);
      for (const auto& ta : pa) {
        for (const auto& tb : pb) {
          out.accumulate({ta.create, ta.annihilate, tb.create, tb.annihilate},
                         c * (ta.coef * tb.coef));
        }
      }
    }
  }
  return out;
}

OperatorPoly poly_adjoint(const OperatorPoly& f) {
  // (ad^m a^n bd^p b^q)^dagger = ad^n a^m bd^q b^p, already normal ordered.
  OperatorPoly out;
  for (const auto& [mono, c] : f.terms()) {
    out.accumulate({mono.n, mono.m, mono.q, mono.p}, std::conj(c));
  }
  return out;
}

OperatorPoly poly_partial_transpose_b(const OperatorPoly& f) {
  OperatorPoly out;
  for (const auto& [mono, c] : f.terms()) out.accumulate({mono.m, mono.n, mono.q, mono.p}, c);
  return out;
}

double hermiticity_defect(const OperatorPoly& f) {
  const OperatorPoly adj = poly_adjoint(f);
  double defect = 0.0;
  for (const auto& [mono, c] : f.terms()) {
    defect = std::max(defect, std::abs(c - adj.coefficient(mono)));
  }
  for (const auto& [mono, c] : adj.terms()) {
    defect = std::max(defect, std::abs(c - f.coefficient(mono)));
  }
  return defect;
}

OperatorPoly quadrature(Quadrature sym) {
  const double s = M_SQRT1_2;
  const Complex ms(0.0, -s);  // 1/(i sqrt 2)
  switch (sym) {
    case Quadrature::xa:
      return OperatorPoly::a() * Complex(s) + OperatorPoly::ad() * Complex(s);
    case Quadrature::pa:
      return OperatorPoly::a() * ms - OperatorPoly::ad() * ms;
    case Quadrature::xb:
      return OperatorPoly::b() * Complex(s) + OperatorPoly::bd() * Complex(s);
    case Quadrature::pb:
      return OperatorPoly::b() * ms - OperatorPoly::bd() * ms;
  }
  return {};
}

OperatorPoly quadrature_poly(std::initializer_list<std::pair<Quadrature, double>> combo) {
  OperatorPoly out;
  for (const auto& [sym, w] : combo) {
    if (!std::isfinite(w)) throw PreconditionError("quadrature_poly: non-finite coefficient");
    out += Complex(w) * quadrature(sym);
  }
  return out;
}

void check_power_guard(const Cutoff& c, const OperatorPoly& f) {
  for (const auto& [mono, coef] : f.terms()) {
    if (mono.m + mono.n >= c.d_a || mono.p + mono.q >= c.d_b) {
      throw TruncationError("moment: word " + to_string(mono) + " needs a cutoff above " +
                            std::to_string(c.d_a) + "x" + std::to_string(c.d_b));
    }
  }
}

Complex moment(const DensityOperator& rho, const Monomial& mono) {
  const Cutoff& c = rho.cutoff();
  if (mono.m + mono.n >= c.d_a || mono.p + mono.q >= c.d_b) {
    throw TruncationError("moment: word " + to_string(mono) + " needs a cutoff above " +
                          std::to_string(c.d_a) + "x" + std::to_string(c.d_b));
  }
  // trace(rho O) = sum_k rho(k, out(k)) * amp(k), O|k> = amp(k)|out(k)>.
  const Matrix& r = rho.matrix();
  Complex acc{};
  for (std::size_t na = 0; na < c.d_a; ++na) {
    std::size_t ta = 0;
    double amp_a = 0.0;
    if (!apply_word(mono.m, mono.n, na, c.d_a, ta, amp_a)) continue;
    for (std::size_t nb = 0; nb < c.d_b; ++nb) {
      std::size_t tb = 0;
      double amp_b = 0.0;
      if (!apply_word(mono.p, mono.q, nb, c.d_b, tb, amp_b)) continue;
      acc += r(static_cast<Eigen::Index>(c.index(na, nb)),
               static_cast<Eigen::Index>(c.index(ta, tb))) *
             (amp_a * amp_b);
    }
  }
  return acc;
}

Complex expectation_poly(const DensityOperator& rho, const OperatorPoly& f) {
  check_power_guard(rho.cutoff(), f);
  Complex acc{};
  for (const auto& [mono, c] : f.terms()) acc += c * moment(rho, mono);
  return acc;
}

double variance(const DensityOperator& rho, const OperatorPoly& f) {
  const double defect = hermiticity_defect(f);
  if (defect > 1e-12) {
    throw PreconditionError("variance: operator is not Hermitian: " + to_string(f));
  }
  const double mean = expectation_poly(rho, f).real();
  const double second = expectation_poly(rho, poly_multiply(f, f)).real();
  const double var = second - mean * mean;
  if (var < 0.0) {
    if (var >= -tol::psd * std::max(1.0, std::abs(second))) return 0.0;
    throw PreconditionError("variance: negative value " + format_double(var) +
                            " (state is not positive)");
  }
  return var;
}

std::string to_string(const Monomial& mono) {
  std::string out;
  append_power(out, "ad", mono.m);
  append_power(out, "a", mono.n);
  append_power(out, "bd", mono.p);
  append_power(out, "b", mono.q);
  return out.empty() ? "1" : out;
}

std::string to_string(const OperatorPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [mono, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + format_double(c.real()) + " + " + format_double(c.imag()) + "*i)";
    if (!mono.is_identity()) out += "*" + to_string(mono);
  }
  return out;
}

}  // namespace cvsep
