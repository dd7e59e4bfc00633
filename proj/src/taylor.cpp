#include "momentrec/taylor.hpp"

#include <algorithm>

#include "momentrec/error.hpp"
#include "momentrec/pipelines.hpp"
#include "momentrec/special.hpp"

namespace momentrec {

Real TaylorSeries::derivative(int j) const {
  Real r = coeffs.at(j);
  for (int i = 2; i <= j; ++i) r *= i;
  return r;
}

namespace {

Real at_precision(const Real& x, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set(r.get(), x.get(), MPFR_RNDN);
  return r;
}

// Coefficients of p(t0 + x), ascending in x.
std::vector<Real> shifted(const Polynomial& p, const Real& t0) {
  const mpfr_prec_t bits = t0.bits();
  std::vector<Real> out(std::max(p.degree() + 1, 0), Real(bits));
  // Horner in the shifted basis: out = out * (t0 + x) + c.
  for (int d = p.degree(); d >= 0; --d) {
    for (int i = p.degree() - d; i >= 0; --i) {
      Real next = out[i] * t0;
      if (i > 0) next += out[i - 1];
      out[i] = next;
    }
    out[0] += Real(p.coeff(d), bits);
  }
  return out;
}

TaylorSeries zero_like(const TaylorSeries& like) {
  return {like.t0, std::vector<Real>(like.coeffs.size(), Real(like.t0.bits()))};
}

}  // namespace

TaylorSeries ode_taylor(const DOperator& ode, const Real& t0, const std::vector<Real>& initial, int order) {
  const int r = ode.order();
  if (r < 1) throw UsageError("Taylor expansion needs an operator of order >= 1");
  if (static_cast<int>(initial.size()) != r) throw UsageError("wrong number of initial values");
  const mpfr_prec_t bits = t0.bits();
  std::vector<std::vector<Real>> p;  // p[j][i]: coefficient of x^i in p_j(t0 + x)
  for (int j = 0; j <= r; ++j) p.push_back(shifted(ode.coefficient(j), t0));
  if (p[r].empty() || p[r][0].is_zero()) throw DomainError("expansion point is singular for the equation");
  TaylorSeries s{t0, {}};
  Real factorial(1L, bits);
  for (int i = 0; i < r && i <= order; ++i) {
    if (i > 0) factorial *= i;
    s.coeffs.push_back(at_precision(initial[i], bits) / factorial);
  }
  // Coefficient of x^m in sum_j p_j f^(j):
  //   sum_{j,i} p[j][i] (m-i+1)...(m-i+j) a_(m-i+j);
  // the i = 0, j = r term carries a_(m+r).
  for (int m = 0; m + r <= order; ++m) {
    Real rest(bits);
    for (int j = 0; j <= r; ++j) {
      for (int i = 0; i < static_cast<int>(p[j].size()) && i <= m; ++i) {
        if (i == 0 && j == r) continue;
        Real term = p[j][i] * s.coeffs[m - i + j];
        for (int q = 1; q <= j; ++q) term *= (m - i + q);
        rest += term;
      }
    }
    Real lead = p[r][0];
    for (int q = 1; q <= r; ++q) lead *= (m + q);
    s.coeffs.push_back(-rest / lead);
  }
  return s;
}

TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b) {
  TaylorSeries r = zero_like(a);
  const std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
  r.coeffs.resize(n, Real(a.t0.bits()));
  for (std::size_t i = 0; i < n; ++i) r.coeffs[i] = a.coeffs[i] + b.coeffs[i];
  return r;
}

TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b) {
  const std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
  TaylorSeries r{a.t0, std::vector<Real>(n, Real(a.t0.bits()))};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return r;
}

TaylorSeries operator*(const TaylorSeries& a, const Real& c) {
  TaylorSeries r = a;
  for (auto& x : r.coeffs) x *= c;
  return r;
}

TaylorSeries operator/(const TaylorSeries& a, const TaylorSeries& b) {
  if (b.coeffs.empty() || b.coeffs[0].is_zero()) throw ArithmeticError("series division by a series vanishing at t0");
  const std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
  TaylorSeries r{a.t0, {}};
  for (std::size_t i = 0; i < n; ++i) {
    Real c = a.coeffs[i];
    for (std::size_t j = 1; j <= i; ++j) c -= b.coeffs[j] * r.coeffs[i - j];
    r.coeffs.push_back(c / b.coeffs[0]);
  }
  return r;
}

TaylorSeries power(const TaylorSeries& a, int n) {
  TaylorSeries r = zero_like(a);
  if (!r.coeffs.empty()) r.coeffs[0] = Real(1L, a.t0.bits());
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

TaylorSeries polynomial_series(const Polynomial& p, const TaylorSeries& like) {
  TaylorSeries r = zero_like(like);
  const std::vector<Real> c = shifted(p, like.t0);
  for (std::size_t i = 0; i < c.size() && i < r.coeffs.size(); ++i) r.coeffs[i] = c[i];
  return r;
}

Real PointResidual::relative() const {
  if (scale.is_zero()) return Real(0L, value.bits());
  return abs(value) / scale;
}

PointResidual apply_at_point(const DOperator& a, const TaylorSeries& h) {
  if (h.order() < a.order()) throw UsageError("series too short for the operator");
  const mpfr_prec_t bits = h.t0.bits();
  PointResidual out{Real(bits), Real(bits)};
  for (const auto& [key, c] : a.terms()) {
    const auto [i, j] = key;
    const Real term = Real(c, bits) * pow(h.t0, static_cast<long>(i)) * h.derivative(j);
    out.value += term;
    out.scale = std::max(out.scale, abs(term));
  }
  return out;
}

PointResidual apply_at_point(const ThetaOperator& a, const TaylorSeries& h) {
  return apply_at_point(theta_to_d(a), h);
}

TaylorSeries k0_taylor(const Real& t0, int order, int digits) {
  const BesselK01 v = bessel_k01(t0, digits);
  const Real x = at_precision(t0, digits_to_bits(digits + 10));
  return ode_taylor(theta_to_d(SecondOrderTheta::bessel_k0().to_operator()), x, {v.k0, -v.k1}, order);
}

TaylorSeries exp_taylor(const BigRational& c, const Real& t0, int order, int digits) {
  const mpfr_prec_t bits = digits_to_bits(digits + 10);
  const Real x = at_precision(t0, bits);
  DOperator ode("t");
  ode.add_term(0, 1, 1);
  ode.add_term(0, 0, -c);
  return ode_taylor(ode, x, {exp(Real(c, bits) * x)}, order);
}

TaylorSeries b_taylor(const Real& u0, int order, int digits) {
  const mpfr_prec_t bits = digits_to_bits(digits + 10);
  const Real x = at_precision(u0, bits);
  const Real b = box_b(x, digits);
  const Real b1 = (exp(-(x * x)) - b) / x;
  return ode_taylor(box_b_ode(), x, {b, b1}, order);
}

TaylorSeries d_taylor(const Real& u0, int order, int digits) {
  const mpfr_prec_t bits = digits_to_bits(digits + 10);
  const Real x = at_precision(u0, bits);
  // g = exp(-u^2) solves g' + 2u g = 0.
  DOperator gauss("u");
  gauss.add_term(0, 1, 1);
  gauss.add_term(1, 0, 2);
  const TaylorSeries g = ode_taylor(gauss, x, {exp(-(x * x))}, order);
  const TaylorSeries one = polynomial_series(Polynomial::constant("u", 1), g);
  const TaylorSeries u2 = polynomial_series(Polynomial::monomial("u", 1, 2), g);
  return (g + one * Real(-1L, bits)) / u2 + b_taylor(x, order, digits) * Real(2L, bits);
}

}  // namespace momentrec
