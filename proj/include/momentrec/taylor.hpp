#ifndef MOMENTREC_TAYLOR_HPP
#define MOMENTREC_TAYLOR_HPP

#include <vector>

#include "momentrec/operators.hpp"
#include "momentrec/real.hpp"

namespace momentrec {

/// Taylor coefficients a_0, a_1, ... of f(t0 + x).
struct TaylorSeries {
  Real t0;
  std::vector<Real> coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  // f^(j)(t0) = j! a_j
  Real derivative(int j) const;
};

// Solution of ode with f^(i)(t0) = initial[i] for i < order(ode), expanded
// to the given order. DomainError when t0 is a singular point.
TaylorSeries ode_taylor(const DOperator& ode, const Real& t0, const std::vector<Real>& initial, int order);

TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries operator*(const TaylorSeries& a, const Real& c);
// ArithmeticError when b(t0) = 0.
TaylorSeries operator/(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries power(const TaylorSeries& a, int n);
// The polynomial p(t0 + x) as a series of the same order as like.
TaylorSeries polynomial_series(const Polynomial& p, const TaylorSeries& like);

struct PointResidual {
  Real value;  // (A h)(t0)
  Real scale;  // largest |d_ij t0^i h^(j)(t0)|
  Real relative() const;
};

// Needs h.order() >= order(a).
PointResidual apply_at_point(const DOperator& a, const TaylorSeries& h);
PointResidual apply_at_point(const ThetaOperator& a, const TaylorSeries& h);

// Witness expansions at t0 (working precision of digits + 10):
// K0 from its equation theta^2 - t^2 with K0' = -K1,
TaylorSeries k0_taylor(const Real& t0, int order, int digits);
// exp(c t),
TaylorSeries exp_taylor(const BigRational& c, const Real& t0, int order, int digits);
// b(u) from u b'' + 2(1+u^2) b' + 2u b = 0 with b' = (exp(-u^2) - b) / u,
TaylorSeries b_taylor(const Real& u0, int order, int digits);
// d(u) = (exp(-u^2) - 1) / u^2 + 2 b(u).
TaylorSeries d_taylor(const Real& u0, int order, int digits);

}  // namespace momentrec

#endif  // MOMENTREC_TAYLOR_HPP
