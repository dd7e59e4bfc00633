#ifndef MOMENTREC_SPECIAL_HPP
#define MOMENTREC_SPECIAL_HPP

#include "momentrec/real.hpp"

namespace momentrec {

struct BesselK01 {
  Real k0;
  Real k1;
};

// Trapezoid rule on K0(t) = int_0^oo exp(-t cosh x) dx and
// K1(t) = int_0^oo cosh x exp(-t cosh x) dx, halving the step until both
// sums move by less than 10^-(digits+5) relative. Result at the working
// precision of digits + 10.
BesselK01 bessel_k01_trapezoid(const Real& t, int digits);

// The ascending series
//   K0 = sum_m q_m (H_m - ln(t/2) - gamma),            q_m = (t^2/4)^m / m!^2
//   K1 = 1/t + t/2 sum_m p_m (ln(t/2) + gamma - (H_m + H_(m+1))/2),
//                                                     p_m = (t^2/4)^m / (m! (m+1)!)
// summed with ceil(2t / ln 10) + 10 guard digits against the e^(2t)
// cancellation.
BesselK01 bessel_k01_series(const Real& t, int digits);

// Production path for quadrature nodes: the series for t <= 2, otherwise the
// trapezoid rule with a fixed step chosen from the precision.
BesselK01 bessel_k01(const Real& t, int digits);

// K0 from the trapezoid rule, confirmed by the series; ArithmeticError if
// the two disagree beyond 10^(1-digits). DomainError for t <= 0.
HighPrecReal eval_K0(const Real& t, int digits);

enum class SpecialFunction { kK1, kErf, kB, kD };

// b(u) = sqrt(pi) erf(u) / (2u), d(u) = (exp(-u^2) - 1 + sqrt(pi) u erf(u)) / u^2,
// both by their Taylor series below u = 1 and with b(0) = d(0) = 1.
// K1 needs u > 0, the others u >= 0; DomainError otherwise.
HighPrecReal eval_special(SpecialFunction f, const Real& u, int digits);

Real box_b(const Real& u, int digits);
Real box_d(const Real& u, int digits);

}  // namespace momentrec

#endif  // MOMENTREC_SPECIAL_HPP
