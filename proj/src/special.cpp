#include "momentrec/special.hpp"

#include <cmath>

#include "momentrec/error.hpp"

namespace momentrec {

namespace {

struct TrapezoidSums {
  Real s0;
  Real s1;
};

// sum over x = j h, j in first, first + step, ..., of exp(-t cosh x) and
// cosh x exp(-t cosh x), stopping once the terms are negligible.
TrapezoidSums trapezoid_terms(const Real& t, const Real& h, long first, long step, const Real& eps) {
  const mpfr_prec_t bits = t.bits();
  TrapezoidSums sums{Real(bits), Real(bits)};
  for (long j = first;; j += step) {
    const Real c = cosh(h * Real(j, bits));
    const Real e = exp(-(t * c));
    sums.s0 += e;
    const Real term1 = c * e;
    sums.s1 += term1;
    if (term1 < eps * abs(sums.s1)) break;
  }
  return sums;
}

Real at_precision(const Real& x, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

BesselK01 bessel_k01_trapezoid(const Real& t, int digits) {
  if (t.sign() <= 0) throw DomainError("K0 needs t > 0");
  const mpfr_prec_t bits = digits_to_bits(digits + 10);
  const Real x = at_precision(t, bits);
  const Real eps = pow10(-(digits + 15), bits);
  const Real tol = pow10(-(digits + 5), bits);
  Real h = Real(1L, bits) / 2;
  // x = 0 enters with weight 1/2.
  const Real half_e = ldexp(exp(-x), -1);
  TrapezoidSums all = trapezoid_terms(x, h, 1, 1, eps);
  all.s0 += half_e;
  all.s1 += half_e;
  Real k0 = all.s0 * h;
  Real k1 = all.s1 * h;
  for (int level = 0; level < 16; ++level) {
    h = ldexp(h, -1);
    const TrapezoidSums odd = trapezoid_terms(x, h, 1, 2, eps);
    all.s0 += odd.s0;
    all.s1 += odd.s1;
    const Real next0 = all.s0 * h;
    const Real next1 = all.s1 * h;
    const bool settled = relative_difference(next0, k0) < tol && relative_difference(next1, k1) < tol;
    k0 = next0;
    k1 = next1;
    if (settled) return {k0, k1};
  }
  throw ArithmeticError("trapezoid rule for K0 did not settle");
}

BesselK01 bessel_k01_series(const Real& t, int digits) {
  if (t.sign() <= 0) throw DomainError("K0 needs t > 0");
  const int guard = static_cast<int>(std::ceil(2.0 * t.to_double() / std::log(10.0))) + 10;
  const mpfr_prec_t bits = digits_to_bits(digits + guard);
  const Real x = at_precision(t, bits);
  const Real z = ldexp(x * x, -2);
  const Real lg = log(ldexp(x, -1)) + const_euler(bits);
  // K0 is at least of order e^-t / (1 + t); terms below this scale are dropped.
  const Real eps = pow10(-(digits + 12), bits) * exp(-x) / (x + 1);
  Real q(1L, bits);   // q_m
  Real p(1L, bits);   // p_m
  Real harmonic(bits);  // H_m
  Real s0(bits);
  Real s1(bits);
  for (long m = 0;; ++m) {
    const Real next_harmonic = harmonic + Real(1L, bits) / Real(m + 1, bits);
    const Real t0 = q * (harmonic - lg);
    const Real t1 = p * (lg - ldexp(harmonic + next_harmonic, -1));
    s0 += t0;
    s1 += t1;
    if (m > x.to_double() && abs(t0) < eps && abs(t1) * x < eps) break;
    harmonic = next_harmonic;
    q = q * z / ((m + 1) * (m + 1));
    p = p * z / ((m + 1) * (m + 2));
  }
  const mpfr_prec_t out = digits_to_bits(digits + 10);
  return {at_precision(s0, out), at_precision(Real(1L, bits) / x + ldexp(x * s1, -1), out)};
}

BesselK01 bessel_k01(const Real& t, int digits) {
  if (t.sign() <= 0) throw DomainError("K0 needs t > 0");
  if (t.to_double() <= 2.0) return bessel_k01_series(t, digits);
  const mpfr_prec_t bits = digits_to_bits(digits + 10);
  const Real x = at_precision(t, bits);
  // The integrand is analytic for |Im x| < pi/2; relative to K0 the
  // trapezoid error is about exp(-0.9 pi^2 / h + t).
  const double nats = static_cast<double>(bits) * std::log(2.0) + 10.0 + t.to_double();
  const Real h = pow(const_pi(bits), 2) * 9 / static_cast<long>(std::ceil(10.0 * nats));
  TrapezoidSums all = trapezoid_terms(x, h, 1, 1, pow10(-(digits + 15), bits));
  const Real half_e = ldexp(exp(-x), -1);
  all.s0 += half_e;
  all.s1 += half_e;
  return {all.s0 * h, all.s1 * h};
}

HighPrecReal eval_K0(const Real& t, int digits) {
  if (t.sign() <= 0) throw DomainError("K0 needs t > 0");
  const BesselK01 primary = bessel_k01_trapezoid(t, digits);
  const BesselK01 check = bessel_k01_series(t, digits);
  if (relative_difference(primary.k0, check.k0) > pow10(1 - digits, primary.k0.bits())) {
    throw ArithmeticError("K0 methods disagree at t = " + t.to_string(17));
  }
  return {primary.k0, digits};
}

Real box_b(const Real& u, int digits) {
  if (u.sign() < 0) throw DomainError("b(u) needs u >= 0");
  const mpfr_prec_t bits = digits_to_bits(digits + 10);
  const Real x = at_precision(u, bits);
  if (u.to_double() >= 1.0) return sqrt(const_pi(bits)) * erf(x) / ldexp(x, 1);
  // sum_m (-1)^m u^(2m) / (m! (2m+1))
  const Real eps = pow10(-(digits + 12), bits);
  const Real z = x * x;
  Real power(1L, bits);  // (-z)^m / m!
  Real sum(bits);
  for (long m = 0;; ++m) {
    const Real term = power / (2 * m + 1);
    sum += term;
    if (abs(term) < eps) break;
    power = -(power * z) / (m + 1);
  }
  return sum;
}

Real box_d(const Real& u, int digits) {
  if (u.sign() < 0) throw DomainError("d(u) needs u >= 0");
  const mpfr_prec_t bits = digits_to_bits(digits + 10);
  const Real x = at_precision(u, bits);
  if (u.to_double() >= 1.0) {
    const Real z = x * x;
    return (exp(-z) - 1) / z + sqrt(const_pi(bits)) * erf(x) / x;
  }
  // sum_{j>=1} (-1)^(j+1) u^(2j-2) / (j! (2j-1))
  const Real eps = pow10(-(digits + 12), bits);
  const Real z = x * x;
  Real power(1L, bits);  // (-z)^(j-1) / j!
  Real sum(bits);
  for (long j = 1;; ++j) {
    const Real term = power / (2 * j - 1);
    sum += term;
    if (abs(term) < eps) break;
    power = -(power * z) / (j + 1);
  }
  return sum;
}

HighPrecReal eval_special(SpecialFunction f, const Real& u, int digits) {
  switch (f) {
    case SpecialFunction::kK1:
      return {bessel_k01(u, digits).k1, digits};
    case SpecialFunction::kErf: {
      if (u.sign() < 0) throw DomainError("erf is evaluated for u >= 0 only");
      return {erf(at_precision(u, digits_to_bits(digits + 10))), digits};
    }
    case SpecialFunction::kB:
      return {box_b(u, digits), digits};
    case SpecialFunction::kD:
      return {box_d(u, digits), digits};
  }
  throw UsageError("unknown special function");
}

}  // namespace momentrec
