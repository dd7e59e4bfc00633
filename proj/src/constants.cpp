#include "momentrec/constants.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "momentrec/error.hpp"
#include "momentrec/quadrature.hpp"

namespace momentrec {

Constant parse_constant(const std::string& name) {
  if (name == "zeta3") return Constant::kZeta3;
  if (name == "L_minus3_2") return Constant::kLMinus3At2;
  if (name == "euler_gamma") return Constant::kEulerGamma;
  if (name == "ln2") return Constant::kLn2;
  throw UsageError("unknown constant: " + name);
}

std::string constant_name(Constant c) {
  switch (c) {
    case Constant::kZeta3: return "zeta3";
    case Constant::kLMinus3At2: return "L_minus3_2";
    case Constant::kEulerGamma: return "euler_gamma";
    case Constant::kLn2: return "ln2";
  }
  return "?";
}

namespace {

// B_0 .. B_count by the standard recurrence.
std::vector<BigRational> bernoulli_numbers(int count) {
  std::vector<BigRational> b(count + 1);
  b[0] = 1;
  for (int m = 1; m <= count; ++m) {
    BigRational sum = 0;
    BigInt binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      sum += binom * b[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[m] = -sum / (m + 1);
  }
  return b;
}

Real zeta3_series(int digits) {
  const mpfr_prec_t bits = digits_to_bits(digits + 10);
  const Real eps = pow10(-(digits + 10), bits);
  Real sum(bits);
  BigInt central = 1;  // binom(2k, k)
  for (long k = 1;; ++k) {
    central = central * (2 * (2 * k - 1)) / k;
    const BigInt k3 = BigInt(k) * k * k;
    Real term = Real(5L, bits) / (Real(BigInt(k3 * central), bits) * 2);
    if (k % 2 == 0) term = -term;
    sum += term;
    if (abs(term) < eps) break;
  }
  return sum;
}

Real brent_mcmillan(int digits) {
  const mpfr_prec_t bits = digits_to_bits(digits + 10);
  // Error about pi exp(-4N).
  const long n = static_cast<long>(std::ceil((digits + 12) * std::log(10.0) / 4.0)) + 1;
  const Real eps = pow10(-(digits + 12), bits);
  Real u(1L, bits);  // (N^k / k!)^2
  Real a(bits);
  Real b(bits);
  Real harmonic(bits);
  for (long k = 0;; ++k) {
    if (k > 0) {
      u = u * (n * n) / (k * k);
      harmonic += Real(1L, bits) / Real(k, bits);
    }
    a += u * harmonic;
    b += u;
    if (k > n && u * (harmonic + 1) < eps * b) break;
  }
  return a / b - log(Real(n, bits));
}

Real ln2_series(int digits) {
  const mpfr_prec_t bits = digits_to_bits(digits + 10);
  const Real eps = pow10(-(digits + 12), bits);
  Real sum(bits);
  for (long k = 1;; ++k) {
    const Real term = ldexp(Real(1L, bits) / Real(k, bits), -k);
    sum += term;
    if (term < eps) break;
  }
  return sum;
}

Real l_minus3_integral(int digits) {
  const mpfr_prec_t bits = digits_to_bits(digits + 10);
  TanhSinh rule(Real(0L, bits), Real(1L, bits), digits);
  const auto result = rule.integrate([](const Real& x) { return -log(x) / (x * x + x + 1); });
  if (!result.converged) throw ArithmeticError("quadrature for L_-3(2) did not converge");
  return result.value;
}

}  // namespace

Real trigamma(const Real& x, int digits) {
  if (x.sign() <= 0) throw DomainError("trigamma needs x > 0");
  const mpfr_prec_t bits = digits_to_bits(digits + 10);
  // Shift so that the asymptotic series reaches the target before diverging.
  const long shift = std::max(40, digits + 10);
  Real y(bits);
  mpfr_set(y.get(), x.get(), MPFR_RNDN);
  Real sum(bits);
  for (long i = 0; i < shift; ++i) {
    sum += Real(1L, bits) / (y * y);
    y += 1;
  }
  // psi1(y) ~ 1/y + 1/(2y^2) + sum_k B_2k / y^(2k+1)
  const Real eps = pow10(-(digits + 12), bits);
  sum += Real(1L, bits) / y + Real(1L, bits) / (ldexp(y * y, 1));
  static const std::vector<BigRational> bernoulli = bernoulli_numbers(80);
  const Real y2 = y * y;
  Real power = y;  // y^(2k+1)
  for (int k = 1; 2 * k < static_cast<int>(bernoulli.size()); ++k) {
    power *= y2;
    const Real term = Real(bernoulli[2 * k], bits) / power;
    sum += term;
    if (abs(term) < eps) break;
  }
  return sum;
}

Real constant_primary(Constant c, int digits) {
  const mpfr_prec_t bits = digits_to_bits(digits + 10);
  switch (c) {
    case Constant::kZeta3: return zeta3_series(digits);
    case Constant::kLMinus3At2: {
      const Real third = Real(1L, bits) / 3;
      const Real two_thirds = Real(2L, bits) / 3;
      return (trigamma(third, digits) - trigamma(two_thirds, digits)) / 9;
    }
    case Constant::kEulerGamma: return brent_mcmillan(digits);
    case Constant::kLn2: return ln2_series(digits);
  }
  throw UsageError("unknown constant");
}

Real constant_secondary(Constant c, int digits) {
  const mpfr_prec_t bits = digits_to_bits(digits + 10);
  switch (c) {
    case Constant::kZeta3: {
      Real r(bits);
      mpfr_zeta_ui(r.get(), 3, MPFR_RNDN);
      return r;
    }
    case Constant::kLMinus3At2: return l_minus3_integral(digits);
    case Constant::kEulerGamma: return const_euler(bits);
    case Constant::kLn2: return const_log2(bits);
  }
  throw UsageError("unknown constant");
}

HighPrecReal constant(Constant c, int digits) {
  Real primary = constant_primary(c, digits);
  const Real secondary = constant_secondary(c, digits);
  if (relative_difference(primary, secondary) > pow10(1 - digits, primary.bits())) {
    throw ArithmeticError("methods for " + constant_name(c) + " disagree");
  }
  return {std::move(primary), digits};
}

}  // namespace momentrec
