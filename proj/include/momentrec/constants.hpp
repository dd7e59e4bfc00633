#ifndef MOMENTREC_CONSTANTS_HPP
#define MOMENTREC_CONSTANTS_HPP

#include <string>

#include "momentrec/real.hpp"

namespace momentrec {

enum class Constant { kZeta3, kLMinus3At2, kEulerGamma, kLn2 };

// "zeta3", "L_minus3_2", "euler_gamma", "ln2"; UsageError for other names.
Constant parse_constant(const std::string& name);
std::string constant_name(Constant c);

// zeta3:       sum (-1)^(k+1) 5 / (2 k^3 binom(2k, k))
// L_minus3_2:  (psi1(1/3) - psi1(2/3)) / 9, trigamma by upward shift and
//              the asymptotic series
// euler_gamma: Brent-McMillan, A(N)/B(N) - ln N
// ln2:         sum 1 / (k 2^k)
Real constant_primary(Constant c, int digits);

// zeta3: MPFR zeta(3); L_minus3_2: int_0^1 -ln x / (1 + x + x^2) dx by
// tanh-sinh; euler_gamma and ln2: MPFR constants.
Real constant_secondary(Constant c, int digits);

// Primary value, confirmed against the secondary one to 10^(1-digits)
// relative; ArithmeticError otherwise.
HighPrecReal constant(Constant c, int digits);

// Trigamma psi1(x) for x > 0.
Real trigamma(const Real& x, int digits);

}  // namespace momentrec

#endif  // MOMENTREC_CONSTANTS_HPP
