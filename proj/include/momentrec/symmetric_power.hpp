#ifndef MOMENTREC_SYMMETRIC_POWER_HPP
#define MOMENTREC_SYMMETRIC_POWER_HPP

#include <string>
#include <vector>

#include "momentrec/operators.hpp"

namespace momentrec {

/// A = theta^2 + a(t) theta + b(t).
struct SecondOrderTheta {
  Polynomial a;
  Polynomial b;

  // theta^2 - t^2, the equation of K0.
  static SecondOrderTheta bessel_k0(const std::string& variable = "t");
  // Reads a, b off a theta operator whose theta^2 coefficient is a nonzero
  // constant (the operator is divided by it). UsageError otherwise.
  static SecondOrderTheta from_operator(const ThetaOperator& op);

  const std::string& variable() const { return a.variable(); }
  ThetaOperator to_operator() const;
  bool is_bessel_k0() const;
};

/// L_0 = 1, L_1 = theta, L_{k+1} = (theta + k a) L_k + b k (n-k+1) L_{k-1}.
/// L_k y^n = n (n-1) ... (n-k+1) y^(n-k) (theta y)^k for solutions y of A,
/// so L_{n+1} annihilates y^n.
struct SymPowerChain {
  int n = 0;
  SecondOrderTheta base;
  std::vector<ThetaOperator> operators;  // L_0 .. L_{n+1}

  const ThetaOperator& annihilator() const { return operators.back(); }
};

// Builds the chain with noncommutative operator products.
SymPowerChain symmetric_power(const SecondOrderTheta& a, int n);

// L_{n+1} via the commutative recursion
//   L~_{k+1} = t dL~_k/dt + theta L~_k + k a L~_k + k (n-k+1) b L~_{k-1}
// on integer (or rational) bivariate arrays; equal to symmetric_power(a, n)
// .annihilator() exactly.
ThetaOperator symmetric_power_commutative(const SecondOrderTheta& a, int n);

struct StructureViolation {
  int k = 0;
  int theta_power = 0;
  std::string reason;
};

struct StructureReport {
  int operators_checked = 0;
  std::vector<StructureViolation> violations;
  bool passed() const { return violations.empty(); }
};

// For the K0 chain: L_k = theta^k + sum_{j<=k-2} a_j(t) theta^j with every
// a_j even in t, divisible by t^2, of degree <= k - j. UsageError for chains
// built from any other base operator.
StructureReport check_structure(const SymPowerChain& chain);

}  // namespace momentrec

#endif  // MOMENTREC_SYMMETRIC_POWER_HPP
