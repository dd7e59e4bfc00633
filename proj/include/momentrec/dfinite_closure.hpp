#ifndef MOMENTREC_DFINITE_CLOSURE_HPP
#define MOMENTREC_DFINITE_CLOSURE_HPP

#include <vector>

#include "momentrec/operators.hpp"
#include "momentrec/rational_function.hpp"

namespace momentrec {

/// The input ODE solved for its top derivative:
///   f^(r) = sum_{i<r} rules[i] * f^(i).
struct DerivativeRewriter {
  int order = 0;
  std::vector<RationalFunction> rules;

  // Throws UsageError for the zero operator or an operator of order 0.
  static DerivativeRewriter from_ode(const DOperator& ode);
};

/// Successive derivatives h, h', ..., h^(N) of a target written in a finite
/// monomial basis; rows[i][b] is the coefficient of basis element b in h^(i).
struct AnsatzMatrix {
  std::vector<std::vector<RationalFunction>> rows;

  std::size_t row_count() const { return rows.size(); }
  std::size_t column_count() const { return rows.empty() ? 0 : rows.front().size(); }
};

// Nonzero v with sum_i v[i] * rows[i] = 0, requiring rows == cols + 1.
// Among all kernel elements the one whose last nonzero index is smallest is
// returned (free variable of lowest index set to 1). Entries come back as
// polynomials with no common factor and the last nonzero entry has positive
// leading coefficient.
std::vector<RationalFunction> kernel_vector(const AnsatzMatrix& m);

// Annihilator of y^n for every solution y of ode, built from the ansatz over
// monomials of total degree n in y, ..., y^(r-1). Primitive-normalized.
DOperator power_annihilator(const DOperator& ode, int n);

// Annihilator of f*g for solutions f of odeF and g of odeG, order <= r*s.
DOperator product_annihilator(const DOperator& odeF, const DOperator& odeG);

// The derivative matrix used by power_annihilator, exposed for inspection.
AnsatzMatrix power_ansatz(const DOperator& ode, int n);

}  // namespace momentrec

#endif  // MOMENTREC_DFINITE_CLOSURE_HPP
