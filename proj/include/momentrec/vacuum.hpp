#ifndef MOMENTREC_VACUUM_HPP
#define MOMENTREC_VACUUM_HPP

#include <string>
#include <vector>

#include "momentrec/big_rational.hpp"

namespace momentrec {

/// coeff * V(n, a, b), V(n,a,b) = int_0^oo x^(2n+1) K0(x)^a (x K0'(x))^b dx.
struct VTerm {
  int n = 0;
  int a = 0;
  int b = 0;
  BigRational coeff = 1;

  friend bool operator==(const VTerm&, const VTerm&) = default;
};

// Rewrites V(v.n, v.a, v.b) as a rational combination of V values with
// a*b == 0 using
//   2(n+1) V(n,a,b) + a V(n,a-1,b+1) + b V(n+1,a+1,b-1) = 0
// solved for its last term, which lowers a by one per step. Terms come back
// sorted by (n, a, b). DomainError, naming the reduction chain, if a step
// would need n < 0.
std::vector<VTerm> reduce_V(const VTerm& v);

std::string to_string(const VTerm& v);

}  // namespace momentrec

#endif  // MOMENTREC_VACUUM_HPP
