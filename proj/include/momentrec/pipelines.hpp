#ifndef MOMENTREC_PIPELINES_HPP
#define MOMENTREC_PIPELINES_HPP

#include <string>
#include <vector>

#include "momentrec/mellin.hpp"
#include "momentrec/recurrence.hpp"
#include "momentrec/symmetric_power.hpp"

namespace momentrec {

// Recurrence for c_{n,k} = int_0^oo t^k K0(t)^n dt: the commutative
// symmetric power of theta^2 - t^2 followed by theta -> -1-k-j.
Recurrence rec_c(int n);

// Recurrence for C_{n,k}, where c_{n,k} = n! k! / 2^n C_{n,k}.
Recurrence rec_C(int n);

enum class MomentFamily { kLower, kUpper };  // c and C

struct ShapeReport {
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

// Even offsets <= n+1, offset-0 coefficient +-(k+1)^(n+1) for c and
// +-(k+1)^n for C, and deg P_{n,j} <= n+1-j for c.
ShapeReport shape_check(const Recurrence& r, int n, MomentFamily family);

// u b'' + 2(1+u^2) b' + 2u b = 0, b(u) = sqrt(pi) erf(u) / (2u).
DOperator box_b_ode();
// 2u^2 d''' + 4u(3+u^2) d'' + 4(3+4u^2) d' + 8u d = 0.
DOperator box_d_ode();

enum class BoxKind { kB, kDelta };

// Difference equation in s for B_n(s) (sequence "B") or Delta_n(s)
// (sequence "Delta"), from
//   F_n(-s) = 2 / Gamma(s/2) * int_0^oo u^(s-1) f(u)^n du,   f = b or d,
// i.e. the Mellin moments of f^n, the Gamma(s/2) weight, then s -> -s.
Recurrence box_recurrence(BoxKind kind, int n);

}  // namespace momentrec

#endif  // MOMENTREC_PIPELINES_HPP
