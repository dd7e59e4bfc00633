#include "momentrec/pipelines.hpp"

#include "momentrec/dfinite_closure.hpp"
#include "momentrec/error.hpp"

namespace momentrec {

Recurrence rec_c(int n) {
  if (n < 1) throw UsageError("rec_c needs n >= 1");
  const ThetaOperator l = symmetric_power_commutative(SecondOrderTheta::bessel_k0(), n);
  return mellin_recurrence_theta(l, "c", n, "k");
}

Recurrence rec_C(int n) {
  const WeightRatio factorial{1, RationalFunction(Polynomial::linear("k", 1, 1))};
  return apply_weight(rec_c(n), factorial, "C");
}

ShapeReport shape_check(const Recurrence& r, int n, MomentFamily family) {
  ShapeReport report;
  auto fail = [&report](std::string why) { report.violations.push_back(std::move(why)); };
  if (r.terms.empty() || r.terms.front().offset != 0) fail("recurrence is not anchored at offset 0");
  for (const auto& t : r.terms) {
    if (t.offset % 2 != 0) fail("odd offset " + std::to_string(t.offset));
    if (t.offset > n + 1) fail("offset " + std::to_string(t.offset) + " exceeds n+1");
    if (family == MomentFamily::kLower && t.offset > 0 && t.coeff.degree() > n + 1 - t.offset) {
      fail("degree of coefficient at offset " + std::to_string(t.offset) + " exceeds n+1-j");
    }
  }
  const int power = family == MomentFamily::kLower ? n + 1 : n;
  Polynomial expected = Polynomial::constant(r.variable, 1);
  for (int i = 0; i < power; ++i) expected *= Polynomial::linear(r.variable, 1, 1);
  const Polynomial lead = r.coefficient(0);
  if (!(lead == expected || lead == -expected)) {
    fail("offset-0 coefficient is not +-(k+1)^" + std::to_string(power));
  }
  return report;
}

DOperator box_b_ode() {
  DOperator op("u");
  op.add_term(1, 2, 1);
  op.add_term(0, 1, 2);
  op.add_term(2, 1, 2);
  op.add_term(1, 0, 2);
  return op;
}

DOperator box_d_ode() {
  DOperator op("u");
  op.add_term(2, 3, 2);
  op.add_term(1, 2, 12);
  op.add_term(3, 2, 4);
  op.add_term(0, 1, 12);
  op.add_term(2, 1, 16);
  op.add_term(1, 0, 8);
  return op;
}

Recurrence box_recurrence(BoxKind kind, int n) {
  if (n < 1) throw UsageError("box recurrence needs n >= 1");
  const std::string name = kind == BoxKind::kB ? "B" : "Delta";
  // Moments m_j = int_0^oo u^j f(u)^n du, written in the variable s.
  Recurrence moments;
  if (kind == BoxKind::kB) {
    const auto theta_form = d_to_theta(box_b_ode());
    const auto base = SecondOrderTheta::from_operator(theta_form.op);
    moments = mellin_recurrence_theta(symmetric_power_commutative(base, n), "m", n, "s");
  } else {
    // Order 3: no second-order fast path, go through the general closure.
    moments = mellin_recurrence_d(power_annihilator(box_d_ode(), n), "m", n, "s");
  }
  // M(s) = int u^(s-1) f^n du = m_{s-1}
  const Recurrence mellin = reindex(moments, {1, -1}, "M");
  // M(s) = Gamma(s/2)/2 * F(-s), Gamma((s+2)/2) = (s/2) Gamma(s/2).
  const WeightRatio gamma_half{2, RationalFunction(Polynomial::linear("s", 0, BigRational(1, 2)))};
  const Recurrence reflected = apply_weight(mellin, gamma_half, name);
  // F(s) = reflected(-s)
  return reindex(reflected, {-1, 0}, name);
}

}  // namespace momentrec
