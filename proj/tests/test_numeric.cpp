#include <algorithm>
#include <cmath>
#include <map>

#include "doctest.h"
#include "golden.hpp"
#include "momentrec/constants.hpp"
#include "momentrec/error.hpp"
#include "momentrec/moments.hpp"
#include "momentrec/pipelines.hpp"
#include "momentrec/quadrature.hpp"
#include "momentrec/real.hpp"
#include "momentrec/special.hpp"
#include "momentrec/taylor.hpp"
#include "momentrec/vacuum.hpp"
#include "momentrec/verify.hpp"
#include "oracles.hpp"

using namespace momentrec;

namespace {

constexpr int kP = 30;
const mpfr_prec_t kBits = digits_to_bits(kP + 10);

Real R(const char* text) { return Real::parse(text, kBits); }
Real R(int v) { return Real(static_cast<long>(v), kBits); }
Real tol(int exponent) { return pow10(exponent, kBits); }

// c_{1,k} = 2^(k-1) Gamma((k+1)/2)^2
Real c1_closed(long k) {
  const Real g = gamma(Real(BigRational(k + 1, 2), kBits));
  return ldexp(g * g, k - 1);
}

Real poly_at(const Polynomial& p, long x) { return Real(oracle::eval(p, BigRational(x)), kBits); }

}  // namespace

TEST_CASE("K0 values") {
  const HighPrecReal k1 = eval_K0(R(1), kP);
  CHECK(k1.digits == kP);
  CHECK(relative_difference(k1.value, R(golden::kK0At1)) < tol(-29));

  // K0(t) ~ sqrt(pi/(2t)) e^-t
  const Real t = R(30);
  const Real scaled = eval_K0(t, 20).value * sqrt(t * 2 / const_pi(kBits)) * exp(t);
  CHECK(abs(scaled - R(1)) < R("0.02"));

  // K0(t) + ln t -> ln 2 - gamma
  const Real small = R("1e-6");
  const Real limit = const_log2(kBits) - const_euler(kBits);
  CHECK(abs(eval_K0(small, 20).value + log(small) - limit) < tol(-10));

  CHECK_THROWS_AS(eval_K0(R(0), kP), DomainError);
  CHECK_THROWS_AS(eval_K0(R(-1), kP), DomainError);
}

TEST_CASE("K0 and K1 by two methods") {
  for (const char* p : {"1e-4", "0.01", "0.3", "1", "2", "3.7", "10", "25", "50"}) {
    CAPTURE(p);
    const Real t = R(p);
    const BesselK01 a = bessel_k01_trapezoid(t, kP);
    const BesselK01 b = bessel_k01_series(t, kP);
    const BesselK01 c = bessel_k01(t, kP);
    CHECK(relative_difference(a.k0, b.k0) < tol(1 - kP));
    CHECK(relative_difference(a.k1, b.k1) < tol(1 - kP));
    CHECK(relative_difference(a.k0, c.k0) < tol(1 - kP));
    CHECK(relative_difference(a.k1, c.k1) < tol(1 - kP));
  }
}

TEST_CASE("K1 is minus the derivative of K0") {
  const TaylorSeries y = k0_taylor(R("1.3"), 3, kP);
  const Real k1 = eval_special(SpecialFunction::kK1, R("1.3"), kP).value;
  CHECK(relative_difference(-y.derivative(1), k1) < tol(1 - kP));
  // Second derivative from the equation: K0'' = K0 - K0'/t.
  CHECK(relative_difference(y.derivative(2), y.coeffs[0] - y.derivative(1) / R("1.3")) < tol(1 - kP));
}

TEST_CASE("special functions") {
  CHECK(abs(eval_special(SpecialFunction::kB, R("1e-8"), 20).value - R(1)) < tol(-15));
  CHECK(abs(eval_special(SpecialFunction::kD, R("1e-8"), 20).value - R(1)) < tol(-15));
  CHECK(relative_difference(eval_special(SpecialFunction::kB, R(0), 20).value, R(1)).is_zero());
  const Real half_sqrt_pi = sqrt(const_pi(kBits)) / 2;
  CHECK(abs(eval_special(SpecialFunction::kB, R(50), 20).value * 50 - half_sqrt_pi) < tol(-15));

  for (const char* p : {"0.2", "0.99", "1.01", "3"}) {
    CAPTURE(p);
    const Real u = R(p);
    const Real e = erf(u);
    CHECK(relative_difference(eval_special(SpecialFunction::kErf, u, kP).value, e) < tol(1 - kP));
    const Real b = half_sqrt_pi * e / u;
    CHECK(relative_difference(eval_special(SpecialFunction::kB, u, kP).value, b) < tol(1 - kP));
    const Real d = (exp(-(u * u)) - 1 + sqrt(const_pi(kBits)) * u * e) / (u * u);
    CHECK(relative_difference(eval_special(SpecialFunction::kD, u, kP).value, d) < tol(1 - kP));
  }
  CHECK_THROWS_AS(eval_special(SpecialFunction::kK1, R(0), kP), DomainError);
  CHECK_THROWS_AS(eval_special(SpecialFunction::kB, R(-1), kP), DomainError);
}

TEST_CASE("constants") {
  CHECK(relative_difference(constant(Constant::kZeta3, kP).value, R(golden::kZeta3)) < tol(-29));
  CHECK(relative_difference(constant(Constant::kLMinus3At2, 20).value, R(golden::kLMinus3At2)) < tol(-15));
  for (Constant c : {Constant::kZeta3, Constant::kLMinus3At2, Constant::kEulerGamma, Constant::kLn2}) {
    for (int digits : {20, 30, 50}) {
      CAPTURE(constant_name(c));
      CAPTURE(digits);
      const mpfr_prec_t bits = digits_to_bits(digits + 10);
      const Real a = constant_primary(c, digits);
      const Real b = constant_secondary(c, digits);
      CHECK(relative_difference(a, b) < pow10(1 - digits, bits));
    }
    CHECK(parse_constant(constant_name(c)) == c);
  }
  CHECK_THROWS_AS(parse_constant("pi"), UsageError);
  CHECK(relative_difference(constant(Constant::kEulerGamma, kP).value, const_euler(kBits)) < tol(-kP));
  CHECK(relative_difference(constant(Constant::kLn2, kP).value, const_log2(kBits)) < tol(-kP));

  // psi1(1) = pi^2/6
  const Real pi = const_pi(kBits);
  CHECK(relative_difference(trigamma(R(1), kP), pi * pi / 6) < tol(-kP));
  // psi1(1/3) + psi1(2/3) = 4 pi^2 / 3
  const Real third(BigRational(1, 3), kBits);
  const Real two_thirds(BigRational(2, 3), kBits);
  CHECK(relative_difference(trigamma(third, kP) + trigamma(two_thirds, kP), pi * pi * 4 / 3) < tol(-kP));

  // Ties the constants to the small-t behaviour of K0.
  const Real t = R("1e-12");
  const Real limit = constant(Constant::kLn2, kP).value - constant(Constant::kEulerGamma, kP).value;
  CHECK(abs(eval_K0(t, kP).value + log(t) - limit) < tol(-20));
}

TEST_CASE("tanh-sinh rule") {
  TanhSinh rule(R(0), R(1), kP);
  const QuadratureResult log_int = rule.integrate([](const Real& x) { return -log(x); });
  CHECK(log_int.converged);
  CHECK(relative_difference(log_int.value, R(1)) < tol(-kP));
  CHECK(log_int.last_change < tol(-kP));
  const QuadratureResult inv_sqrt = rule.integrate([](const Real& x) { return R(1) / sqrt(x); });
  CHECK(relative_difference(inv_sqrt.value, R(2)) < tol(-kP));
  TanhSinh shifted(R(1), R(3), kP);
  const QuadratureResult poly = shifted.integrate([](const Real& x) { return x * x; });
  CHECK(relative_difference(poly.value, Real(BigRational(26, 3), kBits)) < tol(-kP));

  const GaussRule g = gauss_legendre(0.0, 2.0);
  double s = 0;
  for (std::size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * std::pow(g.x[i], 5);
  CHECK(s == doctest::Approx(32.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("moments of K0") {
  CHECK(relative_difference(moment_c(1, 0, kP).value, const_pi(kBits) / 2) < tol(-kP));
  BesselQuadrature q(kP);
  for (int k = 0; k <= 8; ++k) {
    CAPTURE(k);
    CHECK(relative_difference(moment_c(q, 1, k).value, c1_closed(k)) < tol(-kP));
  }
  // C_{n,k} = 2^n c_{n,k} / (n! k!)
  CHECK(relative_difference(c_to_C(R(6), 3, 2), R(4)) < tol(-kP));
  const Real c41 = moment_C(q, 4, 1).value;
  const Real zeta3 = constant(Constant::kZeta3, kP).value;
  CHECK(relative_difference(c41, zeta3 * 7 / 12) < tol(5 - kP));
  const Real c31 = moment_C(q, 3, 1).value;
  CHECK(relative_difference(c31, constant(Constant::kLMinus3At2, kP).value) < tol(5 - kP));
}

TEST_CASE("vacuum integrals") {
  BesselQuadrature q(kP);
  const Real v111 = moment_V(q, 1, 1, 1).value;
  const Real v002 = moment_V(q, 0, 0, 2).value;
  CHECK(relative_difference(v111, -v002) < tol(-20));
  const Real v221 = moment_V(q, 2, 2, 1).value;
  const Real rhs = moment_V(q, 0, 0, 3).value * 4 / 3 - moment_V(q, 1, 0, 3).value / 2;
  CHECK(relative_difference(v221, rhs) < tol(-20));
  CHECK(moment_V(q, 0, 0, 1).value.sign() < 0);
  // V(0,1,0) = int x K0 = 1
  CHECK(relative_difference(moment_V(q, 0, 1, 0).value, R(1)) < tol(-kP));
  CHECK_THROWS_AS(moment_V(q, 1, 0, 0), DomainError);
}

TEST_CASE("reductions of V agree with quadrature") {
  BesselQuadrature q(kP);
  const VTerm cases[] = {{1, 1, 1, 1}, {2, 2, 1, 1}, {2, 1, 2, 1}, {3, 2, 2, 1}, {3, 3, 1, 1}, {4, 1, 3, 1}};
  for (const VTerm& v : cases) {
    CAPTURE(to_string(v));
    Real sum(0, kBits);
    for (const VTerm& t : reduce_V(v)) sum += moment_V(q, t.n, t.a, t.b).value * Real(t.coeff, kBits);
    CHECK(relative_difference(sum, moment_V(q, v.n, v.a, v.b).value) < tol(-20));
  }
}

TEST_CASE("box moments") {
  CHECK(box_direct(4, 2.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-8));
  CHECK(box_direct(1, 1.0) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(box_direct(1, 3.0) == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(box_direct(2, 2.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  CHECK(box_direct(1, 0.5) == doctest::Approx(1.0 / 1.5).epsilon(1e-8));
  CHECK_THROWS_AS(box_direct(5, 1.0), DomainError);
  CHECK_THROWS_AS(box_direct(2, 0.0), DomainError);

  // 2/Gamma(s/2) M_b(1, s) = B_1(-s) = 1/(1-s), and the same for d with
  // Delta_1(-s) = 2/((1-s)(2-s)).
  for (const char* p : {"0.3", "0.5", "0.7"}) {
    CAPTURE(p);
    const Real s = R(p);
    const Real w = R(2) / gamma(s / 2);
    const Real mb = moment_box(BoxMoment::kMb, 1, s, kP).value * w;
    CHECK(relative_difference(mb, R(1) / (R(1) - s)) < tol(5 - kP));
    const Real md = moment_box(BoxMoment::kMd, 1, s, kP).value * w;
    CHECK(relative_difference(md, R(2) / ((R(1) - s) * (R(2) - s))) < tol(5 - kP));
  }
  CHECK_THROWS_AS(moment_box(BoxMoment::kMb, 2, R(2), kP), DomainError);
  CHECK_THROWS_AS(moment_box(BoxMoment::kMd, 2, R(0), kP), DomainError);
}

TEST_CASE("B4(-1) from the 1-D representation matches the recurrence run backwards") {
  // The difference equation at s = -1 links B4(-1) to B4(1), B4(3), B4(5), B4(7).
  const Recurrence r = box_recurrence(BoxKind::kB, 4);
  const long s = -1;
  double acc = 0;
  for (const auto& term : r.terms) {
    if (term.offset == 0) continue;
    acc += poly_at(term.coeff, s).to_double() * box_direct(4, static_cast<double>(s + term.offset));
  }
  const double b_minus1 = -acc / poly_at(r.coefficient(0), s).to_double();
  const double via_mb =
      (moment_box(BoxMoment::kMb, 4, R(1), 20).value * R(2) / gamma(R(1) / 2)).to_double();
  CHECK(b_minus1 == doctest::Approx(via_mb).epsilon(1e-6));
}

TEST_CASE("recurrence residuals") {
  BesselQuadrature q(kP);
  const ResidualReport c4 = check_recurrence(rec_C(4), moment_table(q, 4, 0, 10, true), kP, "C4");
  CHECK(c4.max_relative_residual < tol(-15));
  CHECK(c4.per_k.size() == 7);
  CHECK(!c4.degenerate());

  std::map<long, Real> zeros;
  for (long k = 0; k <= 6; ++k) zeros.emplace(k, R(0));
  const ResidualReport z = check_recurrence(rec_C(2), zeros, kP);
  CHECK(z.degenerate());
  CHECK(z.max_relative_residual.is_zero());

  std::map<long, Real> closed;
  for (long k = 0; k <= 12; ++k) closed.emplace(k, c_to_C(c1_closed(k), 1, static_cast<int>(k)));
  CHECK(check_recurrence(rec_C(1), closed, kP).max_relative_residual < tol(-25));

  std::map<long, Real> sparse = {{0, R(1)}, {1, R(1)}};
  CHECK_THROWS_AS(check_recurrence(rec_C(4), sparse, kP), UsageError);

  // A wrong value is caught.
  closed[6] *= R("1.000001");
  CHECK(check_recurrence(rec_C(1), closed, kP).max_relative_residual > tol(-8));

  const auto j = report_to_json(c4);
  CHECK(j["target"] == "C4");
  CHECK(j["P"] == kP);
  CHECK(j["per_k"].size() == 7);
}

TEST_CASE("c_{n,k} quadrature satisfies rec_c, n <= 6") {
  BesselQuadrature q(kP);
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const auto values = moment_table(q, n, 0, 10, false);
    CHECK(check_recurrence(rec_c(n), values, kP).max_relative_residual < tol(-15));
  }
}

TEST_CASE("transport to k = 20") {
  BesselQuadrature q(kP);
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const Recurrence r = rec_c(n);
    // The recurrence steps by 2, so each parity class needs max_offset/2
    // starting values: k <= 3 for n <= 4, k <= 5 for n = 5, 6.
    const long last_start = std::max(3, r.max_offset() - 1);
    const auto start = moment_table(q, n, 0, last_start, false);
    const auto moved = transport(r, start, 20);
    const Real direct = moment_c(q, n, 20).value;
    CHECK(relative_difference(moved.at(20), direct) < tol(8 - kP));
    if (last_start > 3) CHECK_THROWS_AS(transport(r, moment_table(q, n, 0, 3, false), 20), UsageError);
  }
  std::map<long, Real> odd_only = {{1, R(1)}, {3, R(1)}, {5, R(1)}};
  CHECK_THROWS_AS(transport(rec_c(4), odd_only, 20), UsageError);
}

TEST_CASE("identity suite") {
  const IdentityReport report = check_identities(kP);
  CHECK(report.passed());
  CHECK(report.checks.size() == 5);
  for (const auto& c : report.checks) {
    CAPTURE(c.name);
    CHECK(c.passed);
  }
  CHECK_THROWS_AS(check_identities(9), UsageError);
  CHECK_THROWS_AS(check_identities(51), UsageError);
}
