#include <map>
#include <random>
#include <utility>

#include "doctest.h"
#include "golden.hpp"
#include "momentrec/dfinite_closure.hpp"
#include "momentrec/error.hpp"
#include "momentrec/operators.hpp"
#include "momentrec/pipelines.hpp"
#include "momentrec/real.hpp"
#include "momentrec/symmetric_power.hpp"
#include "momentrec/taylor.hpp"
#include "oracles.hpp"

using namespace momentrec;
using golden::d_op;
using golden::poly;

namespace {

constexpr int kDigits = 30;
const char* kPoints[] = {"0.7", "1.3", "2.1"};

Real tolerance() { return pow10(5 - kDigits, digits_to_bits(kDigits)); }

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Truncated expansion sum c[m][i] t^m ln^i t at t = 0.
class LogSeries {
 public:
  LogSeries(int order, mpfr_prec_t bits) : order_(order), bits_(bits) {}

  Real& at(int m, int i) {
    auto it = c_.find({m, i});
    if (it == c_.end()) it = c_.emplace(std::make_pair(m, i), Real(0, bits_)).first;
    return it->second;
  }
  const std::map<std::pair<int, int>, Real>& terms() const { return c_; }

  LogSeries operator*(const LogSeries& o) const {
    LogSeries out(order_, bits_);
    for (const auto& [a, x] : c_) {
      for (const auto& [b, y] : o.c_) {
        if (a.first + b.first > order_) continue;
        out.at(a.first + b.first, a.second + b.second) += x * y;
      }
    }
    return out;
  }

  // theta (t^m ln^i t) = m t^m ln^i t + i t^m ln^(i-1) t
  LogSeries theta() const {
    LogSeries out(order_, bits_);
    for (const auto& [mi, x] : c_) {
      out.at(mi.first, mi.second) += x * mi.first;
      if (mi.second > 0) out.at(mi.first, mi.second - 1) += x * mi.second;
    }
    return out;
  }

 private:
  int order_;
  mpfr_prec_t bits_;
  std::map<std::pair<int, int>, Real> c_;
};

// K0(t) = -ln t I0(t) + sum q_m (H_m + ln 2 - gamma), q_m = (t^2/4)^m / m!^2.
LogSeries k0_log_series(int order, mpfr_prec_t bits) {
  LogSeries s(order, bits);
  const Real shift = const_log2(bits) - const_euler(bits);
  Real q(1, bits);
  Real h(0, bits);
  for (int m = 0; 2 * m <= order; ++m) {
    if (m > 0) {
      q /= 4L * m * m;
      h += Real(BigRational(1, m), bits);
    }
    s.at(2 * m, 1) = -q;
    s.at(2 * m, 0) = q * (h + shift);
  }
  return s;
}

// Largest coefficient of L y, relative to the largest single contribution,
// over t^0 .. t^order. Only exact coefficients are inspected: every term
// t^j Q_j(theta) raises t-degrees, so truncation never leaks downward.
Real log_series_residual(const ThetaOperator& l, const LogSeries& y, int order, mpfr_prec_t bits) {
  LogSeries total(order, bits);
  Real scale(0, bits);
  for (const auto& [j, qj] : l.terms()) {
    LogSeries power = y;
    for (int p = 0; p <= qj.degree(); ++p) {
      if (p > 0) power = power.theta();
      if (sgn(qj.coeff(p)) == 0) continue;
      const Real c(qj.coeff(p), bits);
      for (const auto& [mi, x] : power.terms()) {
        if (mi.first + j > order) continue;
        const Real term = x * c;
        total.at(mi.first + j, mi.second) += term;
        if (abs(term) > scale) scale = abs(term);
      }
    }
  }
  Real worst(0, bits);
  for (const auto& [mi, x] : total.terms()) {
    if (abs(x) > worst) worst = abs(x);
  }
  return worst / scale;
}

Real worst_point_residual(const DOperator& l, const std::function<TaylorSeries(const Real&, int)>& witness) {
  const mpfr_prec_t bits = digits_to_bits(kDigits + 10);
  Real worst(0, bits);
  for (const char* p : kPoints) {
    const TaylorSeries h = witness(Real::parse(p, bits), l.order() + 1);
    const Real r = apply_at_point(l, h).relative();
    if (r > worst) worst = r;
  }
  return worst;
}

TaylorSeries k0_power(const Real& t0, int order, int n) { return power(k0_taylor(t0, order, kDigits), n); }

}  // namespace

TEST_CASE("kernel of the printed K0^2 system") {
  const RationalFunction zero("t");
  const RationalFunction one(poly("t", {1}));
  const RationalFunction two(poly("t", {2}));
  const RationalFunction inv_t(poly("t", {1}), poly("t", {0, 1}));
  AnsatzMatrix m;
  m.rows = {{one, zero, zero},
            {zero, two, zero},
            {two, RationalFunction(poly("t", {-2})) * inv_t, two},
            {RationalFunction(poly("t", {-2})) * inv_t, RationalFunction(poly("t", {4})) * (two + inv_t * inv_t),
             RationalFunction(poly("t", {-6})) * inv_t}};
  const auto v = kernel_vector(m);
  const std::vector<RationalFunction> printed = {poly("t", {0, -4}), poly("t", {1, 0, -4}), poly("t", {0, 3}),
                                                 poly("t", {0, 0, 1})};
  REQUIRE(v.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(v[i] * printed[3] == printed[i] * v[3]);
}

TEST_CASE("kernel of a matrix with a zero row") {
  const RationalFunction zero("t");
  const RationalFunction one(poly("t", {1}));
  AnsatzMatrix m;
  m.rows = {{one, zero}, {zero, zero}, {zero, one}};
  const auto v = kernel_vector(m);
  CHECK(v[0].is_zero());
  CHECK(v[1] == one);
  CHECK(v[2].is_zero());

  AnsatzMatrix bad;
  bad.rows = {{one, zero}, {zero, one}};
  CHECK_THROWS_AS(kernel_vector(bad), UsageError);
}

TEST_CASE("kernel of random 3x4 systems multiplies back to zero") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    AnsatzMatrix m;
    m.rows.assign(4, std::vector<RationalFunction>(3, RationalFunction("t")));
    for (auto& row : m.rows) {
      for (auto& e : row) {
        const Polynomial num = oracle::random_poly(rng, "t", 2);
        Polynomial den = oracle::random_poly(rng, "t", 1);
        if (den.is_zero()) den = Polynomial::constant("t", 1);
        e = RationalFunction(num, den);
      }
    }
    const auto v = kernel_vector(m);
    bool nonzero = false;
    for (const auto& e : v) nonzero = nonzero || !e.is_zero();
    CHECK(nonzero);
    for (std::size_t col = 0; col < 3; ++col) {
      RationalFunction acc("t");
      for (std::size_t i = 0; i < 4; ++i) acc += v[i] * m.rows[i][col];
      CHECK(acc.is_zero());
    }
    for (const auto& e : v) CHECK(e.is_polynomial());
  }
}

TEST_CASE("power_annihilator examples") {
  CHECK(power_annihilator(golden::k0_ode(), 2) == golden::k0_power2_ode());
  CHECK(power_annihilator(golden::k0_ode(), 4) == golden::k0_power4_ode());
  CHECK(power_annihilator(golden::k0_ode(), 1) == primitive_normalize(golden::k0_ode()));
  CHECK(power_annihilator(box_b_ode(), 1) == box_b_ode());
  CHECK_THROWS_AS(power_annihilator(DOperator("t"), 2), UsageError);
  CHECK_THROWS_AS(power_annihilator(d_op({{1, 0, 1}}), 2), UsageError);
}

TEST_CASE("power_annihilator order bounds") {
  for (int n = 1; n <= 6; ++n) CHECK(power_annihilator(golden::k0_ode(), n).order() == n + 1);
  for (int n = 1; n <= 3; ++n) {
    CHECK(power_annihilator(box_d_ode(), n).order() <= binomial(n + 2, 2));
    CHECK(power_ansatz(box_d_ode(), n).row_count() == static_cast<std::size_t>(binomial(n + 2, 2) + 1));
  }
}

TEST_CASE("power_annihilator agrees with the second-order chain") {
  const SecondOrderTheta k0 = SecondOrderTheta::bessel_k0();
  for (int n = 1; n <= 6; ++n) {
    const ThetaForm f = d_to_theta(power_annihilator(golden::k0_ode(), n));
    CHECK(primitive_normalize(f.op) == primitive_normalize(symmetric_power(k0, n).annihilator()));
  }
}

TEST_CASE("product_annihilator examples") {
  const DOperator plus = d_op({{0, 1, 1}, {0, 0, 1}});
  const DOperator minus = d_op({{0, 1, 1}, {0, 0, -1}});
  // e^-t e^t = 1
  const DOperator one = product_annihilator(plus, minus);
  CHECK(op_apply_monomial(one, 0).is_zero());
  CHECK(!one.is_zero());
  // e^-t e^-t = e^-2t: sum c_ij t^i (-2)^j vanishes identically.
  const DOperator sq = product_annihilator(plus, plus);
  Polynomial symbol("t");
  for (const auto& [ij, c] : sq.terms()) {
    BigRational w = c;
    for (int j = 0; j < ij.second; ++j) w *= -2;
    symbol += Polynomial::monomial("t", w, ij.first);
  }
  CHECK(symbol.is_zero());
  CHECK(worst_point_residual(sq, [](const Real& t0, int order) {
          return exp_taylor(BigRational(-2), t0, order, kDigits);
        }) < tolerance());

  const DOperator k0k0 = product_annihilator(golden::k0_ode(), golden::k0_ode());
  CHECK(k0k0.order() <= 4);
  CHECK(worst_point_residual(k0k0, [](const Real& t0, int order) { return k0_power(t0, order, 2); }) <
        tolerance());
  const mpfr_prec_t bits = digits_to_bits(kDigits + 10);
  const ThetaForm f = d_to_theta(k0k0);
  CHECK(log_series_residual(f.op, k0_log_series(12, bits) * k0_log_series(12, bits), 12, bits) < tolerance());

  CHECK_THROWS_AS(product_annihilator(DOperator("t"), plus), UsageError);
}

TEST_CASE("produced operators annihilate their witnesses") {
  const mpfr_prec_t bits = digits_to_bits(kDigits + 10);
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const DOperator l = power_annihilator(golden::k0_ode(), n);
    CHECK(worst_point_residual(l, [n](const Real& t0, int order) { return k0_power(t0, order, n); }) <
          tolerance());
    LogSeries y = k0_log_series(12, bits);
    LogSeries yn = y;
    for (int i = 1; i < n; ++i) yn = yn * y;
    CHECK(log_series_residual(d_to_theta(l).op, yn, 12, bits) < tolerance());
  }
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const DOperator lb = power_annihilator(box_b_ode(), n);
    CHECK(worst_point_residual(
              lb, [n](const Real& u0, int order) { return power(b_taylor(u0, order, kDigits), n); }) < tolerance());
  }
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const DOperator ld = power_annihilator(box_d_ode(), n);
    CHECK(worst_point_residual(
              ld, [n](const Real& u0, int order) { return power(d_taylor(u0, order, kDigits), n); }) < tolerance());
  }
}

TEST_CASE("a wrong operator is detected by the residual oracle") {
  DOperator l = golden::k0_power2_ode();
  l.add_term(0, 0, 1);
  CHECK(worst_point_residual(l, [](const Real& t0, int order) { return k0_power(t0, order, 2); }) >
        Real::parse("1e-3", 64));
}
