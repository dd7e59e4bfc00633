#include <random>
#include <variant>

#include "doctest.h"
#include "golden.hpp"
#include "momentrec/error.hpp"
#include "momentrec/operator_json.hpp"
#include "momentrec/operators.hpp"
#include "oracles.hpp"

using namespace momentrec;
using golden::d_op;
using golden::poly;
using golden::theta_op;

namespace {

ThetaOperator mul(const ThetaOperator& a, const ThetaOperator& b) {
  return std::get<ThetaOperator>(op_mul(Operator(a), Operator(b)));
}

DOperator mul(const DOperator& a, const DOperator& b) {
  return std::get<DOperator>(op_mul(Operator(a), Operator(b)));
}

DOperator t_power(int rho) { return DOperator::monomial("t", 1, rho, 0); }

}  // namespace

TEST_CASE("op_mul examples") {
  const ThetaOperator theta = ThetaOperator::theta();
  const ThetaOperator t = theta_op({{1, 0, 1}});
  CHECK(mul(theta, t) == theta_op({{1, 1, 1}, {1, 0, 1}}));
  CHECK(mul(theta, theta_op({{2, 1, 1}})) == theta_op({{2, 2, 1}, {2, 1, 2}}));

  const ThetaOperator step = mul(theta, theta_op({{0, 2, 1}, {2, 0, -2}})) - mul(theta_op({{2, 0, 2}}), theta);
  CHECK(step == theta_op({{0, 3, 1}, {2, 1, -4}, {2, 0, -4}}));

  const DOperator d = DOperator::monomial("t", 1, 0, 1);
  const DOperator td = DOperator::monomial("t", 1, 1, 0);
  CHECK(mul(d, td) == d_op({{1, 1, 1}, {0, 0, 1}}));

  CHECK_THROWS_AS(op_mul(Operator(theta), Operator(d)), UsageError);
  CHECK_THROWS_AS(op_mul(Operator(theta), Operator(ThetaOperator::theta("u"))), UsageError);
}

TEST_CASE("op_apply_monomial examples") {
  const ThetaOperator a = theta_op({{0, 2, 1}, {2, 0, -1}});
  CHECK(op_apply_monomial(a, 3) == poly("t", {0, 0, 0, 9, 0, -1}));
  for (int m = 0; m < 6; ++m) {
    CHECK(op_apply_monomial(ThetaOperator::identity(), m) == Polynomial::monomial("t", 1, m));
    CHECK(op_apply_monomial(DOperator::identity(), m) == Polynomial::monomial("t", 1, m));
  }
  CHECK(op_apply_monomial(d_op({{0, 1, 1}}), 4) == poly("t", {0, 0, 0, 4}));
  CHECK(op_apply_monomial(d_op({{0, 1, 1}}), 0).is_zero());
}

TEST_CASE("L5 acts on t^2 like its factored construction") {
  // L2 = theta L1 - 4t^2 L0, L3 = theta L2 - 6t^2 L1, ... for n = 4.
  const ThetaOperator theta = ThetaOperator::theta();
  std::vector<ThetaOperator> chain = {ThetaOperator::identity(), theta};
  for (int j = 1; j <= 4; ++j) {
    const ThetaOperator b = theta_op({{2, 0, -static_cast<long>(j * (4 - j + 1))}});
    chain.push_back(mul(theta, chain[j]) + mul(b, chain[j - 1]));
  }
  CHECK(chain[5] == golden::chain_k0_n4(5));
  const Polynomial t2 = Polynomial::monomial("t", 1, 2);
  CHECK(op_apply(golden::chain_k0_n4(5), t2) == oracle::act(golden::chain_k0_n4(5), t2));
  CHECK(op_apply_monomial(chain[5], 2) == op_apply_monomial(golden::l5_by_t(), 2));
}

TEST_CASE("d_to_theta examples") {
  const ThetaForm euler = d_to_theta(d_op({{2, 2, 1}, {1, 1, 1}}));
  CHECK(euler.rho == 0);
  CHECK(euler.op == theta_op({{0, 2, 1}}));

  const ThetaForm k4 = d_to_theta(golden::k0_power4_ode());
  CHECK(k4.rho == 1);
  CHECK(k4.op == golden::chain_k0_n4(5));
  CHECK(golden::l5_by_t() == golden::chain_k0_n4(5));

  const ThetaForm k2 = d_to_theta(golden::k0_power2_ode());
  CHECK(k2.rho == 1);
  CHECK(k2.op == theta_op({{0, 3, 1}, {2, 1, -4}, {2, 0, -4}}));

  const ThetaForm plain = d_to_theta(d_op({{0, 1, 1}, {0, 0, 1}}));
  CHECK(plain.rho == 1);
  CHECK(plain.op == theta_op({{0, 1, 1}, {1, 0, 1}}));
}

TEST_CASE("theta_to_d examples") {
  CHECK(theta_to_d(theta_op({{0, 2, 1}})) == d_op({{2, 2, 1}, {1, 1, 1}}));
  CHECK(theta_to_d(theta_op({{0, 2, 1}, {2, 0, -1}})) == golden::k0_ode());
  // eqK0 is t (t y')' - t^2 y = t^2 y'' + t y' - t^2 y, so this is t times the
  // printed operator t y'' + y' - t y.
  CHECK(golden::k0_ode() == mul(t_power(1), d_op({{1, 2, 1}, {0, 1, 1}, {1, 0, -1}})));
  CHECK(theta_to_d(golden::chain_k0_n4(5)) == mul(t_power(1), golden::k0_power4_ode()));
}

TEST_CASE("action is a homomorphism") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const ThetaOperator a = oracle::random_theta(rng);
    const ThetaOperator b = oracle::random_theta(rng);
    const DOperator c = oracle::random_d(rng);
    const DOperator d = oracle::random_d(rng);
    for (int m = 0; m <= 8; ++m) {
      CHECK(op_apply_monomial(mul(a, b), m) == oracle::act(a, oracle::act(b, Polynomial::monomial("t", 1, m))));
      CHECK(op_apply_monomial(mul(c, d), m) == oracle::act(c, oracle::act(d, Polynomial::monomial("t", 1, m))));
      CHECK(op_apply_monomial(a, m) == oracle::act(a, Polynomial::monomial("t", 1, m)));
      CHECK(op_apply_monomial(c, m) == oracle::act(c, Polynomial::monomial("t", 1, m)));
    }
  }
}

TEST_CASE("normal form is unique") {
  // Two operators built by different routes are equal exactly when their
  // actions on t^0 .. t^(degree + order) agree.
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const DOperator a = oracle::random_d(rng);
    const DOperator b = oracle::random_d(rng);
    const DOperator ab = mul(a, b);
    const DOperator via_theta = [&] {
      const ThetaForm f = d_to_theta(ab);
      return theta_to_d(f.op);
    }();
    const DOperator shifted = mul(t_power(d_to_theta(ab).rho), ab);
    CHECK(via_theta == shifted);

    const DOperator other = ab + DOperator::monomial("t", 1, trial % 5, trial % 3);
    bool differs = false;
    const int top = std::max(0, ab.t_degree()) + std::max(0, ab.order()) + 5;
    for (int m = 0; m <= top; ++m) {
      if (!(op_apply_monomial(ab, m) == op_apply_monomial(other, m))) differs = true;
    }
    CHECK(differs);
    CHECK(!(ab == other));
  }
}

TEST_CASE("round trip through the theta form") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const DOperator a = oracle::random_d(rng);
    const ThetaForm f = d_to_theta(a);
    CHECK(theta_to_d(f.op) == mul(t_power(f.rho), a));
    if (f.rho > 0) {
      // rho is minimal: one power less leaves some t^i D^j with i < j.
      const DOperator less = mul(t_power(f.rho - 1), a);
      bool has_low = false;
      for (const auto& [ij, c] : less.terms()) has_low = has_low || ij.first < ij.second;
      CHECK(has_low);
    }
    const ThetaOperator b = oracle::random_theta(rng);
    CHECK(d_to_theta(theta_to_d(b)).rho == 0);
    CHECK(d_to_theta(theta_to_d(b)).op == b);
  }
}

TEST_CASE("composition is associative") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const ThetaOperator a = oracle::random_theta(rng, 4);
    const ThetaOperator b = oracle::random_theta(rng, 4);
    const ThetaOperator c = oracle::random_theta(rng, 4);
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
    const DOperator x = oracle::random_d(rng, 4);
    const DOperator y = oracle::random_d(rng, 4);
    const DOperator z = oracle::random_d(rng, 4);
    CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
  }
}

TEST_CASE("primitive normalization") {
  const DOperator scaled = golden::k0_power4_ode() * BigRational(-6, 5);
  CHECK(primitive_normalize(scaled) == golden::k0_power4_ode());
  const DOperator times_t = mul(t_power(3), golden::k0_power2_ode());
  CHECK(primitive_normalize(times_t) == golden::k0_power2_ode());
  CHECK_THROWS_AS(primitive_normalize(DOperator("t")), UsageError);
}

TEST_CASE("operator JSON round trip") {
  const Operator ops[] = {Operator(golden::chain_k0_n4(5)), Operator(golden::k0_power4_ode()),
                          Operator(d_op({{0, 1, 1}, {0, 0, 1}}) * BigRational(1, 3))};
  for (const auto& op : ops) {
    const auto j = operator_to_json(op);
    CHECK(operator_to_json(operator_from_json(j)) == j);
    CHECK(operator_from_json(j) == op);
  }
  CHECK_THROWS_AS(operator_from_json(nlohmann::json::parse(R"({"kind":"x","variable":"t","terms":[]})")),
                  UsageError);
  CHECK_THROWS_AS(
      operator_from_json(nlohmann::json::parse(R"({"kind":"d","variable":"t","terms":[{"t":-1,"order":0,"coeff":"1"}]})")),
      UsageError);
  CHECK_THROWS_AS(
      operator_from_json(nlohmann::json::parse(R"({"kind":"d","variable":"t","terms":[{"t":0,"order":0,"coeff":"1/0"}]})")),
      UsageError);
  CHECK_THROWS_AS(operator_from_json(nlohmann::json::parse("[1,2]")), UsageError);
}
