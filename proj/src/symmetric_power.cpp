#include "momentrec/symmetric_power.hpp"

#include <algorithm>

#include "momentrec/error.hpp"

namespace momentrec {

SecondOrderTheta SecondOrderTheta::bessel_k0(const std::string& variable) {
  return {Polynomial(variable), Polynomial::monomial(variable, -1, 2)};
}

SecondOrderTheta SecondOrderTheta::from_operator(const ThetaOperator& op) {
  if (op.order() != 2) throw UsageError("expected a second-order theta operator");
  const Polynomial lead = op.coefficient_of_theta(2);
  if (lead.degree() != 0) throw UsageError("theta^2 coefficient must be a nonzero constant");
  const BigRational inv = 1 / lead.leading();
  return {op.coefficient_of_theta(1) * inv, op.coefficient_of_theta(0) * inv};
}

ThetaOperator SecondOrderTheta::to_operator() const {
  ThetaOperator op = ThetaOperator::monomial(variable(), 1, 0, 2);
  for (int j = 0; j <= a.degree(); ++j) op.add_term(j, Polynomial::monomial(kThetaSymbol, a.coeff(j), 1));
  for (int j = 0; j <= b.degree(); ++j) op.add_term(j, Polynomial::monomial(kThetaSymbol, b.coeff(j), 0));
  return op;
}

bool SecondOrderTheta::is_bessel_k0() const {
  return a.is_zero() && b == Polynomial::monomial(b.variable(), -1, 2);
}

namespace {

// Left multiplication by a polynomial in t (commutes with nothing but is
// applied on the left, which is all the recursion needs).
ThetaOperator left_multiply(const Polynomial& p, const ThetaOperator& op) {
  ThetaOperator out(op.variable());
  for (int i = 0; i <= p.degree(); ++i) {
    if (sgn(p.coeff(i)) == 0) continue;
    for (const auto& [j, q] : op.terms()) out.add_term(i + j, q * p.coeff(i));
  }
  return out;
}

}  // namespace

SymPowerChain symmetric_power(const SecondOrderTheta& a, int n) {
  if (n < 1) throw UsageError("symmetric power needs n >= 1");
  SymPowerChain chain;
  chain.n = n;
  chain.base = a;
  const std::string& v = a.variable();
  const ThetaOperator theta = ThetaOperator::theta(v);
  chain.operators.push_back(ThetaOperator::identity(v));
  chain.operators.push_back(theta);
  for (int k = 1; k <= n; ++k) {
    const ThetaOperator& lk = chain.operators[static_cast<std::size_t>(k)];
    const ThetaOperator& lprev = chain.operators[static_cast<std::size_t>(k - 1)];
    ThetaOperator next = theta * lk;
    next += left_multiply(a.a * BigRational(k), lk);
    next += left_multiply(a.b * BigRational(k * (n - k + 1)), lprev);
    chain.operators.push_back(std::move(next));
  }
  return chain;
}

namespace {

// Dense commutative polynomial in (t, theta): grid[j][m] is the coefficient
// of t^j theta^m.
template <typename Coeff>
using Grid = std::vector<std::vector<Coeff>>;

template <typename Coeff>
std::vector<Coeff> to_coeffs(const Polynomial& p) {
  std::vector<Coeff> out;
  for (const auto& c : p.coefficients()) {
    if constexpr (std::is_same_v<Coeff, BigInt>) {
      out.push_back(c.get_num());
    } else {
      out.push_back(c);
    }
  }
  return out;
}

template <typename Coeff>
ThetaOperator commutative_chain(const SecondOrderTheta& base, int n) {
  const auto a = to_coeffs<Coeff>(base.a);
  const auto b = to_coeffs<Coeff>(base.b);
  const int deg_a = static_cast<int>(a.size()) - 1;
  const int deg_b = static_cast<int>(b.size()) - 1;

  Grid<Coeff> prev(1, std::vector<Coeff>(1, Coeff(1)));       // L~_0 = 1
  Grid<Coeff> cur(1, std::vector<Coeff>{Coeff(0), Coeff(1)});  // L~_1 = theta
  Coeff scaled;
  for (int k = 1; k <= n; ++k) {
    const int cur_t = static_cast<int>(cur.size()) - 1;
    const int prev_t = static_cast<int>(prev.size()) - 1;
    int next_t = cur_t;
    if (deg_a >= 0) next_t = std::max(next_t, cur_t + deg_a);
    if (deg_b >= 0) next_t = std::max(next_t, prev_t + deg_b);
    const auto width = static_cast<std::size_t>(k) + 2;  // theta degree k+1
    Grid<Coeff> next(static_cast<std::size_t>(next_t) + 1, std::vector<Coeff>(width));

    for (int j = 0; j <= cur_t; ++j) {
      const auto& row = cur[static_cast<std::size_t>(j)];
      auto& out = next[static_cast<std::size_t>(j)];
      for (std::size_t m = 0; m < row.size(); ++m) {
        if (sgn(row[m]) == 0) continue;
        if (j != 0) out[m] += row[m] * j;  // t d/dt
        out[m + 1] += row[m];              // theta *
        for (int i = 0; i <= deg_a; ++i) {
          if (sgn(a[static_cast<std::size_t>(i)]) == 0) continue;
          scaled = a[static_cast<std::size_t>(i)] * k;
          next[static_cast<std::size_t>(j + i)][m] += scaled * row[m];
        }
      }
    }
    const long mult = static_cast<long>(k) * (n - k + 1);
    for (int j = 0; j <= prev_t; ++j) {
      const auto& row = prev[static_cast<std::size_t>(j)];
      for (std::size_t m = 0; m < row.size(); ++m) {
        if (sgn(row[m]) == 0) continue;
        for (int i = 0; i <= deg_b; ++i) {
          if (sgn(b[static_cast<std::size_t>(i)]) == 0) continue;
          scaled = b[static_cast<std::size_t>(i)] * mult;
          next[static_cast<std::size_t>(j + i)][m] += scaled * row[m];
        }
      }
    }
    while (next.size() > 1 &&
           std::all_of(next.back().begin(), next.back().end(), [](const Coeff& c) { return sgn(c) == 0; })) {
      next.pop_back();
    }
    prev = std::move(cur);
    cur = std::move(next);
  }

  ThetaOperator out(base.variable());
  for (std::size_t j = 0; j < cur.size(); ++j) {
    std::vector<BigRational> q;
    q.reserve(cur[j].size());
    for (auto& c : cur[j]) q.emplace_back(c);
    out.add_term(static_cast<int>(j), Polynomial(kThetaSymbol, std::move(q)));
  }
  return out;
}

}  // namespace

ThetaOperator symmetric_power_commutative(const SecondOrderTheta& a, int n) {
  if (n < 1) throw UsageError("symmetric power needs n >= 1");
  if (a.a.has_integer_coefficients() && a.b.has_integer_coefficients()) {
    return commutative_chain<BigInt>(a, n);
  }
  return commutative_chain<BigRational>(a, n);
}

StructureReport check_structure(const SymPowerChain& chain) {
  if (!chain.base.is_bessel_k0()) {
    throw UsageError("structure check applies only to the chain of theta^2 - t^2");
  }
  StructureReport report;
  for (std::size_t idx = 0; idx < chain.operators.size(); ++idx) {
    const int k = static_cast<int>(idx);
    const ThetaOperator& op = chain.operators[idx];
    ++report.operators_checked;
    auto violate = [&](int m, std::string why) { report.violations.push_back({k, m, std::move(why)}); };
    if (op.order() != k) violate(k, "theta degree differs from k");
    const Polynomial lead = op.coefficient_of_theta(k);
    if (!(lead.degree() == 0 && lead.leading() == 1)) violate(k, "leading coefficient is not 1");
    if (k >= 1 && !op.coefficient_of_theta(k - 1).is_zero()) violate(k - 1, "theta^(k-1) coefficient nonzero");
    for (int m = 0; m <= k - 2; ++m) {
      const Polynomial c = op.coefficient_of_theta(m);
      if (c.is_zero()) continue;
      for (int i = 1; i <= c.degree(); i += 2) {
        if (sgn(c.coeff(i)) != 0) {
          violate(m, "odd power of t");
          break;
        }
      }
      if (sgn(c.coeff(0)) != 0) violate(m, "not divisible by t^2");
      if (c.degree() > k - m) violate(m, "degree exceeds k - j");
    }
  }
  return report;
}

}  // namespace momentrec
