#include "momentrec/moments.hpp"

#include <cmath>

#include "momentrec/error.hpp"

namespace momentrec {

BesselQuadrature::BesselQuadrature(int digits) : digits_(digits), bits_(digits_to_bits(digits + 10)) {}

BesselQuadrature::Piece& BesselQuadrature::piece(std::size_t index) {
  while (pieces_.size() <= index) {
    const std::size_t i = pieces_.size();
    const Real lo = i == 0 ? Real(0L, bits_) : ldexp(Real(1L, bits_), static_cast<long>(i) - 1);
    const Real hi = ldexp(Real(1L, bits_), static_cast<long>(i));
    pieces_.push_back({TanhSinh(lo, hi, digits_), {}});
  }
  return pieces_[index];
}

const BesselK01& BesselQuadrature::values(Piece& p, int level, std::size_t i, const QuadratureNode& node) {
  auto& cache = p.cache;
  if (static_cast<int>(cache.size()) <= level) cache.resize(level + 1);
  auto& row = cache[level];
  if (row.size() <= i) row.resize(p.rule.nodes(level).size());
  if (!row[i]) row[i] = bessel_k01(node.x, digits_);
  return *row[i];
}

Real BesselQuadrature::integrate(const Integrand& f, int decay, int power) {
  if (decay < 1) throw DomainError("integrand must decay exponentially");
  const double target = (digits_ + 15) * std::log(10.0);
  double cut = 2.0;
  while (decay * cut - power * std::log(cut) <= target) cut *= 2.0;
  Real total(bits_);
  const Real rel = pow10(-(digits_ + 5), bits_);
  for (std::size_t i = 0;; ++i) {
    Piece& p = piece(i);
    if (p.rule.lower().to_double() >= cut) break;
    const Real floor = rel * abs(total);
    auto integrand = [&](int level, std::size_t j, const QuadratureNode& node) {
      const BesselK01& v = values(p, level, j, node);
      return f(node.x, v.k0, v.k1);
    };
    const QuadratureResult r = p.rule.integrate(integrand, rel, floor);
    if (!r.converged) throw ArithmeticError("Bessel moment quadrature did not converge");
    total += r.value;
  }
  return total;
}

HighPrecReal moment_c(BesselQuadrature& q, int n, int k) {
  if (n < 1 || k < 0) throw DomainError("c_{n,k} needs n >= 1 and k >= 0");
  Real value = q.integrate(
      [n, k](const Real& t, const Real& k0, const Real&) { return pow(t, static_cast<long>(k)) * pow(k0, static_cast<long>(n)); },
      n, k);
  return {std::move(value), q.digits()};
}

HighPrecReal moment_c(int n, int k, int digits) {
  BesselQuadrature q(digits);
  return moment_c(q, n, k);
}

Real c_to_C(const Real& c, int n, int k) {
  BigInt denominator = 1;
  for (int i = 2; i <= n; ++i) denominator *= i;
  for (int i = 2; i <= k; ++i) denominator *= i;
  return ldexp(c, n) / Real(denominator, c.bits());
}

HighPrecReal moment_C(BesselQuadrature& q, int n, int k) {
  const HighPrecReal c = moment_c(q, n, k);
  return {c_to_C(c.value, n, k), c.digits};
}

HighPrecReal moment_V(BesselQuadrature& q, int n, int a, int b) {
  if (n < 0 || a < 0 || b < 0) throw DomainError("V needs nonnegative indices");
  if (a + b == 0) throw DomainError("V(n,0,0) diverges");
  Real value = q.integrate(
      [n, a, b](const Real& t, const Real& k0, const Real& k1) {
        Real f = pow(t, 2L * n + 1) * pow(k0, static_cast<long>(a));
        if (b > 0) f *= pow(-(t * k1), static_cast<long>(b));
        return f;
      },
      a + b, 2 * n + 1 + b);
  return {std::move(value), q.digits()};
}

HighPrecReal moment_V(int n, int a, int b, int digits) {
  BesselQuadrature q(digits);
  return moment_V(q, n, a, b);
}

namespace {

// Pieces [0, 2^-levels], [2^-levels, 2^(1-levels)], ..., [1/2, 1].
GaussRule graded_rule(int levels) {
  GaussRule all;
  double lo = 0.0;
  for (int i = levels; i >= 0; --i) {
    const double hi = std::ldexp(1.0, -i);
    const GaussRule piece = gauss_legendre(lo, hi);
    all.x.insert(all.x.end(), piece.x.begin(), piece.x.end());
    all.w.insert(all.w.end(), piece.w.begin(), piece.w.end());
    lo = hi;
  }
  return all;
}

// int_0^1 (a + r^2)^(s/2) dr for integer s >= 0, from
// (s+1) I_s = (a+1)^(s/2) + s a I_(s-2), I_0 = 1, I_-1 = asinh(1/sqrt(a)).
double inner_closed_form(double a, int s) {
  if (a == 0.0) return 1.0 / (s + 1);
  double value = s % 2 == 0 ? 1.0 : std::asinh(1.0 / std::sqrt(a));
  for (int m = s % 2 == 0 ? 2 : 1; m <= s; m += 2) {
    value = (std::pow(a + 1.0, 0.5 * m) + m * a * value) / (m + 1);
  }
  return value;
}

}  // namespace

double box_direct(int n, double s) {
  if (n < 1 || n > 4) throw DomainError("direct box quadrature supports 1 <= n <= 4");
  if (!(s > 0.0)) throw DomainError("direct box quadrature needs s > 0");
  const GaussRule rule = graded_rule(12);
  const std::size_t m = rule.x.size();
  const bool closed = std::floor(s) == s;
  // The first n-1 coordinates by the tensor rule, the last one either in
  // closed form or by the same graded rule.
  auto last = [&](double a) {
    if (closed) return inner_closed_form(a, static_cast<int>(s));
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) sum += rule.w[i] * std::pow(a + rule.x[i] * rule.x[i], 0.5 * s);
    return sum;
  };
  std::function<double(int, double)> nest = [&](int depth, double a) -> double {
    if (depth == n - 1) return last(a);
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) sum += rule.w[i] * nest(depth + 1, a + rule.x[i] * rule.x[i]);
    return sum;
  };
  return nest(0, 0.0);
}

HighPrecReal moment_box(BoxMoment kind, int n, const Real& s, int digits) {
  if (kind == BoxMoment::kBDirect) {
    const double value = box_direct(n, s.to_double());
    Real r(digits_to_bits(20));
    mpfr_set_d(r.get(), value, MPFR_RNDN);
    return {r, 10};
  }
  if (n < 1) throw DomainError("box moments need n >= 1");
  if (!(s.sign() > 0) || !(s < Real(static_cast<long>(n), s.bits()))) {
    throw DomainError("box moment needs 0 < s < n");
  }
  const mpfr_prec_t bits = digits_to_bits(digits + 10);
  Real sigma(bits);
  mpfr_set(sigma.get(), s.get(), MPFR_RNDN);
  const Real root_pi = sqrt(const_pi(bits));
  const bool is_b = kind == BoxMoment::kMb;
  const long power = n;
  // [0, 1]: u^(s-1) f(u)^n
  auto near = [&](const Real& u) {
    const Real f = is_b ? box_b(u, digits) : box_d(u, digits);
    return pow(u, sigma - 1) * pow(f, power);
  };
  // [1, oo) with u = 1/v: v^(-s-1) f(1/v)^n, where
  // b(1/v) = sqrt(pi)/2 v erf(1/v) and d(1/v) = v^2 (exp(-1/v^2) - 1) + sqrt(pi) v erf(1/v).
  auto far = [&](const Real& v) {
    const Real w = Real(1L, bits) / v;
    if (is_b) {
      return pow(v, Real(power, bits) - sigma - 1) * pow(ldexp(root_pi * erf(w), -1), power);
    }
    const Real f = v * (v * (exp(-(w * w)) - 1) + root_pi * erf(w));
    return pow(v, -(sigma + 1)) * pow(f, power);
  };
  TanhSinh left(Real(0L, bits), Real(1L, bits), digits);
  TanhSinh right(Real(0L, bits), Real(1L, bits), digits);
  const QuadratureResult a = left.integrate(near);
  const QuadratureResult b = right.integrate(far);
  if (!a.converged || !b.converged) throw ArithmeticError("box moment quadrature did not converge");
  return {a.value + b.value, digits};
}

}  // namespace momentrec
