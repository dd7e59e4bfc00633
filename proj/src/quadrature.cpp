#include "momentrec/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include "momentrec/error.hpp"

namespace momentrec {

TanhSinh::TanhSinh(const Real& a, const Real& b, int digits)
    : a_(a), b_(b), digits_(digits), bits_(digits_to_bits(digits + 10)) {
  if (!(a < b)) throw DomainError("quadrature interval must have a < b");
}

const std::vector<QuadratureNode>& TanhSinh::nodes(int level) {
  while (static_cast<int>(levels_.size()) <= level) {
    const int l = static_cast<int>(levels_.size());
    const Real h = ldexp(Real(1L, bits_), -l);
    const Real half_pi = ldexp(const_pi(bits_), -1);
    const Real width = b_ - a_;
    // Nodes closer to an endpoint than this carry no weight at any target.
    const Real cutoff = pow10(-3 * (digits_ + 10), bits_);
    std::vector<QuadratureNode> out;
    const long step = l == 0 ? 1 : 2;
    const long first = l == 0 ? 0 : 1;
    for (long j = first;; j += step) {
      const Real tau = h * Real(j, bits_);
      const Real u = half_pi * sinh(tau);
      // sigma = 1 / (1 + e^(2u)) is the distance to the nearer endpoint over
      // the width; the node pair is a + width*sigma and b - width*sigma.
      const Real e = exp(ldexp(u, 1));
      Real sigma = Real(1L, bits_) / (e + 1);
      const Real one_minus = Real(1L, bits_) - sigma;
      const Real weight = ldexp(width * sigma * one_minus, 1) * half_pi * cosh(tau);
      if (sigma < cutoff) break;
      const Real offset = width * sigma;
      if (j == 0) {
        out.push_back({a_ + offset, weight});
      } else {
        out.push_back({a_ + offset, weight});
        out.push_back({b_ - offset, weight});
      }
    }
    levels_.push_back(std::move(out));
  }
  return levels_[level];
}

QuadratureResult TanhSinh::integrate(const Integrand& f, const Real& rel_tol, const Real& abs_tol,
                                     int min_level, int max_level) {
  QuadratureResult result{Real(bits_), Real(bits_), 0, false};
  Real sum(bits_);
  for (int level = 0; level <= max_level; ++level) {
    const auto& ns = nodes(level);
    Real added(bits_);
    for (std::size_t i = 0; i < ns.size(); ++i) added += f(level, i, ns[i]) * ns[i].weight;
    const Real h = ldexp(Real(1L, bits_), -level);
    const Real next = level == 0 ? added : ldexp(sum, -1) + added * h;
    const Real change = abs(next - sum);
    sum = next;
    result.value = sum;
    result.last_change = change;
    result.level = level;
    if (level >= std::max(min_level, 1)) {
      const Real allowed = std::max(rel_tol * abs(sum), abs_tol);
      if (change <= allowed) {
        result.converged = true;
        return result;
      }
    }
  }
  return result;
}

QuadratureResult TanhSinh::integrate(const std::function<Real(const Real&)>& f) {
  const Real rel = pow10(-(digits_ + 5), bits_);
  return integrate([&f](int, std::size_t, const QuadratureNode& n) { return f(n.x); }, rel,
                   Real(0L, bits_));
}

GaussRule gauss_legendre(double a, double b) {
  using Rule = boost::math::quadrature::gauss<double, 12>;
  const auto& xs = Rule::abscissa();
  const auto& ws = Rule::weights();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  GaussRule rule;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] == 0.0) {
      rule.x.push_back(mid);
      rule.w.push_back(half * ws[i]);
      continue;
    }
    rule.x.push_back(mid - half * xs[i]);
    rule.w.push_back(half * ws[i]);
    rule.x.push_back(mid + half * xs[i]);
    rule.w.push_back(half * ws[i]);
  }
  return rule;
}

}  // namespace momentrec
