#ifndef MOMENTREC_QUADRATURE_HPP
#define MOMENTREC_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "momentrec/real.hpp"

namespace momentrec {

struct QuadratureNode {
  Real x;
  Real weight;  // without the step factor
};

struct QuadratureResult {
  Real value;
  Real last_change;  // |S_level - S_(level-1)|
  int level = 0;
  bool converged = false;
};

/// Tanh-sinh rule on a finite interval [a, b]. Level l uses step h = 2^-l;
/// its nodes are tau = j h for odd j (all j at level 0), so the sum at level
/// l reuses every value of level l-1. Abscissas are measured from the
/// nearer endpoint, so values near an endpoint keep full relative accuracy
/// when that endpoint is 0.
class TanhSinh {
 public:
  TanhSinh(const Real& a, const Real& b, int digits);

  const Real& lower() const { return a_; }
  const Real& upper() const { return b_; }
  int digits() const { return digits_; }

  // Nodes added at the given level; cached.
  const std::vector<QuadratureNode>& nodes(int level);

  // f(level, position in that level's node list, node). Stops once a level
  // changes the sum by at most max(rel_tol * |S|, abs_tol), never before
  // min_level; gives up after max_level.
  using Integrand = std::function<Real(int, std::size_t, const QuadratureNode&)>;
  QuadratureResult integrate(const Integrand& f, const Real& rel_tol, const Real& abs_tol,
                             int min_level = 3, int max_level = 12);

  // Convenience form: relative tolerance 10^-(digits+5), no absolute floor.
  QuadratureResult integrate(const std::function<Real(const Real&)>& f);

  static constexpr int kMaxLevel = 12;

 private:
  Real a_;
  Real b_;
  int digits_;
  mpfr_prec_t bits_;
  std::vector<std::vector<QuadratureNode>> levels_;
};

// 12-point Gauss-Legendre rule on [a, b] in double precision.
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};
GaussRule gauss_legendre(double a, double b);

}  // namespace momentrec

#endif  // MOMENTREC_QUADRATURE_HPP
