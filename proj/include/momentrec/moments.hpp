#ifndef MOMENTREC_MOMENTS_HPP
#define MOMENTREC_MOMENTS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "momentrec/quadrature.hpp"
#include "momentrec/real.hpp"
#include "momentrec/special.hpp"

namespace momentrec {

/// Integrals int_0^oo f(t, K0(t), K1(t)) dt over the pieces [0,1], [1,2],
/// [2,4], [4,8], ... with tanh-sinh on each piece. K0 and K1 at every node
/// are computed once and shared by all integrands, so one instance serves a
/// whole table of moments at a fixed precision.
class BesselQuadrature {
 public:
  using Integrand = std::function<Real(const Real& t, const Real& k0, const Real& k1)>;

  explicit BesselQuadrature(int digits);
  int digits() const { return digits_; }
  mpfr_prec_t bits() const { return bits_; }

  // For an integrand bounded by t^power exp(-decay t) for t >= 2, the range
  // is cut at T with decay T - power ln T > (digits + 15) ln 10.
  // ArithmeticError if some piece fails to converge.
  Real integrate(const Integrand& f, int decay, int power);

 private:
  struct Piece {
    TanhSinh rule;
    std::vector<std::vector<std::optional<BesselK01>>> cache;  // [level][node]
  };
  const BesselK01& values(Piece& piece, int level, std::size_t i, const QuadratureNode& node);
  Piece& piece(std::size_t index);

  int digits_;
  mpfr_prec_t bits_;
  std::vector<Piece> pieces_;
};

// c_{n,k} = int_0^oo t^k K0(t)^n dt.
HighPrecReal moment_c(BesselQuadrature& q, int n, int k);
HighPrecReal moment_c(int n, int k, int digits);

// C_{n,k} = 2^n c_{n,k} / (n! k!).
Real c_to_C(const Real& c, int n, int k);
HighPrecReal moment_C(BesselQuadrature& q, int n, int k);

// V(n,a,b) = int_0^oo x^(2n+1) K0^a (x K0')^b dx with x K0' = -x K1.
// DomainError when a + b = 0.
HighPrecReal moment_V(BesselQuadrature& q, int n, int a, int b);
HighPrecReal moment_V(int n, int a, int b, int digits);

enum class BoxMoment { kBDirect, kMb, kMd };

// kBDirect: B_n(s) = int over [0,1]^n of |r|^s, tensor Gauss-Legendre on
//   pieces graded towards 0, in double precision (about 10 digits), for
//   1 <= n <= 4 and s > 0. For integer s the last coordinate is integrated
//   in closed form.
// kMb, kMd: int_0^oo u^(s-1) f(u)^n du with f = b or d, for 0 < s < n; the
//   range [1, oo) is mapped to (0, 1] by u = 1/v.
// DomainError outside these ranges.
HighPrecReal moment_box(BoxMoment kind, int n, const Real& s, int digits);

double box_direct(int n, double s);

}  // namespace momentrec

#endif  // MOMENTREC_MOMENTS_HPP
