#ifndef MOMENTREC_REAL_HPP
#define MOMENTREC_REAL_HPP

#include <mpfr.h>

#include <string>

#include "momentrec/big_rational.hpp"

namespace momentrec {

// Bits needed to carry the given number of decimal digits.
mpfr_prec_t digits_to_bits(int digits);

/// Owning MPFR value. Every value carries its own precision; results of
/// binary operations get the larger of the two operand precisions. All
/// rounding is to nearest.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 64);
  Real(long value, mpfr_prec_t bits);
  Real(const BigInt& value, mpfr_prec_t bits);
  Real(const BigRational& value, mpfr_prec_t bits);
  // Decimal string, e.g. "0.4210244382407083".
  static Real parse(const std::string& text, mpfr_prec_t bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t bits() const { return mpfr_get_prec(value_); }
  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  Real& operator+=(const Real& other);
  Real& operator-=(const Real& other);
  Real& operator*=(const Real& other);
  Real& operator/=(const Real& other);
  Real& operator*=(long c);
  Real& operator/=(long c);
  Real& operator+=(long c);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(Real a, long c) { return a *= c; }
  friend Real operator*(long c, Real a) { return a *= c; }
  friend Real operator/(Real a, long c) { return a /= c; }
  friend Real operator+(Real a, long c) { return a += c; }
  friend Real operator-(Real a, long c) { return a += -c; }
  Real operator-() const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.value_, b.value_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.value_, b.value_) != 0; }

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Scientific notation with the given number of significant digits.
  std::string to_string(int digits) const;

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real cosh(const Real& x);
Real sinh(const Real& x);
Real erf(const Real& x);
Real gamma(const Real& x);
Real pow(const Real& x, long e);
Real pow(const Real& x, const Real& e);
// x * 2^e
Real ldexp(const Real& x, long e);
// 10^e at the given precision.
Real pow10(long e, mpfr_prec_t bits);

Real const_pi(mpfr_prec_t bits);
Real const_euler(mpfr_prec_t bits);
Real const_log2(mpfr_prec_t bits);

// |a - b| / max(|a|, |b|), zero when both vanish.
Real relative_difference(const Real& a, const Real& b);

/// A value together with the number of decimal digits it is claimed to.
struct HighPrecReal {
  Real value;
  int digits = 0;
};

}  // namespace momentrec

#endif  // MOMENTREC_REAL_HPP
