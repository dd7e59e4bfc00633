#ifndef MOMENTREC_RATIONAL_FUNCTION_HPP
#define MOMENTREC_RATIONAL_FUNCTION_HPP

#include <string>

#include "momentrec/polynomial.hpp"

namespace momentrec {

/// Reduced quotient of polynomials. The denominator is monic, so equal
/// functions have identical representations.
class RationalFunction {
 public:
  RationalFunction() : num_("t"), den_(Polynomial::constant("t", 1)) {}
  explicit RationalFunction(std::string variable)
      : num_(variable), den_(Polynomial::constant(variable, 1)) {}
  // NOLINTNEXTLINE(google-explicit-constructor)
  RationalFunction(Polynomial numerator);
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  const std::string& variable() const { return num_.variable(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // deg num + deg den, used as the pivot cost in elimination.
  int size_measure() const;

  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator/=(const RationalFunction& other);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction derivative() const;
  BigRational evaluate(const BigRational& x) const;

  std::string to_string() const;

 private:
  void reduce();

  Polynomial num_;
  Polynomial den_;
};

enum class RatFunOp { kAdd, kSub, kMul, kDiv };

// Throws ArithmeticError for division by zero, UsageError on variable mismatch.
RationalFunction ratfun_arith(const RationalFunction& f, const RationalFunction& g, RatFunOp op);

}  // namespace momentrec

#endif  // MOMENTREC_RATIONAL_FUNCTION_HPP
