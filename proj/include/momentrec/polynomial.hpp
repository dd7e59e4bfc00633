#ifndef MOMENTREC_POLYNOMIAL_HPP
#define MOMENTREC_POLYNOMIAL_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "momentrec/big_rational.hpp"

namespace momentrec {

/// Dense univariate polynomial over the rationals, coefficients stored in
/// ascending degree. The highest stored coefficient is always nonzero, so
/// the zero polynomial has no coefficients and degree kZeroDegree.
class Polynomial {
 public:
  static constexpr int kZeroDegree = -1;

  Polynomial() : variable_("t") {}
  explicit Polynomial(std::string variable) : variable_(std::move(variable)) {}
  Polynomial(std::string variable, std::vector<BigRational> coefficients);

  static Polynomial constant(std::string variable, BigRational c);
  static Polynomial monomial(std::string variable, BigRational c, int degree);
  // c0 + c1*x
  static Polynomial linear(std::string variable, BigRational c0, BigRational c1);

  const std::string& variable() const { return variable_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  // Zero for indices past the degree.
  const BigRational& coeff(int i) const;
  const BigRational& leading() const;

  Polynomial with_variable(std::string variable) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const BigRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const BigRational& c) { return a *= c; }
  friend Polynomial operator*(const BigRational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  // Coefficient-wise equality; the variable name must match too.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.variable_ == b.variable_ && a.coeffs_ == b.coeffs_;
  }

  BigRational evaluate(const BigRational& x) const;
  // p(q(x)); the result carries q's variable.
  Polynomial compose(const Polynomial& inner) const;
  // p(x + c) by repeated synthetic division.
  Polynomial shift(const BigRational& c) const;
  // p(-x)
  Polynomial negate_argument() const;
  Polynomial derivative() const;

  // True iff every coefficient has denominator 1.
  bool has_integer_coefficients() const;

  std::string to_string() const;

 private:
  void trim();

  std::string variable_;
  std::vector<BigRational> coeffs_;
};

enum class ArithOp { kAdd, kSub, kMul };

// Checked arithmetic: throws UsageError when the variables differ.
Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithOp op);

struct PolyDivMod {
  Polynomial quotient;
  Polynomial remainder;
};
PolyDivMod divmod(const Polynomial& p, const Polynomial& q);

// Monic gcd over Q; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

// Positive rational c such that p / c has coprime integer coefficients.
// Zero for the zero polynomial.
BigRational rational_content(const Polynomial& p);

struct ContentPrimitive {
  Polynomial content;
  std::vector<Polynomial> primitives;
};

// content = (monic polynomial gcd) * (rational content of the quotients),
// with positive leading coefficient; primitives[i] * content == ps[i].
ContentPrimitive poly_content_primitive(std::span<const Polynomial> ps);

}  // namespace momentrec

#endif  // MOMENTREC_POLYNOMIAL_HPP
