#ifndef MOMENTREC_OPERATORS_HPP
#define MOMENTREC_OPERATORS_HPP

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "momentrec/polynomial.hpp"

namespace momentrec {

inline constexpr const char* kThetaSymbol = "theta";

/// Linear differential operator in the Euler derivation theta = t d/dt, kept
/// in the normal form sum_j t^j Q_j(theta) with every theta to the right of
/// every power of t. Zero Q_j are never stored.
class ThetaOperator {
 public:
  using Terms = std::map<int, Polynomial>;

  ThetaOperator() = default;
  explicit ThetaOperator(std::string variable) : variable_(std::move(variable)) {}

  static ThetaOperator identity(std::string variable = "t");
  static ThetaOperator theta(std::string variable = "t");
  // c * t^j * theta^m
  static ThetaOperator monomial(std::string variable, BigRational c, int t_power, int theta_power);

  const std::string& variable() const { return variable_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Q_j, or the zero polynomial.
  Polynomial coefficient_of_t(int j) const;
  // Coefficient of theta^m read as a polynomial in t.
  Polynomial coefficient_of_theta(int m) const;
  int order() const;     // highest theta degree, -1 for zero
  int t_degree() const;  // highest t power, -1 for zero

  // Accumulates t^j * q (q a polynomial in theta).
  void add_term(int t_power, const Polynomial& q);

  ThetaOperator& operator+=(const ThetaOperator& other);
  ThetaOperator& operator-=(const ThetaOperator& other);
  ThetaOperator& operator*=(const BigRational& c);
  friend ThetaOperator operator+(ThetaOperator a, const ThetaOperator& b) { return a += b; }
  friend ThetaOperator operator-(ThetaOperator a, const ThetaOperator& b) { return a -= b; }
  friend ThetaOperator operator*(ThetaOperator a, const BigRational& c) { return a *= c; }
  // Composition a o b in normal form: theta^b t^c = t^c (theta + c)^b.
  friend ThetaOperator operator*(const ThetaOperator& a, const ThetaOperator& b);

  friend bool operator==(const ThetaOperator& a, const ThetaOperator& b) {
    return a.variable_ == b.variable_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  std::string variable_ = "t";
  Terms terms_;
};

/// Linear differential operator sum d_{i,j} t^i D^j, D = d/dt, with every D
/// to the right. Zero coefficients are never stored.
class DOperator {
 public:
  // (t power, D power) -> coefficient
  using Terms = std::map<std::pair<int, int>, BigRational>;

  DOperator() = default;
  explicit DOperator(std::string variable) : variable_(std::move(variable)) {}

  static DOperator identity(std::string variable = "t");
  static DOperator monomial(std::string variable, BigRational c, int t_power, int d_power);
  // sum_j coeffs[j](t) D^j
  static DOperator from_coefficients(const std::vector<Polynomial>& coeffs);

  const std::string& variable() const { return variable_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;     // highest D power, -1 for zero
  int t_degree() const;  // highest t power, -1 for zero
  // Coefficient of D^j as a polynomial in t.
  Polynomial coefficient(int j) const;
  std::vector<Polynomial> coefficients() const;

  void add_term(int t_power, int d_power, const BigRational& c);

  DOperator& operator+=(const DOperator& other);
  DOperator& operator-=(const DOperator& other);
  DOperator& operator*=(const BigRational& c);
  friend DOperator operator+(DOperator a, const DOperator& b) { return a += b; }
  friend DOperator operator-(DOperator a, const DOperator& b) { return a -= b; }
  friend DOperator operator*(DOperator a, const BigRational& c) { return a *= c; }
  // Composition a o b using D^b t^c = sum_i C(b,i) c^(i) t^(c-i) D^(b-i).
  friend DOperator operator*(const DOperator& a, const DOperator& b);

  friend bool operator==(const DOperator& a, const DOperator& b) {
    return a.variable_ == b.variable_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  std::string variable_ = "t";
  Terms terms_;
};

using Operator = std::variant<ThetaOperator, DOperator>;

// Composition of two operators of the same kind; UsageError otherwise.
Operator op_mul(const Operator& a, const Operator& b);

// The polynomial A(t^m).
Polynomial op_apply_monomial(const ThetaOperator& a, int m);
Polynomial op_apply_monomial(const DOperator& a, int m);
// Linear extension of the action to polynomials in the operator's variable.
Polynomial op_apply(const ThetaOperator& a, const Polynomial& p);
Polynomial op_apply(const DOperator& a, const Polynomial& p);

struct ThetaForm {
  int rho = 0;  // B = t^rho o A
  ThetaOperator op;
};

// Minimal rho with t^rho A expressible in theta with polynomial
// coefficients, via t^j D^j = theta (theta-1) ... (theta-j+1).
ThetaForm d_to_theta(const DOperator& a);
// theta^m = sum_j S(m, j) t^j D^j (Stirling numbers of the second kind).
DOperator theta_to_d(const ThetaOperator& b);

// Left-divides by the common polynomial factor of all coefficients and the
// joint rational content; the highest-order coefficient ends up with
// positive leading coefficient.
DOperator primitive_normalize(const DOperator& a);
ThetaOperator primitive_normalize(const ThetaOperator& a);

}  // namespace momentrec

#endif  // MOMENTREC_OPERATORS_HPP
