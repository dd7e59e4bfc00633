#include "momentrec/rational_function.hpp"

#include "momentrec/error.hpp"

namespace momentrec {

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(Polynomial::constant(num_.variable(), 1)) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.variable() != den_.variable()) {
    throw UsageError("rational function variable mismatch");
  }
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.variable(), 1);
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).quotient;
      den_ = divmod(den_, g).quotient;
    }
  }
  const BigRational lead = den_.leading();
  if (lead != 1) {
    const BigRational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

int RationalFunction::size_measure() const { return num_.degree() + den_.degree(); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  if (other.is_zero()) return *this;
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
  }
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) {
  return *this += -other;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  if (variable() != other.variable()) throw UsageError("rational function variable mismatch");
  if (is_zero() || other.is_zero()) {
    *this = RationalFunction(variable());
    return *this;
  }
  // Cross-cancel first to keep the products small.
  Polynomial g1 = gcd(num_, other.den_);
  Polynomial g2 = gcd(other.num_, den_);
  Polynomial a = divmod(num_, g1).quotient;
  Polynomial d = divmod(other.den_, g1).quotient;
  Polynomial c = divmod(other.num_, g2).quotient;
  Polynomial b = divmod(den_, g2).quotient;
  num_ = a * c;
  den_ = b * d;
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
  if (other.is_zero()) throw ArithmeticError("rational function division by zero");
  return *this *= RationalFunction(other.den_, other.num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

BigRational RationalFunction::evaluate(const BigRational& x) const {
  const BigRational d = den_.evaluate(x);
  if (sgn(d) == 0) throw ArithmeticError("rational function evaluated at a pole");
  return num_.evaluate(x) / d;
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction ratfun_arith(const RationalFunction& f, const RationalFunction& g, RatFunOp op) {
  if (f.variable() != g.variable()) throw UsageError("rational function variable mismatch");
  switch (op) {
    case RatFunOp::kAdd:
      return f + g;
    case RatFunOp::kSub:
      return f - g;
    case RatFunOp::kMul:
      return f * g;
    case RatFunOp::kDiv:
      return f / g;
  }
  throw UsageError("unknown rational function operation");
}

}  // namespace momentrec
