#include "momentrec/polynomial.hpp"

#include <algorithm>

#include "momentrec/error.hpp"

namespace momentrec {

namespace {

const BigRational& zero_rational() {
  static const BigRational kZero(0);
  return kZero;
}

void require_same_variable(const Polynomial& p, const Polynomial& q) {
  if (p.variable() != q.variable()) {
    throw UsageError("polynomial variable mismatch: '" + p.variable() + "' vs '" +
                     q.variable() + "'");
  }
}

}  // namespace

Polynomial::Polynomial(std::string variable, std::vector<BigRational> coefficients)
    : variable_(std::move(variable)), coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(std::string variable, BigRational c) {
  return Polynomial(std::move(variable), {std::move(c)});
}

Polynomial Polynomial::monomial(std::string variable, BigRational c, int degree) {
  std::vector<BigRational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = std::move(c);
  return Polynomial(std::move(variable), std::move(coeffs));
}

Polynomial Polynomial::linear(std::string variable, BigRational c0, BigRational c1) {
  return Polynomial(std::move(variable), {std::move(c0), std::move(c1)});
}

const BigRational& Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero_rational();
  return coeffs_[static_cast<std::size_t>(i)];
}

const BigRational& Polynomial::leading() const {
  return coeffs_.empty() ? zero_rational() : coeffs_.back();
}

Polynomial Polynomial::with_variable(std::string variable) const {
  Polynomial p = *this;
  p.variable_ = std::move(variable);
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_variable(*this, other);
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_variable(*this, other);
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_variable(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.variable_);
  std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  BigRational term;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      term = a.coeffs_[i] * b.coeffs_[j];
      out[i + j] += term;
    }
  }
  return Polynomial(a.variable_, std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& x : p.coeffs_) x = -x;
  return p;
}

BigRational Polynomial::evaluate(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc(inner.variable());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner;
    acc += Polynomial::constant(inner.variable(), *it);
  }
  return acc;
}

Polynomial Polynomial::shift(const BigRational& c) const {
  const std::size_t n = coeffs_.size();
  if (sgn(c) == 0 || n <= 1) return *this;
  if (is_integer(c) && has_integer_coefficients()) {
    std::vector<BigInt> z;
    z.reserve(n);
    for (const auto& x : coeffs_) z.push_back(x.get_num());
    const BigInt& ci = c.get_num();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = n - 1; j > i; --j) mpz_addmul(z[j - 1].get_mpz_t(), ci.get_mpz_t(), z[j].get_mpz_t());
    }
    std::vector<BigRational> out;
    out.reserve(n);
    for (auto& x : z) out.emplace_back(x);
    return Polynomial(variable_, std::move(out));
  }
  // Taylor shift: after pass i, a[i] holds the i-th coefficient of p(x+c).
  std::vector<BigRational> a = coeffs_;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) a[j - 1] += c * a[j];
  }
  return Polynomial(variable_, std::move(a));
}

Polynomial Polynomial::negate_argument() const {
  Polynomial p = *this;
  for (std::size_t i = 1; i < p.coeffs_.size(); i += 2) p.coeffs_[i] = -p.coeffs_[i];
  return p;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial(variable_);
  std::vector<BigRational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  }
  return Polynomial(variable_, std::move(out));
}

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const BigRational& c) { return c.get_den() == 1; });
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigRational& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    BigRational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    const bool unit = (mag == 1);
    if (!unit || i == 0) {
      if (is_integer(mag)) {
        out += mag.get_num().get_str();
      } else {
        out += "(" + mag.get_str() + ")";
      }
    }
    if (i >= 1) out += variable_;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithOp op) {
  require_same_variable(p, q);
  switch (op) {
    case ArithOp::kAdd:
      return p + q;
    case ArithOp::kSub:
      return p - q;
    case ArithOp::kMul:
      return p * q;
  }
  throw UsageError("unknown polynomial operation");
}

PolyDivMod divmod(const Polynomial& p, const Polynomial& q) {
  require_same_variable(p, q);
  if (q.is_zero()) throw ArithmeticError("polynomial division by zero");
  const std::string& v = p.variable();
  if (p.degree() < q.degree()) return {Polynomial(v), p};
  std::vector<BigRational> rem = p.coefficients();
  std::vector<BigRational> quot(static_cast<std::size_t>(p.degree() - q.degree()) + 1);
  const auto& qc = q.coefficients();
  const BigRational inv_lead = 1 / q.leading();
  const int dq = q.degree();
  BigRational factor;
  for (int i = p.degree(); i >= dq; --i) {
    const auto iu = static_cast<std::size_t>(i);
    if (sgn(rem[iu]) == 0) continue;
    factor = rem[iu] * inv_lead;
    quot[iu - static_cast<std::size_t>(dq)] = factor;
    for (int j = 0; j <= dq; ++j) {
      rem[iu - static_cast<std::size_t>(dq - j)] -= factor * qc[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dq));
  return {Polynomial(v, std::move(quot)), Polynomial(v, std::move(rem))};
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  require_same_variable(p, q);
  Polynomial a = p;
  Polynomial b = q;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    if (!r.is_zero()) r *= 1 / r.leading();
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a *= 1 / a.leading();
  return a;
}

BigRational rational_content(const Polynomial& p) {
  if (p.is_zero()) return BigRational(0);
  BigInt num_gcd(0);
  BigInt den_lcm(1);
  for (const auto& c : p.coefficients()) {
    if (sgn(c) == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  return make_rational(num_gcd, den_lcm);
}

ContentPrimitive poly_content_primitive(std::span<const Polynomial> ps) {
  if (ps.empty()) throw UsageError("content of an empty polynomial list");
  const std::string& v = ps.front().variable();
  std::vector<const Polynomial*> order;
  for (const auto& p : ps) {
    if (p.variable() != v) throw UsageError("polynomial variable mismatch in content");
    if (!p.is_zero()) order.push_back(&p);
  }
  if (order.empty()) throw UsageError("content of all-zero polynomials");
  // Low degrees first: the gcd usually collapses to a constant early.
  std::stable_sort(order.begin(), order.end(),
                   [](const Polynomial* a, const Polynomial* b) { return a->degree() < b->degree(); });
  Polynomial g = *order.front();
  g *= 1 / g.leading();
  for (std::size_t i = 1; i < order.size() && g.degree() > 0; ++i) g = gcd(g, *order[i]);

  std::vector<Polynomial> quotients;
  quotients.reserve(ps.size());
  BigInt num_gcd(0);
  BigInt den_lcm(1);
  for (const auto& p : ps) {
    Polynomial quo = p.is_zero() ? Polynomial(v) : divmod(p, g).quotient;
    const BigRational c = rational_content(quo);
    if (sgn(c) != 0) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    quotients.push_back(std::move(quo));
  }
  const BigRational scalar = make_rational(num_gcd, den_lcm);
  const BigRational inv = 1 / scalar;
  for (auto& quo : quotients) quo *= inv;
  return {g * scalar, std::move(quotients)};
}

}  // namespace momentrec
