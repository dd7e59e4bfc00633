#include "momentrec/operators.hpp"

#include <algorithm>

#include "momentrec/error.hpp"

namespace momentrec {

namespace {

void require_same_variable(const std::string& a, const std::string& b) {
  if (a != b) throw UsageError("operator variable mismatch: '" + a + "' vs '" + b + "'");
}

// theta (theta - 1) ... (theta - j + 1)
Polynomial falling_theta(int j) {
  Polynomial p = Polynomial::constant(kThetaSymbol, 1);
  for (int i = 0; i < j; ++i) p *= Polynomial::linear(kThetaSymbol, -i, 1);
  return p;
}

// S(m, j) for 0 <= j <= m <= max_m.
std::vector<std::vector<BigInt>> stirling2_table(int max_m) {
  const auto size = static_cast<std::size_t>(max_m) + 1;
  std::vector<std::vector<BigInt>> s(size, std::vector<BigInt>(size, 0));
  s[0][0] = 1;
  for (std::size_t m = 1; m < size; ++m) {
    for (std::size_t j = 1; j <= m; ++j) {
      s[m][j] = s[m - 1][j - 1] + BigInt(static_cast<unsigned long>(j)) * s[m - 1][j];
    }
  }
  return s;
}

std::string term_prefix(const BigRational& c, bool first) {
  std::string out;
  const bool negative = sgn(c) < 0;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- theta

ThetaOperator ThetaOperator::identity(std::string variable) {
  return monomial(std::move(variable), 1, 0, 0);
}

ThetaOperator ThetaOperator::theta(std::string variable) {
  return monomial(std::move(variable), 1, 0, 1);
}

ThetaOperator ThetaOperator::monomial(std::string variable, BigRational c, int t_power,
                                      int theta_power) {
  ThetaOperator op(std::move(variable));
  op.add_term(t_power, Polynomial::monomial(kThetaSymbol, std::move(c), theta_power));
  return op;
}

Polynomial ThetaOperator::coefficient_of_t(int j) const {
  auto it = terms_.find(j);
  return it == terms_.end() ? Polynomial(kThetaSymbol) : it->second;
}

Polynomial ThetaOperator::coefficient_of_theta(int m) const {
  std::vector<BigRational> coeffs(static_cast<std::size_t>(std::max(t_degree(), 0)) + 1);
  for (const auto& [j, q] : terms_) coeffs[static_cast<std::size_t>(j)] = q.coeff(m);
  return Polynomial(variable_, std::move(coeffs));
}

int ThetaOperator::order() const {
  int best = -1;
  for (const auto& [j, q] : terms_) best = std::max(best, q.degree());
  return best;
}

int ThetaOperator::t_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

void ThetaOperator::add_term(int t_power, const Polynomial& q) {
  if (t_power < 0) throw UsageError("negative power of t in theta operator");
  if (q.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(t_power, q);
  if (!inserted) {
    it->second += q;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ThetaOperator& ThetaOperator::operator+=(const ThetaOperator& other) {
  require_same_variable(variable_, other.variable_);
  for (const auto& [j, q] : other.terms_) add_term(j, q);
  return *this;
}

ThetaOperator& ThetaOperator::operator-=(const ThetaOperator& other) {
  require_same_variable(variable_, other.variable_);
  for (const auto& [j, q] : other.terms_) add_term(j, -q);
  return *this;
}

ThetaOperator& ThetaOperator::operator*=(const BigRational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [j, q] : terms_) q *= c;
  return *this;
}

ThetaOperator operator*(const ThetaOperator& a, const ThetaOperator& b) {
  require_same_variable(a.variable_, b.variable_);
  ThetaOperator out(a.variable_);
  for (const auto& [c, q] : b.terms_) {
    for (const auto& [j, p] : a.terms_) {
      out.add_term(j + c, p.shift(c) * q);
    }
  }
  return out;
}

std::string ThetaOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [j, q] : terms_) {
    if (!out.empty()) out += " + ";
    std::string tpart = j == 0 ? "" : (j == 1 ? variable_ : variable_ + "^" + std::to_string(j));
    if (tpart.empty()) {
      out += "(" + q.to_string() + ")";
    } else {
      out += tpart + "*(" + q.to_string() + ")";
    }
  }
  return out;
}

// -------------------------------------------------------------------- D

DOperator DOperator::identity(std::string variable) { return monomial(std::move(variable), 1, 0, 0); }

DOperator DOperator::monomial(std::string variable, BigRational c, int t_power, int d_power) {
  DOperator op(std::move(variable));
  op.add_term(t_power, d_power, c);
  return op;
}

DOperator DOperator::from_coefficients(const std::vector<Polynomial>& coeffs) {
  if (coeffs.empty()) return DOperator();
  DOperator op(coeffs.front().variable());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    require_same_variable(op.variable_, coeffs[j].variable());
    const auto& cs = coeffs[j].coefficients();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      op.add_term(static_cast<int>(i), static_cast<int>(j), cs[i]);
    }
  }
  return op;
}

int DOperator::order() const {
  int best = -1;
  for (const auto& [key, c] : terms_) best = std::max(best, key.second);
  return best;
}

int DOperator::t_degree() const {
  int best = -1;
  for (const auto& [key, c] : terms_) best = std::max(best, key.first);
  return best;
}

Polynomial DOperator::coefficient(int j) const {
  std::vector<BigRational> coeffs(static_cast<std::size_t>(std::max(t_degree(), 0)) + 1);
  for (const auto& [key, c] : terms_) {
    if (key.second == j) coeffs[static_cast<std::size_t>(key.first)] = c;
  }
  return Polynomial(variable_, std::move(coeffs));
}

std::vector<Polynomial> DOperator::coefficients() const {
  std::vector<Polynomial> out;
  for (int j = 0; j <= order(); ++j) out.push_back(coefficient(j));
  return out;
}

void DOperator::add_term(int t_power, int d_power, const BigRational& c) {
  if (t_power < 0 || d_power < 0) throw UsageError("negative exponent in D operator");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace({t_power, d_power}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

DOperator& DOperator::operator+=(const DOperator& other) {
  require_same_variable(variable_, other.variable_);
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
  return *this;
}

DOperator& DOperator::operator-=(const DOperator& other) {
  require_same_variable(variable_, other.variable_);
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, -c);
  return *this;
}

DOperator& DOperator::operator*=(const BigRational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, x] : terms_) x *= c;
  return *this;
}

DOperator operator*(const DOperator& a, const DOperator& b) {
  require_same_variable(a.variable_, b.variable_);
  DOperator out(a.variable_);
  for (const auto& [ka, x] : a.terms_) {
    const auto [ta, da] = ka;
    for (const auto& [kb, y] : b.terms_) {
      const auto [tb, db] = kb;
      // D^da t^tb = sum_i binom(da, i) * tb (tb-1) ... (tb-i+1) t^(tb-i) D^(da-i)
      BigInt binom = 1;
      BigInt falling = 1;
      const BigRational xy = x * y;
      for (int i = 0; i <= std::min(da, tb); ++i) {
        if (i > 0) {
          binom = binom * (da - i + 1) / i;
          falling *= (tb - i + 1);
        }
        out.add_term(ta + tb - i, da - i + db, xy * BigRational(binom * falling));
      }
    }
  }
  return out;
}

std::string DOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [i, j] = it->first;
    const BigRational& c = it->second;
    out += term_prefix(c, out.empty());
    const BigRational mag = abs(c);
    std::string body;
    if (mag != 1 || (i == 0 && j == 0)) body = mag.get_str();
    auto append = [&body](const std::string& f) {
      if (!body.empty()) body += "*";
      body += f;
    };
    if (i > 0) append(i == 1 ? variable_ : variable_ + "^" + std::to_string(i));
    if (j > 0) append(j == 1 ? std::string("D") : "D^" + std::to_string(j));
    out += body;
  }
  return out;
}

// -------------------------------------------------------------- generic

Operator op_mul(const Operator& a, const Operator& b) {
  if (a.index() != b.index()) throw UsageError("cannot compose theta and D operators");
  if (const auto* ta = std::get_if<ThetaOperator>(&a)) return *ta * std::get<ThetaOperator>(b);
  return std::get<DOperator>(a) * std::get<DOperator>(b);
}

Polynomial op_apply_monomial(const ThetaOperator& a, int m) {
  if (m < 0) throw UsageError("negative monomial exponent");
  std::vector<BigRational> out(static_cast<std::size_t>(std::max(a.t_degree(), 0) + m) + 1);
  for (const auto& [j, q] : a.terms()) {
    out[static_cast<std::size_t>(j + m)] += q.evaluate(BigRational(m));
  }
  return Polynomial(a.variable(), std::move(out));
}

Polynomial op_apply_monomial(const DOperator& a, int m) {
  if (m < 0) throw UsageError("negative monomial exponent");
  std::vector<BigRational> out(static_cast<std::size_t>(std::max(a.t_degree(), 0) + m) + 1);
  for (const auto& [key, c] : a.terms()) {
    const auto [i, j] = key;
    if (j > m) continue;
    BigInt falling = 1;
    for (int r = 0; r < j; ++r) falling *= (m - r);
    out[static_cast<std::size_t>(i + m - j)] += c * BigRational(falling);
  }
  return Polynomial(a.variable(), std::move(out));
}

namespace {

template <typename Op>
Polynomial apply_linear(const Op& a, const Polynomial& p) {
  require_same_variable(a.variable(), p.variable());
  Polynomial out(a.variable());
  const auto& cs = p.coefficients();
  for (std::size_t m = 0; m < cs.size(); ++m) {
    if (sgn(cs[m]) == 0) continue;
    out += op_apply_monomial(a, static_cast<int>(m)) * cs[m];
  }
  return out;
}

}  // namespace

Polynomial op_apply(const ThetaOperator& a, const Polynomial& p) { return apply_linear(a, p); }
Polynomial op_apply(const DOperator& a, const Polynomial& p) { return apply_linear(a, p); }

ThetaForm d_to_theta(const DOperator& a) {
  int rho = 0;
  for (const auto& [key, c] : a.terms()) rho = std::max(rho, key.second - key.first);
  ThetaForm out{rho, ThetaOperator(a.variable())};
  std::map<int, Polynomial> falling_cache;
  for (const auto& [key, c] : a.terms()) {
    const auto [i, j] = key;
    auto it = falling_cache.find(j);
    if (it == falling_cache.end()) it = falling_cache.emplace(j, falling_theta(j)).first;
    // t^rho t^i D^j = t^(rho+i-j) (t^j D^j)
    out.op.add_term(rho + i - j, it->second * c);
  }
  return out;
}

DOperator theta_to_d(const ThetaOperator& b) {
  const auto stirling = stirling2_table(std::max(b.order(), 0));
  DOperator out(b.variable());
  for (const auto& [j, q] : b.terms()) {
    const auto& qc = q.coefficients();
    for (std::size_t m = 0; m < qc.size(); ++m) {
      if (sgn(qc[m]) == 0) continue;
      for (std::size_t r = 0; r <= m; ++r) {
        if (stirling[m][r] == 0) continue;
        out.add_term(j + static_cast<int>(r), static_cast<int>(r), qc[m] * BigRational(stirling[m][r]));
      }
    }
  }
  return out;
}

DOperator primitive_normalize(const DOperator& a) {
  if (a.is_zero()) throw UsageError("cannot normalize the zero operator");
  const auto coeffs = a.coefficients();
  auto cp = poly_content_primitive(coeffs);
  if (sgn(cp.primitives.back().leading()) < 0) {
    for (auto& p : cp.primitives) p = -p;
  }
  return DOperator::from_coefficients(cp.primitives);
}

ThetaOperator primitive_normalize(const ThetaOperator& a) {
  if (a.is_zero()) throw UsageError("cannot normalize the zero operator");
  std::vector<Polynomial> coeffs;
  for (int m = 0; m <= a.order(); ++m) coeffs.push_back(a.coefficient_of_theta(m));
  auto cp = poly_content_primitive(coeffs);
  if (sgn(cp.primitives.back().leading()) < 0) {
    for (auto& p : cp.primitives) p = -p;
  }
  ThetaOperator out(a.variable());
  for (std::size_t m = 0; m < cp.primitives.size(); ++m) {
    const auto& cs = cp.primitives[m].coefficients();
    for (std::size_t j = 0; j < cs.size(); ++j) {
      out.add_term(static_cast<int>(j), Polynomial::monomial(kThetaSymbol, cs[j], static_cast<int>(m)));
    }
  }
  return out;
}

}  // namespace momentrec
