// Helpers shared by the test suites. Everything here is computed
// independently of the library code under test.
#ifndef MOMENTREC_TESTS_ORACLES_HPP
#define MOMENTREC_TESTS_ORACLES_HPP

#include <map>
#include <optional>
#include <random>
#include <string>

#include "golden.hpp"
#include "momentrec/operators.hpp"
#include "momentrec/polynomial.hpp"
#include "momentrec/recurrence.hpp"

namespace oracle {

using momentrec::BigRational;
using momentrec::Polynomial;
using momentrec::Recurrence;

// Evaluates a polynomial with Horner's rule.
inline BigRational eval(const Polynomial& p, const BigRational& x) {
  BigRational acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// True when r and the displayed recurrence describe the same relation
// between terms of one sequence: after aligning the minimal offsets, the
// coefficient polynomials agree up to one nonzero rational factor.
inline bool same_relation(const Recurrence& r, const golden::Displayed& shown) {
  if (r.terms.size() != shown.size() || shown.empty()) return false;
  const int base = shown.begin()->first;
  std::optional<BigRational> lambda;
  auto it = shown.begin();
  for (const auto& term : r.terms) {
    if (term.offset != it->first - base) return false;
    // Moving the lowest displayed offset to 0 replaces k by k - base.
    for (long x = -7; x <= 7; ++x) {
      const BigRational lhs = eval(term.coeff, BigRational(x));
      const BigRational rhs = eval(it->second, BigRational(x - base));
      if (!lambda) {
        if (sgn(lhs) != 0) {
          if (sgn(rhs) == 0) return false;
          lambda = rhs / lhs;
        } else if (sgn(rhs) != 0) {
          return false;
        }
        continue;
      }
      if (lhs * *lambda != rhs) return false;
    }
    if (!(term.coeff.degree() == it->second.degree())) return false;
    ++it;
  }
  return lambda.has_value();
}

inline Polynomial random_poly(std::mt19937_64& rng, const std::string& x, int max_degree, int bound = 9) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::uniform_int_distribution<long> den(1, 4);
  const int d = deg(rng);
  std::vector<BigRational> c;
  for (int i = 0; i <= d; ++i) c.push_back(BigRational(coef(rng), den(rng)));
  for (auto& v : c) v.canonicalize();
  return Polynomial(x, c);
}

inline momentrec::ThetaOperator random_theta(std::mt19937_64& rng, int size = 6) {
  momentrec::ThetaOperator op("t");
  std::uniform_int_distribution<int> count(1, size);
  std::uniform_int_distribution<int> pos(0, size - 1);
  std::uniform_int_distribution<long> coef(-6, 6);
  const int n = count(rng);
  for (int i = 0; i < n; ++i) op += momentrec::ThetaOperator::monomial("t", coef(rng), pos(rng), pos(rng));
  return op;
}

inline momentrec::DOperator random_d(std::mt19937_64& rng, int size = 6) {
  momentrec::DOperator op("t");
  std::uniform_int_distribution<int> count(1, size);
  std::uniform_int_distribution<int> pos(0, size - 1);
  std::uniform_int_distribution<long> coef(-6, 6);
  const int n = count(rng);
  for (int i = 0; i < n; ++i) op.add_term(pos(rng), pos(rng), coef(rng));
  return op;
}

// Direct action of sum t^i D^j on a polynomial, via the power rule.
inline Polynomial act(const momentrec::DOperator& a, const Polynomial& p) {
  Polynomial out(p.variable());
  for (const auto& [ij, c] : a.terms()) {
    Polynomial q = p;
    for (int j = 0; j < ij.second; ++j) q = q.derivative();
    out += Polynomial::monomial(p.variable(), c, ij.first) * q;
  }
  return out;
}

// Direct action of sum t^j Q_j(theta): theta t^m = m t^m.
inline Polynomial act(const momentrec::ThetaOperator& a, const Polynomial& p) {
  Polynomial out(p.variable());
  for (const auto& [j, qj] : a.terms()) {
    for (int m = 0; m <= p.degree(); ++m) {
      if (sgn(p.coeff(m)) == 0) continue;
      out += Polynomial::monomial(p.variable(), p.coeff(m) * eval(qj, BigRational(m)), m + j);
    }
  }
  return out;
}

}  // namespace oracle

#endif  // MOMENTREC_TESTS_ORACLES_HPP
