#include "momentrec/dfinite_closure.hpp"

#include <functional>
#include <map>
#include <numeric>

#include "momentrec/error.hpp"

namespace momentrec {

DerivativeRewriter DerivativeRewriter::from_ode(const DOperator& ode) {
  if (ode.is_zero()) throw UsageError("zero operator has no solution space to rewrite");
  const int r = ode.order();
  if (r < 1) throw UsageError("operator of order 0 annihilates only zero");
  const auto coeffs = ode.coefficients();
  const RationalFunction lead(coeffs[static_cast<std::size_t>(r)]);
  DerivativeRewriter out;
  out.order = r;
  for (int i = 0; i < r; ++i) {
    out.rules.push_back(-RationalFunction(coeffs[static_cast<std::size_t>(i)]) / lead);
  }
  return out;
}

namespace {

struct Family {
  const DerivativeRewriter* rewriter;
  int degree;
  int offset;  // position of this family's exponents in the monomial key
};

using Exponents = std::vector<int>;

// Monomials in the generators of several D-finite functions, each family with
// a fixed total degree, closed under differentiation modulo the rewriters.
class MonomialBasis {
 public:
  MonomialBasis(std::vector<Family> families, std::string variable)
      : families_(std::move(families)), variable_(std::move(variable)) {
    int width = 0;
    for (auto& f : families_) {
      f.offset = width;
      width += f.rewriter->order;
    }
    Exponents e(static_cast<std::size_t>(width), 0);
    enumerate(0, e);
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_[monomials_[i]] = i;
    for (const auto& m : monomials_) derivatives_.push_back(differentiate(m));
  }

  std::size_t size() const { return monomials_.size(); }
  std::size_t index_of(const Exponents& e) const { return index_.at(e); }

  // Coefficient vector of the derivative of sum_b row[b] * monomial_b.
  std::vector<RationalFunction> derive_row(const std::vector<RationalFunction>& row) const {
    std::vector<RationalFunction> out(size(), RationalFunction(variable_));
    for (std::size_t b = 0; b < size(); ++b) {
      if (row[b].is_zero()) continue;
      out[b] += row[b].derivative();
      for (const auto& [target, c] : derivatives_[b]) out[target] += row[b] * c;
    }
    return out;
  }

 private:
  void enumerate(std::size_t family, Exponents& e) {
    if (family == families_.size()) {
      monomials_.push_back(e);
      return;
    }
    const Family& f = families_[family];
    const int r = f.rewriter->order;
    // Distribute f.degree over positions offset .. offset + r - 1.
    std::function<void(int, int)> place = [&](int pos, int remaining) {
      const auto idx = static_cast<std::size_t>(f.offset + pos);
      if (pos == r - 1) {
        e[idx] = remaining;
        enumerate(family + 1, e);
        e[idx] = 0;
        return;
      }
      for (int k = remaining; k >= 0; --k) {
        e[idx] = k;
        place(pos + 1, remaining - k);
      }
      e[idx] = 0;
    };
    place(0, f.degree);
  }

  std::vector<std::pair<std::size_t, RationalFunction>> differentiate(const Exponents& e) const {
    std::map<std::size_t, RationalFunction> acc;
    auto add = [&](const Exponents& target, const RationalFunction& c) {
      auto [it, inserted] = acc.try_emplace(index_.at(target), c);
      if (!inserted) it->second += c;
    };
    for (const auto& f : families_) {
      const int r = f.rewriter->order;
      for (int i = 0; i < r; ++i) {
        const auto idx = static_cast<std::size_t>(f.offset + i);
        if (e[idx] == 0) continue;
        const RationalFunction mult(Polynomial::constant(variable_, e[idx]));
        Exponents base = e;
        base[idx] -= 1;
        if (i + 1 < r) {
          base[idx + 1] += 1;
          add(base, mult);
        } else {
          for (int l = 0; l < r; ++l) {
            const auto& rule = f.rewriter->rules[static_cast<std::size_t>(l)];
            if (rule.is_zero()) continue;
            Exponents target = base;
            target[static_cast<std::size_t>(f.offset + l)] += 1;
            add(target, mult * rule);
          }
        }
      }
    }
    std::vector<std::pair<std::size_t, RationalFunction>> out;
    for (auto& [k, c] : acc) {
      if (!c.is_zero()) out.emplace_back(k, std::move(c));
    }
    return out;
  }

  std::vector<Family> families_;
  std::string variable_;
  std::vector<Exponents> monomials_;
  std::map<Exponents, std::size_t> index_;
  std::vector<std::vector<std::pair<std::size_t, RationalFunction>>> derivatives_;
};

AnsatzMatrix build_ansatz(const MonomialBasis& basis, const Exponents& start, const std::string& variable) {
  AnsatzMatrix m;
  std::vector<RationalFunction> row(basis.size(), RationalFunction(variable));
  row[basis.index_of(start)] = RationalFunction(Polynomial::constant(variable, 1));
  m.rows.push_back(row);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    row = basis.derive_row(row);
    m.rows.push_back(row);
  }
  return m;
}

DOperator operator_from_kernel(const std::vector<RationalFunction>& v) {
  std::vector<Polynomial> coeffs;
  for (const auto& x : v) coeffs.push_back(x.numerator());
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  return primitive_normalize(DOperator::from_coefficients(coeffs));
}

}  // namespace

std::vector<RationalFunction> kernel_vector(const AnsatzMatrix& m) {
  const std::size_t rows = m.row_count();
  const std::size_t cols = m.column_count();
  if (rows == 0 || rows != cols + 1) {
    throw UsageError("kernel_vector needs exactly one more row than columns");
  }
  const std::string variable = m.rows.front().empty() ? "t" : m.rows.front().front().variable();

  // Work on the transpose: unknowns v_0..v_{rows-1}, one equation per column.
  std::vector<std::vector<RationalFunction>> a(cols, std::vector<RationalFunction>(rows));
  for (std::size_t i = 0; i < rows; ++i) {
    if (m.rows[i].size() != cols) throw UsageError("ragged ansatz matrix");
    for (std::size_t j = 0; j < cols; ++j) a[j][i] = m.rows[i][j];
  }

  std::vector<std::size_t> pivot_row_of(rows, cols);  // cols == "free"
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < rows && next_row < cols; ++c) {
    std::size_t best = cols;
    for (std::size_t r = next_row; r < cols; ++r) {
      if (a[r][c].is_zero()) continue;
      if (best == cols || a[r][c].size_measure() < a[best][c].size_measure()) best = r;
    }
    if (best == cols) continue;
    std::swap(a[next_row], a[best]);
    const RationalFunction inv = RationalFunction(Polynomial::constant(variable, 1)) / a[next_row][c];
    for (std::size_t k = c; k < rows; ++k) {
      if (!a[next_row][k].is_zero()) a[next_row][k] *= inv;
    }
    for (std::size_t r = 0; r < cols; ++r) {
      if (r == next_row || a[r][c].is_zero()) continue;
      const RationalFunction factor = a[r][c];
      for (std::size_t k = c; k < rows; ++k) {
        if (!a[next_row][k].is_zero()) a[r][k] -= factor * a[next_row][k];
      }
    }
    pivot_row_of[c] = next_row++;
  }

  std::size_t free_col = rows;
  for (std::size_t c = 0; c < rows; ++c) {
    if (pivot_row_of[c] == cols) {
      free_col = c;
      break;
    }
  }
  // rows > cols guarantees a free column.
  std::vector<RationalFunction> v(rows, RationalFunction(variable));
  v[free_col] = RationalFunction(Polynomial::constant(variable, 1));
  for (std::size_t c = 0; c < free_col; ++c) {
    if (pivot_row_of[c] != cols) v[c] = -a[pivot_row_of[c]][free_col];
  }

  // Clear denominators, then strip the common polynomial content.
  Polynomial lcm = Polynomial::constant(variable, 1);
  for (const auto& x : v) {
    if (x.is_zero() || x.denominator().degree() == 0) continue;
    const Polynomial g = gcd(lcm, x.denominator());
    lcm = divmod(lcm * x.denominator(), g).quotient;
  }
  std::vector<Polynomial> nums;
  for (const auto& x : v) {
    nums.push_back(x.is_zero() ? Polynomial(variable) : divmod(x.numerator() * lcm, x.denominator()).quotient);
  }
  auto cp = poly_content_primitive(nums);
  if (sgn(cp.primitives[free_col].leading()) < 0) {
    for (auto& p : cp.primitives) p = -p;
  }
  std::vector<RationalFunction> out;
  for (auto& p : cp.primitives) out.emplace_back(std::move(p));
  return out;
}

AnsatzMatrix power_ansatz(const DOperator& ode, int n) {
  if (n < 1) throw UsageError("power must be positive");
  const auto rewriter = DerivativeRewriter::from_ode(ode);
  MonomialBasis basis({Family{&rewriter, n, 0}}, ode.variable());
  Exponents start(static_cast<std::size_t>(rewriter.order), 0);
  start[0] = n;
  return build_ansatz(basis, start, ode.variable());
}

DOperator power_annihilator(const DOperator& ode, int n) {
  return operator_from_kernel(kernel_vector(power_ansatz(ode, n)));
}

DOperator product_annihilator(const DOperator& odeF, const DOperator& odeG) {
  if (odeF.variable() != odeG.variable()) throw UsageError("operator variable mismatch");
  const auto rf = DerivativeRewriter::from_ode(odeF);
  const auto rg = DerivativeRewriter::from_ode(odeG);
  MonomialBasis basis({Family{&rf, 1, 0}, Family{&rg, 1, 0}}, odeF.variable());
  Exponents start(static_cast<std::size_t>(rf.order + rg.order), 0);
  start[0] = 1;
  start[static_cast<std::size_t>(rf.order)] = 1;
  return operator_from_kernel(kernel_vector(build_ansatz(basis, start, odeF.variable())));
}

}  // namespace momentrec
