#include "momentrec/mellin.hpp"

#include "momentrec/error.hpp"

namespace momentrec {

Recurrence mellin_recurrence_theta(const ThetaOperator& l, const std::string& sequence, std::optional<int> n,
                                   const std::string& variable) {
  if (l.is_zero()) throw UsageError("zero operator gives no recurrence");
  RawRecurrence raw;
  for (const auto& [j, q] : l.terms()) {
    // Q_j(-(k + 1 + j))
    raw[j] = q.negate_argument().shift(BigRational(1 + j)).with_variable(variable);
  }
  return canonicalize(raw, sequence, n, variable);
}

Recurrence mellin_recurrence_d(const DOperator& a, const std::string& sequence, std::optional<int> n,
                               const std::string& variable) {
  if (a.is_zero()) throw UsageError("zero operator gives no recurrence");
  RawRecurrence raw;
  for (const auto& [key, c] : a.terms()) {
    const auto [i, j] = key;
    Polynomial coeff = Polynomial::constant(variable, c);
    for (int r = 0; r < j; ++r) coeff *= Polynomial::linear(variable, -i + r, -1);
    auto [it, inserted] = raw.try_emplace(i - j, coeff);
    if (!inserted) it->second += coeff;
  }
  return canonicalize(raw, sequence, n, variable);
}

namespace {

RationalFunction shifted(const RationalFunction& f, int by) {
  const BigRational c(by);
  return RationalFunction(f.numerator().shift(c), f.denominator().shift(c));
}

}  // namespace

Recurrence apply_weight(const Recurrence& r, const WeightRatio& w, std::optional<std::string> new_sequence) {
  if (w.step < 1) throw UsageError("weight step must be positive");
  if (w.ratio.is_zero()) throw UsageError("weight ratio must be nonzero");
  const RationalFunction ratio(w.ratio.numerator().with_variable(r.variable),
                               w.ratio.denominator().with_variable(r.variable));
  std::vector<std::pair<int, RationalFunction>> scaled;
  Polynomial lcm = Polynomial::constant(r.variable, 1);
  RationalFunction product(Polynomial::constant(r.variable, 1));
  int built = 0;  // product == prod_{i < built} ratio(k + i*step)
  for (const auto& t : r.terms) {
    if (t.offset % w.step != 0) {
      throw UsageError("offset " + std::to_string(t.offset) + " is not a multiple of the weight step");
    }
    const int factors = t.offset / w.step;
    for (; built < factors; ++built) product *= shifted(ratio, built * w.step);
    RationalFunction c = RationalFunction(t.coeff) * product;
    const Polynomial g = gcd(lcm, c.denominator());
    lcm = divmod(lcm * c.denominator(), g).quotient;
    scaled.emplace_back(t.offset, std::move(c));
  }
  RawRecurrence raw;
  for (const auto& [offset, c] : scaled) {
    raw[offset] = divmod(c.numerator() * lcm, c.denominator()).quotient;
  }
  return canonicalize(raw, new_sequence.value_or(r.sequence), r.n, r.variable);
}

Recurrence reindex(const Recurrence& r, const IndexMap& map, std::optional<std::string> new_sequence) {
  if (map.sign != 1 && map.sign != -1) throw UsageError("index map sign must be +1 or -1");
  RawRecurrence raw;
  const std::string& v = r.variable;
  if (map.sign == 1) {
    // u_{k+j} = v_{k+j-shift}: substitute k -> k + shift.
    for (const auto& t : r.terms) raw[t.offset] = t.coeff.shift(BigRational(map.shift));
  } else {
    // u_{k+j} = v_{shift-k-j}; with k = shift - k' - J the term lands at
    // offset J - j with coefficient p_j(shift - J - k').
    const int J = r.max_offset();
    const Polynomial arg = Polynomial::linear(v, map.shift - J, -1);
    for (const auto& t : r.terms) raw[J - t.offset] = t.coeff.compose(arg);
  }
  return canonicalize(raw, new_sequence.value_or(r.sequence), r.n, v);
}

}  // namespace momentrec
