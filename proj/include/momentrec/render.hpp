#ifndef MOMENTREC_RENDER_HPP
#define MOMENTREC_RENDER_HPP

#include <string>
#include <utility>
#include <vector>

#include "momentrec/operators.hpp"
#include "momentrec/recurrence.hpp"
#include "momentrec/vacuum.hpp"

namespace momentrec {

enum class Format { kText, kLatex, kJson };

// "text", "latex", "json"; UsageError otherwise.
Format parse_format(const std::string& name);

struct RenderStyle {
  Format format = Format::kText;
  bool factored = true;  // pull out integer content and factors (x + c)
};

/// p = content * prod (x + c)^m * rest, rest primitive with positive
/// leading coefficient and without integer roots in the searched range.
struct LinearFactorization {
  BigRational content;
  std::vector<std::pair<BigInt, int>> linear;  // (c, multiplicity), c ascending
  Polynomial rest;
};

// Searches integer roots -c with |c| <= bound by trial division.
LinearFactorization factor_linear(const Polynomial& p, int bound = 64);

// Text: "(k+1)·C(1,k) − (k+2)·C(1,k+2) = 0", signs chosen so the offset-0
// coefficient is positive. A two-term recurrence whose top coefficient is
// a unit is shown solved, e.g. "I(k) = k·I(k−1)". Json: the recurrence JSON
// schema, pretty-printed.
std::string render_recurrence(const Recurrence& r, const RenderStyle& style);

// Grouped by descending derivation power, e.g.
// "θ^2 − t^2" or "t^2·D^2 + t·D − t^2".
std::string render_operator(const Operator& op, const RenderStyle& style);

// "V(1,1,1) = −1·V(0,0,2)"
std::string render_reduction(const VTerm& input, const std::vector<VTerm>& terms, const RenderStyle& style);

}  // namespace momentrec

#endif  // MOMENTREC_RENDER_HPP
