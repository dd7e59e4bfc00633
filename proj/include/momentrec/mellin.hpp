#ifndef MOMENTREC_MELLIN_HPP
#define MOMENTREC_MELLIN_HPP

#include <optional>
#include <string>

#include "momentrec/operators.hpp"
#include "momentrec/rational_function.hpp"
#include "momentrec/recurrence.hpp"

namespace momentrec {

// Moment sequence u_k = int t^k h(t) dt of a function h annihilated by L,
// assuming boundary terms of every integration by parts vanish. Each
// t^j Q_j(theta) contributes Q_j(-1-k-j) u_{k+j}.
Recurrence mellin_recurrence_theta(const ThetaOperator& l, const std::string& sequence,
                                   std::optional<int> n = std::nullopt,
                                   const std::string& variable = "k");

// Same for a D-form operator: t^i D^j contributes
// (-k-i)(-k-i+1)...(-k-i+j-1) u_{k+i-j}.
Recurrence mellin_recurrence_d(const DOperator& a, const std::string& sequence,
                               std::optional<int> n = std::nullopt,
                               const std::string& variable = "k");

/// u_k = w(k) v_k with w(k + step) = ratio(k) w(k).
struct WeightRatio {
  int step = 1;
  RationalFunction ratio;
};

// Recurrence for v. UsageError when some offset is not a multiple of step.
Recurrence apply_weight(const Recurrence& r, const WeightRatio& w,
                        std::optional<std::string> new_sequence = std::nullopt);

/// v_m = u_{sign * m + shift}, sign = +1 or -1.
struct IndexMap {
  int sign = -1;
  int shift = -1;
};

// Recurrence for v under the index map. The default map (m -> -m-1) is the
// mirror used for coefficient sequences; applied twice it is the identity.
Recurrence reindex(const Recurrence& r, const IndexMap& map = {},
                   std::optional<std::string> new_sequence = std::nullopt);

}  // namespace momentrec

#endif  // MOMENTREC_MELLIN_HPP
