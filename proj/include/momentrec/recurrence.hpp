#ifndef MOMENTREC_RECURRENCE_HPP
#define MOMENTREC_RECURRENCE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "momentrec/polynomial.hpp"

namespace momentrec {

struct RecurrenceTerm {
  int offset = 0;
  Polynomial coeff;  // polynomial in the recurrence variable

  friend bool operator==(const RecurrenceTerm&, const RecurrenceTerm&) = default;
};

/// sum_j coeff_j(k) * u_{k + offset_j} = 0.
///
/// Canonical form (produced by canonicalize and by every operation in this
/// library): offsets ascending with minimum 0, no zero coefficients, integer
/// coefficients with joint content 1 and no common polynomial factor (a
/// single-term recurrence keeps its coefficient), and
/// the coefficient at the largest offset has positive leading coefficient.
struct Recurrence {
  std::string sequence = "u";
  std::optional<int> n;  // family parameter, when the sequence has one
  std::string variable = "k";
  std::vector<RecurrenceTerm> terms;

  int max_offset() const { return terms.empty() ? -1 : terms.back().offset; }
  // Zero polynomial when the offset is absent.
  Polynomial coefficient(int offset) const;
  std::vector<int> offsets() const;

  friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

// offset -> coefficient, offsets may be negative and coefficients rational.
using RawRecurrence = std::map<int, Polynomial>;

// Shifts offsets to start at 0 (substituting k -> k - min_offset in the
// coefficients, so the sequence keeps its indexing), strips content and
// fixes the sign. UsageError when every coefficient is zero.
Recurrence canonicalize(const RawRecurrence& raw, std::string sequence, std::optional<int> n,
                        std::string variable);
Recurrence canonicalize(const Recurrence& r);

// Builds a recurrence from integer coefficient lists (ascending powers),
// e.g. for golden data; the result is canonicalized.
Recurrence make_recurrence(std::string sequence, std::optional<int> n, std::string variable,
                           const std::map<int, std::vector<long long>>& coeffs);

// { "sequence": "C", "n": 4, "variable": "k",
//   "terms": [ { "offset": 0, "coeff": [ ...ascending integers ] } ] }
// Coefficients that do not fit in a signed 64-bit integer are written as
// decimal strings; the parser accepts both.
nlohmann::json recurrence_to_json(const Recurrence& r);
Recurrence recurrence_from_json(const nlohmann::json& j);

}  // namespace momentrec

#endif  // MOMENTREC_RECURRENCE_HPP
