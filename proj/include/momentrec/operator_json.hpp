#ifndef MOMENTREC_OPERATOR_JSON_HPP
#define MOMENTREC_OPERATOR_JSON_HPP

#include <json.hpp>

#include "momentrec/operators.hpp"

namespace momentrec {

// { "kind": "theta"|"d", "variable": "t",
//   "terms": [ { "t": i, "order": j, "coeff": "num/den" } ] }
// Terms are emitted sorted by (t, order).
nlohmann::json operator_to_json(const Operator& op);

// Throws UsageError on any schema violation.
Operator operator_from_json(const nlohmann::json& j);

}  // namespace momentrec

#endif  // MOMENTREC_OPERATOR_JSON_HPP
