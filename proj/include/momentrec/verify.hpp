#ifndef MOMENTREC_VERIFY_HPP
#define MOMENTREC_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "momentrec/moments.hpp"
#include "momentrec/real.hpp"
#include "momentrec/recurrence.hpp"

namespace momentrec {

struct ResidualEntry {
  long k = 0;
  Real relative_residual;
  bool degenerate = false;  // every term vanished
};

struct ResidualReport {
  std::string target;
  int digits = 0;
  Real max_relative_residual;
  std::vector<ResidualEntry> per_k;
  bool degenerate() const;
};

// For every k with all of u_(k+j) present in values, the residual
// |sum_j p_j(k) u_(k+j)| / max_j |p_j(k) u_(k+j)|. UsageError when no k is
// admissible.
ResidualReport check_recurrence(const Recurrence& r, const std::map<long, Real>& values, int digits,
                                std::string target = "");

// { "target": ..., "P": ..., "max_relative_residual": "1.3e-17",
//   "per_k": [ { "k": 0, "relative_residual": "..." }, ... ] }
nlohmann::json report_to_json(const ResidualReport& report);

// Extends values upward with the recurrence solved for its top term until
// index last is reached. UsageError when the starting values do not
// determine u_last, ArithmeticError when the top coefficient vanishes.
std::map<long, Real> transport(const Recurrence& r, std::map<long, Real> values, long last);

// Quadrature values of c_{n,k} or C_{n,k} for k in [k_min, k_max].
std::map<long, Real> moment_table(BesselQuadrature& q, int n, long k_min, long k_max, bool upper);

struct IdentityCheck {
  std::string name;
  Real lhs;
  Real rhs;
  Real difference;  // |lhs - rhs|
  bool passed = false;
};

struct IdentityReport {
  int digits = 0;
  std::vector<IdentityCheck> checks;
  bool passed() const;
};

// C_{3,1} = L_-3(2), C_{3,3} = 2 L_-3(2)/9 - 4/27, C_{4,1} = 7 zeta(3)/12,
// C_{4,3} = 7 zeta(3)/288 - 1/48, each to 10^-(digits-5), plus C_{4,5}
// transported from C_{4,1}, C_{4,3} against quadrature to 10^-(digits-10).
// UsageError for digits outside [10, 50].
IdentityReport check_identities(int digits);
nlohmann::json identity_report_to_json(const IdentityReport& report);

}  // namespace momentrec

#endif  // MOMENTREC_VERIFY_HPP
