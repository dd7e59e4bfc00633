#include "momentrec/verify.hpp"

#include <algorithm>

#include "momentrec/constants.hpp"
#include "momentrec/error.hpp"
#include "momentrec/pipelines.hpp"

namespace momentrec {

namespace {

Real coefficient_at(const Polynomial& p, long k, mpfr_prec_t bits) {
  return Real(p.evaluate(BigRational(k)), bits);
}

}  // namespace

bool ResidualReport::degenerate() const {
  return std::any_of(per_k.begin(), per_k.end(), [](const ResidualEntry& e) { return e.degenerate; });
}

ResidualReport check_recurrence(const Recurrence& r, const std::map<long, Real>& values, int digits,
                                std::string target) {
  if (r.terms.empty()) throw UsageError("empty recurrence");
  if (values.empty()) throw UsageError("no values supplied");
  const mpfr_prec_t bits = digits_to_bits(digits + 10);
  ResidualReport report{std::move(target), digits, Real(bits), {}};
  const long first = values.begin()->first;
  const long last = values.rbegin()->first;
  for (long k = first; k + r.max_offset() <= last; ++k) {
    bool complete = true;
    for (const auto& t : r.terms) complete = complete && values.count(k + t.offset) > 0;
    if (!complete) continue;
    Real sum(bits);
    Real scale(bits);
    for (const auto& t : r.terms) {
      const Real term = coefficient_at(t.coeff, k, bits) * values.at(k + t.offset);
      sum += term;
      scale = std::max(scale, abs(term));
    }
    ResidualEntry entry{k, Real(bits), scale.is_zero()};
    if (!entry.degenerate) entry.relative_residual = abs(sum) / scale;
    report.max_relative_residual = std::max(report.max_relative_residual, entry.relative_residual);
    report.per_k.push_back(std::move(entry));
  }
  if (report.per_k.empty()) throw UsageError("values do not cover any full window of the recurrence");
  return report;
}

nlohmann::json report_to_json(const ResidualReport& report) {
  nlohmann::json per_k = nlohmann::json::array();
  for (const auto& e : report.per_k) {
    nlohmann::json item{{"k", e.k}, {"relative_residual", e.relative_residual.to_string(2)}};
    if (e.degenerate) item["degenerate"] = true;
    per_k.push_back(std::move(item));
  }
  return {{"target", report.target},
          {"P", report.digits},
          {"max_relative_residual", report.max_relative_residual.to_string(2)},
          {"per_k", std::move(per_k)}};
}

std::map<long, Real> transport(const Recurrence& r, std::map<long, Real> values, long last) {
  if (r.terms.empty()) throw UsageError("empty recurrence");
  if (values.empty()) throw UsageError("no starting values");
  const int top = r.max_offset();
  const mpfr_prec_t bits = values.begin()->second.bits();
  // Indices of the other parity (for recurrences with even offsets only)
  // are skipped when their starting values are absent.
  for (long m = values.rbegin()->first + 1; m <= last; ++m) {
    const long k = m - top;
    Real sum(bits);
    bool complete = true;
    for (const auto& t : r.terms) {
      if (t.offset == top) continue;
      const auto it = values.find(k + t.offset);
      if (it == values.end()) {
        complete = false;
        break;
      }
      sum += coefficient_at(t.coeff, k, bits) * it->second;
    }
    if (!complete) continue;
    const Real lead = coefficient_at(r.terms.back().coeff, k, bits);
    if (lead.is_zero()) throw ArithmeticError("top coefficient vanishes at k = " + std::to_string(k));
    values.insert_or_assign(m, -sum / lead);
  }
  if (values.count(last) == 0) throw UsageError("starting values do not determine index " + std::to_string(last));
  return values;
}

std::map<long, Real> moment_table(BesselQuadrature& q, int n, long k_min, long k_max, bool upper) {
  std::map<long, Real> out;
  for (long k = k_min; k <= k_max; ++k) {
    const int ki = static_cast<int>(k);
    out.emplace(k, upper ? moment_C(q, n, ki).value : moment_c(q, n, ki).value);
  }
  return out;
}

bool IdentityReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

IdentityReport check_identities(int digits) {
  if (digits < 10 || digits > 50) throw UsageError("identity checks run at 10 to 50 digits");
  BesselQuadrature q(digits);
  const mpfr_prec_t bits = q.bits();
  const Real zeta3 = constant(Constant::kZeta3, digits).value;
  const Real l3 = constant(Constant::kLMinus3At2, digits).value;
  const Real tol = pow10(-(digits - 5), bits);
  IdentityReport report{digits, {}};
  auto add = [&](std::string name, Real lhs, Real rhs, const Real& allowed) {
    Real diff = abs(lhs - rhs);
    const bool ok = diff < allowed;
    report.checks.push_back({std::move(name), std::move(lhs), std::move(rhs), std::move(diff), ok});
  };
  const Real c31 = moment_C(q, 3, 1).value;
  const Real c33 = moment_C(q, 3, 3).value;
  const Real c41 = moment_C(q, 4, 1).value;
  const Real c43 = moment_C(q, 4, 3).value;
  add("C(3,1) = L_-3(2)", c31, l3, tol);
  add("C(3,3) = 2 L_-3(2)/9 - 4/27", c33, l3 * 2 / 9 - Real(BigRational(4, 27), bits), tol);
  add("C(4,1) = 7 zeta(3)/12", c41, zeta3 * 7 / 12, tol);
  add("C(4,3) = 7 zeta(3)/288 - 1/48", c43, zeta3 * 7 / 288 - Real(BigRational(1, 48), bits), tol);
  std::map<long, Real> start;
  start.emplace(1, c41);
  start.emplace(3, c43);
  const auto moved = transport(rec_C(4), start, 5);
  add("C(4,5) from C(4,1), C(4,3)", moved.at(5), moment_C(q, 4, 5).value, pow10(-(digits - 10), bits));
  return report;
}

nlohmann::json identity_report_to_json(const IdentityReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"identity", c.name},
                      {"lhs", c.lhs.to_string(report.digits)},
                      {"rhs", c.rhs.to_string(report.digits)},
                      {"difference", c.difference.to_string(2)},
                      {"passed", c.passed}});
  }
  return {{"P", report.digits}, {"passed", report.passed()}, {"checks", std::move(checks)}};
}

}  // namespace momentrec
