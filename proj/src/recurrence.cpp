#include "momentrec/recurrence.hpp"

#include <cstdint>
#include <limits>

#include "momentrec/error.hpp"

namespace momentrec {

using nlohmann::json;

Polynomial Recurrence::coefficient(int offset) const {
  for (const auto& t : terms) {
    if (t.offset == offset) return t.coeff;
  }
  return Polynomial(variable);
}

std::vector<int> Recurrence::offsets() const {
  std::vector<int> out;
  for (const auto& t : terms) out.push_back(t.offset);
  return out;
}

Recurrence canonicalize(const RawRecurrence& raw, std::string sequence, std::optional<int> n,
                        std::string variable) {
  std::vector<int> offsets;
  std::vector<Polynomial> coeffs;
  for (const auto& [offset, c] : raw) {
    if (c.is_zero()) continue;
    offsets.push_back(offset);
    coeffs.push_back(c.with_variable(variable));
  }
  if (coeffs.empty()) throw UsageError("recurrence with all coefficients zero");
  const int base = offsets.front();
  if (base != 0) {
    for (auto& c : coeffs) c = c.shift(BigRational(-base));
  }
  ContentPrimitive cp;
  if (coeffs.size() == 1) {
    // A lone coefficient is its own polynomial content; keeping it records
    // where the relation u_k = 0 is actually forced.
    cp.primitives = {coeffs.front() * (1 / rational_content(coeffs.front()))};
  } else {
    cp = poly_content_primitive(coeffs);
  }
  if (sgn(cp.primitives.back().leading()) < 0) {
    for (auto& p : cp.primitives) p = -p;
  }
  Recurrence r;
  r.sequence = std::move(sequence);
  r.n = n;
  r.variable = std::move(variable);
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    r.terms.push_back({offsets[i] - base, std::move(cp.primitives[i])});
  }
  return r;
}

Recurrence canonicalize(const Recurrence& r) {
  RawRecurrence raw;
  for (const auto& t : r.terms) {
    auto [it, inserted] = raw.try_emplace(t.offset, t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  return canonicalize(raw, r.sequence, r.n, r.variable);
}

Recurrence make_recurrence(std::string sequence, std::optional<int> n, std::string variable,
                           const std::map<int, std::vector<long long>>& coeffs) {
  RawRecurrence raw;
  for (const auto& [offset, cs] : coeffs) {
    std::vector<BigRational> q;
    for (long long c : cs) q.emplace_back(BigInt(std::to_string(c)));
    raw[offset] = Polynomial(variable, std::move(q));
  }
  return canonicalize(raw, std::move(sequence), n, std::move(variable));
}

namespace {

json integer_json(const BigInt& z) {
  if (z.fits_slong_p()) {
    const long v = z.get_si();
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return json(static_cast<std::int64_t>(v));
  }
  return json(z.get_str());
}

BigInt integer_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    const BigRational q = parse_rational(j.get<std::string>());
    if (!is_integer(q)) throw UsageError("recurrence coefficients must be integers");
    return q.get_num();
  }
  throw UsageError("recurrence coefficient must be an integer or decimal string");
}

}  // namespace

json recurrence_to_json(const Recurrence& r) {
  json terms = json::array();
  for (const auto& t : r.terms) {
    json coeff = json::array();
    for (const auto& c : t.coeff.coefficients()) {
      if (!is_integer(c)) throw UsageError("recurrence JSON requires integer coefficients");
      coeff.push_back(integer_json(c.get_num()));
    }
    terms.push_back(json{{"offset", t.offset}, {"coeff", coeff}});
  }
  json out;
  out["sequence"] = r.sequence;
  if (r.n) out["n"] = *r.n;
  out["variable"] = r.variable;
  out["terms"] = terms;
  return out;
}

Recurrence recurrence_from_json(const json& j) {
  if (!j.is_object()) throw UsageError("recurrence JSON must be an object");
  Recurrence r;
  if (!j.contains("sequence") || !j["sequence"].is_string()) throw UsageError("recurrence needs 'sequence'");
  r.sequence = j["sequence"].get<std::string>();
  if (j.contains("n")) {
    if (!j["n"].is_number_integer()) throw UsageError("recurrence 'n' must be an integer");
    r.n = j["n"].get<int>();
  }
  if (!j.contains("variable") || !j["variable"].is_string()) throw UsageError("recurrence needs 'variable'");
  r.variable = j["variable"].get<std::string>();
  if (!j.contains("terms") || !j["terms"].is_array()) throw UsageError("recurrence needs 'terms'");
  int last = std::numeric_limits<int>::min();
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("offset") || !t["offset"].is_number_integer() ||
        !t.contains("coeff") || !t["coeff"].is_array()) {
      throw UsageError("malformed recurrence term");
    }
    const int offset = t["offset"].get<int>();
    if (offset <= last) throw UsageError("recurrence offsets must be strictly increasing");
    last = offset;
    std::vector<BigRational> q;
    for (const auto& c : t["coeff"]) q.emplace_back(integer_from_json(c));
    r.terms.push_back({offset, Polynomial(r.variable, std::move(q))});
  }
  if (r.terms.empty()) throw UsageError("recurrence without terms");
  return r;
}

}  // namespace momentrec
