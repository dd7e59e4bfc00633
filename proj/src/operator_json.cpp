#include "momentrec/operator_json.hpp"

#include <algorithm>
#include <tuple>

#include "momentrec/error.hpp"

namespace momentrec {

using nlohmann::json;

namespace {

json term_json(int t, int order, const BigRational& c) {
  return json{{"t", t}, {"order", order}, {"coeff", to_fraction_string(c)}};
}

int read_exponent(const json& term, const char* key) {
  if (!term.contains(key) || !term[key].is_number_integer()) {
    throw UsageError(std::string("operator term needs integer field '") + key + "'");
  }
  const auto v = term[key].get<long long>();
  if (v < 0 || v > 100000) throw UsageError(std::string("operator term field '") + key + "' out of range");
  return static_cast<int>(v);
}

BigRational read_coeff(const json& term) {
  if (!term.contains("coeff")) throw UsageError("operator term needs field 'coeff'");
  const json& c = term["coeff"];
  if (c.is_string()) return parse_rational(c.get<std::string>());
  if (c.is_number_integer()) return BigRational(BigInt(std::to_string(c.get<long long>())));
  throw UsageError("operator coefficient must be a \"num/den\" string");
}

}  // namespace

json operator_to_json(const Operator& op) {
  json terms = json::array();
  std::string kind;
  std::string variable;
  if (const auto* theta = std::get_if<ThetaOperator>(&op)) {
    kind = "theta";
    variable = theta->variable();
    std::vector<std::tuple<int, int, BigRational>> rows;
    for (const auto& [j, q] : theta->terms()) {
      const auto& cs = q.coefficients();
      for (std::size_t m = 0; m < cs.size(); ++m) {
        if (sgn(cs[m]) != 0) rows.emplace_back(j, static_cast<int>(m), cs[m]);
      }
    }
    for (const auto& [t, m, c] : rows) terms.push_back(term_json(t, m, c));
  } else {
    const auto& d = std::get<DOperator>(op);
    kind = "d";
    variable = d.variable();
    for (const auto& [key, c] : d.terms()) terms.push_back(term_json(key.first, key.second, c));
  }
  return json{{"kind", kind}, {"variable", variable}, {"terms", terms}};
}

Operator operator_from_json(const json& j) {
  if (!j.is_object()) throw UsageError("operator JSON must be an object");
  if (!j.contains("kind") || !j["kind"].is_string()) throw UsageError("operator JSON needs 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  std::string variable = "t";
  if (j.contains("variable")) {
    if (!j["variable"].is_string() || j["variable"].get<std::string>().empty()) {
      throw UsageError("operator 'variable' must be a non-empty string");
    }
    variable = j["variable"].get<std::string>();
  }
  if (!j.contains("terms") || !j["terms"].is_array()) throw UsageError("operator JSON needs 'terms' array");

  if (kind == "theta") {
    ThetaOperator op(variable);
    for (const auto& term : j["terms"]) {
      if (!term.is_object()) throw UsageError("operator term must be an object");
      op.add_term(read_exponent(term, "t"),
                  Polynomial::monomial(kThetaSymbol, read_coeff(term), read_exponent(term, "order")));
    }
    return op;
  }
  if (kind == "d") {
    DOperator op(variable);
    for (const auto& term : j["terms"]) {
      if (!term.is_object()) throw UsageError("operator term must be an object");
      op.add_term(read_exponent(term, "t"), read_exponent(term, "order"), read_coeff(term));
    }
    return op;
  }
  throw UsageError("operator kind must be 'theta' or 'd', got '" + kind + "'");
}

}  // namespace momentrec
