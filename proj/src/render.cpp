#include "momentrec/render.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "momentrec/error.hpp"
#include "momentrec/operator_json.hpp"

namespace momentrec {

namespace {

constexpr const char* kMinus = "−";
constexpr const char* kDot = "·";

std::string minus(Format f) { return f == Format::kText ? kMinus : "-"; }

std::string power_suffix(int e, Format f) {
  if (e == 1) return "";
  return f == Format::kLatex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
}

// x, x^2, ...; "" for e == 0.
std::string monomial(const std::string& x, int e, Format f) {
  if (e == 0) return "";
  return x + power_suffix(e, f);
}

std::string symbol(const std::string& variable, Format f) {
  if (variable == kThetaSymbol) return f == Format::kLatex ? "\\theta" : "θ";
  return variable;
}

std::string rational_string(const BigRational& q) {
  return is_integer(q) ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Expanded, descending powers: "5k^2+20k+23", "k−2".
std::string format_poly(const Polynomial& p, Format f) {
  if (p.is_zero()) return "0";
  const std::string x = symbol(p.variable(), f);
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    const BigRational& c = p.coeff(d);
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (!out.empty()) out += negative ? minus(f) : "+";
    else if (negative) out += minus(f);
    const BigRational a = abs(c);
    if (a != 1 || d == 0) {
      out += rational_string(a);
      if (d > 0 && f == Format::kLatex && !is_integer(a)) out += " ";
    }
    out += monomial(x, d, f);
  }
  return out;
}

std::string linear_factor(const std::string& x, const BigInt& c, Format f) {
  if (c == 0) return x;
  if (c > 0) return "(" + x + "+" + c.get_str() + ")";
  return "(" + x + minus(f) + BigInt(-c).get_str() + ")";
}

// Magnitude of a coefficient polynomial whose sign has already been taken
// out; "" when it is 1.
std::string format_magnitude(const Polynomial& p, const RenderStyle& style) {
  const Format f = style.format;
  if (!style.factored) {
    if (p.is_constant()) return p.coeff(0) == 1 ? "" : rational_string(p.coeff(0));
    return "(" + format_poly(p, f) + ")";
  }
  const LinearFactorization lf = factor_linear(p);
  std::string out;
  if (lf.content != 1) out += rational_string(lf.content);
  const std::string x = symbol(p.variable(), f);
  for (const auto& [c, m] : lf.linear) out += linear_factor(x, c, f) + power_suffix(m, f);
  if (!lf.rest.is_constant()) out += "(" + format_poly(lf.rest, f) + ")";
  return out;
}

std::string index_string(const std::string& var, int offset, Format f) {
  if (offset == 0) return var;
  if (offset > 0) return var + "+" + std::to_string(offset);
  return var + minus(f) + std::to_string(-offset);
}

std::string sequence_ref(const Recurrence& r, int offset, Format f) {
  const std::string index = index_string(r.variable, offset, f);
  if (f == Format::kLatex) {
    return r.sequence + "_{" + (r.n ? std::to_string(*r.n) + "," : "") + index + "}";
  }
  return r.sequence + "(" + (r.n ? std::to_string(*r.n) + "," : "") + index + ")";
}

std::string join_product(const std::string& coeff, const std::string& item, Format f) {
  if (coeff.empty()) return item;
  if (f == Format::kLatex) return coeff + " " + item;
  return coeff + kDot + item;
}

// " − " / " + ", or a bare leading sign for the first term.
std::string sign_separator(bool first, bool negative, Format f) {
  if (first) return negative ? minus(f) : "";
  return negative ? " " + minus(f) + " " : " + ";
}

std::string render_solved(const Recurrence& r, const RenderStyle& style) {
  // u(k+J) = q(k) u(k) with q = -p_0 / p_J, shown at k -> k - J.
  const int top = r.max_offset();
  Polynomial q = r.terms.front().coeff * (-1 / r.terms.back().coeff.coeff(0));
  q = q.shift(BigRational(-top));
  const Format f = style.format;
  const bool negative = sgn(q.leading()) < 0;
  if (negative) q = -q;
  std::string rhs = join_product(format_magnitude(q, style), sequence_ref(r, -top, f), f);
  if (negative) rhs = minus(f) + rhs;
  return sequence_ref(r, 0, f) + " = " + rhs;
}

template <typename Items>
std::string format_operator_terms(const Items& items, const std::string& derivation, const RenderStyle& style) {
  // items: (derivation power, coefficient polynomial in t), descending.
  const Format f = style.format;
  std::string out;
  for (const auto& [m, c] : items) {
    const bool negative = sgn(c.leading()) < 0;
    const Polynomial mag = negative ? -c : c;
    std::string coeff;
    if (mag.coefficients().size() - std::count(mag.coefficients().begin(), mag.coefficients().end(), BigRational(0)) > 1) {
      coeff = "(" + format_poly(mag, f) + ")";
    } else {
      coeff = format_poly(mag, f);
      if (coeff == "1" && m > 0) coeff.clear();
    }
    const std::string d = monomial(derivation, m, f);
    std::string term = coeff;
    if (!d.empty()) term = join_product(coeff, d, f);
    out += sign_separator(out.empty(), negative, f) + term;
  }
  return out.empty() ? "0" : out;
}

std::uint64_t mod_eval(const std::vector<std::uint64_t>& coeffs, std::uint64_t x, std::uint64_t p) {
  unsigned __int128 acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (acc * x + *it) % p;
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::kText;
  if (name == "latex") return Format::kLatex;
  if (name == "json") return Format::kJson;
  throw UsageError("unknown format: " + name);
}

LinearFactorization factor_linear(const Polynomial& p, int bound) {
  if (p.is_zero()) throw UsageError("cannot factor the zero polynomial");
  LinearFactorization out{rational_content(p), {}, Polynomial(p.variable())};
  if (sgn(p.leading()) < 0) out.content = -out.content;
  Polynomial rest = p * (1 / out.content);
  const std::uint64_t prime = (std::uint64_t{1} << 61) - 1;
  auto residues_of = [prime](const Polynomial& q) {
    std::vector<std::uint64_t> out;
    for (const auto& a : q.coefficients()) {
      BigInt r = a.get_num() % BigInt(static_cast<unsigned long>(prime));
      if (r < 0) r += static_cast<unsigned long>(prime);
      out.push_back(r.get_ui());
    }
    return out;
  };
  std::vector<std::uint64_t> residues = residues_of(rest);
  for (int c = -bound; c <= bound; ++c) {
    int multiplicity = 0;
    const std::uint64_t x = c <= 0 ? static_cast<std::uint64_t>(-c) : prime - static_cast<std::uint64_t>(c);
    // Cheap modular filter before the exact test.
    while (rest.degree() >= 1 && mod_eval(residues, x, prime) == 0 && sgn(rest.evaluate(BigRational(-c))) == 0) {
      rest = divmod(rest, Polynomial::linear(p.variable(), c, 1)).quotient;
      residues = residues_of(rest);
      ++multiplicity;
    }
    if (multiplicity > 0) out.linear.emplace_back(BigInt(c), multiplicity);
  }
  out.rest = rest;
  return out;
}

std::string render_recurrence(const Recurrence& r, const RenderStyle& style) {
  const Format f = style.format;
  if (f == Format::kJson) return recurrence_to_json(r).dump(2);
  if (r.terms.empty()) throw UsageError("empty recurrence");
  const auto& top = r.terms.back().coeff;
  if (f == Format::kText && r.terms.size() == 2 && top.is_constant() && abs(top.coeff(0)) == 1) {
    return render_solved(r, style);
  }
  // Display with the offset-0 coefficient positive.
  const bool flip = sgn(r.terms.front().coeff.leading()) < 0;
  std::string out;
  for (const auto& t : r.terms) {
    const Polynomial c = flip ? -t.coeff : t.coeff;
    const bool negative = sgn(c.leading()) < 0;
    const std::string mag = format_magnitude(negative ? -c : c, style);
    out += sign_separator(out.empty(), negative, f) + join_product(mag, sequence_ref(r, t.offset, f), f);
  }
  return out + " = 0";
}

std::string render_operator(const Operator& op, const RenderStyle& style) {
  if (style.format == Format::kJson) return operator_to_json(op).dump(2);
  const Format f = style.format;
  if (const auto* theta = std::get_if<ThetaOperator>(&op)) {
    std::vector<std::pair<int, Polynomial>> items;
    for (int m = theta->order(); m >= 0; --m) {
      const Polynomial c = theta->coefficient_of_theta(m);
      if (!c.is_zero()) items.emplace_back(m, c);
    }
    return format_operator_terms(items, symbol(kThetaSymbol, f), style);
  }
  const auto& d = std::get<DOperator>(op);
  std::vector<std::pair<int, Polynomial>> items;
  for (int m = d.order(); m >= 0; --m) {
    const Polynomial c = d.coefficient(m);
    if (!c.is_zero()) items.emplace_back(m, c);
  }
  return format_operator_terms(items, "D", style);
}

std::string render_reduction(const VTerm& input, const std::vector<VTerm>& terms, const RenderStyle& style) {
  const Format f = style.format;
  auto name = [](const VTerm& v) {
    return "V(" + std::to_string(v.n) + "," + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
  };
  if (f == Format::kJson) {
    nlohmann::json out{{"input", {{"n", input.n}, {"a", input.a}, {"b", input.b}}}};
    out["terms"] = nlohmann::json::array();
    for (const auto& t : terms) {
      out["terms"].push_back({{"n", t.n}, {"a", t.a}, {"b", t.b}, {"coeff", to_fraction_string(t.coeff)}});
    }
    return out.dump(2);
  }
  std::string rhs;
  for (const auto& t : terms) {
    const bool negative = sgn(t.coeff) < 0;
    std::string c = rational_string(abs(t.coeff));
    if (f == Format::kLatex && !is_integer(t.coeff)) {
      c = "\\frac{" + BigInt(abs(t.coeff.get_num())).get_str() + "}{" + t.coeff.get_den().get_str() + "}";
    }
    rhs += sign_separator(rhs.empty(), negative, f) + join_product(c, name(t), f);
  }
  if (rhs.empty()) rhs = "0";
  return name(input) + " = " + rhs;
}

}  // namespace momentrec
