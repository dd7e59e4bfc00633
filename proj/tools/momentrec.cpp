#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "momentrec/error.hpp"
#include "momentrec/mellin.hpp"
#include "momentrec/moments.hpp"
#include "momentrec/operator_json.hpp"
#include "momentrec/pipelines.hpp"
#include "momentrec/render.hpp"
#include "momentrec/symmetric_power.hpp"
#include "momentrec/vacuum.hpp"
#include "momentrec/verify.hpp"

using namespace momentrec;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

int default_digits() {
  const char* env = std::getenv("MOMENTREC_PRECISION_DEFAULT");
  if (env == nullptr || *env == '\0') return 30;
  try {
    std::size_t used = 0;
    const int digits = std::stoi(env, &used);
    if (used != std::string(env).size() || digits < 5 || digits > 1000) throw std::invalid_argument("range");
    return digits;
  } catch (const std::exception&) {
    throw UsageError("MOMENTREC_PRECISION_DEFAULT must be an integer between 5 and 1000");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Globals {
  std::string format = "text";
  int digits = 30;
  double time_budget = 0.0;
  bool expanded = false;

  RenderStyle style() const { return {parse_format(format), !expanded}; }
};

int run_rec(const Globals& g, const std::string& seq, int n, int all_n) {
  if ((n == 0) == (all_n == 0)) throw UsageError("rec needs exactly one of --n and --all-n");
  const auto start = std::chrono::steady_clock::now();
  std::vector<Recurrence> out;
  const int first = n != 0 ? n : 1;
  const int last = n != 0 ? n : all_n;
  for (int m = first; m <= last; ++m) out.push_back(seq == "c" ? rec_c(m) : rec_C(m));
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const RenderStyle style = g.style();
  if (style.format == Format::kJson && out.size() > 1) {
    nlohmann::json all = nlohmann::json::array();
    for (const auto& r : out) all.push_back(recurrence_to_json(r));
    std::cout << all.dump(2) << "\n";
  } else {
    for (const auto& r : out) std::cout << render_recurrence(r, style) << "\n";
  }
  if (g.time_budget > 0.0 && elapsed > g.time_budget) {
    std::cerr << "error: derivation took " << elapsed << " s, budget " << g.time_budget << " s\n";
    return kExitDomain;
  }
  return 0;
}

int run_annihilator(const Globals& g, int n, const std::string& form) {
  const ThetaOperator l = symmetric_power_commutative(SecondOrderTheta::bessel_k0(), n);
  const Operator op = form == "d" ? Operator(theta_to_d(l)) : Operator(l);
  std::cout << render_operator(op, g.style()) << "\n";
  return 0;
}

int run_mellin(const Globals& g, const std::string& path, const std::string& seq, const std::string& var) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("operator file is not valid JSON: ") + e.what());
  }
  const Operator op = operator_from_json(j);
  const Recurrence r = std::holds_alternative<ThetaOperator>(op)
                           ? mellin_recurrence_theta(std::get<ThetaOperator>(op), seq, std::nullopt, var)
                           : mellin_recurrence_d(std::get<DOperator>(op), seq, std::nullopt, var);
  std::cout << render_recurrence(r, g.style()) << "\n";
  return 0;
}

int run_box(const Globals& g, const std::string& kind, int n) {
  const Recurrence r = box_recurrence(kind == "B" ? BoxKind::kB : BoxKind::kDelta, n);
  std::cout << render_recurrence(r, g.style()) << "\n";
  return 0;
}

int run_verify(const Globals& g, int n_max, int k_max, const std::string& seq, double threshold, bool identities) {
  BesselQuadrature q(g.digits);
  bool ok = true;
  Real limit(q.bits());
  mpfr_set_d(limit.get(), threshold, MPFR_RNDN);
  for (int n = 1; n <= n_max; ++n) {
    const bool upper = seq == "C";
    const Recurrence r = upper ? rec_C(n) : rec_c(n);
    const auto values = moment_table(q, n, 0, k_max, upper);
    const ResidualReport report = check_recurrence(r, values, g.digits, "rec_" + seq + "(" + std::to_string(n) + ")");
    ok = ok && report.max_relative_residual < limit && !report.degenerate();
    std::cout << report_to_json(report).dump() << "\n";
  }
  if (identities) {
    const IdentityReport report = check_identities(g.digits);
    ok = ok && report.passed();
    std::cout << identity_report_to_json(report).dump() << "\n";
  }
  if (!ok) {
    std::cerr << "error: verification failed\n";
    return kExitDomain;
  }
  return 0;
}

int run_reduce_v(const Globals& g, int n, int a, int b, bool check) {
  const VTerm input{n, a, b, 1};
  const std::vector<VTerm> terms = reduce_V(input);
  std::cout << render_reduction(input, terms, g.style()) << "\n";
  if (!check) return 0;
  BesselQuadrature q(g.digits);
  const Real lhs = moment_V(q, n, a, b).value;
  Real rhs(q.bits());
  for (const auto& t : terms) rhs += Real(t.coeff, q.bits()) * moment_V(q, t.n, t.a, t.b).value;
  const Real diff = relative_difference(lhs, rhs);
  std::cout << "numeric check at " << g.digits << " digits: relative difference " << diff.to_string(2) << "\n";
  if (diff > pow10(-(g.digits - 5), q.bits())) {
    std::cerr << "error: numeric check failed\n";
    return kExitDomain;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact recurrences for moments of powers of D-finite functions"};
  app.set_version_flag("--version", MOMENTREC_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "latex", "json"}));
  app.add_option("--digits", g.digits, "Working precision in decimal digits")->check(CLI::Range(5, 1000));
  app.add_option("--time-budget", g.time_budget, "Fail when derivation takes longer (seconds)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--expanded", g.expanded, "Do not factor coefficients");

  std::string seq;
  int n = 0;
  int all_n = 0;
  auto* rec = app.add_subcommand("rec", "Recurrence for c_{n,k} or C_{n,k}");
  rec->add_option("--seq", seq, "c or C")->required()->check(CLI::IsMember({"c", "C"}));
  auto* rec_n = rec->add_option("--n", n, "n")->check(CLI::Range(1, 200));
  rec->add_option("--all-n", all_n, "All n from 1 to this value")->check(CLI::Range(1, 200))->excludes(rec_n);

  std::string form = "theta";
  auto* ann = app.add_subcommand("annihilator", "Operator annihilating K0^n");
  ann->add_option("--n", n, "n")->required()->check(CLI::Range(1, 200));
  ann->add_option("--form", form, "theta or d")->check(CLI::IsMember({"theta", "d"}));

  std::string path;
  std::string mellin_seq = "I";
  std::string var = "k";
  auto* mel = app.add_subcommand("mellin", "Moment recurrence of an operator given as JSON");
  mel->add_option("file", path, "Operator JSON file")->required();
  mel->add_option("--seq", mellin_seq, "Sequence name");
  mel->add_option("--var", var, "Recurrence variable");

  std::string kind;
  auto* box = app.add_subcommand("box", "Difference equation for B_n(s) or Delta_n(s)");
  box->add_option("--kind", kind, "B or Delta")->required()->check(CLI::IsMember({"B", "Delta"}));
  box->add_option("--n", n, "n")->required()->check(CLI::Range(1, 200));

  int k_max = 10;
  std::string verify_seq = "c";
  double threshold = 1e-15;
  bool identities = false;
  auto* ver = app.add_subcommand("verify", "Check recurrences against quadrature values");
  ver->add_option("--n", n, "Check n = 1 .. this value")->required()->check(CLI::Range(1, 12));
  ver->add_option("--kmax", k_max, "Largest k")->check(CLI::Range(0, 60));
  ver->add_option("--seq", verify_seq, "c or C")->check(CLI::IsMember({"c", "C"}));
  ver->add_option("--threshold", threshold, "Largest accepted relative residual")->check(CLI::PositiveNumber);
  ver->add_flag("--identities", identities, "Also check the closed forms of C_{3,1}, C_{3,3}, C_{4,1}, C_{4,3}");

  int a = 0;
  int b = 0;
  bool check = false;
  auto* red = app.add_subcommand("reduce-v", "Reduce V(n,a,b) to terms with a*b = 0");
  red->add_option("--n", n, "n")->required()->check(CLI::NonNegativeNumber);
  red->add_option("--a", a, "a")->required()->check(CLI::NonNegativeNumber);
  red->add_option("--b", b, "b")->required()->check(CLI::NonNegativeNumber);
  red->add_flag("--check", check, "Confirm the reduction by quadrature");

  try {
    g.digits = default_digits();
    app.parse(argc, argv);
    if (*rec) return run_rec(g, seq, n, all_n);
    if (*ann) return run_annihilator(g, n, form);
    if (*mel) return run_mellin(g, path, mellin_seq, var);
    if (*box) return run_box(g, kind, n);
    if (*ver) return run_verify(g, n, k_max, verify_seq, threshold, identities);
    if (*red) return run_reduce_v(g, n, a, b, check);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
