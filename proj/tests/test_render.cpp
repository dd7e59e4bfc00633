#include "doctest.h"
#include "golden.hpp"
#include "momentrec/error.hpp"
#include "momentrec/mellin.hpp"
#include "momentrec/pipelines.hpp"
#include "momentrec/render.hpp"
#include "momentrec/vacuum.hpp"
#include "oracles.hpp"

using namespace momentrec;
using golden::k;
using golden::poly;

namespace {

const RenderStyle kText{Format::kText, true};
const RenderStyle kLatex{Format::kLatex, true};
const RenderStyle kJson{Format::kJson, true};

}  // namespace

TEST_CASE("formats parse") {
  CHECK(parse_format("text") == Format::kText);
  CHECK(parse_format("latex") == Format::kLatex);
  CHECK(parse_format("json") == Format::kJson);
  CHECK_THROWS_AS(parse_format("xml"), UsageError);
}

TEST_CASE("linear factors") {
  const Polynomial p = golden::q(-4) * k(2, 2) * poly("k", {23, 20, 5}) * k(-3);
  const LinearFactorization f = factor_linear(p);
  CHECK(f.content == -4);
  REQUIRE(f.linear.size() == 2);
  CHECK(f.linear[0] == std::make_pair(BigInt(-3), 1));
  CHECK(f.linear[1] == std::make_pair(BigInt(2), 2));
  CHECK(f.rest == poly("k", {23, 20, 5}));

  // The pieces multiply back.
  Polynomial back = Polynomial::constant("k", f.content) * f.rest;
  for (const auto& [c, m] : f.linear) back *= golden::pw(Polynomial::linear("k", BigRational(c), 1), m);
  CHECK(back == p);

  const LinearFactorization constant = factor_linear(poly("k", {-6}));
  CHECK(constant.content == -6);
  CHECK(constant.linear.empty());
  CHECK(constant.rest == poly("k", {1}));

  // Roots beyond the search bound stay in the rest.
  const LinearFactorization far = factor_linear(k(100) * k(1), 64);
  CHECK(far.linear.size() == 1);
  CHECK(far.rest == k(100));
}

TEST_CASE("text rendering") {
  CHECK(render_recurrence(rec_C(1), kText) == "(k+1)·C(1,k) − (k+2)·C(1,k+2) = 0");
  CHECK(render_recurrence(rec_C(4), kText) ==
        "(k+1)^4·C(4,k) − 4(k+2)^2(5k^2+20k+23)·C(4,k+2) + 64(k+2)(k+3)^2(k+4)·C(4,k+4) = 0");
  CHECK(render_recurrence(rec_C(2), {Format::kText, false}) ==
        "(k^2+2k+1)·C(2,k) − (4k^2+16k+16)·C(2,k+2) = 0");
  const Recurrence gamma = mellin_recurrence_d(golden::d_op({{0, 1, 1}, {0, 0, 1}}), "I");
  CHECK(render_recurrence(gamma, kText) == "I(k) = k·I(k−1)");
  CHECK(render_recurrence(box_recurrence(BoxKind::kDelta, 1), kText) ==
        "(s+1)(s+2)·Delta(1,s) − (s+3)(s+4)·Delta(1,s+2) = 0");
}

TEST_CASE("latex rendering") {
  CHECK(render_recurrence(rec_c(4), kLatex) ==
        "(k+1)^{5} c_{4,k} - 4(k+2)(5k^{2}+20k+23) c_{4,k+2} + 64(k+3) c_{4,k+4} = 0");
  CHECK(render_recurrence(rec_C(3), kLatex) ==
        "(k+1)^{3} C_{3,k} - 2(k+2)(5k^{2}+20k+21) C_{3,k+2} + 9(k+2)(k+3)(k+4) C_{3,k+4} = 0");
}

TEST_CASE("json rendering round-trips byte for byte") {
  for (const Recurrence& r : {rec_C(1), rec_c(4), rec_C(12), box_recurrence(BoxKind::kB, 4)}) {
    const std::string text = render_recurrence(r, kJson);
    const Recurrence back = recurrence_from_json(nlohmann::json::parse(text));
    CHECK(back == r);
    CHECK(render_recurrence(back, kJson) == text);
  }
}

TEST_CASE("operator rendering") {
  CHECK(render_operator(Operator(golden::theta_op({{0, 2, 1}, {2, 0, -1}})), kText) == "θ^2 − t^2");
  CHECK(render_operator(Operator(golden::k0_ode()), kText) == "t^2·D^2 + t·D − t^2");
  CHECK(render_operator(Operator(golden::chain_k0_n4(5)), kText) ==
        "θ^5 − 20t^2·θ^3 − 60t^2·θ^2 + (64t^4−72t^2)·θ + (128t^4−32t^2)");
}

TEST_CASE("reduction rendering") {
  const VTerm v{1, 1, 1, 1};
  CHECK(render_reduction(v, reduce_V(v), kText) == "V(1,1,1) = −1·V(0,0,2)");
  const VTerm w{2, 2, 1, 1};
  CHECK(render_reduction(w, reduce_V(w), kText) == "V(2,2,1) = 4/3·V(0,0,3) − 1/2·V(1,0,3)");
  const auto j = nlohmann::json::parse(render_reduction(v, reduce_V(v), kJson));
  CHECK(j["terms"][0]["coeff"] == "-1/1");
  CHECK(j["input"]["n"] == 1);
}
