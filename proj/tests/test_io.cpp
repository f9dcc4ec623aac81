#include "doctest.h"

#include "qstack/family.hpp"
#include "qstack/io.hpp"

using namespace qstack;

namespace {

const char* kLambda0 = R"(# base algebra, r = 2, m = 2
field F2
nilp 3
vertex a0
vertex c1
vertex c2
vertex b-1
vertex b0
arrow gamma0 a0 c1
arrow gamma1 c1 c2
arrow alpha0_1 a0 b-1
arrow alpha0_2 a0 b-1
arrow eps-1 b-1 b-1
arrow beta0 b0 b-1
arrow eps0 b0 b0
zero gamma1*gamma0
zero eps-1*eps-1
zero eps0*eps0
zero eps-1*beta0
zero beta0*eps0
)";

ParseError parse_error(const std::string& text) {
  try {
    parse_alg(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error");
  return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE(".alg parsing matches the generated base algebra") {
  auto spec = parse_alg(kLambda0);
  CHECK(spec.field == "F2");
  CHECK(spec.nilp == 3);
  CHECK(spec.quiver.num_vertices() == 5);
  CHECK(spec.quiver.num_arrows() == 7);
  auto alg = build<Rational>(spec);
  CHECK(alg->dim() == 14);
  auto fam = generate_family<Rational>(StepFunction::make(2, 2, 0));
  CHECK(alg->is_monomial());
  CHECK(alg->dim() == fam.top()->dim());
}

TEST_CASE(".alg round trip") {
  auto fam = generate_family<Rational>(StepFunction::make(2, 2, 1, 3, 1));
  for (int l = 0; l <= 2; ++l) {
    auto spec = spec_of(*fam.algebra(l), "Q", fam.layers[l]);
    auto text = format_alg(spec);
    auto back = parse_alg(text);
    CHECK(format_alg(back) == text);
    auto alg = build<Rational>(back);
    CHECK(same_presentation(*alg, *fam.algebra(l)));
    CHECK(back.layers == fam.layers[l]);
  }
  auto two = parse_alg("vertex x\nvertex y\narrow a x y\npartition E' = y; E'' = x\n");
  REQUIRE(two.layers.size() == 2);
  CHECK(two.layers[0] == std::vector<std::string>{"y"});
  CHECK(parse_alg(format_alg(two)).layers == two.layers);
}

TEST_CASE(".alg diagnostics carry line and column") {
  auto e = parse_error("vertex a\narrow x a b\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 11);
  e = parse_error("vertex a\nvertex a\n");
  CHECK(e.line() == 2);
  e = parse_error("vertex a\narrow x a a\nzero x*y\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 6);
  e = parse_error("vertex a\narrow x a a\nzero x\n");
  CHECK(e.message().find("length") != std::string::npos);
  e = parse_error("vertex a\nvertex b\narrow x a b\narrow y b b\nrel y*x - x\n");
  CHECK(e.line() == 5);
  e = parse_error("field F4\n");
  CHECK(e.column() == 7);
  e = parse_error("frobnicate\n");
  CHECK(e.line() == 1);
  e = parse_error("vertex a\npartition E' = a; E'' = q\n");
  CHECK(e.line() == 2);
}

TEST_CASE("field names") {
  CHECK(field_prime("Q") == 0);
  CHECK(field_prime("F2") == 2);
  CHECK(field_prime("f7") == 7);
  CHECK(normalize_field("F<5>") == "F5");
  CHECK_THROWS(field_prime("F9"));
  CHECK_THROWS(field_prime("R"));
}

TEST_CASE("dot output lists every vertex and arrow") {
  auto spec = parse_alg(kLambda0);
  auto dot = quiver_dot(spec.quiver, {{"b-1"}, {"a0", "c1", "c2", "b0"}});
  for (auto& v : spec.quiver.vertices()) CHECK(dot.find("\"" + v + "\"") != std::string::npos);
  for (auto& a : spec.quiver.arrows()) CHECK(dot.find("label=\"" + a.id + "\"") != std::string::npos);
  CHECK(dot.find("cluster_E1") != std::string::npos);
  auto g = graph_dot(witness_graph(StepFunction::make(2, 2, 1), 1));
  CHECK(g.find("->") != std::string::npos);
}

TEST_CASE("digest") {
  CHECK(hex64(fnv1a("")) == "cbf29ce484222325");
  CHECK(hex64(fnv1a("a")) == "af63dc4c8601ec8c");
}
