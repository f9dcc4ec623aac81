#include "doctest.h"

#include "qstack/family.hpp"
#include "qstack/isomorphism.hpp"
#include "qstack/monomial.hpp"
#include "qstack/pdim.hpp"

using namespace qstack;


TEST_CASE("base algebra invariants") {
  for (auto [r, m] : {std::pair{2, 2}, {3, 2}, {4, 3}}) {
    auto fam = generate_family<Rational>(StepFunction::make(r, m, 0));
    auto alg = fam.top();
    const Quiver& q = alg->quiver();
    AnnihilatorGraph<Rational> g(alg);
    auto rep = critical_report(g);
    CHECK(rep.s == r - 2);
    auto iv = findim_interval(rep);
    CHECK(iv.first == r - 1);
    CHECK(iv.second == r);
    PdimEngine<Rational> eng(alg);
    CHECK(eng.pdim(simple_module(alg, q.vertex_index("a0"))).str() == "Finite(" + std::to_string(r) + ")");
    CHECK(g.pdim(parse_path(q, "gamma1")).value == r - 2);
    CHECK(eng.pdim(path_ideal(alg, parse_path(q, "gamma1"))).value == r - 2);
    CHECK(eng.pdim(simple_module(alg, q.vertex_index("b-1"))).is_infinite());
    CHECK(eng.generic(simple_module(alg, q.vertex_index("b-1"))).is_infinite());
    CHECK(eng.generic(simple_module(alg, q.vertex_index("a0"))).value == r);
  }
}

TEST_CASE("one-jump witness chain") {
  auto fam = generate_family<Zp>(StepFunction::make(2, 2, 2));
  std::vector<GraphModule<Zp>> w;
  for (int l = 0; l <= 2; ++l) w.push_back(fam.witness(l));
  // Ω¹(N0) = S(c1) + (Λ b-1)^2
  {
    auto alg = fam.algebra(0);
    const Quiver& q = alg->quiver();
    int b = q.vertex_index("b-1");
    auto expect = direct_sum<Zp>({simple_module(alg, q.vertex_index("c1")), projective_module(alg, std::vector<int>{b, b})});
    CHECK(is_isomorphic(syzygy(w[0].module), expect) == Certainty::Yes);
  }
  for (int l = 1; l <= 2; ++l) {
    auto o = syzygy(w[l].module);
    auto res = restrict_module(o, fam.algebra(l - 1), [&] {
      std::vector<int> vm;
      for (auto& v : fam.algebra(l - 1)->quiver().vertices()) vm.push_back(fam.algebra(l)->quiver().vertex_index(v));
      return vm;
    }(), [&] {
      std::vector<int> am;
      for (auto& a : fam.algebra(l - 1)->quiver().arrows()) am.push_back(fam.algebra(l)->quiver().arrow_index(a.id));
      return am;
    }());
    CHECK(res.total_dim() == o.total_dim());
    CHECK(is_isomorphic(res, w[l - 1].module) == Certainty::Yes);
  }
  for (int l = 0; l <= 2; ++l) {
    PdimEngine<Zp> plain(fam.algebra(l));
    CHECK(plain.generic(w[l].module).str() == "Finite(" + std::to_string(2 + l) + ")");
    PdimEngine<Zp> stacked(fam.algebra(l), standard_layers(fam.f, l));
    CHECK(stacked.pdim(w[l].module).str() == "Finite(" + std::to_string(2 + l) + ")");
    PdimEngine<Zp> alt(fam.algebra(l), fam.layers[l]);
    CHECK(alt.pdim(w[l].module).str() == "Finite(" + std::to_string(2 + l) + ")");
  }
}

TEST_CASE("X modules reach S(b-1)") {
  auto fam = generate_family<Zp>(StepFunction::make(2, 2, 2));
  for (int l = 1; l <= 2; ++l) {
    auto alg = fam.algebra(l);
    auto x = build_graph_module(alg, uniserial_x(l - 1)).module;
    auto o = syzygy(x, l);
    CHECK(is_isomorphic(o, simple_module(alg, alg->quiver().vertex_index("b-1"))) == Certainty::Yes);
    PdimEngine<Zp> eng(alg, standard_layers(fam.f, l));
    CHECK(eng.pdim(x).is_infinite());
  }
}

TEST_CASE("two-jump witness chain") {
  auto fam = generate_family<Zp>(StepFunction::make(2, 2, 1, 3, 1));
  auto n0 = fam.witness(0).module;
  auto n1 = fam.witness(1).module;
  auto n2 = fam.witness(2).module;
  auto alg1 = fam.algebra(1);
  int bp = alg1->quiver().vertex_index("b'-1");
  auto o = syzygy(n1);
  // N0 lifted to Λ1 plus three copies of Λ1 b'-1
  auto lifted = build_graph_module(alg1, fam.witness_specs[0]).module;
  auto expect = direct_sum<Zp>({lifted, projective_module(alg1, std::vector<int>{bp, bp, bp})});
  CHECK(is_isomorphic(o, expect) == Certainty::Yes);
  PdimEngine<Zp> e2(fam.top(), fam.layers[2]);
  CHECK(e2.pdim(n2).str() == "Finite(4)");
  PdimEngine<Zp> g2(fam.top());
  CHECK(g2.generic(n2).str() == "Finite(4)");
  CHECK(PdimEngine<Zp>(alg1).generic(n1).value == 3);
  CHECK(n0.total_dim() > 0);
}
