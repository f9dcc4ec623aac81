#include "doctest.h"

#include "qstack/family.hpp"
#include "qstack/isomorphism.hpp"
#include "qstack/pdim.hpp"

using namespace qstack;

TEST_CASE("step function parsing") {
  auto f = StepFunction::parse("1:2,2:3");
  CHECK(f.r == 2);
  CHECK(f.m == 2);
  CHECK(f.s == 1);
  CHECK_FALSE(f.two_jumps());
  CHECK(f.value(1) == 2);
  CHECK(f.value(5) == 3);
  auto g = StepFunction::parse("1:2,2:3,3:4");
  CHECK(g.two_jumps());
  CHECK(g.n == 3);
  CHECK(g.d() == 2);
  CHECK(g.str() == "1:2,2:3,3:4");
  CHECK(StepFunction::parse("1:2").d() == 0);
  CHECK_THROWS(StepFunction::parse("1:2,2:3,3:4,4:5"));
  CHECK_THROWS(StepFunction::parse("1:1"));
  CHECK_THROWS(StepFunction::parse("2:3"));
  CHECK_THROWS(StepFunction::parse("1:3,2:3"));
}

TEST_CASE("level one of the (2,2,1) family") {
  auto fam = generate_family<Zp>(StepFunction::make(2, 2, 1));
  const auto& l1 = *fam.top();
  CHECK(l1.quiver().num_vertices() == 7);
  CHECK(l1.quiver().num_arrows() == 12);
  CHECK(fam.algebra(0)->dim() == 14);
  // Λa1: 1 + 3 + 2, Λb1: 1 + 2 + 1
  CHECK(l1.dim() == 24);
  CHECK_FALSE(l1.is_monomial());
  CHECK(fam.layers.back().size() == 2);

  int a1 = l1.quiver().vertex_index("a1");
  int b1 = l1.quiver().vertex_index("b1");
  auto pa = projective_module(fam.top(), a1);
  auto lay = module_layers(pa);
  CHECK(lay.loewy_length == 3);
  CHECK(lay.layers[1][l1.quiver().vertex_index("a0")] == 1);
  CHECK(lay.layers[1][l1.quiver().vertex_index("b0")] == 2);
  CHECK(lay.layers[2][l1.quiver().vertex_index("b-1")] == 2);
  // radical layer of P = Λa1 + (Λb1)^2: 3 + 2 + 2
  auto p = projective_module(fam.top(), std::vector<int>{a1, b1, b1});
  auto ml = module_layers(p);
  int jj = 0;
  for (int v : ml.layers[1]) jj += v;
  CHECK(jj == 7);
}

TEST_CASE("two-jump family bookkeeping") {
  auto fam = generate_family<Zp>(StepFunction::make(2, 2, 1, 3, 1));
  CHECK(fam.levels.size() == 3);
  const Quiver& q = fam.top()->quiver();
  CHECK(q.num_vertices() == 12);
  CHECK(q.num_arrows() == 28);
  for (auto v : {"b'-1", "b'0", "b'1", "a2", "b2"}) CHECK(q.find_vertex(v).has_value());
  CHECK(fam.algebra(1)->quiver().num_vertices() == 9);
  // E0 keeps b'-1, b'0; a1, b1, a2, b2, b'1 form the second layer
  REQUIRE(fam.layers.back().size() == 2);
  CHECK(fam.layers.back()[0].size() == 7);
  CHECK(fam.layers.back()[1].size() == 5);
}

TEST_CASE("every level is a valid stack over the previous one") {
  for (auto f : {StepFunction::make(2, 2, 2), StepFunction::make(3, 2, 1), StepFunction::make(2, 2, 1, 3, 1),
                 StepFunction::make(2, 3, 2)}) {
    auto fam = generate_family<Zp>(f);
    for (int l = 0; l <= f.d(); ++l) {
      const auto& alg = *fam.algebra(l);
      CHECK(alg.radical_power(3).empty());
      if (l == 0) {
        CHECK(alg.is_monomial());
        continue;
      }
      CHECK(check_partition(alg, fam.standard[l]).empty());
      auto lower = corner_algebra(alg, fam.standard[l].lower);
      std::string why;
      CHECK_MESSAGE(same_presentation(*lower.algebra, *fam.algebra(l - 1), &why), why);
      // alternate partition: every layer monomial, every step valid
      const auto& layers = fam.layers[l];
      CHECK(static_cast<int>(layers.size()) == (l + 1) / 2 + 1);
      std::vector<int> below;
      for (size_t i = 0; i < layers.size(); ++i) {
        std::vector<int> vs;
        for (auto& v : layers[i]) vs.push_back(alg.quiver().vertex_index(v));
        CHECK(corner_algebra(alg, vs).algebra->is_monomial());
        if (i > 0) {
          auto sub = corner_algebra(alg, [&] {
                       auto all = below;
                       all.insert(all.end(), vs.begin(), vs.end());
                       return all;
                     }());
          StackingPartition p;
          const Quiver& sq = sub.algebra->quiver();
          for (int v : below) p.lower.push_back(sq.vertex_index(alg.quiver().vertex(v)));
          for (int v : vs) p.upper.push_back(sq.vertex_index(alg.quiver().vertex(v)));
          CHECK(check_partition(*sub.algebra, p).empty());
        }
        below.insert(below.end(), vs.begin(), vs.end());
      }
    }
  }
}

TEST_CASE("constant f degenerates to the base algebra") {
  auto fam = generate_family<Zp>(StepFunction::parse("1:2"));
  CHECK(fam.levels.size() == 1);
  CHECK(fam.top()->quiver().num_vertices() == 5);
}

TEST_CASE("witness graphs are Loewy-2 trees with the advertised tops") {
  auto fam = generate_family<Zp>(StepFunction::make(2, 2, 1, 3, 1));
  for (int l = 0; l <= 2; ++l) {
    auto w = fam.witness(l);
    CHECK(w.tree());
    CHECK(w.basis_matches);
    CHECK(module_layers(w.module).loewy_length == 2);
    auto top = top_vector(w.module);
    const Quiver& q = fam.algebra(l)->quiver();
    CHECK(top[q.vertex_index(names::a(l))] == 1);
    CHECK(top[q.vertex_index(names::b(l))] == 2);
    if (l == 2) CHECK(top[q.vertex_index("b'1")] == 3);
  }
}

TEST_CASE("graph parser diagnostics") {
  CHECK_THROWS_AS(parse_graph("top x0 a1\n"), ParseError);
  try {
    parse_graph("top x: a0\nedge x -alpha-> y\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
  }
  auto g = parse_graph("# comment\ntop x0:a0\nedge x0 --gamma0--> y : c1\n");
  CHECK(g.tops.size() == 1);
  CHECK(g.edges[0].vertex == "c1");
  CHECK(parse_graph(format_graph(g)).edges.size() == 1);
}

TEST_CASE("cyclic graphs are flagged") {
  auto fam = generate_family<Zp>(StepFunction::parse("1:2"));
  auto w = build_graph_module(fam.top(),
                              "top x: a0\ntop y: b0\nedge x --alpha0_1--> u\nedge x --alpha0_2--> u2\n"
                              "edge y --beta0--> v\nidentify u v\nidentify u2 v\n");
  CHECK_FALSE(w.acyclic);
}
