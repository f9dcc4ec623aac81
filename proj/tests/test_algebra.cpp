#include "doctest.h"

#include "qstack/algebra.hpp"
#include "qstack/representation.hpp"

using namespace qstack;

namespace {

// Base algebra with r = 2, m = 2, written out by hand.
Quiver lambda0_quiver() {
  Quiver q;
  for (auto v : {"a0", "c1", "c2", "b-1", "b0"}) q.add_vertex(v);
  q.add_arrow("gamma0", "a0", "c1");
  q.add_arrow("gamma1", "c1", "c2");
  q.add_arrow("alpha0_1", "a0", "b-1");
  q.add_arrow("alpha0_2", "a0", "b-1");
  q.add_arrow("eps-1", "b-1", "b-1");
  q.add_arrow("beta0", "b0", "b-1");
  q.add_arrow("eps0", "b0", "b0");
  return q;
}

template <class F>
AlgebraPtr<F> lambda0() {
  Quiver q = lambda0_quiver();
  std::vector<Relation> rels;
  for (auto w : {"gamma1*gamma0", "eps-1*eps-1", "eps0*eps0", "eps-1*beta0", "beta0*eps0"})
    rels.push_back(Relation::monomial(parse_path(q, w)));
  return build_algebra<F>(q, rels, 3);
}

}  // namespace

TEST_CASE("paths compose right to left") {
  Quiver q = lambda0_quiver();
  Path g0 = parse_path(q, "gamma0"), g1 = parse_path(q, "gamma1");
  auto c = compose(g1, g0);
  REQUIRE(c);
  CHECK(c->length() == 2);
  CHECK(q.vertex(c->source()) == "a0");
  CHECK(q.vertex(c->target()) == "c2");
  CHECK(!compose(g0, g1));
  CHECK(*compose(Path::trivial(q.vertex_index("c1")), g0) == g0);
  CHECK(format_path(q, *c) == "gamma1*gamma0");
}

TEST_CASE("path enumeration") {
  Quiver q = lambda0_quiver();
  CHECK(enumerate_paths(q, 1).size() == 12);
  CHECK(enumerate_paths(q, 0).size() == 5);
  Quiver l;
  l.add_vertex("x");
  l.add_arrow("e", "x", "x");
  CHECK(enumerate_paths(l, 3).size() == 4);
  CHECK(q.sources() == std::vector<int>{q.vertex_index("a0")});
}

TEST_CASE("base algebra basis") {
  auto alg = lambda0<Rational>();
  CHECK(alg->dim() == 14);
  CHECK(alg->is_monomial());
  CHECK(alg->radical_power(3).empty());
  CHECK(alg->radical_power(0).size() == 14);
  auto j2 = alg->radical_power(2);
  REQUIRE(j2.size() == 2);
  const Quiver& q = alg->quiver();
  CHECK(format_path(q, alg->basis_path(j2[0])) == "eps-1*alpha0_1");
  CHECK(format_path(q, alg->basis_path(j2[1])) == "eps-1*alpha0_2");
  CHECK(alg->is_zero_path(parse_path(q, "eps-1*eps-1")));
  CHECK(!alg->is_zero_path(parse_path(q, "eps-1*alpha0_1")));
}

TEST_CASE("associativity of the multiplication table") {
  auto alg = lambda0<Rational>();
  const int n = alg->dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vector<Rational> ei = Vector<Rational>::Unit(n, i), ej = Vector<Rational>::Unit(n, j),
                         ek = Vector<Rational>::Unit(n, k);
        CHECK(alg->multiply(alg->multiply(ei, ej), ek) == alg->multiply(ei, alg->multiply(ej, ek)));
      }
}

TEST_CASE("relations must kill J^N") {
  Quiver q;
  q.add_vertex("x");
  q.add_arrow("e", "x", "x");
  CHECK_THROWS(build_algebra<Rational>(q, {}, 3));
  CHECK(build_algebra<Rational>(q, {Relation::monomial(parse_path(q, "e*e"))}, 3)->dim() == 2);
  Quiver one;
  one.add_vertex("v");
  CHECK(build_algebra<Rational>(one, {}, 3)->dim() == 1);
}

TEST_CASE("binomial algebra") {
  // square with commutativity: two paths x -> y -> w and x -> z -> w identified
  Quiver q;
  for (auto v : {"x", "y", "z", "w"}) q.add_vertex(v);
  q.add_arrow("a", "x", "y");
  q.add_arrow("b", "y", "w");
  q.add_arrow("c", "x", "z");
  q.add_arrow("d", "z", "w");
  auto alg = build_algebra<Rational>(q, {Relation::binomial(parse_path(q, "b*a"), parse_path(q, "d*c"))}, 3);
  CHECK(alg->dim() == 9);
  CHECK(!alg->is_monomial());
  auto nf1 = alg->normal_form(parse_path(q, "b*a"));
  auto nf2 = alg->normal_form(parse_path(q, "d*c"));
  CHECK(nf1.size() == 1);
  CHECK(nf1 == nf2);
}

TEST_CASE("standard modules") {
  auto alg = lambda0<Rational>();
  const Quiver& q = alg->quiver();
  auto p = projective_module(alg, q.vertex_index("a0"));
  CHECK(p.total_dim() == 6);
  auto g1 = path_ideal(alg, parse_path(q, "gamma1"));
  CHECK(g1.total_dim() == 1);
  CHECK(g1.dim(q.vertex_index("c2")) == 1);
  auto pb0 = projective_module(alg, q.vertex_index("b0"));
  auto soc = socle(pb0);
  CHECK(soc[q.vertex_index("b-1")].dim() == 1);
  CHECK(soc[q.vertex_index("b0")].dim() == 1);
  CHECK(family_dim(soc) == 2);
  auto l = module_layers(p);
  CHECK(l.loewy_length == 3);
}
