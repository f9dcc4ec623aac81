#include "doctest.h"

#include "qstack/catalog.hpp"
#include "qstack/family.hpp"
#include "qstack/oracle.hpp"
#include "qstack/verify.hpp"

using namespace qstack;

namespace {

template <class F>
StackingPartition split(const AlgebraPtr<F>& alg, std::vector<std::string> lower) {
  std::vector<std::string> upper;
  for (auto& v : alg->quiver().vertices())
    if (std::find(lower.begin(), lower.end(), v) == lower.end()) upper.push_back(v);
  return partition_from_ids(alg->quiver(), lower, upper);
}

}  // namespace

TEST_CASE("loop-sink algebra: upper corner of global dimension 3 over a findim-0 algebra") {
  auto alg = loop_sink_algebra<Zp>();
  ScopedModulus mod(2);
  auto part = split(alg, {"5"});
  CHECK(check_partition(*alg, part).empty());
  auto upper = corner_algebra(*alg, part.upper);
  CHECK(global_dimension(PdimEngine<Zp>(upper.algebra)) == 3);
  CHECK_FALSE(global_dimension(PdimEngine<Zp>(alg)).has_value());
  PdimEngine<Zp> eng(alg);
  // n = 2 runs for minutes; the acceptance binary covers it
  auto obs = observed_findim(eng, 1, {});
  CHECK(obs.exhaustive);
  CHECK(obs.unresolved == 0);
  CHECK(obs.value == 0);
  auto lower = corner_algebra(*alg, part.lower);
  CHECK(observed_findim(PdimEngine<Zp>(lower.algebra), 2, {}).value == 0);
}

TEST_CASE("linear A5: the upper bound is attained") {
  auto alg = linear_a5_algebra<Rational>();
  auto part = split(alg, {"4", "5"});
  CHECK(check_partition(*alg, part).empty());
  auto lower = corner_algebra(*alg, part.lower), upper = corner_algebra(*alg, part.upper);
  auto g1 = global_dimension(PdimEngine<Rational>(lower.algebra));
  auto g2 = global_dimension(PdimEngine<Rational>(upper.algebra));
  auto g = global_dimension(PdimEngine<Rational>(alg));
  CHECK(g1 == 1);
  CHECK(g2 == 2);
  CHECK(g == 4);
  auto inv = stack_invariants(alg, part, {}, Interval{*g1, *g1}, Interval{*g2, *g2});
  CHECK(inv.t == 1);
  REQUIRE(inv.bounds);
  CHECK(inv.bounds->lo == 1);
  CHECK(inv.bounds->hi == 4);
  CHECK(inv.bounds->contains(*g));
  // default: monomial intervals of the corners
  auto loose = stack_invariants(alg, part);
  REQUIRE(loose.bounds);
  CHECK(loose.bounds->contains(*g));

  auto wrong = partition_from_ids(alg->quiver(), {"1", "2", "3"}, {"4", "5"});
  auto bad = check_partition(*alg, wrong);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].condition == 'a');
  CHECK(alg->quiver().arrow(bad[0].alpha).id == "a3");

  auto sources_only = split(alg, {"2", "3", "4", "5"});
  CHECK(check_partition(*alg, sources_only).empty());
  CHECK(stack_invariants(alg, sources_only).t == -1);
}

TEST_CASE("first stacked level split at b-1") {
  auto fam = generate_family<Rational>(StepFunction::make(2, 2, 1));
  auto delta = fam.top();
  auto part = split(delta, {"b-1"});
  CHECK(check_partition(*delta, part).empty());
  auto lower = corner_algebra(*delta, part.lower), upper = corner_algebra(*delta, part.upper);
  CHECK(lower.algebra->is_monomial());
  CHECK(upper.algebra->is_monomial());
  auto fd = monomial_findim(lower.algebra);
  CHECK(fd->lo == 0);
  // gamma0 attains s'' = r - 1
  AnnihilatorGraph<Rational> g(upper.algebra);
  auto rep = critical_report(g);
  CHECK(rep.s == 1);
  CHECK(format_path(upper.algebra->quiver(), upper.algebra->basis_path(rep.witness)) == "gamma0");
  CHECK(g.pdim(parse_path(upper.algebra->quiver(), "gamma0")).value == 1);
  // beta1 is critical in the upper corner but ends at b0, whose arrow beta0
  // leaves E''; its ideal is projective over the corner and not over Λ
  auto inv = stack_invariants(delta, part);
  CHECK_FALSE(inv.monomial_reduction_applies);
  CHECK(std::find(inv.inhomogeneous_critical.begin(), inv.inhomogeneous_critical.end(), "beta1") !=
        inv.inhomogeneous_critical.end());
  auto qb = parse_path(upper.algebra->quiver(), "beta1");
  CHECK(g.pdim(qb).value == 0);
  auto over_delta = path_ideal(delta, parse_path(delta->quiver(), "beta1"));
  CHECK(PdimEngine<Rational>(delta).pdim(over_delta).is_infinite());
}

TEST_CASE("stacking a point gives a one-point extension") {
  auto fam = generate_family<Rational>(StepFunction::make(2, 2, 0));
  Quiver pt;
  pt.add_vertex("z");
  auto point = build_algebra<Rational>(pt, {}, 3);
  // zeta only reaches the radical of P(a0)
  const Quiver& ql = fam.top()->quiver();
  std::vector<std::string> kill;
  for (int a : ql.arrows_from(ql.vertex_index("a0"))) kill.push_back(ql.arrow(a).id + "*zeta");
  auto ext = build_2stack(*fam.top(), *point, {{"zeta", "z", "a0"}}, kill);
  CHECK(ext->dim() == fam.top()->dim() + 2);
  auto part = split(ext, fam.top()->quiver().vertices());
  CHECK(check_partition(*ext, part).empty());
  CHECK(same_presentation(*corner_algebra(*ext, part.lower).algebra, *fam.top()));
  CHECK_THROWS(build_2stack(*fam.top(), *build_algebra<Rational>(Quiver{}, {}, 3), {}, {}));
}

TEST_CASE("second syzygies split along the standard partition") {
  auto fam = generate_family<Zp>(StepFunction::make(2, 2, 1));
  auto alg = fam.top();
  const auto& part = fam.standard[1];
  auto n1 = fam.witness(1).module;
  auto rep = verify_splitting(alg, part, n1, 3);
  for (auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.ok());
  // a module over the lower corner: the upper side is empty
  auto n0 = build_graph_module(alg, fam.witness_specs[0]).module;
  CHECK(verify_splitting(alg, part, n0, 2).ok());
  auto sa = simple_module(alg, alg->quiver().vertex_index("a1"));
  auto r2 = verify_splitting(alg, part, sa, 3);
  for (auto& f : r2.failures) MESSAGE(f);
  CHECK(r2.ok());
}

TEST_CASE("syzygies of submodules of projectives are sums of path ideals") {
  ScopedModulus mod(3);
  auto fam = generate_family<Zp>(StepFunction::make(2, 2, 0));
  auto alg = fam.top();
  const Quiver& q = alg->quiver();
  auto pb = projective_module(alg, q.vertex_index("b0"));
  auto jb = submodule(pb, radical(pb)).module;
  auto c = path_ideal_check(jb, true);
  CHECK(c.report.ok());
  CHECK(find_embedding(jb).has_value());
  auto pa = projective_module(alg, q.vertex_index("a0"));
  auto ja = submodule(pa, radical(pa)).module;
  auto ca = path_ideal_check(ja, true);
  for (auto& f : ca.report.failures) MESSAGE(f);
  CHECK(ca.report.ok());
  CHECK(!ca.summands.empty());
  for (auto& s : ca.summands) CHECK(s.witnessed);
  auto cp = path_ideal_check(pa, true);
  CHECK(cp.report.ok());
  CHECK(cp.summands.empty());
  // S(a0) sits in no projective: advisory only
  auto sa = simple_module(alg, q.vertex_index("a0"));
  CHECK_FALSE(find_embedding(sa).has_value());
  auto cs = path_ideal_check(sa, false);
  CHECK_FALSE(cs.embedded);
  CHECK(!cs.report.warnings.empty());
  CHECK_THROWS(path_ideal_check(projective_module(generate_family<Zp>(StepFunction::make(2, 2, 1)).top(), 0), true));
}
