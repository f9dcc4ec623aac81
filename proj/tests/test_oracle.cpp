#include "doctest.h"

#include "qstack/family.hpp"
#include "qstack/oracle.hpp"

using namespace qstack;

namespace {

std::vector<int> mu_of(const Algebra<Zp>& alg, std::vector<std::pair<std::string, int>> entries) {
  std::vector<int> mu(alg.quiver().num_vertices(), 0);
  for (auto& [v, k] : entries) mu[alg.quiver().vertex_index(v)] = k;
  return mu;
}

}  // namespace

TEST_CASE("subspace lattice sizes") {
  const std::uint64_t f2[] = {1, 2, 5, 16, 67, 374, 2825, 29212};
  for (int k = 0; k < 8; ++k) CHECK(SubspaceLattice::count(k, 2) == f2[k]);
  CHECK(SubspaceLattice::count(2, 3) == 6);
  ScopedModulus mod(3);
  SubspaceLattice lat(3, 3);
  CHECK(lat.size() == 1 + 13 + 13 + 1);
  // unranking is injective and in rank order
  std::set<std::vector<std::uint32_t>> seen;
  int last_rank = 0;
  for (std::uint64_t i = 0; i < lat.size(); ++i) {
    auto m = lat.unrank(i);
    CHECK(m.rows() >= last_rank);
    last_rank = static_cast<int>(m.rows());
    CHECK(rank<Zp>(m) == m.rows());
    std::vector<std::uint32_t> key{static_cast<std::uint32_t>(m.rows())};
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) key.push_back(m(r, c).value());
    seen.insert(key);
  }
  CHECK(seen.size() == lat.size());
}

TEST_CASE("Loewy-2 spaces over the base algebra") {
  ScopedModulus mod(2);
  auto fam = generate_family<Zp>(StepFunction::make(2, 2, 0));
  auto alg = fam.top();
  Loewy2Space sp(alg, mu_of(*alg, {{"b0", 1}}));
  // JP/J²P = S(b-1) + S(b0), graded: 2 * 2
  CHECK(sp.radical_dim() == 2);
  CHECK(sp.count() == 4);
  for (std::uint64_t i = 0; i < sp.count(); ++i) {
    auto m = sp.module(sp.choice(i));
    m.validate();
    CHECK(module_layers(m).loewy_length <= 2);
  }
  Loewy2Space sink(alg, mu_of(*alg, {{"c2", 1}}));
  CHECK(sink.count() == 1);
  CHECK(sink.module(sink.choice(0)).total_dim() == 1);

  PdimEngine<Zp> eng(alg);
  auto obs = observed_findim(eng, 1, {});
  CHECK(obs.exhaustive);
  CHECK(obs.value == 2);
  CHECK(obs.unresolved == 0);
}

TEST_CASE("graded count over the first stacked algebra") {
  ScopedModulus mod(2);
  auto fam = generate_family<Zp>(StepFunction::make(2, 2, 1));
  auto alg = fam.top();
  Loewy2Space sp(alg, mu_of(*alg, {{"a1", 1}, {"b1", 2}}));
  CHECK(sp.radical_dim() == 7);
  CHECK(sp.count() == 670);
}

TEST_CASE("observation does not depend on threads") {
  ScopedModulus mod(2);
  auto fam = generate_family<Zp>(StepFunction::make(2, 2, 1));
  PdimEngine<Zp> eng(fam.top(), fam.layers[1]);
  EnumerationBudget b1, b4;
  b1.threads = 1;
  b4.threads = 4;
  auto x = observed_findim(eng, 1, b1), y = observed_findim(eng, 1, b4);
  CHECK(x.value == 2);
  CHECK(x.value == y.value);
  CHECK(x.modules == y.modules);
  CHECK(x.attaining_mu == y.attaining_mu);
  CHECK(x.attaining_graph == y.attaining_graph);
  CHECK(x.attaining_count == y.attaining_count);
  // sampling is seeded
  EnumerationBudget s;
  s.max_modules = 10;
  s.samples = 50;
  s.threads = 3;
  auto a = observed_findim(eng, 1, s), b = observed_findim(eng, 1, s);
  CHECK_FALSE(a.exhaustive);
  CHECK(a.value == b.value);
  CHECK(a.attaining_graph == b.attaining_graph);
}

TEST_CASE("attaining module graphs parse back") {
  ScopedModulus mod(2);
  auto fam = generate_family<Zp>(StepFunction::make(2, 2, 0));
  PdimEngine<Zp> eng(fam.top());
  auto obs = observed_findim(eng, 1, {});
  REQUIRE(!obs.attaining_graph.empty());
  auto gm = build_graph_module(fam.top(), obs.attaining_graph);
  CHECK(eng.pdim(gm.module).value == obs.value);
}
