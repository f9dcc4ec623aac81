#pragma once

#include "qstack/algebra.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qstack {

// Small algebras used by the checks and the CLI.

// 1..5 with arrows 1->2, 1->5, 2->3, 2->5, 3->4, 3->5, 4->5, a loop at 5 and
// every path of length two zero.
Quiver loop_sink_quiver();
// A5 linearly oriented, i -> i+1.
Quiver linear_a5_quiver();

std::vector<Relation> all_length_two(const Quiver& q);

template <class F>
AlgebraPtr<F> loop_sink_algebra() {
  Quiver q = loop_sink_quiver();
  auto rels = all_length_two(q);
  return build_algebra<F>(q, rels, 2);
}

template <class F>
AlgebraPtr<F> linear_a5_algebra() {
  Quiver q = linear_a5_quiver();
  auto rels = all_length_two(q);
  return build_algebra<F>(q, rels, 2);
}

// Random quiver with monomial relations: every length-two path is killed
// with probability kill_pct/100, plus all paths of length nilp.
struct RandomMonomialSpec {
  int vertices = 4;
  int arrows = 6;
  int loops_pct = 15;
  int kill_pct = 50;
  int nilp = 3;
};

struct MonomialPresentation {
  Quiver quiver;
  std::vector<Relation> relations;
  int nilp = 3;
};

MonomialPresentation random_monomial(const RandomMonomialSpec& spec, std::uint64_t seed);

}  // namespace qstack
