#pragma once

#include "qstack/algebra.hpp"
#include "qstack/graph_module.hpp"
#include "qstack/text.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qstack {

// Line-based algebra description:
//
//   field F2            Q | F2 | F<p>
//   nilp 3
//   vertex a0
//   arrow gamma0 a0 c1
//   zero gamma1*gamma0  leftmost arrow applied last
//   rel alpha0_1*alpha1_0 - beta0*alpha1_1
//   partition E' = a0, c1; E'' = a1, b1
//   layer a2 b2         further stack layers, bottom first
struct AlgSpec {
  Quiver quiver;
  std::vector<Relation> relations;
  std::vector<int> relation_lines;
  std::string field = "Q";
  int nilp = 3;
  std::vector<std::vector<std::string>> layers;  // bottom first; empty when none given
};

AlgSpec parse_alg(const std::string& text);
std::string format_alg(const AlgSpec& spec);

// 0 for the rationals, else the prime.
std::uint32_t field_prime(const std::string& field);
std::string normalize_field(const std::string& field);

template <class F>
AlgSpec spec_of(const Algebra<F>& alg, const std::string& field, const std::vector<std::vector<std::string>>& layers = {}) {
  AlgSpec s;
  s.quiver = alg.quiver();
  s.relations = alg.relations();
  s.field = field;
  s.nilp = alg.nilpotency_bound();
  s.layers = layers;
  return s;
}

template <class F>
AlgebraPtr<F> build(const AlgSpec& s) {
  return build_algebra<F>(s.quiver, s.relations, s.nilp);
}

std::string quiver_dot(const Quiver& q, const std::vector<std::vector<std::string>>& layers = {},
                       const std::string& name = "Q");
std::string graph_dot(const GraphSpec& g, const std::string& name = "M");

std::uint64_t fnv1a(const std::string& bytes);
std::string hex64(std::uint64_t x);

}  // namespace qstack
