#pragma once

#include "qstack/graph_module.hpp"
#include "qstack/stacking.hpp"

#include <array>
#include <string>
#include <vector>

namespace qstack {

// f = r on [1, m), r+s on [m, n), r+s+t from n on.  t = 0 means one jump
// (or none, when s = 0 as well).
struct StepFunction {
  int r = 2, m = 2, s = 0;
  int n = 0, t = 0;

  bool two_jumps() const { return t > 0; }
  int d() const { return s + t; }
  int value(int k) const { return k >= n && t > 0 ? r + s + t : (k >= m ? r + s : r); }
  int max_value() const { return r + s + t; }

  // "1:r,m:r+s[,n:r+s+t]"
  static StepFunction parse(const std::string& text);
  static StepFunction make(int r, int m, int s);
  static StepFunction make(int r, int m, int s, int n, int t);
  std::string str() const;
  void validate() const;
};

// Vertex and arrow names.
namespace names {
std::string a(int l);
std::string b(int l);
std::string c(int j);
std::string bp(int l);  // b'_l
std::string gamma(int j);
std::string alpha(int l, int i);
std::string alphap(int l, int j);  // alpha'_{l,j}
std::string beta(int l);
std::string betap(int l);
std::string eps(int l);
std::string epsp(int l);
}  // namespace names

// Quiver data per level, independent of the field.
struct LevelData {
  std::vector<std::string> new_vertices;
  // level 0: the full presentation; otherwise the upper algebra
  std::vector<std::array<std::string, 3>> arrows;  // id, source, target
  std::vector<std::string> relations;
  std::vector<ConnectingArrow> connecting;
  std::vector<std::string> extra;  // cross relations for build_2stack
};

LevelData level_data(const StepFunction& f, int level);
// Layer index of every vertex of Λ_level in the alternate stacking
// partition: level-k vertices go to layer ceil(k/2), b'_j to ceil(j/2).
std::vector<std::vector<std::string>> alternate_layers(const StepFunction& f, int level);
GraphSpec witness_graph(const StepFunction& f, int level);
// One layer per level: the vertices each step adds, level 0 first.
std::vector<std::vector<std::string>> standard_layers(const StepFunction& f, int level);
// b_{l} -eps-> b_{l}: the uniserial module X_l over any Λ containing b_l.
GraphSpec uniserial_x(int l);

template <class F>
struct FamilyBundle {
  StepFunction f;
  std::vector<AlgebraPtr<F>> levels;                          // Λ_0 .. Λ_d
  std::vector<StackingPartition> standard;                    // per level >= 1 (index 0 unused)
  std::vector<std::vector<std::vector<std::string>>> layers;  // alternate partitions, per level
  std::vector<GraphSpec> witness_specs;

  int d() const { return f.d(); }
  const AlgebraPtr<F>& algebra(int l) const { return levels.at(l); }
  const AlgebraPtr<F>& top() const { return levels.back(); }
  GraphModule<F> witness(int l) const { return build_graph_module(levels.at(l), witness_specs.at(l)); }
};

template <class F>
AlgebraPtr<F> build_level_algebra(const LevelData& ld, const Algebra<F>* below) {
  Quiver q;
  for (auto& v : ld.new_vertices) q.add_vertex(v);
  for (auto& a : ld.arrows) q.add_arrow(a[0], a[1], a[2]);
  std::vector<Relation> rels;
  for (auto& r : ld.relations) rels.push_back(parse_relation(q, r));
  auto part = build_algebra<F>(q, rels, 3);
  if (!below) return part;
  return build_2stack(*below, *part, ld.connecting, ld.extra);
}

template <class F>
FamilyBundle<F> generate_family(const StepFunction& f) {
  f.validate();
  FamilyBundle<F> b;
  b.f = f;
  for (int l = 0; l <= f.d(); ++l) {
    auto ld = level_data(f, l);
    b.levels.push_back(build_level_algebra<F>(ld, l == 0 ? nullptr : b.levels.back().get()));
    StackingPartition p;
    if (l > 0) {
      const Quiver& q = b.levels.back()->quiver();
      for (auto& v : b.levels[l - 1]->quiver().vertices()) p.lower.push_back(q.vertex_index(v));
      for (auto& v : ld.new_vertices) p.upper.push_back(q.vertex_index(v));
    }
    b.standard.push_back(p);
    b.layers.push_back(alternate_layers(f, l));
    b.witness_specs.push_back(witness_graph(f, l));
  }
  return b;
}

}  // namespace qstack
