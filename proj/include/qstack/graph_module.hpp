#pragma once

#include "qstack/representation.hpp"
#include "qstack/text.hpp"

#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace qstack {

// Layered-graph description of a module:
//
//   top x0: a1
//   edge x0 --alpha1_1--> u1
//   edge x1 --beta1--> v1 : b0
//   identify u1 v1
//
// Each node stands for p*x with x its top and p the path of edge labels.
// The module is P/V: P free on the tops, V generated by the identified
// differences and by alpha*node for every arrow alpha leaving the node's
// vertex that carries no edge out of the node's class.
struct GraphSpec {
  struct Top {
    std::string name, vertex;
    int line = 0;
  };
  struct Edge {
    std::string from, arrow, to, vertex;  // vertex optional
    int line = 0;
  };
  struct Identify {
    std::string a, b;
    int line = 0;
  };
  std::vector<Top> tops;
  std::vector<Edge> edges;
  std::vector<Identify> identify;
  std::vector<std::string> comments;
};

GraphSpec parse_graph(const std::string& text);
std::string format_graph(const GraphSpec& g);

template <class F>
struct GraphModule {
  Representation<F> module;
  Representation<F> cover;
  SubspaceFamily<F> relations;  // V inside the cover
  std::vector<int> top_types;
  bool acyclic = true;
  bool connected = true;
  bool basis_matches = true;  // one basis vector per node class
  bool tree() const { return acyclic && connected; }
};

namespace detail {
struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    p[std::max(a, b)] = std::min(a, b);
    return true;
  }
};
}  // namespace detail

template <class F>
GraphModule<F> build_graph_module(const AlgebraPtr<F>& alg, const GraphSpec& g) {
  const Quiver& q = alg->quiver();
  const int nv = q.num_vertices();
  if (g.tops.empty()) throw std::invalid_argument("graph has no top elements");

  struct Node {
    int top;
    Path path;
    int line;
  };
  std::vector<Node> nodes;
  std::map<std::string, int> by_name;
  GraphModule<F> out;
  for (auto& t : g.tops) {
    auto v = q.find_vertex(t.vertex);
    if (!v) throw ParseError(t.line, 1, "unknown vertex '" + t.vertex + "'");
    if (by_name.count(t.name)) throw ParseError(t.line, 1, "node '" + t.name + "' defined twice");
    by_name[t.name] = static_cast<int>(nodes.size());
    nodes.push_back({static_cast<int>(out.top_types.size()), Path::trivial(*v), t.line});
    out.top_types.push_back(*v);
  }
  std::vector<std::pair<int, int>> edge_nodes;  // (parent, child)
  std::vector<int> edge_arrow;
  for (auto& e : g.edges) {
    auto it = by_name.find(e.from);
    if (it == by_name.end()) throw ParseError(e.line, 1, "edge from undefined node '" + e.from + "'");
    auto a = q.find_arrow(e.arrow);
    if (!a) throw ParseError(e.line, 1, "unknown arrow '" + e.arrow + "'");
    const Node& par = nodes[it->second];
    if (q.arrow(*a).source != par.path.target())
      throw ParseError(e.line, 1, "arrow " + e.arrow + " does not start at " + q.vertex(par.path.target()));
    if (!e.vertex.empty() && q.vertex(q.arrow(*a).target) != e.vertex)
      throw ParseError(e.line, 1, "arrow " + e.arrow + " ends at " + q.vertex(q.arrow(*a).target) + ", not " + e.vertex);
    if (by_name.count(e.to)) throw ParseError(e.line, 1, "node '" + e.to + "' defined twice");
    Path p = par.path.then(q, *a);
    if (alg->is_zero_path(p)) throw ParseError(e.line, 1, "path " + format_path(q, p) + " is zero in the algebra");
    by_name[e.to] = static_cast<int>(nodes.size());
    edge_nodes.push_back({it->second, static_cast<int>(nodes.size())});
    edge_arrow.push_back(*a);
    nodes.push_back({par.top, p, e.line});
  }
  const int nn = static_cast<int>(nodes.size());
  detail::UnionFind cls(nn);
  for (auto& id : g.identify) {
    auto x = by_name.find(id.a), y = by_name.find(id.b);
    if (x == by_name.end() || y == by_name.end())
      throw ParseError(id.line, 1, "identify names an undefined node");
    if (nodes[x->second].path.target() != nodes[y->second].path.target())
      throw ParseError(id.line, 1, "identified nodes sit at different vertices");
    cls.unite(x->second, y->second);
  }

  // tree check on the quotient graph
  detail::UnionFind comp(nn);
  for (auto [p, c] : edge_nodes)
    if (!comp.unite(cls.find(p), cls.find(c))) out.acyclic = false;
  int roots = 0;
  for (int i = 0; i < nn; ++i)
    if (cls.find(i) == i && comp.find(i) == i) ++roots;
  out.connected = roots == 1;

  // the cover and the node elements
  out.cover = projective_module(alg, out.top_types);
  std::vector<std::vector<int>> off(out.top_types.size() + 1, std::vector<int>(nv, 0));
  for (size_t k = 0; k < out.top_types.size(); ++k)
    for (int v = 0; v < nv; ++v) off[k + 1][v] = off[k][v] + alg->projective_dim(out.top_types[k], v);
  auto element = [&](const Node& n) {
    const int v = n.path.target();
    Vector<F> x = Vector<F>::Zero(out.cover.dim(v));
    for (auto& [i, c] : alg->normal_form(n.path)) x(off[n.top][v] + alg->block_position(i)) += c;
    return x;
  };

  std::vector<std::pair<int, Vector<F>>> gens;
  for (auto& id : g.identify) {
    const Node &x = nodes[by_name[id.a]], &y = nodes[by_name[id.b]];
    gens.push_back({x.path.target(), element(x) - element(y)});
  }
  std::map<int, std::vector<int>> used;  // class -> arrows with edges
  for (size_t e = 0; e < edge_nodes.size(); ++e) used[cls.find(edge_nodes[e].first)].push_back(edge_arrow[e]);
  std::vector<int> per_vertex(nv, 0);
  for (int i = 0; i < nn; ++i) {
    if (cls.find(i) != i) continue;
    const int v = nodes[i].path.target();
    ++per_vertex[v];
    const auto& u = used[i];
    for (int a : q.arrows_from(v)) {
      if (std::find(u.begin(), u.end(), a) != u.end()) continue;
      gens.push_back({q.arrow(a).target, out.cover.map(a) * element(nodes[i])});
    }
  }
  out.relations = generated_submodule(out.cover, gens);
  out.module = quotient(out.cover, out.relations).module;
  for (int v = 0; v < nv; ++v) out.basis_matches = out.basis_matches && out.module.dim(v) == per_vertex[v];
  return out;
}

template <class F>
GraphModule<F> build_graph_module(const AlgebraPtr<F>& alg, const std::string& text) {
  return build_graph_module(alg, parse_graph(text));
}

}  // namespace qstack
