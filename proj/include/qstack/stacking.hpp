#pragma once

#include "qstack/algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qstack {

struct StackingPartition {
  std::vector<int> lower;  // E'
  std::vector<int> upper;  // E''
  int complexity = 1;
};

StackingPartition partition_from_ids(const Quiver& q, const std::vector<std::string>& lower,
                                     const std::vector<std::string>& upper, int complexity = 1);

struct PartitionViolation {
  char condition;  // 'a' or 'b'
  int alpha = -1;
  int beta = -1;
  std::string message;
};

// Corner e Λ e on a vertex subset, with the index maps back into Λ.
template <class F>
struct Corner {
  AlgebraPtr<F> algebra;
  std::vector<int> vertex_map;
  std::vector<int> arrow_map;
};

// Vertices that end some path of length c.
std::vector<char> ends_of_paths(const Quiver& q, int c);

template <class F>
std::vector<PartitionViolation> check_partition(const Algebra<F>& alg, const StackingPartition& part) {
  const Quiver& q = alg.quiver();
  const int nv = q.num_vertices();
  std::vector<int> side(nv, -1);
  for (int v : part.lower) {
    if (side.at(v) != -1) throw std::invalid_argument("vertex " + q.vertex(v) + " listed twice");
    side[v] = 0;
  }
  for (int v : part.upper) {
    if (side.at(v) != -1) throw std::invalid_argument("partition blocks overlap at " + q.vertex(v));
    side[v] = 1;
  }
  for (int v = 0; v < nv; ++v)
    if (side[v] == -1) throw std::invalid_argument("vertex " + q.vertex(v) + " missing from the partition");
  if (part.complexity < 1) throw std::invalid_argument("complexity must be >= 1");

  std::vector<PartitionViolation> out;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (side[ar.source] == 0 && side[ar.target] == 1)
      out.push_back({'a', a, -1, "arrow " + ar.id + " leaves E' for E''"});
  }
  auto reachable = ends_of_paths(q, part.complexity);
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& al = q.arrow(a);
    if (!(side[al.source] == 1 && side[al.target] == 0)) continue;
    for (int b : q.arrows_into(al.source)) {
      Path ab = Path::arrow(q, b).then(q, a);
      if (alg.is_zero_path(ab)) continue;
      if (reachable[q.arrow(b).source])
        out.push_back({'b', a, b,
                       al.id + "*" + q.arrow(b).id + " is nonzero but " + q.arrow(b).id +
                           " starts at the end of a path of length " + std::to_string(part.complexity)});
    }
  }
  return out;
}

template <class F>
Corner<F> corner_algebra(const Algebra<F>& alg, std::vector<int> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  const Quiver& q = alg.quiver();
  Corner<F> c;
  c.vertex_map = vs;
  Quiver sub = q.full_subquiver(vs, &c.arrow_map);
  std::vector<int> inv_arrow(q.num_arrows(), -1);
  for (size_t i = 0; i < c.arrow_map.size(); ++i) inv_arrow[c.arrow_map[i]] = static_cast<int>(i);
  std::vector<char> inside(q.num_vertices(), 0);
  for (int v : vs) inside[v] = 1;
  auto lift = [&](const Path& p) {
    std::vector<int> w;
    for (int a : p.arrows()) w.push_back(inv_arrow[a]);
    return Path::from_arrows(sub, w);
  };

  std::vector<Relation> rels;
  const int N = alg.nilpotency_bound();
  for (int k = 2; k <= N; ++k)
    for (size_t si = 0; si < vs.size(); ++si)
      for (size_t ti = 0; ti < vs.size(); ++ti) {
        auto ib = alg.ideal_block(k, vs[si], vs[ti]);
        if (ib.ideal.dim() == 0) continue;
        // order columns with paths that leave the subset first; echelon rows
        // pivoting among the inside columns span I ∩ K Q_S
        std::vector<int> order, in_cols;
        for (size_t j = 0; j < ib.paths.size(); ++j) {
          bool ok = true;
          for (int a : ib.paths[j].arrows()) ok = ok && inv_arrow[a] >= 0;
          (ok ? in_cols : order).push_back(static_cast<int>(j));
        }
        const int n_out = static_cast<int>(order.size());
        order.insert(order.end(), in_cols.begin(), in_cols.end());
        RowMatrix<F> m(ib.ideal.dim(), static_cast<int>(order.size()));
        for (int r = 0; r < ib.ideal.dim(); ++r)
          for (size_t j = 0; j < order.size(); ++j) m(r, static_cast<int>(j)) = ib.ideal.rows()(r, order[j]);
        auto piv = rref_inplace(m);
        for (size_t r = 0; r < piv.size(); ++r) {
          if (piv[r] < n_out) continue;
          Relation rel;
          for (size_t j = n_out; j < order.size(); ++j) {
            const F& x = m(static_cast<int>(r), static_cast<int>(j));
            if (!is_zero(x)) rel.terms.push_back({lift(ib.paths[order[j]]), to_rational(x)});
          }
          rels.push_back(std::move(rel));
        }
      }
  c.algebra = build_algebra<F>(std::move(sub), std::move(rels), N);
  return c;
}

// Same vertex and arrow ids (in order) and the same ideal in every degree.
template <class F>
bool same_presentation(const Algebra<F>& a, const Algebra<F>& b, std::string* why = nullptr) {
  auto fail = [&](std::string s) {
    if (why) *why = std::move(s);
    return false;
  };
  const Quiver& qa = a.quiver();
  const Quiver& qb = b.quiver();
  if (qa.vertices() != qb.vertices()) return fail("vertex lists differ");
  if (qa.num_arrows() != qb.num_arrows()) return fail("arrow counts differ");
  for (int i = 0; i < qa.num_arrows(); ++i) {
    const Arrow &x = qa.arrow(i), &y = qb.arrow(i);
    if (x.id != y.id || x.source != y.source || x.target != y.target) return fail("arrow " + x.id + " differs");
  }
  if (a.dim() != b.dim()) return fail("dimensions differ");
  const int N = std::max(a.nilpotency_bound(), b.nilpotency_bound());
  for (int k = 2; k <= N; ++k)
    for (int s = 0; s < qa.num_vertices(); ++s)
      for (int t = 0; t < qa.num_vertices(); ++t) {
        auto ia = a.ideal_block(k, s, t), ib = b.ideal_block(k, s, t);
        if (!(ia.paths == ib.paths) || !(ia.ideal == ib.ideal))
          return fail("ideals differ in degree " + std::to_string(k) + " from " + qa.vertex(s) + " to " +
                      qa.vertex(t));
      }
  return true;
}

struct ConnectingArrow {
  std::string id;
  std::string source;  // vertex of the upper algebra
  std::string target;  // vertex of the lower algebra
};

template <class F>
AlgebraPtr<F> build_2stack(const Algebra<F>& lower, const Algebra<F>& upper, const std::vector<ConnectingArrow>& conn,
                           const std::vector<std::string>& extra) {
  const Quiver& ql = lower.quiver();
  const Quiver& qu = upper.quiver();
  if (qu.num_vertices() == 0 || ql.num_vertices() == 0) throw std::invalid_argument("both stack layers must be nonempty");
  Quiver q;
  for (auto& v : ql.vertices()) q.add_vertex(v);
  for (auto& v : qu.vertices()) q.add_vertex(v);
  for (auto& a : ql.arrows()) q.add_arrow(a.id, ql.vertex(a.source), ql.vertex(a.target));
  for (auto& a : qu.arrows()) q.add_arrow(a.id, qu.vertex(a.source), qu.vertex(a.target));
  for (auto& c : conn) {
    if (!qu.find_vertex(c.source) || !ql.find_vertex(c.target))
      throw std::invalid_argument("connecting arrow " + c.id + " must run from the upper to the lower layer");
    q.add_arrow(c.id, c.source, c.target);
  }
  auto transport = [&](const Quiver& from, const Relation& r) {
    Relation out;
    for (auto& [p, c] : r.terms) {
      std::vector<int> w;
      for (int a : p.arrows()) w.push_back(q.arrow_index(from.arrow(a).id));
      out.terms.push_back({Path::from_arrows(q, w), c});
    }
    return out;
  };
  std::vector<Relation> rels;
  for (auto& r : lower.relations()) rels.push_back(transport(ql, r));
  for (auto& r : upper.relations()) rels.push_back(transport(qu, r));
  for (auto& c : conn) {
    int a = q.arrow_index(c.id);
    int sv = qu.vertex_index(c.source);
    for (int b : qu.arrows_into(sv)) {
      if (qu.is_source(qu.arrow(b).source)) continue;
      rels.push_back(Relation::monomial(Path::arrow(q, q.arrow_index(qu.arrow(b).id)).then(q, a)));
    }
  }
  for (auto& e : extra) rels.push_back(parse_relation(q, e));
  auto alg = build_algebra<F>(q, rels, std::max(lower.nilpotency_bound(), upper.nilpotency_bound()));

  std::vector<int> lv, uv;
  for (auto& v : ql.vertices()) lv.push_back(alg->quiver().vertex_index(v));
  for (auto& v : qu.vertices()) uv.push_back(alg->quiver().vertex_index(v));
  std::string why;
  if (!same_presentation(*corner_algebra(*alg, lv).algebra, lower, &why))
    throw std::invalid_argument("stacked relations change the lower corner: " + why);
  if (!same_presentation(*corner_algebra(*alg, uv).algebra, upper, &why))
    throw std::invalid_argument("stacked relations change the upper corner: " + why);
  return alg;
}

// e in E'' is homogeneous when every arrow starting at e stays in E''.
template <class F>
std::vector<int> homogeneous_vertices(const Algebra<F>& alg, const StackingPartition& part) {
  const Quiver& q = alg.quiver();
  std::set<int> up(part.upper.begin(), part.upper.end());
  std::vector<int> out;
  for (int e : part.upper) {
    bool ok = true;
    for (int a : q.arrows_from(e)) ok = ok && up.count(q.arrow(a).target);
    if (ok) out.push_back(e);
  }
  return out;
}

}  // namespace qstack
