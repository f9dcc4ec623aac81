#pragma once

#include "qstack/algebra.hpp"
#include "qstack/linalg.hpp"

#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qstack {

// A finite-dimensional left module, given as a representation of the
// quiver: a space per vertex and a matrix per arrow (target x source).
template <class F>
class Representation {
 public:
  Representation() = default;
  Representation(AlgebraPtr<F> alg, std::vector<int> dims, std::vector<Matrix<F>> maps, bool check = true)
      : alg_(std::move(alg)), dims_(std::move(dims)), maps_(std::move(maps)) {
    const Quiver& q = alg_->quiver();
    if (static_cast<int>(dims_.size()) != q.num_vertices() || static_cast<int>(maps_.size()) != q.num_arrows())
      throw std::invalid_argument("representation shape does not match the quiver");
    for (int a = 0; a < q.num_arrows(); ++a) {
      const Arrow& ar = q.arrow(a);
      if (maps_[a].rows() != dims_[ar.target] || maps_[a].cols() != dims_[ar.source])
        throw std::invalid_argument("matrix for arrow '" + ar.id + "' has the wrong shape");
    }
    if (check) validate();
  }
  static Representation zero(AlgebraPtr<F> alg) {
    const Quiver& q = alg->quiver();
    std::vector<Matrix<F>> maps(q.num_arrows());
    for (auto& m : maps) m.resize(0, 0);
    return Representation(std::move(alg), std::vector<int>(q.num_vertices(), 0), std::move(maps), false);
  }

  const AlgebraPtr<F>& algebra_ptr() const { return alg_; }
  const Algebra<F>& algebra() const { return *alg_; }
  const Quiver& quiver() const { return alg_->quiver(); }
  int num_vertices() const { return static_cast<int>(dims_.size()); }
  int dim(int v) const { return dims_[v]; }
  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }
  bool is_zero() const { return total_dim() == 0; }
  const Matrix<F>& map(int a) const { return maps_[a]; }
  const std::vector<Matrix<F>>& maps() const { return maps_; }

  Matrix<F> path_action(const Path& p) const {
    Matrix<F> m = Matrix<F>::Identity(dims_[p.source()], dims_[p.source()]);
    for (int a : p.arrows()) m = maps_[a] * m;
    return m;
  }
  template <class Derived>
  Vector<F> apply_path(const Path& p, const Eigen::MatrixBase<Derived>& x) const {
    Vector<F> v = x;
    for (int a : p.arrows()) v = maps_[a] * v;
    return v;
  }

  // Every relation must act as zero.
  void validate() const {
    const Quiver& q = alg_->quiver();
    for (const Relation& r : alg_->relations()) {
      const Path& p0 = r.terms.front().first;
      Matrix<F> acc = Matrix<F>::Zero(dims_[p0.target()], dims_[p0.source()]);
      for (auto& [p, c] : r.terms) acc += to_field<F>(c) * path_action(p);
      for (int i = 0; i < acc.rows(); ++i)
        for (int j = 0; j < acc.cols(); ++j)
          if (!qstack::is_zero(acc(i, j)))
            throw std::invalid_argument("representation violates relation " + format_relation(q, r));
    }
  }

 private:
  AlgebraPtr<F> alg_;
  std::vector<int> dims_;
  std::vector<Matrix<F>> maps_;
};

// Per-vertex matrices (codomain dim x domain dim).
template <class F>
struct ModuleMap {
  std::vector<Matrix<F>> comps;
};

template <class F>
bool is_homomorphism(const Representation<F>& m, const Representation<F>& n, const ModuleMap<F>& f) {
  const Quiver& q = m.quiver();
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (n.map(a) * f.comps[ar.source] != f.comps[ar.target] * m.map(a)) return false;
  }
  return true;
}

template <class F>
ModuleMap<F> compose_maps(const ModuleMap<F>& g, const ModuleMap<F>& f) {
  ModuleMap<F> h;
  for (size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(g.comps[v] * f.comps[v]);
  return h;
}

template <class F>
using SubspaceFamily = std::vector<Subspace<F>>;

// --- standard modules ------------------------------------------------------

template <class F>
Representation<F> simple_module(const AlgebraPtr<F>& alg, int e) {
  const Quiver& q = alg->quiver();
  std::vector<int> dims(q.num_vertices(), 0);
  dims.at(e) = 1;
  std::vector<Matrix<F>> maps;
  for (const Arrow& a : q.arrows()) maps.push_back(Matrix<F>::Zero(dims[a.target], dims[a.source]));
  return Representation<F>(alg, dims, maps, false);
}

// Direct sum of indecomposable projectives, one summand per entry of types.
template <class F>
Representation<F> projective_module(const AlgebraPtr<F>& alg, const std::vector<int>& types) {
  const Quiver& q = alg->quiver();
  const int nv = q.num_vertices();
  std::vector<int> dims(nv, 0);
  for (int e : types)
    for (int v = 0; v < nv; ++v) dims[v] += alg->projective_dim(e, v);
  std::vector<Matrix<F>> maps;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix<F> m = Matrix<F>::Zero(dims[ar.target], dims[ar.source]);
    int ro = 0, co = 0;
    for (int e : types) {
      const Matrix<F>& blk = alg->projective_action(e, a);
      if (blk.size()) m.block(ro, co, blk.rows(), blk.cols()) = blk;
      ro += alg->projective_dim(e, ar.target);
      co += alg->projective_dim(e, ar.source);
    }
    maps.push_back(std::move(m));
  }
  return Representation<F>(alg, dims, maps, false);
}

template <class F>
Representation<F> projective_module(const AlgebraPtr<F>& alg, int e) {
  return projective_module(alg, std::vector<int>{e});
}

template <class F>
Representation<F> direct_sum(const std::vector<Representation<F>>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct sum of nothing");
  const auto& alg = parts.front().algebra_ptr();
  const Quiver& q = alg->quiver();
  std::vector<int> dims(q.num_vertices(), 0);
  for (auto& p : parts)
    for (int v = 0; v < q.num_vertices(); ++v) dims[v] += p.dim(v);
  std::vector<Matrix<F>> maps;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix<F> m = Matrix<F>::Zero(dims[ar.target], dims[ar.source]);
    int ro = 0, co = 0;
    for (auto& p : parts) {
      if (p.map(a).size()) m.block(ro, co, p.map(a).rows(), p.map(a).cols()) = p.map(a);
      ro += p.dim(ar.target);
      co += p.dim(ar.source);
    }
    maps.push_back(std::move(m));
  }
  return Representation<F>(alg, dims, maps, false);
}

// --- submodules and quotients ---------------------------------------------

template <class F>
SubspaceFamily<F> zero_family(const Representation<F>& m) {
  SubspaceFamily<F> s;
  for (int v = 0; v < m.num_vertices(); ++v) s.emplace_back(m.dim(v));
  return s;
}

template <class F>
SubspaceFamily<F> full_family(const Representation<F>& m) {
  SubspaceFamily<F> s;
  for (int v = 0; v < m.num_vertices(); ++v) s.push_back(Subspace<F>::full(m.dim(v)));
  return s;
}

// J·S: images of S under all arrows.
template <class F>
SubspaceFamily<F> radical_of(const Representation<F>& m, const SubspaceFamily<F>& s) {
  const Quiver& q = m.quiver();
  std::vector<std::vector<Vector<F>>> gens(m.num_vertices());
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    const auto& src = s[ar.source];
    for (int i = 0; i < src.dim(); ++i) gens[ar.target].push_back(m.map(a) * src.rows().row(i).transpose());
  }
  SubspaceFamily<F> out;
  for (int v = 0; v < m.num_vertices(); ++v) {
    RowMatrix<F> rows(static_cast<int>(gens[v].size()), m.dim(v));
    for (size_t i = 0; i < gens[v].size(); ++i) rows.row(static_cast<int>(i)) = gens[v][i].transpose();
    out.push_back(Subspace<F>::from_rows(rows));
  }
  return out;
}

template <class F>
SubspaceFamily<F> radical(const Representation<F>& m) {
  return radical_of(m, full_family(m));
}

template <class F>
SubspaceFamily<F> family_sum(const SubspaceFamily<F>& a, const SubspaceFamily<F>& b) {
  SubspaceFamily<F> out;
  for (size_t v = 0; v < a.size(); ++v) out.push_back(a[v].sum(b[v]));
  return out;
}

template <class F>
bool family_contains(const SubspaceFamily<F>& a, const SubspaceFamily<F>& b) {
  for (size_t v = 0; v < a.size(); ++v)
    if (!a[v].contains(b[v])) return false;
  return true;
}

template <class F>
int family_dim(const SubspaceFamily<F>& a) {
  int d = 0;
  for (auto& s : a) d += s.dim();
  return d;
}

// Smallest submodule containing the given (vertex, vector) generators.
template <class F>
SubspaceFamily<F> generated_submodule(const Representation<F>& m,
                                      const std::vector<std::pair<int, Vector<F>>>& gens) {
  const int nv = m.num_vertices();
  std::vector<RowMatrix<F>> rows(nv);
  for (int v = 0; v < nv; ++v) rows[v].resize(0, m.dim(v));
  for (auto& [v, x] : gens) {
    rows[v].conservativeResize(rows[v].rows() + 1, Eigen::NoChange);
    rows[v].row(rows[v].rows() - 1) = x.transpose();
  }
  SubspaceFamily<F> cur;
  for (int v = 0; v < nv; ++v) cur.push_back(Subspace<F>::from_rows(rows[v]));
  while (true) {
    auto next = family_sum(cur, radical_of(m, cur));
    if (family_dim(next) == family_dim(cur)) return cur;
    cur = std::move(next);
  }
}

template <class F>
struct SubmoduleResult {
  Representation<F> module;
  ModuleMap<F> inclusion;
};

// Representation on a submodule, in the echelon basis of each subspace.
template <class F>
SubmoduleResult<F> submodule(const Representation<F>& m, const SubspaceFamily<F>& s) {
  const Quiver& q = m.quiver();
  std::vector<int> dims;
  ModuleMap<F> inc;
  for (int v = 0; v < m.num_vertices(); ++v) {
    dims.push_back(s[v].dim());
    inc.comps.push_back(s[v].basis());
  }
  std::vector<Matrix<F>> maps;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    const auto& src = s[ar.source];
    const auto& dst = s[ar.target];
    Matrix<F> mm(dst.dim(), src.dim());
    for (int j = 0; j < src.dim(); ++j) {
      Vector<F> img = m.map(a) * src.rows().row(j).transpose();
      for (int i = 0; i < dst.dim(); ++i) mm(i, j) = img(dst.pivots()[i]);
    }
    maps.push_back(std::move(mm));
  }
  return {Representation<F>(m.algebra_ptr(), dims, maps, false), inc};
}

template <class F>
struct QuotientResult {
  Representation<F> module;
  ModuleMap<F> projection;
};

template <class F>
QuotientResult<F> quotient(const Representation<F>& m, const SubspaceFamily<F>& s) {
  const Quiver& q = m.quiver();
  std::vector<int> dims;
  std::vector<std::vector<int>> np;
  ModuleMap<F> proj;
  for (int v = 0; v < m.num_vertices(); ++v) {
    np.push_back(s[v].nonpivots());
    dims.push_back(static_cast<int>(np[v].size()));
    Matrix<F> p(dims[v], m.dim(v));
    for (int j = 0; j < m.dim(v); ++j) {
      Vector<F> e = Vector<F>::Zero(m.dim(v));
      e(j) = F(1);
      Vector<F> r = s[v].reduce(e);
      for (int i = 0; i < dims[v]; ++i) p(i, j) = r(np[v][i]);
    }
    proj.comps.push_back(std::move(p));
  }
  std::vector<Matrix<F>> maps;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix<F> mm(dims[ar.target], dims[ar.source]);
    for (int j = 0; j < dims[ar.source]; ++j) {
      // lift of the j-th quotient basis vector is the unit vector at np[j]
      Vector<F> img = m.map(a).col(np[ar.source][j]);
      mm.col(j) = proj.comps[ar.target] * img;
    }
    maps.push_back(std::move(mm));
  }
  return {Representation<F>(m.algebra_ptr(), dims, maps, false), proj};
}

// --- layers ----------------------------------------------------------------

template <class F>
std::vector<SubspaceFamily<F>> radical_series(const Representation<F>& m) {
  std::vector<SubspaceFamily<F>> out{full_family(m)};
  while (family_dim(out.back()) > 0) out.push_back(radical_of(m, out.back()));
  return out;
}

template <class F>
SubspaceFamily<F> socle(const Representation<F>& m) {
  const Quiver& q = m.quiver();
  SubspaceFamily<F> out;
  for (int v = 0; v < m.num_vertices(); ++v) {
    int rows = 0;
    for (int a : q.arrows_from(v)) rows += m.dim(q.arrow(a).target);
    Matrix<F> stack(rows, m.dim(v));
    int r = 0;
    for (int a : q.arrows_from(v)) {
      int h = m.dim(q.arrow(a).target);
      if (h) stack.middleRows(r, h) = m.map(a);
      r += h;
    }
    out.push_back(Subspace<F>::from_columns(nullspace<F>(stack)));
  }
  return out;
}

struct Layers {
  std::vector<int> top;
  std::vector<std::vector<int>> layers;  // dims of J^k M / J^{k+1} M per vertex
  std::vector<int> socle;
  int loewy_length = 0;
};

template <class F>
Layers module_layers(const Representation<F>& m) {
  Layers l;
  auto series = radical_series(m);
  l.loewy_length = static_cast<int>(series.size()) - 1;
  for (int k = 0; k + 1 < static_cast<int>(series.size()); ++k) {
    std::vector<int> d;
    for (int v = 0; v < m.num_vertices(); ++v) d.push_back(series[k][v].dim() - series[k + 1][v].dim());
    l.layers.push_back(d);
  }
  l.top = l.layers.empty() ? std::vector<int>(m.num_vertices(), 0) : l.layers.front();
  for (auto& s : socle(m)) l.socle.push_back(s.dim());
  return l;
}

template <class F>
std::vector<int> top_vector(const Representation<F>& m) {
  auto jm = radical(m);
  std::vector<int> t;
  for (int v = 0; v < m.num_vertices(); ++v) t.push_back(m.dim(v) - jm[v].dim());
  return t;
}

// --- covers and syzygies ---------------------------------------------------

template <class F>
struct Cover {
  std::vector<int> types;                   // vertex of each top generator
  std::vector<Vector<F>> generators;        // the chosen top elements
  Representation<F> projective;
  ModuleMap<F> map;                         // projective -> module
};

// Cover determined by explicit generators (vertex, element); minimal when
// they form a basis of a complement of JM.
template <class F>
Cover<F> cover_from_generators(const Representation<F>& m, std::vector<int> types, std::vector<Vector<F>> gens) {
  const auto& alg = m.algebra_ptr();
  const int nv = m.num_vertices();
  Cover<F> c;
  c.projective = projective_module(alg, types);
  for (int w = 0; w < nv; ++w) c.map.comps.push_back(Matrix<F>::Zero(m.dim(w), c.projective.dim(w)));
  std::vector<int> off(nv, 0);
  for (size_t i = 0; i < types.size(); ++i) {
    int e = types[i];
    for (int w = 0; w < nv; ++w) {
      const auto& blk = alg->projective_block(e, w);
      for (size_t j = 0; j < blk.size(); ++j) {
        Vector<F> img = m.apply_path(alg->basis_path(blk[j]), gens[i]);
        c.map.comps[w].col(off[w] + static_cast<int>(j)) = img;
      }
      off[w] += static_cast<int>(blk.size());
    }
  }
  c.types = std::move(types);
  c.generators = std::move(gens);
  return c;
}

template <class F>
Cover<F> projective_cover(const Representation<F>& m) {
  auto jm = radical(m);
  std::vector<int> types;
  std::vector<Vector<F>> gens;
  for (int v = 0; v < m.num_vertices(); ++v)
    for (int j : jm[v].nonpivots()) {
      Vector<F> x = Vector<F>::Zero(m.dim(v));
      x(j) = F(1);
      types.push_back(v);
      gens.push_back(x);
    }
  return cover_from_generators(m, std::move(types), std::move(gens));
}

template <class F>
SubspaceFamily<F> kernel(const Representation<F>& src, const ModuleMap<F>& f) {
  SubspaceFamily<F> out;
  for (int v = 0; v < src.num_vertices(); ++v) out.push_back(Subspace<F>::from_columns(nullspace<F>(f.comps[v])));
  return out;
}

template <class F>
SubspaceFamily<F> image(const Representation<F>& dst, const ModuleMap<F>& f) {
  SubspaceFamily<F> out;
  for (int v = 0; v < dst.num_vertices(); ++v) out.push_back(Subspace<F>::from_columns(f.comps[v]));
  return out;
}

template <class F>
struct SyzygyStep {
  Cover<F> cover;
  SubmoduleResult<F> kernel;  // Ω¹ with its inclusion into the cover
};

template <class F>
SyzygyStep<F> syzygy_step(const Representation<F>& m) {
  SyzygyStep<F> s;
  s.cover = projective_cover(m);
  s.kernel = submodule(s.cover.projective, kernel(s.cover.projective, s.cover.map));
  return s;
}

template <class F>
Representation<F> syzygy(const Representation<F>& m, int k = 1) {
  Representation<F> cur = m;
  for (int i = 0; i < k && !cur.is_zero(); ++i) cur = syzygy_step(cur).kernel.module;
  return cur;
}

template <class F>
bool is_projective(const Representation<F>& m) {
  return m.is_zero() || syzygy(m, 1).is_zero();
}

// Λp inside Λ s(p).
template <class F>
Representation<F> path_ideal(const AlgebraPtr<F>& alg, const Path& p) {
  auto nf = alg->normal_form(p);
  if (nf.empty()) throw std::invalid_argument("path is zero in the algebra");
  auto proj = projective_module(alg, p.source());
  Vector<F> x = Vector<F>::Zero(proj.dim(p.target()));
  for (auto& [i, c] : nf) x(alg->block_position(i)) += c;
  return submodule(proj, generated_submodule(proj, {{p.target(), x}})).module;
}

// Restriction to a full subquiver's corner algebra; vertex_map and
// arrow_map send corner indices to indices in the big quiver.
template <class F>
Representation<F> restrict_module(const Representation<F>& m, const AlgebraPtr<F>& corner,
                                  const std::vector<int>& vertex_map, const std::vector<int>& arrow_map) {
  std::vector<int> dims;
  for (int v : vertex_map) dims.push_back(m.dim(v));
  std::vector<Matrix<F>> maps;
  for (int a : arrow_map) maps.push_back(m.map(a));
  return Representation<F>(corner, dims, maps, false);
}

// The part of m living on the given vertex set, as a subfamily.
template <class F>
SubspaceFamily<F> vertex_part(const Representation<F>& m, const std::vector<int>& vs) {
  SubspaceFamily<F> s = zero_family(m);
  for (int v : vs) s[v] = Subspace<F>::full(m.dim(v));
  return s;
}

}  // namespace qstack
