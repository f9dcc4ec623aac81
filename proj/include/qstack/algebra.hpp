#pragma once

#include "qstack/field.hpp"
#include "qstack/linalg.hpp"
#include "qstack/quiver.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qstack {

// A length-homogeneous element of the path algebra: sum of coefficient * path.
struct Relation {
  std::vector<std::pair<Path, Rational>> terms;

  static Relation monomial(Path p) { return {{{std::move(p), Rational(1)}}}; }
  static Relation binomial(Path p, Path q) {
    return {{{std::move(p), Rational(1)}, {std::move(q), Rational(-1)}}};
  }
  bool is_monomial() const { return terms.size() == 1; }
  int length() const { return terms.empty() ? 0 : terms.front().first.length(); }
};

std::string format_relation(const Quiver& q, const Relation& r);
// A single word, or "p - q" (coefficients 1 and -1).
Relation parse_relation(const Quiver& q, const std::string& text);

template <class F>
F to_field(const Rational& x) {
  return F(x.num()) / F(x.den());
}
inline Rational to_rational(const Rational& x) { return x; }
inline Rational to_rational(const Zp& x) { return Rational(x.value()); }

template <class F>
using Sparse = std::vector<std::pair<int, F>>;

// K Q / I for a length-homogeneous ideal I with J^N = 0.  Built degree by
// degree: I_k is spanned by the relations of length k together with
// arrow multiples of I_{k-1}; the basis of degree k is the set of paths
// that are not pivots of I_k in echelon form.
template <class F>
class Algebra {
 public:
  Algebra(Quiver q, std::vector<Relation> rels, int nilp_bound = 3);

  const Quiver& quiver() const { return q_; }
  const std::vector<Relation>& relations() const { return rels_; }
  int nilpotency_bound() const { return nilp_; }
  bool is_monomial() const { return monomial_; }

  int dim() const { return static_cast<int>(basis_.size()); }
  const Path& basis_path(int i) const { return basis_.at(i); }
  int degree(int i) const { return basis_.at(i).length(); }
  int idempotent(int v) const { return idem_.at(v); }
  std::optional<int> basis_index(const Path& p) const;

  Sparse<F> normal_form(const Path& p) const;
  bool is_zero_path(const Path& p) const { return normal_form(p).empty(); }

  // b_i b_j: b_j first, then b_i.
  const Sparse<F>& multiply_basis(int i, int j) const { return table_[size_t(i) * dim() + j]; }
  Vector<F> multiply(const Vector<F>& x, const Vector<F>& y) const;
  Vector<F> element(const Sparse<F>& s) const {
    Vector<F> v = Vector<F>::Zero(dim());
    for (auto& [i, c] : s) v(i) += c;
    return v;
  }

  std::vector<int> radical_power(int k) const;

  // Basis of the indecomposable projective at e, split by end vertex.
  const std::vector<int>& projective_block(int e, int v) const { return pblock_[e][v]; }
  int projective_dim(int e, int v) const { return static_cast<int>(pblock_[e][v].size()); }
  // Position of basis element i inside its block.
  int block_position(int i) const { return bpos_.at(i); }
  // Left multiplication by arrow a, from block (e, source a) to (e, target a).
  const Matrix<F>& projective_action(int e, int a) const { return pact_[e][a]; }

  // Degree-k part of I between s and t, over the listed paths.
  struct IdealBlock {
    std::vector<Path> paths;
    Subspace<F> ideal;
  };
  IdealBlock ideal_block(int k, int s, int t) const;
  std::vector<Path> paths_between(int k, int s, int t) const;

 private:
  struct Block {
    std::vector<Path> paths;
    std::map<std::vector<int>, int> col;
    RowMatrix<F> rref;
    std::vector<int> piv;
    std::vector<int> row_of_col;    // -1 when the path survives
    std::vector<int> basis_of_col;  // -1 when the path is a pivot
  };
  void build();
  const Block* block(int k, int s, int t) const {
    auto it = blocks_.find({k, s, t});
    return it == blocks_.end() ? nullptr : &it->second;
  }

  Quiver q_;
  std::vector<Relation> rels_;
  int nilp_;
  bool monomial_ = true;
  std::map<std::tuple<int, int, int>, Block> blocks_;
  std::vector<Path> basis_;
  std::vector<int> idem_;
  std::map<std::vector<int>, int> arrow_word_index_;
  std::vector<Sparse<F>> table_;
  std::vector<std::vector<std::vector<int>>> pblock_;
  std::vector<int> bpos_;
  std::vector<std::vector<Matrix<F>>> pact_;
};

template <class F>
using AlgebraPtr = std::shared_ptr<const Algebra<F>>;

template <class F>
AlgebraPtr<F> build_algebra(Quiver q, std::vector<Relation> rels, int nilp_bound = 3) {
  return std::make_shared<const Algebra<F>>(std::move(q), std::move(rels), nilp_bound);
}

// ---------------------------------------------------------------------------

template <class F>
Algebra<F>::Algebra(Quiver q, std::vector<Relation> rels, int nilp_bound)
    : q_(std::move(q)), rels_(std::move(rels)), nilp_(nilp_bound) {
  if (nilp_ < 2) throw std::invalid_argument("nilpotency bound must be at least 2");
  for (const Relation& r : rels_) {
    if (r.terms.empty()) throw std::invalid_argument("empty relation");
    const Path& p0 = r.terms.front().first;
    if (p0.length() < 2)
      throw std::invalid_argument("relation " + format_relation(q_, r) + " has length < 2");
    for (auto& [p, c] : r.terms) {
      if (p.length() != p0.length())
        throw std::invalid_argument("relation " + format_relation(q_, r) + " mixes path lengths");
      if (p.source() != p0.source() || p.target() != p0.target())
        throw std::invalid_argument("relation " + format_relation(q_, r) + " is not parallel");
      if (c.is_zero()) throw std::invalid_argument("zero coefficient in relation");
    }
  }
  build();
}

template <class F>
std::vector<Path> Algebra<F>::paths_between(int k, int s, int t) const {
  if (auto b = block(k, s, t)) return b->paths;
  return {};
}

template <class F>
void Algebra<F>::build() {
  const int nv = q_.num_vertices();
  // paths by degree, grouped per (source, target)
  std::vector<std::vector<Path>> layer(1);
  for (int v = 0; v < nv; ++v) layer[0].push_back(Path::trivial(v));
  for (int k = 1; k <= nilp_; ++k) {
    std::vector<Path> next;
    for (const Path& p : layer[k - 1])
      for (int a : q_.arrows_from(p.target())) next.push_back(p.then(q_, a));
    std::sort(next.begin(), next.end());
    layer.push_back(std::move(next));
  }

  for (int k = 0; k <= nilp_; ++k) {
    for (const Path& p : layer[k]) {
      Block& b = blocks_[{k, p.source(), p.target()}];
      b.col[p.arrows()] = static_cast<int>(b.paths.size());
      b.paths.push_back(p);
    }
  }

  for (int k = 0; k <= nilp_; ++k) {
    for (auto& [key, b] : blocks_) {
      if (std::get<0>(key) != k) continue;
      auto [kk, s, t] = key;
      const int n = static_cast<int>(b.paths.size());
      std::vector<Vector<F>> gens;
      for (const Relation& r : rels_) {
        const Path& p0 = r.terms.front().first;
        if (p0.length() != k || p0.source() != s || p0.target() != t) continue;
        Vector<F> v = Vector<F>::Zero(n);
        for (auto& [p, c] : r.terms) v(b.col.at(p.arrows())) += to_field<F>(c);
        gens.push_back(v);
      }
      if (k >= 1) {
        // I_{k-1}(s, t') followed by an arrow t' -> t
        for (int a : q_.arrows_into(t)) {
          const Block* lb = block(k - 1, s, q_.arrow(a).source);
          if (!lb) continue;
          for (int i = 0; i < lb->rref.rows(); ++i) {
            Vector<F> v = Vector<F>::Zero(n);
            for (int j = 0; j < lb->rref.cols(); ++j) {
              if (is_zero(lb->rref(i, j))) continue;
              auto w = lb->paths[j].arrows();
              w.push_back(a);
              v(b.col.at(w)) += lb->rref(i, j);
            }
            gens.push_back(v);
          }
        }
        // an arrow s -> s' followed by I_{k-1}(s', t)
        for (int a : q_.arrows_from(s)) {
          const Block* lb = block(k - 1, q_.arrow(a).target, t);
          if (!lb) continue;
          for (int i = 0; i < lb->rref.rows(); ++i) {
            Vector<F> v = Vector<F>::Zero(n);
            for (int j = 0; j < lb->rref.cols(); ++j) {
              if (is_zero(lb->rref(i, j))) continue;
              std::vector<int> w{a};
              const auto& tail = lb->paths[j].arrows();
              w.insert(w.end(), tail.begin(), tail.end());
              v(b.col.at(w)) += lb->rref(i, j);
            }
            gens.push_back(v);
          }
        }
      }
      RowMatrix<F> m(static_cast<int>(gens.size()), n);
      for (size_t i = 0; i < gens.size(); ++i) m.row(static_cast<int>(i)) = gens[i].transpose();
      b.piv = rref_inplace(m);
      b.rref = m.topRows(static_cast<int>(b.piv.size()));
      b.row_of_col.assign(n, -1);
      for (size_t i = 0; i < b.piv.size(); ++i) b.row_of_col[b.piv[i]] = static_cast<int>(i);
      for (int i = 0; i < b.rref.rows(); ++i) {
        int nz = 0;
        for (int j = 0; j < n; ++j) nz += !is_zero(b.rref(i, j));
        if (nz != 1) monomial_ = false;
      }
      if (k == nilp_ && static_cast<int>(b.piv.size()) != n) {
        int j = 0;
        while (b.row_of_col[j] >= 0) ++j;
        throw std::invalid_argument("relations do not force J^" + std::to_string(nilp_) + " = 0: path " +
                                    format_path(q_, b.paths[j]) + " survives");
      }
    }
  }

  // basis: surviving paths of degree < N, by degree then path order
  for (int k = 0; k < nilp_; ++k)
    for (const Path& p : layer[k]) {
      const Block& b = blocks_.at({k, p.source(), p.target()});
      if (b.row_of_col[b.col.at(p.arrows())] < 0) basis_.push_back(p);
    }
  for (auto& [key, b] : blocks_) b.basis_of_col.assign(b.paths.size(), -1);
  idem_.assign(nv, -1);
  for (int i = 0; i < dim(); ++i) {
    const Path& p = basis_[i];
    Block& b = blocks_.at({p.length(), p.source(), p.target()});
    b.basis_of_col[b.col.at(p.arrows())] = i;
    if (p.length() == 0) idem_[p.source()] = i;
  }

  const int B = dim();
  table_.assign(size_t(B) * B, {});
  for (int i = 0; i < B; ++i)
    for (int j = 0; j < B; ++j) {
      auto c = compose(basis_[i], basis_[j]);
      if (c) table_[size_t(i) * B + j] = normal_form(*c);
    }

  pblock_.assign(nv, std::vector<std::vector<int>>(nv));
  bpos_.assign(B, -1);
  for (int i = 0; i < B; ++i) {
    auto& blk = pblock_[basis_[i].source()][basis_[i].target()];
    bpos_[i] = static_cast<int>(blk.size());
    blk.push_back(i);
  }
  pact_.assign(nv, std::vector<Matrix<F>>(q_.num_arrows()));
  for (int e = 0; e < nv; ++e)
    for (int a = 0; a < q_.num_arrows(); ++a) {
      const Arrow& ar = q_.arrow(a);
      const auto& from = pblock_[e][ar.source];
      const auto& to = pblock_[e][ar.target];
      Matrix<F> m = Matrix<F>::Zero(static_cast<int>(to.size()), static_cast<int>(from.size()));
      Path ap = Path::arrow(q_, a);
      for (size_t c = 0; c < from.size(); ++c)
        for (auto& [idx, coef] : normal_form(*compose(ap, basis_[from[c]])))
          m(bpos_[idx], static_cast<int>(c)) += coef;
      pact_[e][a] = std::move(m);
    }
}

template <class F>
std::optional<int> Algebra<F>::basis_index(const Path& p) const {
  if (p.length() >= nilp_) return std::nullopt;
  const Block* b = block(p.length(), p.source(), p.target());
  if (!b) return std::nullopt;
  int c = b->col.at(p.arrows());
  if (b->basis_of_col[c] < 0) return std::nullopt;
  return b->basis_of_col[c];
}

template <class F>
Sparse<F> Algebra<F>::normal_form(const Path& p) const {
  if (p.length() >= nilp_) return {};
  const Block* b = block(p.length(), p.source(), p.target());
  int c = b->col.at(p.arrows());
  if (b->basis_of_col[c] >= 0) return {{b->basis_of_col[c], F(1)}};
  int r = b->row_of_col[c];
  Sparse<F> out;
  for (int j = 0; j < static_cast<int>(b->paths.size()); ++j) {
    if (j == c || is_zero(b->rref(r, j))) continue;
    out.push_back({b->basis_of_col[j], -b->rref(r, j)});
  }
  std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.first < y.first; });
  return out;
}

template <class F>
Vector<F> Algebra<F>::multiply(const Vector<F>& x, const Vector<F>& y) const {
  Vector<F> z = Vector<F>::Zero(dim());
  for (int i = 0; i < dim(); ++i) {
    if (is_zero(x(i))) continue;
    for (int j = 0; j < dim(); ++j) {
      if (is_zero(y(j))) continue;
      F c = x(i) * y(j);
      for (auto& [k, t] : multiply_basis(i, j)) z(k) += c * t;
    }
  }
  return z;
}

template <class F>
std::vector<int> Algebra<F>::radical_power(int k) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (degree(i) >= k) out.push_back(i);
  return out;
}

template <class F>
typename Algebra<F>::IdealBlock Algebra<F>::ideal_block(int k, int s, int t) const {
  IdealBlock ib;
  if (k >= nilp_) {
    // every path of length >= N lies in I
    std::vector<Path> layer{Path::trivial(s)};
    for (int d = 0; d < k; ++d) {
      std::vector<Path> next;
      for (auto& p : layer)
        for (int a : q_.arrows_from(p.target())) next.push_back(p.then(q_, a));
      layer = std::move(next);
    }
    for (auto& p : layer)
      if (p.target() == t) ib.paths.push_back(p);
    std::sort(ib.paths.begin(), ib.paths.end());
    ib.ideal = Subspace<F>::full(static_cast<int>(ib.paths.size()));
    return ib;
  }
  const Block* b = block(k, s, t);
  if (!b) {
    ib.ideal = Subspace<F>(0);
    return ib;
  }
  ib.paths = b->paths;
  ib.ideal = Subspace<F>::from_rref(b->rref, b->piv);
  return ib;
}

}  // namespace qstack
