#pragma once

#include "qstack/algebra.hpp"
#include "qstack/pdim_result.hpp"

#include <stdexcept>
#include <vector>

namespace qstack {

// Nodes are the nonzero paths of positive length; p -> q for every minimal
// q with qp = 0.  Then Ω¹(Λp) is the direct sum of the Λq, so pdim Λp is
// the longest path out of p, or infinite when a cycle is reachable.
template <class F>
class AnnihilatorGraph {
 public:
  explicit AnnihilatorGraph(AlgebraPtr<F> alg) : alg_(std::move(alg)) {
    if (!alg_->is_monomial()) throw std::invalid_argument("annihilator graph needs a monomial algebra");
    const int n = alg_->dim();
    const Quiver& q = alg_->quiver();
    edges_.assign(n, {});
    for (int p = 0; p < n; ++p) {
      if (alg_->degree(p) == 0) continue;
      const Path& pp = alg_->basis_path(p);
      for (int c = 0; c < n; ++c) {
        const Path& qq = alg_->basis_path(c);
        if (qq.length() == 0 || qq.source() != pp.target()) continue;
        if (!alg_->is_zero_path(*compose(qq, pp))) continue;
        bool minimal = true;
        for (int k = 1; k < qq.length() && minimal; ++k) {
          std::vector<int> pre(qq.arrows().begin(), qq.arrows().begin() + k);
          if (alg_->is_zero_path(*compose(Path::from_arrows(q, pre), pp))) minimal = false;
        }
        if (minimal) edges_[p].push_back(c);
      }
    }
    value_.assign(n, kUnset);
    state_.assign(n, 0);
    for (int p = 0; p < n; ++p)
      if (alg_->degree(p) > 0) visit(p);
  }

  const AlgebraPtr<F>& algebra() const { return alg_; }
  const std::vector<int>& minimal_annihilators(int p) const { return edges_.at(p); }
  std::vector<int> minimal_annihilators(const Path& p) const { return edges_.at(index_of(p)); }

  PdimResult pdim(int p) const {
    if (alg_->degree(p) == 0) throw std::invalid_argument("trivial path");
    if (value_[p] == kInf) return PdimResult::infinite("cycle in the annihilator graph");
    return PdimResult::finite(value_[p], "longest annihilator chain");
  }
  PdimResult pdim(const Path& p) const { return pdim(index_of(p)); }

 private:
  static constexpr int kUnset = -2, kInf = -3;
  int index_of(const Path& p) const {
    auto i = alg_->basis_index(p);
    if (!i) throw std::invalid_argument("path is zero in the algebra");
    return *i;
  }
  void visit(int p) {
    if (state_[p] == 2) return;
    state_[p] = 1;
    int best = 0;
    for (int q : edges_[p]) {
      if (state_[q] == 1) {
        best = kInf;
        continue;
      }
      visit(q);
      if (value_[q] == kInf)
        best = kInf;
      else if (best != kInf)
        best = std::max(best, value_[q] + 1);
    }
    value_[p] = best;
    state_[p] = 2;
  }

  AlgebraPtr<F> alg_;
  std::vector<std::vector<int>> edges_;
  std::vector<int> value_;
  std::vector<char> state_;
};

struct CriticalPathReport {
  std::vector<int> critical;  // basis indices
  int s = -1;
  int witness = -1;  // basis index attaining s, or -1
};

template <class F>
CriticalPathReport critical_report(const AnnihilatorGraph<F>& g) {
  const auto& alg = *g.algebra();
  CriticalPathReport r;
  for (int p = 0; p < alg.dim(); ++p) {
    if (alg.degree(p) == 0 || alg.quiver().is_source(alg.basis_path(p).source())) continue;
    auto d = g.pdim(p);
    if (!d.is_finite()) continue;
    r.critical.push_back(p);
    if (d.value > r.s) {
      r.s = d.value;
      r.witness = p;
    }
  }
  return r;
}

inline std::pair<int, int> findim_interval(const CriticalPathReport& r) {
  return {r.s + 1, r.s + 2};
}

}  // namespace qstack
