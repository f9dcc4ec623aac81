#pragma once

#include "qstack/graph_module.hpp"
#include "qstack/pdim.hpp"

#include <cstdint>
#include <random>

namespace qstack {

// Subspaces of F_p^k in rank order (then pivot sets lexicographically),
// each given by its reduced echelon basis and addressable by index.
class SubspaceLattice {
 public:
  SubspaceLattice(int k, std::uint32_t p);
  int ambient() const { return k_; }
  std::uint64_t size() const { return total_; }
  // rows = rank, cols = k; pivots returned through piv
  RowMatrix<Zp> unrank(std::uint64_t idx, std::vector<int>* piv = nullptr) const;
  static std::uint64_t count(int k, std::uint32_t p);

 private:
  struct Cell {
    std::vector<int> piv;
    std::vector<std::pair<int, int>> free;  // (row, col)
    std::uint64_t offset, count;
  };
  int k_;
  std::uint32_t p_;
  std::uint64_t total_ = 0;
  std::vector<Cell> cells_;
};

struct EnumerationBudget {
  std::uint64_t max_modules = 50000000;  // per top vector; beyond this, sample
  std::uint64_t samples = 20000;
  std::uint64_t seed = 7;
  int max_radical_dim = 12;  // skip top vectors whose JP/J²P is larger
  unsigned threads = 0;      // 0: hardware concurrency
};

// Loewy-length-<=2 modules P/V, J²P ⊆ V ⊆ JP, for P with top multiplicities mu.
// V/J²P is graded by vertex; its piece at v is a subspace W_v of the
// degree-one coordinates D_v = ⊕ over tops x_k and arrows a: type(k) -> v.
class Loewy2Space {
 public:
  Loewy2Space(const AlgebraPtr<Zp>& alg, std::vector<int> mu);

  const std::vector<int>& mu() const { return mu_; }
  const std::vector<int>& top_types() const { return types_; }
  int radical_dim() const;
  int coords(int v) const { return static_cast<int>(coord_[v].size()); }
  // saturating product of lattice sizes
  std::uint64_t count() const { return count_; }
  bool saturated() const { return saturated_; }

  std::vector<Subspace<Zp>> choice(std::uint64_t idx) const;
  std::vector<Subspace<Zp>> random_choice(std::mt19937_64& rng) const;
  Representation<Zp> module(const std::vector<Subspace<Zp>>& w) const;

  // Cheap certificate of infinite projective dimension: a simple summand
  // S(v) of infinite projective dimension in M or in Ω¹(M) = V.
  bool quick_infinite(const std::vector<Subspace<Zp>>& w, const std::vector<char>& inf_simple) const;

  // Layered-graph description of a module of this space.
  std::string describe(const std::vector<Subspace<Zp>>& w) const;

 private:
  AlgebraPtr<Zp> alg_;
  std::vector<int> mu_, types_;
  std::vector<std::vector<int>> top_at_;                 // per vertex: top indices of that type
  std::vector<std::vector<std::pair<int, int>>> coord_;  // per vertex: (top, arrow)
  std::vector<std::vector<int>> coord_of_;               // [top][arrow] -> coordinate at target, or -1
  std::vector<int> deg2_;                                // dim J²P at v
  std::vector<Matrix<Zp>> act_;                          // per arrow a: D_src -> J²P_tgt
  std::vector<std::shared_ptr<SubspaceLattice>> lat_;
  std::uint64_t count_ = 1;
  bool saturated_ = false;
};

struct FindimObservation {
  int n = 0;
  int value = 0;  // max finite pdim seen (0: projectives)
  bool exhaustive = true;
  std::vector<int> attaining_mu;
  std::string attaining_graph;
  std::vector<int> attaining_resolution;  // total dims of Ω^0.. of the attaining module
  std::uint64_t attaining_count = 0;
  std::uint64_t modules = 0, quick_infinite = 0, infinite = 0, unresolved = 0;
  std::uint64_t top_vectors = 0, skipped_large = 0, skipped_reducible = 0, sampled_tops = 0;
  std::vector<std::string> unresolved_examples;
  std::uint64_t seed = 0;
  double seconds = 0;
};

// Top vectors with entries <= n, reduced to those that can give a new
// indecomposable module: no top at a sink (its projective is simple and
// splits off) and tops linked through common radical vertices.
std::vector<std::vector<int>> candidate_tops(const Algebra<Zp>& alg, int n, std::uint64_t* reducible = nullptr);

// Max finite pdim over the Loewy-<=2 modules whose top multiplicities are
// all <= n.  Deterministic for a fixed budget, independent of threading.
FindimObservation observed_findim(const PdimEngine<Zp>& eng, int n, const EnumerationBudget& budget,
                                  const std::vector<std::vector<int>>* tops = nullptr);

}  // namespace qstack
