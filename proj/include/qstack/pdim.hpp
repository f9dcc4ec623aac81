#pragma once

#include "qstack/isomorphism.hpp"
#include "qstack/monomial.hpp"
#include "qstack/pdim_result.hpp"
#include "qstack/representation.hpp"
#include "qstack/stacking.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qstack {

struct PdimOptions {
  int cutoff = 32;
  int max_total_dim = 4000;  // syzygies beyond this size give up with ExceedsCutoff
  bool detect_cycles = true;
  SearchOptions search;
};

// Projective dimensions over Λ.  Three routes:
//  * monomial Λ: finite pdims never exceed s+2, so a nonzero Ω^{s+3}
//    proves infinitude;
//  * a registered stacking partition: X = Ω² splits as e'X ⊕ e''X, the first
//    part is resolved over Λ' (recursively), the second is bounded through
//    its Λ''-dimension plus t+1;
//  * otherwise the plain syzygy chain, declaring infinitude only when an
//    earlier syzygy is certified to be a direct summand of a later one.
// Any syzygy with a simple summand of infinite projective dimension ends the
// search early on every route.
template <class F>
class PdimEngine {
 public:
  explicit PdimEngine(AlgebraPtr<F> alg, PdimOptions opt = {}) : alg_(std::move(alg)), opt_(opt) {
    if (alg_->is_monomial()) {
      graph_.emplace(alg_);
      s_ = critical_report(*graph_).s;
    }
    init_simples();
  }

  // layers: vertex ids, bottom layer first; each extra layer is stacked on
  // top of the union of the previous ones.
  PdimEngine(AlgebraPtr<F> alg, const std::vector<std::vector<std::string>>& layers, PdimOptions opt = {})
      : alg_(std::move(alg)), opt_(opt) {
    if (alg_->is_monomial()) {
      graph_.emplace(alg_);
      s_ = critical_report(*graph_).s;
    }
    if (layers.size() > 1) {
      const Quiver& q = alg_->quiver();
      std::vector<std::string> low_ids;
      for (size_t i = 0; i + 1 < layers.size(); ++i) low_ids.insert(low_ids.end(), layers[i].begin(), layers[i].end());
      part_ = partition_from_ids(q, low_ids, layers.back());
      auto bad = check_partition(*alg_, *part_);
      if (!bad.empty()) throw std::invalid_argument("invalid stacking partition: " + bad.front().message);
      lower_corner_ = corner_algebra(*alg_, part_->lower);
      upper_corner_ = corner_algebra(*alg_, part_->upper);
      std::vector<std::vector<std::string>> sub(layers.begin(), layers.end() - 1);
      lower_ = std::make_shared<PdimEngine>(lower_corner_.algebra, sub, opt_);
      upper_ = std::make_shared<PdimEngine>(upper_corner_.algebra, opt_);
      compute_t();
    }
    init_simples();
  }

  const AlgebraPtr<F>& algebra() const { return alg_; }
  const PdimOptions& options() const { return opt_; }
  std::optional<int> s_invariant() const { return s_; }
  bool stacked() const { return part_.has_value(); }
  const StackingPartition& partition() const { return *part_; }
  const Corner<F>& lower_corner() const { return lower_corner_; }
  const Corner<F>& upper_corner() const { return upper_corner_; }
  const PdimEngine& lower() const { return *lower_; }
  const PdimEngine& upper() const { return *upper_; }
  // t of the stacking partition; nullopt when some pdim stayed unresolved
  std::optional<int> t() const { return t_; }
  const PdimResult& simple_pdim(int v) const { return simple_[v]; }

  PdimResult pdim(const Representation<F>& m) const { return compute(m, true); }

  // The plain chain with summand-cycle detection, ignoring structure.
  PdimResult generic(const Representation<F>& m) const { return chain(m, opt_.cutoff, Bound::None, true); }

  // Ω^k(M) for k = 0..len (stops early at zero).
  std::vector<Representation<F>> resolution(const Representation<F>& m, int len) const {
    std::vector<Representation<F>> out{m};
    while (static_cast<int>(out.size()) <= len && !out.back().is_zero()) out.push_back(syzygy(out.back(), 1));
    return out;
  }

  // Nonzero socle element at v outside the radical: S(v) is a summand.
  static std::vector<int> simple_summands(const Representation<F>& m) {
    auto soc = socle(m);
    auto jm = radical(m);
    std::vector<int> out;
    for (int v = 0; v < m.num_vertices(); ++v)
      if (!jm[v].contains(soc[v])) out.push_back(v);
    return out;
  }

 private:
  enum class Bound { None, Known };

  void init_simples() {
    // Simples already shown infinite feed the shortcut for the later ones;
    // a second pass retries whatever stayed unresolved.
    simple_.assign(alg_->quiver().num_vertices(), PdimResult::cutoff(opt_.cutoff));
    for (int pass = 0; pass < 2; ++pass)
      for (int v = 0; v < alg_->quiver().num_vertices(); ++v)
        if (simple_[v].kind == PdimResult::Kind::ExceedsCutoff) simple_[v] = compute(simple_module(alg_, v), true);
  }

  void compute_t() {
    const Quiver& q = alg_->quiver();
    int t = -1;
    bool known = true;
    for (int e : part_->upper) {
      if (q.is_source(e)) continue;
      auto pe = projective_module(alg_, e);
      auto ep = restrict_module(pe, lower_corner_.algebra, lower_corner_.vertex_map, lower_corner_.arrow_map);
      if (ep.is_zero()) continue;
      auto d = lower_->pdim(ep);
      if (d.kind == PdimResult::Kind::ExceedsCutoff) known = false;
      if (d.is_finite()) t = std::max(t, d.value);
    }
    if (known) t_ = t;
  }

  bool has_infinite_simple_summand(const Representation<F>& m, std::string* why) const {
    for (int v : simple_summands(m))
      if (simple_[v].is_infinite()) {
        if (why) *why = "simple summand S(" + alg_->quiver().vertex(v) + ") of infinite projective dimension";
        return true;
      }
    return false;
  }

  PdimResult compute(const Representation<F>& m, bool top_level) const {
    if (m.is_zero()) return PdimResult::finite(-1, "zero module");
    if (part_) return stacked_pdim(m);
    if (s_) return chain(m, *s_ + 2, Bound::Known, false);
    return chain(m, opt_.cutoff, Bound::None, true);
  }

  // Resolve up to Ω^{limit+1}.  With a known bound a nonzero Ω^{limit+1}
  // proves infinitude; otherwise it is a cutoff.
  PdimResult chain(const Representation<F>& m, int limit, Bound bound, bool cycles) const {
    if (m.is_zero()) return PdimResult::finite(-1, "zero module");
    std::vector<Representation<F>> seen{m};
    Representation<F> cur = m;
    for (int k = 1; k <= limit + 1; ++k) {
      cur = syzygy(cur, 1);
      if (cur.is_zero()) return PdimResult::finite(k - 1, "resolution ends");
      std::string why;
      if (has_infinite_simple_summand(cur, &why)) return PdimResult::infinite("Ω^" + std::to_string(k) + " has a " + why);
      if (cur.total_dim() > opt_.max_total_dim)
        return PdimResult::cutoff(opt_.cutoff, "syzygy dimension exceeds " + std::to_string(opt_.max_total_dim));
      if (cycles && opt_.detect_cycles) {
        for (int j = static_cast<int>(seen.size()) - 1; j >= 1; --j) {
          const auto& prev = seen[j];
          bool fits = true;
          for (int v = 0; v < cur.num_vertices() && fits; ++v) fits = prev.dim(v) <= cur.dim(v);
          if (!fits) continue;
          if (is_direct_summand(prev, cur, opt_.search) == Certainty::Yes)
            return PdimResult::infinite("Ω^" + std::to_string(j) + " is a direct summand of Ω^" + std::to_string(k));
        }
      }
      seen.push_back(cur);
    }
    if (bound == Bound::Known)
      return PdimResult::infinite("Ω^" + std::to_string(limit + 1) + " nonzero beyond the bound " + std::to_string(limit));
    return PdimResult::cutoff(limit, "resolution did not end within the cutoff");
  }

  PdimResult stacked_pdim(const Representation<F>& m) const {
    auto o1 = syzygy(m, 1);
    if (o1.is_zero()) return PdimResult::finite(0, "projective");
    std::string why;
    if (has_infinite_simple_summand(o1, &why)) return PdimResult::infinite("Ω^1 has a " + why);
    auto x = syzygy(o1, 1);
    if (x.is_zero()) return PdimResult::finite(1, "resolution ends");
    const Quiver& q = alg_->quiver();
    std::vector<char> up(q.num_vertices(), 0);
    for (int v : part_->upper) up[v] = 1;
    for (int a = 0; a < q.num_arrows(); ++a) {
      const Arrow& ar = q.arrow(a);
      if (up[ar.source] && !up[ar.target] && !is_zero_matrix(x.map(a)))
        throw std::logic_error("second syzygy does not split along the stacking partition (arrow " + ar.id + ")");
    }
    auto xl = restrict_module(x, lower_corner_.algebra, lower_corner_.vertex_map, lower_corner_.arrow_map);
    auto xu = restrict_module(x, upper_corner_.algebra, upper_corner_.vertex_map, upper_corner_.arrow_map);

    PdimResult dl = lower_->compute(xl, false);
    if (dl.is_infinite()) return PdimResult::infinite("e'Ω² infinite over Λ': " + dl.reason);
    PdimResult du = PdimResult::finite(-1, "zero");
    if (!xu.is_zero()) {
      PdimResult d2 = upper_->compute(xu, false);
      if (d2.is_infinite()) return PdimResult::infinite("e''Ω² infinite over Λ'': " + d2.reason);
      auto xe = submodule(x, vertex_part(x, part_->upper)).module;
      if (d2.is_finite() && t_) {
        int b = d2.value + *t_ + 1;
        du = chain(xe, std::max(b, 0), Bound::Known, false);
        if (du.is_infinite()) du.reason = "e''Ω² exceeds pdim over Λ'' + t + 1 (" + std::to_string(b) + ")";
      } else {
        du = chain(xe, opt_.cutoff, Bound::None, true);
      }
      if (du.is_infinite()) return du;
    }
    if (dl.kind == PdimResult::Kind::ExceedsCutoff || du.kind == PdimResult::Kind::ExceedsCutoff)
      return PdimResult::cutoff(opt_.cutoff, "a stack component stayed unresolved");
    return PdimResult::finite(2 + std::max(dl.value, du.value), "split second syzygy");
  }

  AlgebraPtr<F> alg_;
  PdimOptions opt_;
  std::optional<AnnihilatorGraph<F>> graph_;
  std::optional<int> s_;
  std::optional<StackingPartition> part_;
  Corner<F> lower_corner_, upper_corner_;
  std::shared_ptr<PdimEngine> lower_, upper_;
  std::optional<int> t_;
  std::vector<PdimResult> simple_;
};

}  // namespace qstack
