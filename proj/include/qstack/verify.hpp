#pragma once

#include "qstack/isomorphism.hpp"
#include "qstack/monomial.hpp"
#include "qstack/pdim.hpp"
#include "qstack/stacking.hpp"

#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace qstack {

struct Report {
  std::vector<std::string> failures, warnings, notes;
  bool ok() const { return failures.empty(); }
  void fail(std::string s) { failures.push_back(std::move(s)); }
  void warn(std::string s) { warnings.push_back(std::move(s)); }
  void note(std::string s) { notes.push_back(std::move(s)); }
};

struct Interval {
  int lo = 0, hi = 0;
  bool exact() const { return lo == hi; }
  bool contains(int x) const { return lo <= x && x <= hi; }
  std::string str() const { return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]"; }
};

struct StackInvariants {
  std::optional<int> t;  // nullopt when a relevant pdim stayed unresolved
  std::vector<std::pair<std::string, PdimResult>> corner_pdims;  // e -> pdim over Λ' of e'Λe, every e in E''
  bool infinite_corner = false;                                  // some e'Λe of infinite pdim
  std::vector<int> homogeneous;
  bool upper_monomial = false;
  // Λ'' monomial and every critical path of Λ'' ends in a homogeneous vertex
  bool monomial_reduction_applies = false;
  std::vector<std::string> inhomogeneous_critical;
  std::optional<Interval> lower_findim, upper_findim, bounds;
};

template <class F>
std::optional<Interval> monomial_findim(const AlgebraPtr<F>& alg) {
  if (!alg->is_monomial()) return std::nullopt;
  auto [lo, hi] = findim_interval(critical_report(AnnihilatorGraph<F>(alg)));
  return Interval{lo, hi};
}

// Component finitistic dimensions default to the monomial interval.
template <class F>
StackInvariants stack_invariants(const AlgebraPtr<F>& alg, const StackingPartition& part, const PdimOptions& opt = {},
                                 std::optional<Interval> lower_fd = {}, std::optional<Interval> upper_fd = {}) {
  auto bad = check_partition(*alg, part);
  if (!bad.empty()) throw std::invalid_argument("invalid stacking partition: " + bad.front().message);
  const Quiver& q = alg->quiver();
  auto lower = corner_algebra(*alg, part.lower);
  auto upper = corner_algebra(*alg, part.upper);
  StackInvariants inv;
  PdimEngine<F> eng(lower.algebra, opt);
  int t = -1;
  bool known = true;
  for (int e : part.upper) {
    auto ep = restrict_module(projective_module(alg, e), lower.algebra, lower.vertex_map, lower.arrow_map);
    auto d = eng.pdim(ep);
    inv.corner_pdims.push_back({q.vertex(e), d});
    if (d.is_infinite()) inv.infinite_corner = true;
    if (q.is_source(e)) continue;
    if (d.kind == PdimResult::Kind::ExceedsCutoff) known = false;
    if (d.is_finite()) t = std::max(t, d.value);
  }
  if (known) inv.t = t;
  inv.homogeneous = homogeneous_vertices(*alg, part);
  inv.upper_monomial = upper.algebra->is_monomial();
  if (inv.upper_monomial) {
    AnnihilatorGraph<F> g(upper.algebra);
    auto rep = critical_report(g);
    std::vector<char> homog(q.num_vertices(), 0);
    for (int v : inv.homogeneous) homog[v] = 1;
    for (int p : rep.critical) {
      const Path& pp = upper.algebra->basis_path(p);
      if (!homog[upper.vertex_map[pp.target()]])
        inv.inhomogeneous_critical.push_back(format_path(upper.algebra->quiver(), pp));
    }
    inv.monomial_reduction_applies = inv.inhomogeneous_critical.empty();
  }
  inv.lower_findim = lower_fd ? lower_fd : monomial_findim(lower.algebra);
  inv.upper_findim = upper_fd ? upper_fd : monomial_findim(upper.algebra);
  if (inv.lower_findim && inv.upper_findim)
    inv.bounds = Interval{inv.lower_findim->lo, inv.lower_findim->hi + inv.upper_findim->hi + 1};
  return inv;
}

// Max pdim of the simples; nullopt when one of them is infinite or unresolved.
template <class F>
std::optional<int> global_dimension(const PdimEngine<F>& eng) {
  int g = 0;
  for (int v = 0; v < eng.algebra()->quiver().num_vertices(); ++v) {
    auto d = eng.pdim(simple_module(eng.algebra(), v));
    if (!d.is_finite()) return std::nullopt;
    g = std::max(g, d.value);
  }
  return g;
}

// Second-syzygy splitting, restriction of covers to the corners, and the
// pdim comparisons for e''X.  Syzygies are checked up to Ω^depth.
template <class F>
Report verify_splitting(const AlgebraPtr<F>& alg, const StackingPartition& part, const Representation<F>& n, int depth,
                        const PdimOptions& opt = {}) {
  Report rep;
  auto bad = check_partition(*alg, part);
  if (!bad.empty()) {
    rep.fail("invalid stacking partition: " + bad.front().message);
    return rep;
  }
  const Quiver& q = alg->quiver();
  auto lower = corner_algebra(*alg, part.lower);
  auto upper = corner_algebra(*alg, part.upper);
  std::vector<char> up(q.num_vertices(), 0);
  for (int v : part.upper) up[v] = 1;
  auto lo_res = [&](const Representation<F>& m) {
    return restrict_module(m, lower.algebra, lower.vertex_map, lower.arrow_map);
  };
  auto up_res = [&](const Representation<F>& m) {
    return restrict_module(m, upper.algebra, upper.vertex_map, upper.arrow_map);
  };
  auto same = [&](const Representation<F>& a, const Representation<F>& b, const std::string& what) {
    auto c = is_isomorphic(a, b, opt.search);
    if (c != Certainty::Yes) rep.fail(what + ": " + to_string(c));
  };

  std::vector<Representation<F>> omega{n};
  for (int k = 1; k <= std::max(depth, 2); ++k) omega.push_back(syzygy(omega.back(), 1));

  // e'' Ω^k over Λ equals Ω^k over Λ'' of e''N
  {
    Representation<F> cur = up_res(n);
    for (int k = 0; k <= depth; ++k) {
      if (k > 0) cur = syzygy(cur, 1);
      same(up_res(omega[k]), cur, "e''Ω^" + std::to_string(k) + " vs Λ''-syzygy");
    }
  }
  // e'N resolves the same way over Λ and Λ'
  {
    auto en = submodule(n, vertex_part(n, part.lower)).module;
    Representation<F> big = en, small = lo_res(en);
    for (int k = 0; k <= depth; ++k) {
      if (k > 0) {
        big = syzygy(big, 1);
        small = syzygy(small, 1);
      }
      for (int v : part.upper)
        if (big.dim(v)) rep.fail("Ω^" + std::to_string(k) + "(e'N) over Λ reaches " + q.vertex(v));
      same(lo_res(big), small, "Ω^" + std::to_string(k) + "(e'N) over Λ vs Λ'");
    }
  }
  // second and later syzygies split
  for (int k = 2; k < static_cast<int>(omega.size()); ++k) {
    const auto& x = omega[k];
    for (int a = 0; a < q.num_arrows(); ++a) {
      const Arrow& ar = q.arrow(a);
      if (up[ar.source] && !up[ar.target] && !is_zero_matrix(x.map(a)))
        rep.fail("Ω^" + std::to_string(k) + ": arrow " + ar.id + " maps e''X into e'X");
    }
  }

  const auto& x = omega[2];
  auto ex = submodule(x, vertex_part(x, part.upper)).module;
  if (ex.is_zero()) {
    rep.note("e''Ω² = 0");
    return rep;
  }
  auto inv = stack_invariants(alg, part, opt);
  PdimEngine<F> big(alg, opt), small(upper.algebra, opt);
  auto dl = big.pdim(ex), du = small.pdim(up_res(ex));
  rep.note("pdim over Λ of e''Ω² = " + dl.str() + ", over Λ'' = " + du.str() +
           (inv.t ? ", t = " + std::to_string(*inv.t) : ", t unresolved"));
  if (dl.is_finite() && du.is_infinite()) rep.fail("e''Ω² finite over Λ but infinite over Λ''");
  if (dl.is_finite() && du.is_finite()) {
    if (dl.value < du.value) rep.fail("pdim over Λ below pdim over Λ''");
    if (inv.t && dl.value > du.value + *inv.t + 1) rep.fail("pdim over Λ exceeds pdim over Λ'' + t + 1");
  }
  if (dl.is_infinite() && !du.is_infinite() && !inv.infinite_corner)
    rep.fail("e''Ω² infinite over Λ with neither a Λ''-reason nor an infinite e'Λe");
  return rep;
}

// --- syzygies of submodules of projectives over monomial algebras ----------

// Injective map from m into a sum of indecomposable projectives, if one is
// found by (bounded) search.
template <class F>
std::optional<ModuleMap<F>> find_embedding(const Representation<F>& m, const SearchOptions& opt = {}) {
  if (m.is_zero()) return ModuleMap<F>{};
  const auto& alg = m.algebra_ptr();
  int socdim = family_dim(socle(m));
  std::vector<int> types;
  for (int e = 0; e < m.num_vertices(); ++e)
    for (int v = 0; v < m.num_vertices(); ++v)
      if (m.dim(v) && alg->projective_dim(e, v)) {
        for (int k = 0; k < socdim; ++k) types.push_back(e);
        break;
      }
  auto p = projective_module(alg, types);
  auto hom = hom_space(m, p);
  if (hom.empty()) return std::nullopt;
  auto injective = [&](const ModuleMap<F>& f) {
    for (int v = 0; v < m.num_vertices(); ++v)
      if (m.dim(v) && rank<F>(f.comps[v]) != m.dim(v)) return false;
    return true;
  };
  std::optional<ModuleMap<F>> out;
  detail::search_combinations<F>(static_cast<int>(hom.size()), opt, [&](const std::vector<F>& c) {
    auto f = detail::combine(hom, c);
    if (!injective(f)) return false;
    out = f;
    return true;
  });
  return out;
}

// Splits m into indecomposable pieces through Fitting decompositions.
template <class F>
std::vector<Representation<F>> split_indecomposables(const Representation<F>& m, const SearchOptions& opt,
                                                     bool* certain = nullptr) {
  std::vector<Representation<F>> out, todo{m};
  while (!todo.empty()) {
    auto cur = std::move(todo.back());
    todo.pop_back();
    if (cur.is_zero()) continue;
    auto an = analyze_endomorphisms(cur, opt);
    if (an.split) {
      todo.push_back(submodule(cur, an.split->first).module);
      todo.push_back(submodule(cur, an.split->second).module);
      continue;
    }
    if (certain && an.indecomposable != Certainty::Yes) *certain = false;
    out.push_back(std::move(cur));
  }
  return out;
}

struct SyzygySummand {
  std::string path;     // q with Ω¹ ⊇ Λq
  std::string witness;  // x, αp
  bool witnessed = false;
};

struct PathIdealCheck {
  Report report;
  bool embedded = false;
  std::vector<std::string> e_of_m;
  std::vector<SyzygySummand> summands;
};

// Ω¹(M) decomposes into path ideals Λq with q starting in E(M); each q has
// a witness: a top element x of M and a nonzero path αp (α an arrow) with
// Λαp ≅ Λq, px outside J^{len p + 1}M and αpx = 0.
template <class F>
PathIdealCheck path_ideal_check(const Representation<F>& m, bool embedded_known, const SearchOptions& opt = {}) {
  const auto& alg = m.algebra_ptr();
  if (!alg->is_monomial()) throw std::invalid_argument("path ideal decomposition needs a monomial algebra");
  const Quiver& q = alg->quiver();
  PathIdealCheck out;
  Report& rep = out.report;
  out.embedded = embedded_known || find_embedding(m, opt).has_value();
  auto complain = [&](std::string s) { out.embedded ? rep.fail(std::move(s)) : rep.warn(std::move(s)); };
  if (!out.embedded) rep.warn("no embedding into a projective found; results are advisory");

  auto top = top_vector(m);
  std::vector<char> in_e(q.num_vertices(), 0);
  for (int v = 0; v < q.num_vertices(); ++v)
    if (top[v]) in_e[v] = 1, out.e_of_m.push_back(q.vertex(v));

  auto omega = syzygy(m, 1);
  if (omega.is_zero()) {
    rep.note("M is projective");
    return out;
  }
  bool certain = true;
  auto pieces = split_indecomposables(omega, opt, &certain);
  if (!certain) rep.warn("some summand could not be certified indecomposable");

  std::map<int, Representation<F>> ideal_cache;
  auto ideal = [&](int b) -> const Representation<F>& {
    auto it = ideal_cache.find(b);
    if (it == ideal_cache.end()) it = ideal_cache.emplace(b, path_ideal(alg, alg->basis_path(b))).first;
    return it->second;
  };

  auto series = radical_series(m);
  while (static_cast<int>(series.size()) <= alg->nilpotency_bound() + 1) series.push_back(zero_family(m));
  // top elements of type e to try
  auto candidates = [&](int e) {
    std::vector<Vector<F>> xs;
    const auto& jm = series[1][e];
    const int d = m.dim(e);
    bool small = false;
    if constexpr (field_traits<F>::finite) {
      std::uint64_t total = 1;
      for (int i = 0; i < d && total <= opt.exhaustive_limit; ++i) total *= field_traits<F>::order();
      if (total <= opt.exhaustive_limit) {
        small = true;
        for (std::uint64_t idx = 1; idx < total; ++idx) {
          Vector<F> x(d);
          std::uint64_t r = idx;
          for (int i = 0; i < d; ++i) {
            x(i) = field_traits<F>::element(r % field_traits<F>::order());
            r /= field_traits<F>::order();
          }
          if (!jm.contains(x)) xs.push_back(x);
        }
      }
    }
    if (!small) {
      for (int j : jm.nonpivots()) {
        Vector<F> x = Vector<F>::Zero(d);
        x(j) = F(1);
        xs.push_back(x);
      }
      std::mt19937_64 rng(opt.seed);
      for (int t = 0; t < opt.random_trials; ++t) {
        Vector<F> x(d);
        for (int i = 0; i < d; ++i) x(i) = field_traits<F>::random(rng);
        if (!jm.contains(x)) xs.push_back(x);
      }
    }
    return xs;
  };

  for (auto& piece : pieces) {
    auto pt = top_vector(piece);
    int tv = -1, tops = 0;
    for (int v = 0; v < q.num_vertices(); ++v)
      if (pt[v]) tv = v, tops += pt[v];
    if (tops != 1) {
      complain("a summand of Ω¹ is not cyclic (top dimension " + std::to_string(tops) + ")");
      continue;
    }
    int found = -1;
    for (int b = 0; b < alg->dim() && found < 0; ++b) {
      const Path& pb = alg->basis_path(b);
      if (pb.length() == 0 || pb.target() != tv || !in_e[pb.source()]) continue;
      const auto& lq = ideal(b);
      if (lq.dims() != piece.dims()) continue;
      if (is_isomorphic(lq, piece, opt) == Certainty::Yes) found = b;
    }
    if (found < 0) {
      complain("a summand of Ω¹ at " + q.vertex(tv) + " matches no path ideal Λq with q starting in E(M)");
      continue;
    }
    SyzygySummand s;
    s.path = format_path(q, alg->basis_path(found));
    // witness search
    const auto& target = ideal(found);
    for (int e = 0; e < q.num_vertices() && !s.witnessed; ++e) {
      if (!in_e[e]) continue;
      auto xs = candidates(e);
      for (int b = 0; b < alg->dim() && !s.witnessed; ++b) {
        const Path& p = alg->basis_path(b);
        if (p.source() != e) continue;
        for (int a : q.arrows_from(p.target())) {
          Path ap = p.then(q, a);
          auto bi = alg->basis_index(ap);
          if (!bi) continue;
          const auto& li = ideal(*bi);
          if (li.dims() != target.dims() || is_isomorphic(li, target, opt) != Certainty::Yes) continue;
          for (auto& x : xs) {
            Vector<F> px = m.apply_path(p, x);
            if (series[p.length() + 1][p.target()].contains(px)) continue;
            if (!is_zero_matrix(m.apply_path(ap, x))) continue;
            std::ostringstream os;
            os << "x at " << q.vertex(e) << " = (";
            for (int i = 0; i < x.size(); ++i) os << (i ? " " : "") << x(i);
            os << "), alpha*p = " << format_path(q, ap);
            s.witness = os.str();
            s.witnessed = true;
            break;
          }
          if (s.witnessed) break;
        }
      }
    }
    if (!s.witnessed) complain("no witness (x, alpha*p) for the summand Λ" + s.path);
    out.summands.push_back(std::move(s));
  }
  return out;
}

}  // namespace qstack
