#pragma once

#include "qstack/representation.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qstack {

enum class Certainty { Yes, No, Undetermined };

inline const char* to_string(Certainty c) {
  switch (c) {
    case Certainty::Yes: return "certain-yes";
    case Certainty::No: return "certain-no";
    default: return "undetermined";
  }
}

struct SearchOptions {
  std::uint64_t seed = 12345;
  int random_trials = 64;
  std::uint64_t exhaustive_limit = 1u << 14;  // coefficient vectors tried exhaustively over F_p
};

// Right inverse of a surjective matrix: a * s = identity.
template <class F>
Matrix<F> right_inverse(const Matrix<F>& a) {
  RowMatrix<F> r = a;
  auto piv = rref_inplace(r);
  if (static_cast<int>(piv.size()) != a.rows()) throw std::domain_error("matrix is not surjective");
  Matrix<F> sub(a.rows(), a.rows());
  for (int i = 0; i < a.rows(); ++i) sub.col(i) = a.col(piv[i]);
  Matrix<F> inv = inverse<F>(sub);
  Matrix<F> s = Matrix<F>::Zero(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i) s.row(piv[i]) = inv.row(i);
  return s;
}

// Basis of Hom(M, N).  A map is fixed by the images of the top generators
// of M; those images must kill Ω¹(M) inside the projective cover.
template <class F>
std::vector<ModuleMap<F>> hom_space(const Representation<F>& m, const Representation<F>& n) {
  const auto& alg = m.algebra();
  const int nv = m.num_vertices();
  if (m.is_zero() || n.is_zero()) return {};
  Cover<F> cov = projective_cover(m);
  auto ker = kernel(cov.projective, cov.map);
  const int g = static_cast<int>(cov.types.size());
  std::vector<int> uoff(g + 1, 0);
  for (int i = 0; i < g; ++i) uoff[i + 1] = uoff[i] + n.dim(cov.types[i]);
  const int nunk = uoff[g];
  if (nunk == 0) return {};

  // columns of P_w: (generator i, basis path b) with the action of b on N
  struct Col {
    int gen;
    Matrix<F> act;
  };
  std::vector<std::vector<Col>> cols(nv);
  for (int i = 0; i < g; ++i)
    for (int w = 0; w < nv; ++w)
      for (int b : alg.projective_block(cov.types[i], w)) cols[w].push_back({i, n.path_action(alg.basis_path(b))});

  int neq = 0;
  for (int w = 0; w < nv; ++w) neq += ker[w].dim() * n.dim(w);
  Matrix<F> sys = Matrix<F>::Zero(neq, nunk);
  int row = 0;
  for (int w = 0; w < nv; ++w)
    for (int k = 0; k < ker[w].dim(); ++k) {
      for (int c = 0; c < static_cast<int>(cols[w].size()); ++c) {
        F coef = ker[w].rows()(k, c);
        if (is_zero(coef)) continue;
        const Col& col = cols[w][c];
        sys.block(row, uoff[col.gen], n.dim(w), col.act.cols()) += coef * col.act;
      }
      row += n.dim(w);
    }
  Matrix<F> ns = nullspace<F>(sys);

  std::vector<Matrix<F>> section(nv);
  for (int w = 0; w < nv; ++w)
    if (m.dim(w)) section[w] = right_inverse<F>(cov.map.comps[w]);
  std::vector<ModuleMap<F>> out;
  for (int s = 0; s < ns.cols(); ++s) {
    ModuleMap<F> f;
    for (int w = 0; w < nv; ++w) {
      Matrix<F> gw = Matrix<F>::Zero(n.dim(w), cov.projective.dim(w));
      for (int c = 0; c < static_cast<int>(cols[w].size()); ++c) {
        const Col& col = cols[w][c];
        gw.col(c) = col.act * ns.col(s).segment(uoff[col.gen], col.act.cols());
      }
      f.comps.push_back(m.dim(w) ? Matrix<F>(gw * section[w]) : Matrix<F>::Zero(n.dim(w), 0));
    }
    out.push_back(std::move(f));
  }
  return out;
}

namespace detail {

// Invertibility with a modular shortcut for rationals (entry growth).
inline bool invertible_fast(const Matrix<Zp>& a) { return is_invertible<Zp>(a); }

inline bool invertible_fast(const Matrix<Rational>& a) {
  if (a.rows() != a.cols()) return false;
  constexpr std::uint64_t P = 2147483647ULL;
  const int n = static_cast<int>(a.rows());
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
  auto modinv = [](std::uint64_t x) {
    std::uint64_t r = 1, e = P - 2;
    while (e) {
      if (e & 1) r = r * x % P;
      x = x * x % P;
      e >>= 1;
    }
    return r;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long num = a(i, j).num() % static_cast<long long>(P);
      if (num < 0) num += P;
      std::uint64_t den = static_cast<std::uint64_t>(a(i, j).den()) % P;
      if (den == 0) return is_invertible<Rational>(a);
      m[i][j] = static_cast<std::uint64_t>(num) * modinv(den) % P;
    }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (m[r][c]) {
        p = r;
        break;
      }
    if (p < 0) return is_invertible<Rational>(a);  // singular mod P; decide exactly
    std::swap(m[p], m[c]);
    std::uint64_t inv = modinv(m[c][c]);
    for (int r = c + 1; r < n; ++r) {
      if (!m[r][c]) continue;
      std::uint64_t f = m[r][c] * inv % P;
      for (int j = c; j < n; ++j) m[r][j] = (m[r][j] + (P - f) * m[c][j]) % P;
    }
  }
  return true;
}

template <class F>
bool map_invertible(const ModuleMap<F>& f) {
  for (auto& c : f.comps)
    if (c.size() && !invertible_fast(c)) return false;
  return true;
}

template <class F>
ModuleMap<F> combine(const std::vector<ModuleMap<F>>& basis, const std::vector<F>& coef) {
  ModuleMap<F> f = basis.front();
  for (auto& c : f.comps) c.setZero();
  for (size_t i = 0; i < basis.size(); ++i) {
    if (is_zero(coef[i])) continue;
    for (size_t v = 0; v < f.comps.size(); ++v) f.comps[v] += coef[i] * basis[i].comps[v];
  }
  return f;
}

// Calls visit(coefficients) on candidate combinations; stops when it returns
// true.  Returns {found, exhausted-the-space}.
template <class F, class Visit>
std::pair<bool, bool> search_combinations(int k, const SearchOptions& opt, Visit visit) {
  if constexpr (field_traits<F>::finite) {
    const std::uint64_t q = field_traits<F>::order();
    std::uint64_t total = 1;
    bool small = true;
    for (int i = 0; i < k; ++i) {
      if (total > opt.exhaustive_limit / q) {
        small = false;
        break;
      }
      total *= q;
    }
    if (small) {
      std::vector<F> c(k);
      for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t x = idx;
        for (int i = 0; i < k; ++i) {
          c[i] = F(static_cast<long long>(x % q));
          x /= q;
        }
        if (visit(c)) return {true, true};
      }
      return {false, true};
    }
  }
  std::mt19937_64 rng(opt.seed);
  std::vector<F> c(k);
  for (int t = 0; t < opt.random_trials; ++t) {
    for (auto& x : c) x = field_traits<F>::random(rng);
    if (visit(c)) return {true, false};
  }
  return {false, false};
}

template <class F>
bool same_invariants(const Representation<F>& m, const Representation<F>& n) {
  if (m.dims() != n.dims()) return false;
  auto lm = module_layers(m), ln = module_layers(n);
  return lm.layers == ln.layers && lm.socle == ln.socle;
}

}  // namespace detail

template <class F>
struct IsoResult {
  Certainty verdict = Certainty::Undetermined;
  std::string reason;
  std::optional<ModuleMap<F>> iso;
};

template <class F>
IsoResult<F> isomorphism(const Representation<F>& m, const Representation<F>& n, const SearchOptions& opt = {}) {
  IsoResult<F> r;
  if (m.dims() != n.dims()) {
    r.verdict = Certainty::No;
    r.reason = "dimension vectors differ";
    return r;
  }
  if (!detail::same_invariants(m, n)) {
    r.verdict = Certainty::No;
    r.reason = "radical layers or socles differ";
    return r;
  }
  if (m.is_zero()) {
    r.verdict = Certainty::Yes;
    r.reason = "both zero";
    return r;
  }
  auto hom = hom_space(m, n);
  const size_t end_m = hom_space(m, m).size();
  if (hom.size() != end_m || hom_space(n, m).size() != end_m) {
    r.verdict = Certainty::No;
    r.reason = "Hom dimensions differ";
    return r;
  }
  auto [found, exhausted] = detail::search_combinations<F>(static_cast<int>(hom.size()), opt, [&](const std::vector<F>& c) {
    auto f = detail::combine(hom, c);
    if (!detail::map_invertible(f)) return false;
    r.iso = std::move(f);
    return true;
  });
  if (found) {
    r.verdict = Certainty::Yes;
    r.reason = "invertible homomorphism found";
  } else if (exhausted) {
    r.verdict = Certainty::No;
    r.reason = "no homomorphism is invertible (exhaustive)";
  } else {
    r.reason = "no invertible homomorphism among random trials";
  }
  return r;
}

template <class F>
Certainty is_isomorphic(const Representation<F>& m, const Representation<F>& n, const SearchOptions& opt = {}) {
  return isomorphism(m, n, opt).verdict;
}

// X is isomorphic to a direct summand of Y: some g∘f with f: X→Y, g: Y→X
// is invertible.
template <class F>
Certainty is_direct_summand(const Representation<F>& x, const Representation<F>& y, const SearchOptions& opt = {}) {
  if (x.is_zero()) return Certainty::Yes;
  for (int v = 0; v < x.num_vertices(); ++v)
    if (x.dim(v) > y.dim(v)) return Certainty::No;
  auto tx = top_vector(x), ty = top_vector(y);
  auto sx = module_layers(x).socle, sy = module_layers(y).socle;
  for (int v = 0; v < x.num_vertices(); ++v)
    if (tx[v] > ty[v] || sx[v] > sy[v]) return Certainty::No;
  auto fs = hom_space(x, y);
  auto gs = hom_space(y, x);
  if (fs.empty() || gs.empty()) return Certainty::No;
  std::mt19937_64 rng(opt.seed);
  for (int t = 0; t < opt.random_trials; ++t) {
    std::vector<F> a(fs.size()), b(gs.size());
    for (auto& c : a) c = field_traits<F>::random(rng);
    for (auto& c : b) c = field_traits<F>::random(rng);
    auto f = detail::combine(fs, a), g = detail::combine(gs, b);
    if (detail::map_invertible(compose_maps(g, f))) return Certainty::Yes;
  }
  return Certainty::Undetermined;
}

// Fitting decomposition for an endomorphism: M = ker f^n ⊕ im f^n.
template <class F>
std::pair<SubspaceFamily<F>, SubspaceFamily<F>> fitting_split(const Representation<F>& m, const ModuleMap<F>& f) {
  ModuleMap<F> p = f;
  for (int i = 1; i < m.total_dim(); i *= 2) p = compose_maps(p, p);
  return {kernel(m, p), image(m, p)};
}

template <class F>
struct EndAnalysis {
  Certainty indecomposable = Certainty::Undetermined;
  int end_dim = 0;
  std::string reason;
  std::optional<std::pair<SubspaceFamily<F>, SubspaceFamily<F>>> split;  // witness when decomposable
};

// End(M) is local iff M is indecomposable.  Every element of a local ring is
// a unit or nilpotent; any other element yields a Fitting splitting.
template <class F>
EndAnalysis<F> analyze_endomorphisms(const Representation<F>& m, const SearchOptions& opt = {}) {
  EndAnalysis<F> r;
  if (m.is_zero()) {
    r.indecomposable = Certainty::No;
    r.reason = "zero module";
    return r;
  }
  auto ends = hom_space(m, m);
  r.end_dim = static_cast<int>(ends.size());
  if (r.end_dim == 1) {
    r.indecomposable = Certainty::Yes;
    r.reason = "End is the field";
    return r;
  }
  auto [found, exhausted] = detail::search_combinations<F>(r.end_dim, opt, [&](const std::vector<F>& c) {
    auto f = detail::combine(ends, c);
    auto [k, i] = fitting_split(m, f);
    if (family_dim(k) > 0 && family_dim(i) > 0) {
      r.split = std::make_pair(k, i);
      return true;
    }
    return false;
  });
  if (found) {
    r.indecomposable = Certainty::No;
    r.reason = "Fitting decomposition from an endomorphism";
  } else if (exhausted) {
    r.indecomposable = Certainty::Yes;
    r.reason = "every endomorphism is a unit or nilpotent (exhaustive)";
  } else if constexpr (!field_traits<F>::finite) {
    // over Q: the radical of End is the kernel of the trace form
    r.reason = "no splitting endomorphism found";
    const int k = r.end_dim;
    // structure: express products in the basis via their stacked entries
    const int nv = m.num_vertices();
    int len = 0;
    for (int v = 0; v < nv; ++v) len += m.dim(v) * m.dim(v);
    Matrix<F> basis_mat(len, k);
    auto flatten = [&](const ModuleMap<F>& f) {
      Vector<F> x(len);
      int o = 0;
      for (int v = 0; v < nv; ++v)
        for (int i = 0; i < m.dim(v); ++i)
          for (int j = 0; j < m.dim(v); ++j) x(o++) = f.comps[v](i, j);
      return x;
    };
    for (int i = 0; i < k; ++i) basis_mat.col(i) = flatten(ends[i]);
    // left-regular matrices L_i
    std::vector<Matrix<F>> lreg(k, Matrix<F>(k, k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        auto c = solve<F>(basis_mat, flatten(compose_maps(ends[i], ends[j])));
        lreg[i].col(j) = *c;
      }
    Matrix<F> form(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) form(i, j) = (lreg[i] * lreg[j]).trace();
    int rad = static_cast<int>(nullspace<F>(form).cols());
    if (k - rad == 1) {
      r.indecomposable = Certainty::Yes;
      r.reason = "End modulo its radical is the field";
    }
  }
  return r;
}

template <class F>
Certainty is_indecomposable(const Representation<F>& m, const SearchOptions& opt = {}) {
  return analyze_endomorphisms(m, opt).indecomposable;
}

}  // namespace qstack
