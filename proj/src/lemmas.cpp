#include "qstack/lemmas.hpp"

#include "qstack/pdim.hpp"
#include "qstack/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace qstack {

namespace {

using names::a;
using names::b;
using names::bp;

struct Sample {
  std::vector<int> types;
  bool loewy2 = false;
  std::vector<std::pair<int, Vector<Zp>>> gens;
};

struct Outcome {
  bool applicable = false, violated = false, undecided = false;
  std::string detail;
};

// Everything a property needs about one sampled module, computed on demand.
class Probe {
 public:
  Probe(const PdimEngine<Zp>& eng, const Sample& s) : eng_(eng) {
    const auto& alg = eng.algebra();
    auto p = projective_module(alg, s.types);
    auto v = generated_submodule(p, s.gens);
    if (s.loewy2) v = family_sum(v, radical_of(p, radical(p)));
    n_ = quotient(p, v).module;
  }
  const Representation<Zp>& module() const { return n_; }
  const PdimResult& pdim() {
    if (!pd_) pd_ = eng_.pdim(n_);
    return *pd_;
  }
  const Representation<Zp>& omega() {
    if (!om_) om_ = syzygy(n_, 1);
    return *om_;
  }
  const std::vector<int>& top() {
    if (top_.empty()) top_ = top_vector(n_);
    return top_;
  }
  int loewy_length() { return static_cast<int>(radical_series(n_).size()) - 1; }
  const std::vector<Representation<Zp>>& summands(bool* certain) {
    if (!parts_) parts_ = split_indecomposables(n_, SearchOptions{}, &certain_);
    *certain = certain_;
    return *parts_;
  }

 private:
  const PdimEngine<Zp>& eng_;
  Representation<Zp> n_;
  std::optional<PdimResult> pd_;
  std::optional<Representation<Zp>> om_;
  std::vector<int> top_;
  std::optional<std::vector<Representation<Zp>>> parts_;
  bool certain_ = true;
};

struct LevelContext {
  StepFunction f;
  int level = 0;
  AlgebraPtr<Zp> alg;
  std::vector<int> upper;  // vertices added at this level
  int va = -1, vb = -1, vbp = -1, va_below = -1;
  int alpha0 = -1;
  bool primed() const { return vbp >= 0; }
};

bool touches(const Representation<Zp>& m, const std::vector<int>& vs) {
  for (int v : vs)
    if (v >= 0 && m.dim(v) > 0) return true;
  return false;
}

Outcome check_property(const std::string& prop, const LevelContext& c, Probe& pr) {
  Outcome o;
  const auto& n = pr.module();
  if (prop == "loewy2-infinite") {
    if (n.dim(c.va) != 0 || !touches(n, {c.vb, c.vbp}) || pr.loewy_length() > 2) return o;
    o.applicable = true;
    const auto& pd = pr.pdim();
    if (pd.is_finite()) {
      o.violated = true;
      o.detail = "pdim " + pd.str();
    } else if (!pd.is_infinite()) {
      o.undecided = true;
    }
    return o;
  }
  if (!pr.pdim().is_finite()) return o;
  if (prop == "syzygy-below") {
    o.applicable = true;
    const auto& om = pr.omega();
    for (int v : c.upper)
      if (om.dim(v) > 0) {
        o.violated = true;
        o.detail = "Ω¹ has dimension " + std::to_string(om.dim(v)) + " at " + c.alg->quiver().vertex(v);
      }
    return o;
  }
  if (prop == "killed-top") {
    // a top element of type a_L killed by alpha_L_0 exists iff the kernel of
    // that arrow at a_L is not inside the radical
    auto ker = Subspace<Zp>::from_columns(nullspace<Zp>(n.map(c.alpha0)));
    if (radical(n)[c.va].contains(ker)) return o;
    o.applicable = true;
    const auto& top = pr.top();
    if (top[c.vb] < c.f.m) o.violated = true, o.detail = "b multiplicity " + std::to_string(top[c.vb]);
    if (c.primed() && top[c.vbp] < c.f.n)
      o.violated = true, o.detail += " b' multiplicity " + std::to_string(top[c.vbp]);
    return o;
  }
  // properties of the indecomposable summands
  const bool hits = prop == "syzygy-hits-a";
  std::vector<int> trigger{c.va, c.vb};
  if (hits) trigger.push_back(c.vbp);
  if (!touches(n, trigger)) return o;
  bool certain = true;
  const auto& parts = pr.summands(&certain);
  for (size_t i = 0; i < parts.size(); ++i) {
    const auto& x = parts[i];
    if (!touches(x, trigger) || is_projective(x)) continue;
    o.applicable = true;
    bool bad = false;
    std::string why;
    if (hits) {
      if (syzygy(x, 1).dim(c.va_below) == 0) bad = true, why = "Ω¹ vanishes at a_(L-1)";
    } else {
      int mult = top_vector(x)[c.vb];
      if (mult < c.f.m) bad = true, why = "b multiplicity " + std::to_string(mult);
    }
    if (bad) {
      (certain ? o.violated : o.undecided) = true;
      o.detail = "summand " + std::to_string(i) + ": " + why;
    }
  }
  return o;
}

Vector<Zp> random_radical_vector(const SubspaceFamily<Zp>& jp, int v, std::mt19937_64& rng) {
  Vector<Zp> x = Vector<Zp>::Zero(jp[v].ambient());
  for (int i = 0; i < jp[v].dim(); ++i) x += field_traits<Zp>::random(rng) * jp[v].rows().row(i).transpose();
  return x;
}

// Minimal generators of V, as (vertex, vector) pairs.
std::vector<std::pair<int, Vector<Zp>>> minimal_generators(const Representation<Zp>& p, const SubspaceFamily<Zp>& v) {
  std::vector<std::pair<int, Vector<Zp>>> out;
  auto jv = radical_of(p, v);
  for (int w = 0; w < p.num_vertices(); ++w) {
    Subspace<Zp> span = jv[w];
    for (int i = 0; i < v[w].dim(); ++i) {
      Vector<Zp> x = v[w].rows().row(i).transpose();
      if (span.contains(x)) continue;
      out.push_back({w, x});
      RowMatrix<Zp> rows(span.dim() + 1, span.ambient());
      rows.topRows(span.dim()) = span.rows();
      rows.row(span.dim()) = x.transpose();
      span = Subspace<Zp>::from_rows(rows);
    }
  }
  return out;
}

bool nonzero(const Vector<Zp>& x) {
  for (int i = 0; i < x.size(); ++i)
    if (!x(i).is_zero()) return true;
  return false;
}

// A few path-basis coordinates of JP_v with random nonzero coefficients:
// binomial relations like alpha*x0 - beta*x1 show up far more often than
// with dense vectors.
Vector<Zp> sparse_radical_vector(const Algebra<Zp>& alg, const std::vector<int>& types, int v, std::mt19937_64& rng) {
  std::vector<int> coords;
  int off = 0;
  for (int e : types) {
    const auto& blk = alg.projective_block(e, v);
    for (size_t j = 0; j < blk.size(); ++j)
      if (alg.degree(blk[j]) > 0) coords.push_back(off + static_cast<int>(j));
    off += static_cast<int>(blk.size());
  }
  Vector<Zp> x = Vector<Zp>::Zero(off);
  if (coords.empty()) return x;
  int k = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < k; ++i) {
    Zp c;
    do c = field_traits<Zp>::random(rng);
    while (c.is_zero());
    x(coords[rng() % coords.size()]) += c;
  }
  return x;
}

void add_random_relations(const LevelContext& c, Sample& s, int k, bool sparse, std::mt19937_64& rng) {
  auto p = projective_module(c.alg, s.types);
  auto jp = radical(p);
  std::vector<int> live;
  for (int v = 0; v < p.num_vertices(); ++v)
    if (jp[v].dim() > 0) live.push_back(v);
  if (live.empty()) return;
  for (int i = 0; i < k; ++i) {
    int v = live[rng() % live.size()];
    auto x = sparse ? sparse_radical_vector(*c.alg, s.types, v, rng) : random_radical_vector(jp, v, rng);
    if (nonzero(x)) s.gens.push_back({v, x});
  }
}

// The witness presentation of this level, perturbed: relations dropped,
// random sparse relations and extra tops added.
Sample perturbed_witness(const LevelContext& c, const Sample& base, std::mt19937_64& rng, int max_tops) {
  Sample s = base;
  int drop = static_cast<int>(rng() % 3);
  for (int i = 0; i < drop && !s.gens.empty(); ++i) s.gens.erase(s.gens.begin() + static_cast<long>(rng() % s.gens.size()));
  const int nv = c.alg->quiver().num_vertices();
  int extra = rng() % 3 == 0 ? 1 + static_cast<int>(rng() % 2) : 0;
  for (int i = 0; i < extra && static_cast<int>(s.types.size()) < max_tops + 1; ++i) {
    int v = rng() % 2 ? c.upper[rng() % c.upper.size()] : static_cast<int>(rng() % nv);
    s.types.push_back(v);
    // appended blocks come last at every vertex: pad the old relations
    for (auto& [w, x] : s.gens) {
      Vector<Zp> y = Vector<Zp>::Zero(x.size() + c.alg->projective_dim(v, w));
      y.head(x.size()) = x;
      x = y;
    }
  }
  add_random_relations(c, s, static_cast<int>(rng() % 3), true, rng);
  return s;
}

Sample random_sample(const LevelContext& c, const Sample& witness, std::mt19937_64& rng, int max_tops) {
  const int mode = static_cast<int>(rng() % 3);
  if (mode == 2) return perturbed_witness(c, witness, rng, max_tops);
  const int nv = c.alg->quiver().num_vertices();
  Sample s;
  const bool aim_infinite = rng() % 4 == 0;  // feed the Loewy-2 property
  for (int v = 0; v < nv; ++v) {
    bool fresh = std::find(c.upper.begin(), c.upper.end(), v) != c.upper.end();
    int mult = fresh ? static_cast<int>(rng() % 3) : (rng() % 4 == 0 ? 1 + static_cast<int>(rng() % 2) : 0);
    if (aim_infinite && v == c.va) mult = 0;
    if (aim_infinite && v == c.vb) mult = std::max(mult, 1);
    for (int k = 0; k < mult; ++k) s.types.push_back(v);
  }
  std::shuffle(s.types.begin(), s.types.end(), rng);
  if (static_cast<int>(s.types.size()) > max_tops) {
    // keep b_L when it was forced
    std::stable_partition(s.types.begin(), s.types.end(), [&](int v) { return aim_infinite && v == c.vb; });
    s.types.resize(max_tops);
  }
  if (s.types.empty()) s.types.push_back(c.upper[rng() % c.upper.size()]);
  std::sort(s.types.begin(), s.types.end());
  s.loewy2 = aim_infinite || rng() % 2 == 0;
  add_random_relations(c, s, static_cast<int>(rng() % 4) + (s.loewy2 ? 0 : 1), mode == 1, rng);
  return s;
}

// Greedy: drop the J²P part and single generators while the property
// still fails.
Sample minimize(const std::string& prop, const LevelContext& c, const PdimEngine<Zp>& eng, Sample s) {
  auto fails = [&](const Sample& t) {
    Probe pr(eng, t);
    return check_property(prop, c, pr).violated;
  };
  if (s.loewy2) {
    Sample t = s;
    t.loewy2 = false;
    if (fails(t)) s = t;
  }
  for (size_t i = 0; i < s.gens.size();) {
    Sample t = s;
    t.gens.erase(t.gens.begin() + static_cast<long>(i));
    if (fails(t))
      s = t;
    else
      ++i;
  }
  // then tops that no relation mentions
  for (int k = static_cast<int>(s.types.size()) - 1; k >= 0 && s.types.size() > 1; --k) {
    Sample t;
    t.loewy2 = s.loewy2;
    t.types = s.types;
    t.types.erase(t.types.begin() + k);
    bool used = false;
    for (auto& [w, x] : s.gens) {
      int off = 0;
      for (int j = 0; j < k; ++j) off += c.alg->projective_dim(s.types[j], w);
      int len = c.alg->projective_dim(s.types[k], w);
      if (nonzero(Vector<Zp>(x.segment(off, len)))) used = true;
      Vector<Zp> y(x.size() - len);
      y << x.head(off), x.tail(x.size() - off - len);
      t.gens.push_back({w, y});
    }
    if (!used && fails(t)) s = t;
  }
  return s;
}

std::string describe(const LevelContext& c, const Sample& s, const std::string& prop, const std::string& detail) {
  const Quiver& q = c.alg->quiver();
  std::ostringstream os;
  os << "counterexample: " << prop << " at level " << c.level << " of f = " << c.f.str() << " over "
     << field_traits<Zp>::name() << "\n  (" << detail << ")\n  tops:";
  for (size_t k = 0; k < s.types.size(); ++k) os << " x" << k << ":" << q.vertex(s.types[k]);
  os << "\n  relations" << (s.loewy2 ? " (besides J^2 of the cover)" : "") << ":\n";
  for (auto& [v, x] : s.gens) {
    os << "    ";
    int off = 0;
    bool first = true;
    for (size_t k = 0; k < s.types.size(); ++k) {
      const auto& blk = c.alg->projective_block(s.types[k], v);
      for (size_t j = 0; j < blk.size(); ++j) {
        const Zp& co = x(off + static_cast<int>(j));
        if (co.is_zero()) continue;
        os << (first ? "" : " + ") << co << "*" << format_path(q, c.alg->basis_path(blk[j])) << "*x" << k;
        first = false;
      }
      off += static_cast<int>(blk.size());
    }
    os << "\n";
  }
  return os.str();
}

LevelContext make_context(const StepFunction& f, const FamilyBundle<Zp>& fam, int level) {
  LevelContext c;
  c.f = f;
  c.level = level;
  c.alg = fam.algebra(level);
  const Quiver& q = c.alg->quiver();
  for (int v : fam.standard[level].upper) c.upper.push_back(v);
  c.va = q.vertex_index(a(level));
  c.vb = q.vertex_index(b(level));
  c.va_below = q.vertex_index(a(level - 1));
  c.alpha0 = q.arrow_index(names::alpha(level, 0));
  if (f.two_jumps() && level > f.s) c.vbp = q.vertex_index(bp(level - f.s));
  return c;
}

}  // namespace

std::vector<std::pair<std::string, int>> lemma_levels(const StepFunction& f) {
  std::vector<std::pair<std::string, int>> out;
  const int d = f.d();
  if (!f.two_jumps()) {
    for (int l = 1; l <= d; ++l)
      for (auto p : {"syzygy-below", "killed-top", "loewy2-infinite", "uniserial-x"}) out.push_back({p, l});
    for (int l = 2; l <= d; ++l)
      for (auto p : {"syzygy-hits-a", "top-multiplicity"}) out.push_back({p, l});
  } else {
    // the second jump: statements hold from level s+1 on; the primed top
    // multiplicity (b'^n) needs level s+2
    for (int l = f.s + 1; l <= d; ++l)
      for (auto p : {"syzygy-below", "killed-top", "loewy2-infinite", "syzygy-hits-a", "top-multiplicity"})
        out.push_back({p, l});
  }
  return out;
}

std::uint64_t LemmaSuiteReport::failures() const {
  std::uint64_t n = 0;
  for (auto& c : counts) n += c.failed;
  return n;
}

std::uint64_t LemmaSuiteReport::undecided() const {
  std::uint64_t n = 0;
  for (auto& c : counts) n += c.undecided;
  return n;
}

bool LemmaSuiteReport::enough_samples() const {
  for (auto f : finite)
    if (static_cast<int>(f) < target) return false;
  return true;
}

std::string LemmaSuiteReport::summary() const {
  std::ostringstream os;
  os << "f = " << family;
  for (size_t i = 0; i < levels.size(); ++i)
    os << "; level " << levels[i] << ": " << sampled[i] << " sampled, " << finite[i] << " finite, " << infinite[i]
       << " infinite, " << unresolved[i] << " unresolved";
  os << "\n";
  for (auto& c : counts) {
    os << "  " << c.property << " @" << c.level << ": " << c.applicable << " applicable, " << c.failed << " failed, "
       << c.undecided << " undecided";
    if (c.failed) os << " (failing modules have pdim <= " << c.max_failed_pdim << ")";
    os << "\n";
  }
  return os.str();
}

LemmaSuiteReport run_lemma_suite(const StepFunction& f, const LemmaOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  ScopedModulus mod(opt.prime);
  auto fam = generate_family<Zp>(f);
  LemmaSuiteReport rep;
  rep.family = f.str();
  rep.target = opt.finite_per_level;
  auto plan = lemma_levels(f);
  std::map<int, std::vector<std::string>> by_level;
  for (auto& [p, l] : plan) {
    by_level[l].push_back(p);
    rep.counts.push_back({p, l});
  }
  auto count_of = [&](const std::string& p, int l) -> LemmaCount& {
    for (auto& c : rep.counts)
      if (c.property == p && c.level == l) return c;
    throw std::logic_error("unplanned property");
  };

  for (auto& [level, props] : by_level) {
    auto c = make_context(f, fam, level);
    PdimEngine<Zp> eng(c.alg, standard_layers(f, level));
    std::mt19937_64 rng(opt.seed + 1000003ULL * static_cast<std::uint64_t>(level));
    std::uint64_t sampled = 0, fin = 0, inf = 0, unres = 0;

    if (std::find(props.begin(), props.end(), "uniserial-x") != props.end()) {
      auto& cnt = count_of("uniserial-x", level);
      auto x = build_graph_module(c.alg, uniserial_x(level - 1)).module;
      auto s = simple_module(c.alg, c.alg->quiver().vertex_index(b(-1)));
      ++cnt.tested, ++cnt.applicable;
      auto iso = is_isomorphic(syzygy(x, level), s);
      if (iso == Certainty::No) {
        ++cnt.failed;
        rep.reproducers.push_back("counterexample: uniserial-x at level " + std::to_string(level) + "\n");
      } else if (iso != Certainty::Yes) {
        ++cnt.undecided;
      }
    }

    Sample witness;
    {
      auto w = fam.witness(level);
      witness.types = w.top_types;
      witness.gens = minimal_generators(w.cover, w.relations);
    }
    while (static_cast<int>(fin) < opt.finite_per_level && static_cast<int>(sampled) < opt.max_samples_per_level) {
      Sample s = random_sample(c, witness, rng, opt.max_tops);
      ++sampled;
      Probe pr(eng, s);
      const auto& pd = pr.pdim();
      if (pd.is_finite())
        ++fin;
      else if (pd.is_infinite())
        ++inf;
      else
        ++unres;
      for (auto& p : props) {
        if (p == "uniserial-x") continue;
        auto& cnt = count_of(p, level);
        ++cnt.tested;
        auto o = check_property(p, c, pr);
        if (!o.applicable) continue;
        ++cnt.applicable;
        if (o.undecided) ++cnt.undecided;
        if (o.violated) {
          ++cnt.failed;
          auto small = minimize(p, c, eng, s);
          Probe again(eng, small);
          auto detail = check_property(p, c, again).detail + "; pdim " + again.pdim().str();
          if (pr.pdim().is_finite()) cnt.max_failed_pdim = std::max(cnt.max_failed_pdim, pr.pdim().value);
          if (static_cast<int>(cnt.failed) <= opt.reproducers_per_property)
            rep.reproducers.push_back(describe(c, small, p, detail));
        }
      }
    }
    rep.levels.push_back(level);
    rep.sampled.push_back(sampled);
    rep.finite.push_back(fin);
    rep.infinite.push_back(inf);
    rep.unresolved.push_back(unres);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace qstack
