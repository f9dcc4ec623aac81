#include "qstack/acceptance.hpp"

#include "qstack/catalog.hpp"
#include "qstack/family.hpp"
#include "qstack/lemmas.hpp"
#include "qstack/oracle.hpp"
#include "qstack/verify.hpp"

#include <chrono>
#include <iomanip>
#include <set>
#include <sstream>

namespace qstack {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

template <class... T>
std::string cat(const T&... xs) {
  std::ostringstream os;
  (os << ... << xs);
  return os.str();
}

// Collects item checks; the criterion passes when none failed.
struct Tally {
  CriterionResult& r;
  int checks = 0, failed = 0;
  bool expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failed;
      r.log.push_back("FAIL " + what);
    }
    return ok;
  }
  void note(const std::string& s) { r.log.push_back(s); }
};

template <class F>
StackingPartition split_at(const AlgebraPtr<F>& alg, const std::vector<std::string>& lower) {
  std::vector<std::string> upper;
  for (auto& v : alg->quiver().vertices())
    if (std::find(lower.begin(), lower.end(), v) == lower.end()) upper.push_back(v);
  return partition_from_ids(alg->quiver(), lower, upper);
}

// First j < k with Ω^j ≅ Ω^k certified, both nonzero.
template <class F>
std::optional<std::pair<int, int>> syzygy_cycle(const Representation<F>& m, int depth) {
  std::vector<Representation<F>> om{m};
  for (int k = 1; k <= depth; ++k) {
    om.push_back(syzygy(om.back(), 1));
    if (om.back().is_zero()) return std::nullopt;
    for (int j = 0; j < k; ++j)
      if (is_isomorphic(om[j], om[k]) == Certainty::Yes) return std::pair{j, k};
  }
  return std::nullopt;
}

// --- 1 ---------------------------------------------------------------------

void monomial_invariants(CriterionResult& r, const AcceptanceOptions&) {
  Tally t{r};
  for (auto [rr, m] : {std::pair{2, 2}, {3, 2}, {4, 3}}) {
    auto t0 = Clock::now();
    auto alg = generate_family<Rational>(StepFunction::make(rr, m, 0)).algebra(0);
    const Quiver& q = alg->quiver();
    std::string tag = cat("(r,m)=(", rr, ",", m, ") ");
    AnnihilatorGraph<Rational> g(alg);
    auto rep = critical_report(g);
    auto [lo, hi] = findim_interval(rep);
    t.expect(rep.s == rr - 2, tag + cat("s = ", rep.s));
    t.expect(lo == rr - 1 && hi == rr, tag + cat("interval [", lo, ",", hi, "]"));
    PdimEngine<Rational> eng(alg);
    auto sa = eng.pdim(simple_module(alg, q.vertex_index("a0")));
    t.expect(sa == PdimResult::finite(rr), tag + "pdim S(a0) = " + sa.str());
    auto gp = parse_path(q, "gamma1");
    auto viaGraph = g.pdim(gp);
    auto viaChain = eng.generic(path_ideal(alg, gp));
    t.expect(viaGraph == PdimResult::finite(rr - 2) && viaChain == viaGraph,
             tag + "pdim Λγ1 = " + viaGraph.str() + " / " + viaChain.str());
    auto sb = simple_module(alg, q.vertex_index("b-1"));
    auto cyc = syzygy_cycle(sb, 4);
    t.expect(eng.pdim(sb).is_infinite() && cyc.has_value(), tag + "pdim S(b-1) infinite by a syzygy cycle");
    double sec = since(t0);
    t.expect(sec < 1.0, tag + cat("runtime ", sec, " s"));
    t.note(tag + cat("s=", rep.s, " interval=[", lo, ",", hi, "] S(a0):", sa.str(), " gamma1:", viaGraph.str(),
                     " S(b-1): Ω^", cyc ? cyc->first : -1, " ≅ Ω^", cyc ? cyc->second : -1, " (", sec, " s)"));
  }
  r.pass = t.failed == 0;
  r.detail = cat(t.checks - t.failed, "/", t.checks, " checks over three base algebras");
}

// --- 2 ---------------------------------------------------------------------

std::string family_key(int e, const SubspaceFamily<Zp>& f) {
  std::ostringstream os;
  os << e;
  for (auto& s : f) {
    os << '|';
    for (int i = 0; i < s.rows().rows(); ++i)
      for (int j = 0; j < s.rows().cols(); ++j) os << s.rows()(i, j);
  }
  return os.str();
}

// Submodules of indecomposable projectives: generated by every nonzero
// vector of a small vertex space (unit vectors only when large), then by
// pairs of basis paths at different vertices.
std::vector<Representation<Zp>> projective_submodules(const AlgebraPtr<Zp>& alg, size_t limit) {
  std::vector<Representation<Zp>> out;
  std::set<std::string> seen;
  const int nv = alg->quiver().num_vertices();
  auto add = [&](int e, const Representation<Zp>& p, const std::vector<std::pair<int, Vector<Zp>>>& gens) {
    auto fam = generated_submodule(p, gens);
    if (family_dim(fam) == 0 || !seen.insert(family_key(e, fam)).second) return;
    out.push_back(submodule(p, fam).module);
  };
  for (int e = 0; e < nv && out.size() < limit; ++e) {
    auto p = projective_module(alg, e);
    for (int v = 0; v < nv && out.size() < limit; ++v) {
      int d = p.dim(v);
      if (d == 0) continue;
      if (d <= 4) {
        for (int mask = 1; mask < (1 << d) && out.size() < limit; ++mask) {
          Vector<Zp> x = Vector<Zp>::Zero(d);
          for (int i = 0; i < d; ++i)
            if (mask >> i & 1) x(i) = Zp(1);
          add(e, p, {{v, x}});
        }
      } else {
        for (int i = 0; i < d && out.size() < limit; ++i) {
          Vector<Zp> x = Vector<Zp>::Zero(d);
          x(i) = Zp(1);
          add(e, p, {{v, x}});
        }
      }
    }
    for (int v = 0; v < nv && out.size() < limit; ++v)
      for (int w = v + 1; w < nv && out.size() < limit; ++w)
        for (int i = 0; i < p.dim(v) && out.size() < limit; ++i)
          for (int j = 0; j < p.dim(w) && out.size() < limit; ++j) {
            Vector<Zp> x = Vector<Zp>::Zero(p.dim(v)), y = Vector<Zp>::Zero(p.dim(w));
            x(i) = Zp(1), y(j) = Zp(1);
            add(e, p, {{v, x}, {w, y}});
          }
  }
  return out;
}

void path_ideal_suite(CriterionResult& r, const AcceptanceOptions&) {
  Tally t{r};
  ScopedModulus mod(2);
  std::vector<std::pair<std::string, AlgebraPtr<Zp>>> algs;
  for (auto [rr, m] : {std::pair{2, 2}, {3, 2}})
    algs.push_back({cat("base(r=", rr, ",m=", m, ")"), generate_family<Zp>(StepFunction::make(rr, m, 0)).algebra(0)});
  for (auto [rr, m] : {std::pair{2, 2}, {3, 2}}) {
    auto delta = generate_family<Zp>(StepFunction::make(rr, m, 1)).top();
    auto up = corner_algebra(*delta, split_at(delta, {"b-1"}).upper);
    algs.push_back({cat("upper corner at b-1 (r=", rr, ",m=", m, ")"), up.algebra});
  }
  int total = 0, nontrivial = 0, pieces = 0;
  for (auto& [name, alg] : algs) {
    auto subs = projective_submodules(alg, 40);
    int here = 0;
    for (size_t i = 0; i < subs.size(); ++i) {
      auto c = path_ideal_check(subs[i], true);
      bool witnessed = std::all_of(c.summands.begin(), c.summands.end(), [](auto& s) { return s.witnessed; });
      std::string msg = c.report.failures.empty() ? std::string("missing witness") : c.report.failures.front();
      t.expect(c.report.ok() && witnessed, name + cat(" submodule #", i, ": ", msg));
      ++total, ++here;
      if (!c.summands.empty()) ++nontrivial;
      pieces += static_cast<int>(c.summands.size());
    }
    t.note(cat(name, ": ", here, " submodules"));
  }
  t.expect(total >= 50, cat(total, " submodules enumerated (need 50)"));
  r.pass = t.failed == 0;
  r.detail = cat(total, " submodules (", nontrivial, " non-projective), ", pieces, " path-ideal summands, ", t.failed,
                 " failures");
}

// --- 3 ---------------------------------------------------------------------

void small_stacks(CriterionResult& r, const AcceptanceOptions& opt) {
  Tally t{r};
  auto t0 = Clock::now();
  {
    ScopedModulus mod(2);
    auto alg = loop_sink_algebra<Zp>();
    auto part = split_at(alg, {"5"});
    t.expect(check_partition(*alg, part).empty(), "loop-sink partition valid");
    auto up = corner_algebra(*alg, part.upper);
    auto g2 = global_dimension(PdimEngine<Zp>(up.algebra));
    t.expect(g2 == 3, "loop-sink: gl dim of the upper corner = 3");
    EnumerationBudget b;
    b.threads = opt.threads;
    auto obs = observed_findim(PdimEngine<Zp>(alg), 1, b);
    t.expect(obs.exhaustive && obs.unresolved == 0 && obs.value == 0,
             cat("loop-sink: fin dim over ", obs.modules, " modules = ", obs.value));
    auto low = corner_algebra(*alg, part.lower);
    auto obsl = observed_findim(PdimEngine<Zp>(low.algebra), 2, b);
    t.expect(obsl.exhaustive && obsl.value == 0, "loop-sink: lower corner fin dim 0");
    t.note(cat("loop-sink: gl dim upper = ", g2 ? *g2 : -1, ", gl dim Λ ",
               global_dimension(PdimEngine<Zp>(alg)) ? "finite" : "infinite", ", fin dim = ", obs.value, " (", obs.modules,
               " modules, every module with top multiplicities <= 1 since J^2 = 0)"));
  }
  {
    auto alg = linear_a5_algebra<Rational>();
    auto part = split_at(alg, {"4", "5"});
    t.expect(check_partition(*alg, part).empty(), "A5 partition valid");
    auto lo = corner_algebra(*alg, part.lower), up = corner_algebra(*alg, part.upper);
    auto g1 = global_dimension(PdimEngine<Rational>(lo.algebra));
    auto g2 = global_dimension(PdimEngine<Rational>(up.algebra));
    auto g = global_dimension(PdimEngine<Rational>(alg));
    t.expect(g1 == 1 && g2 == 2 && g == 4, "A5: gl dims 1, 2, 4");
    if (g1 && g2 && g) {
      auto inv = stack_invariants(alg, part, {}, Interval{*g1, *g1}, Interval{*g2, *g2});
      t.expect(inv.bounds && inv.bounds->contains(*g) && inv.bounds->hi == *g, "A5: upper bound attained");
      t.note(cat("A5: t = ", inv.t ? *inv.t : -9, ", bounds ", inv.bounds ? inv.bounds->str() : "-", ", gl dim ", *g));
    }
  }
  double sec = since(t0);
  t.expect(sec < 5.0, cat("runtime ", sec, " s"));
  r.pass = t.failed == 0;
  r.detail = cat(t.checks - t.failed, "/", t.checks, " checks");
}

// --- 4 ---------------------------------------------------------------------

void witness_chains(CriterionResult& r, const AcceptanceOptions&) {
  Tally t{r};
  auto t0 = Clock::now();
  {
    auto f = StepFunction::make(2, 2, 2);
    auto fam = generate_family<Rational>(f);
    for (int l = 0; l <= 2; ++l) {
      auto alg = fam.algebra(l);
      auto n = fam.witness(l).module;
      PdimEngine<Rational> eng(alg, standard_layers(f, l));
      auto pd = eng.pdim(n);
      t.expect(pd == PdimResult::finite(2 + l), cat("one jump: pdim N", l, " = ", pd.str()));
      if (l == 0) continue;
      auto lifted = build_graph_module(alg, fam.witness_specs[l - 1]).module;
      t.expect(is_isomorphic(syzygy(n, 1), lifted) == Certainty::Yes, cat("one jump: Ω¹(N", l, ") ≅ N", l - 1));
      auto rep = verify_splitting(alg, fam.standard[l], n, 3);
      for (auto& s : rep.failures) t.note("  " + s);
      t.expect(rep.ok(), cat("one jump: splitting of Ω²(N", l, ") along the standard partition"));
    }
  }
  {
    auto f = StepFunction::make(2, 2, 1, 3, 1);
    auto fam = generate_family<Rational>(f);
    auto alg1 = fam.algebra(1);
    auto n1 = fam.witness(1).module;
    int bp = alg1->quiver().vertex_index("b'-1");
    auto lifted = build_graph_module(alg1, fam.witness_specs[0]).module;
    auto expect = direct_sum<Rational>({lifted, projective_module(alg1, std::vector<int>(f.n, bp))});
    t.expect(is_isomorphic(syzygy(n1, 1), expect) == Certainty::Yes, "two jumps: Ω¹(N1) ≅ N0 ⊕ (Λ1 b'-1)^3");
    for (int l = 1; l <= 2; ++l) {
      PdimEngine<Rational> eng(fam.algebra(l), standard_layers(f, l));
      auto pd = eng.pdim(fam.witness(l).module);
      t.expect(pd == PdimResult::finite(2 + l), cat("two jumps: pdim N", l, " = ", pd.str()));
    }
  }
  double sec = since(t0);
  t.expect(sec < 30.0, cat("runtime ", sec, " s"));
  r.pass = t.failed == 0;
  r.detail = cat(t.checks - t.failed, "/", t.checks, " checks");
}

// --- 5 ---------------------------------------------------------------------

void jump_certification(CriterionResult& r, const AcceptanceOptions& opt) {
  Tally t{r};
  ScopedModulus mod(2);
  auto fam = generate_family<Zp>(StepFunction::make(2, 2, 1));
  PdimEngine<Zp> eng(fam.top(), fam.layers[1]);
  EnumerationBudget b;
  b.threads = opt.threads;
  int values[3] = {0, 0, 0};
  std::uint64_t skipped = 0;
  for (int n = 1; n <= 2; ++n) {
    auto obs = observed_findim(eng, n, b);
    values[n] = obs.value;
    skipped += obs.skipped_large;
    t.note(cat("n=", n, ": value ", obs.value, ", ", obs.modules, " modules over ", obs.top_vectors, " top vectors (",
               obs.skipped_large, " with dim JP/J²P > 12 skipped, ", obs.sampled_tops, " sampled), ", obs.unresolved,
               " unresolved, ", obs.seconds, " s; attaining: ", obs.attaining_graph.substr(0, 200)));
    t.expect(obs.value == n + 1, cat("n=", n, ": observed ", obs.value, ", expected ", n + 1));
    t.expect(obs.sampled_tops == 0, cat("n=", n, ": every enumerated lattice complete"));
    t.expect(obs.unresolved == 0, cat("n=", n, ": no unresolved module"));
  }
  r.pass = t.failed == 0;
  r.detail = cat("observed fin dim_1 = ", values[1], ", fin dim_2 = ", values[2], " (Loewy <= 2, F2; ", skipped,
                 " top vectors with dim JP/J²P > 12 not enumerated)");
}

// --- 6 ---------------------------------------------------------------------

void lemma_suites(CriterionResult& r, const AcceptanceOptions& opt) {
  LemmaOptions lo;
  lo.finite_per_level = opt.lemma_samples;
  std::uint64_t fails = 0, undec = 0;
  bool enough = true;
  for (auto f : {StepFunction::make(2, 2, 2), StepFunction::make(2, 2, 1, 3, 1)}) {
    auto rep = run_lemma_suite(f, lo);
    std::istringstream is(rep.summary());
    for (std::string line; std::getline(is, line);) r.log.push_back(line);
    for (auto& d : rep.reproducers) r.dumps.push_back(d);
    fails += rep.failures();
    undec += rep.undecided();
    enough = enough && rep.enough_samples();
  }
  r.pass = fails == 0 && undec == 0 && enough;
  r.detail = cat(fails, " counterexamples, ", undec, " undecided (", lo.finite_per_level,
                 " finite-pdim samples per level)", enough ? "" : ", too few finite samples");
}

// --- 7 ---------------------------------------------------------------------

void stacking_structure(CriterionResult& r, const AcceptanceOptions&) {
  Tally t{r};
  int levels = 0;
  for (auto f : {StepFunction::make(2, 2, 2), StepFunction::make(2, 2, 1, 3, 1), StepFunction::make(2, 3, 3)}) {
    auto fam = generate_family<Rational>(f);
    for (int l = 0; l <= f.d(); ++l) {
      ++levels;
      const auto& alg = *fam.algebra(l);
      std::string tag = cat("f=", f.str(), " level ", l, ": ");
      t.expect(alg.radical_power(3).empty(), tag + "J^3 = 0");
      if (l > 0) {
        t.expect(check_partition(alg, fam.standard[l]).empty(), tag + "standard partition valid");
        std::string why;
        t.expect(same_presentation(*corner_algebra(alg, fam.standard[l].lower).algebra, *fam.algebra(l - 1), &why),
                 tag + "lower corner is the previous level " + why);
      }
      const auto& layers = fam.layers[l];
      t.expect(static_cast<int>(layers.size()) == (l + 1) / 2 + 1, tag + cat(layers.size(), " alternate layers"));
      std::vector<int> below;
      for (size_t i = 0; i < layers.size(); ++i) {
        std::vector<int> vs;
        for (auto& v : layers[i]) vs.push_back(alg.quiver().vertex_index(v));
        t.expect(corner_algebra(alg, vs).algebra->is_monomial(), tag + cat("layer ", i, " monomial"));
        if (i > 0) {
          auto all = below;
          all.insert(all.end(), vs.begin(), vs.end());
          auto sub = corner_algebra(alg, all);
          StackingPartition p;
          const Quiver& sq = sub.algebra->quiver();
          for (int v : below) p.lower.push_back(sq.vertex_index(alg.quiver().vertex(v)));
          for (int v : vs) p.upper.push_back(sq.vertex_index(alg.quiver().vertex(v)));
          t.expect(check_partition(*sub.algebra, p).empty(), tag + cat("layer ", i, " stacks on the layers below"));
        }
        below.insert(below.end(), vs.begin(), vs.end());
      }
    }
  }
  r.pass = t.failed == 0;
  r.detail = cat(levels, " levels, ", t.checks - t.failed, "/", t.checks, " checks");
}

// --- 8 ---------------------------------------------------------------------

void path_pdim_equivalence(CriterionResult& r, const AcceptanceOptions&) {
  Tally t{r};
  ScopedModulus mod(2);
  std::vector<std::pair<std::string, AlgebraPtr<Zp>>> corpus;
  for (auto [rr, m] : {std::pair{2, 2}, {3, 2}, {4, 3}})
    corpus.push_back({cat("base(r=", rr, ",m=", m, ")"), generate_family<Zp>(StepFunction::make(rr, m, 0)).algebra(0)});
  {
    auto ls = loop_sink_algebra<Zp>();
    corpus.push_back({"loop-sink", ls});
    corpus.push_back({"loop-sink upper corner", corner_algebra(*ls, split_at(ls, {"5"}).upper).algebra});
    corpus.push_back({"linear A5", linear_a5_algebra<Zp>()});
  }
  for (auto [rr, m] : {std::pair{2, 2}, {3, 2}}) {
    auto delta = generate_family<Zp>(StepFunction::make(rr, m, 1)).top();
    corpus.push_back({cat("upper corner at b-1 (r=", rr, ",m=", m, ")"),
                      corner_algebra(*delta, split_at(delta, {"b-1"}).upper).algebra});
  }
  // small dense quivers and larger sparser ones with longer paths
  const RandomMonomialSpec specs[] = {{}, {6, 9, 10, 35, 4}};
  for (int k = 0; k < 2; ++k)
    for (std::uint64_t seed = 1; seed <= 24; ++seed) {
      auto p = random_monomial(specs[k], seed + 1000 * k);
      corpus.push_back({cat("random ", k ? "large" : "small", " seed ", seed), build_algebra<Zp>(p.quiver, p.relations, p.nilp)});
    }
  int paths = 0, agree = 0, infinite = 0;
  for (auto& [name, alg] : corpus) {
    AnnihilatorGraph<Zp> g(alg);
    PdimEngine<Zp> eng(alg);
    int here = 0;
    for (int i = 0; i < alg->dim(); ++i) {
      if (alg->degree(i) == 0) continue;
      const Path& p = alg->basis_path(i);
      auto a = g.pdim(i);
      auto b = eng.generic(path_ideal(alg, p));
      ++paths, ++here;
      if (a.is_infinite()) ++infinite;
      if (t.expect(a == b, name + ": " + format_path(alg->quiver(), p) + " graph " + a.str() + " vs chain " + b.str()))
        ++agree;
    }
    t.note(cat(name, ": ", here, " paths"));
  }
  t.expect(paths >= 500, cat(paths, " paths (need 500)"));
  r.pass = t.failed == 0;
  r.detail = cat(agree, "/", paths, " paths agree (", infinite, " infinite) over ", corpus.size(), " algebras");
}

const char* kTitles[kCriteria + 1] = {"",
                                      "monomial invariants of the base algebras",
                                      "syzygies of submodules of projectives are path ideals",
                                      "small stacks: loop-sink and linear A5",
                                      "witness chains",
                                      "jump certification by the Loewy-2 oracle",
                                      "lemma property suites",
                                      "stacking structure of the generated families",
                                      "annihilator graph vs resolutions on basis paths"};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
  CriterionResult r;
  r.id = id;
  if (id < 1 || id > kCriteria) throw std::invalid_argument(cat("no criterion ", id));
  r.title = kTitles[id];
  auto t0 = Clock::now();
  try {
    switch (id) {
      case 1: monomial_invariants(r, opt); break;
      case 2: path_ideal_suite(r, opt); break;
      case 3: small_stacks(r, opt); break;
      case 4: witness_chains(r, opt); break;
      case 5: jump_certification(r, opt); break;
      case 6: lemma_suites(r, opt); break;
      case 7: stacking_structure(r, opt); break;
      case 8: path_pdim_equivalence(r, opt); break;
    }
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = since(t0);
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) {
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
    out.push_back(run_criterion(id, opt));
    if (opt.on_result) opt.on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.title << ") [" << std::fixed
     << std::setprecision(2) << r.seconds << " s]: " << r.detail;
  return os.str();
}

}  // namespace qstack
