// qstack: command-line front end.  Every command prints a JSON report on
// stdout (or --out); exit 0 on success, 1 when a verification fails, 2 on
// bad input.
#include "qstack/acceptance.hpp"
#include "qstack/family.hpp"
#include "qstack/io.hpp"
#include "qstack/oracle.hpp"
#include "qstack/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace qstack;

namespace {

constexpr int kSchema = 1;

// Bad input; path/line/column when known.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Ctx {
  json report;
  json warnings = json::array();
  int status = 0;
  std::string out;
  bool quiet = false;

  void input(const std::string& path, const std::string& bytes) {
    report["inputs"].push_back({{"path", path}, {"fnv1a64", hex64(fnv1a(bytes))}});
  }
  void warn(const std::string& s) { warnings.push_back(s); }
};

std::string slurp(Ctx& c, const std::string& path) {
  std::string bytes;
  try {
    bytes = read_file(path);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  c.input(path, bytes);
  return bytes;
}

AlgSpec load_alg(Ctx& c, const std::string& path) {
  auto text = slurp(c, path);
  try {
    return parse_alg(text);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.message());
  }
}

GraphSpec load_graph(Ctx& c, const std::string& path) {
  auto text = slurp(c, path);
  try {
    return parse_graph(text);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.message());
  }
}

// Runs fn.template operator()<F>() with the scalar type of the field.
template <class Fn>
void with_field(const std::string& field, Fn&& fn) {
  std::uint32_t p;
  try {
    p = field_prime(field);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  if (p == 0) {
    fn.template operator()<Rational>();
  } else {
    ScopedModulus mod(p);
    fn.template operator()<Zp>();
  }
}

json pdim_json(const PdimResult& r) {
  json j;
  switch (r.kind) {
    case PdimResult::Kind::Finite:
      j = {{"kind", "exact"}, {"value", r.value}};
      break;
    case PdimResult::Kind::Infinite:
      j = {{"kind", "exact"}, {"value", "infinite"}};
      break;
    default:
      j = {{"kind", "cutoff"}, {"value", r.value}};
  }
  j["display"] = r.str();
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

json interval_json(const Interval& i) { return {{"kind", i.exact() ? "exact" : "interval"}, {"lo", i.lo}, {"hi", i.hi}}; }

json by_vertex(const Quiver& q, const std::vector<int>& d) {
  json j = json::object();
  for (int v = 0; v < q.num_vertices(); ++v)
    if (d[v]) j[q.vertex(v)] = d[v];
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError(path + ": cannot write");
  f << text;
}

template <class F>
StackingPartition partition_of(const Algebra<F>& alg, const AlgSpec& s, const std::string& flag) {
  std::vector<std::vector<std::string>> layers = s.layers;
  if (!flag.empty()) {
    // "E'=a0,c1;E''=a1,b1" (the ';' may also be a space)
    auto mid = flag.find("E''");
    if (mid == std::string::npos) throw InputError("--partition: expected \"E'=...;E''=...\"");
    auto side = [&](std::string part) {
      auto eq = part.find('=');
      if (eq == std::string::npos) throw InputError("--partition: missing '='");
      std::vector<std::string> ids;
      std::stringstream ss(part.substr(eq + 1));
      for (std::string id; std::getline(ss, id, ',');) {
        id.erase(0, id.find_first_not_of(" \t;"));
        id.erase(id.find_last_not_of(" \t;") + 1);
        if (!id.empty()) ids.push_back(id);
      }
      return ids;
    };
    layers = {side(flag.substr(0, mid)), side(flag.substr(mid))};
  }
  if (layers.size() < 2) throw InputError("no partition: give one in the .alg file or with --partition");
  std::vector<std::string> low;
  for (size_t i = 0; i + 1 < layers.size(); ++i) low.insert(low.end(), layers[i].begin(), layers[i].end());
  try {
    return partition_from_ids(alg.quiver(), low, layers.back());
  } catch (const std::exception& e) {
    throw InputError(std::string("partition: ") + e.what());
  }
}

template <class F>
GraphModule<F> module_of(const AlgebraPtr<F>& alg, const GraphSpec& g, const std::string& path) {
  try {
    return build_graph_module(alg, g);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.message());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

// --- commands --------------------------------------------------------------

void algebra_info(Ctx& c, const std::string& path) {
  auto s = load_alg(c, path);
  with_field(s.field, [&]<class F>() {
    auto alg = build<F>(s);
    const Quiver& q = alg->quiver();
    json r;
    r["field"] = normalize_field(s.field);
    r["vertices"] = q.vertices();
    json arrows = json::array();
    for (auto& a : q.arrows()) arrows.push_back({{"id", a.id}, {"source", q.vertex(a.source)}, {"target", q.vertex(a.target)}});
    r["arrows"] = arrows;
    json rels = json::array();
    for (auto& rel : alg->relations()) rels.push_back(format_relation(q, rel));
    r["relations"] = rels;
    r["nilp"] = alg->nilpotency_bound();
    r["dimension"] = {{"kind", "exact"}, {"value", alg->dim()}};
    r["monomial"] = alg->is_monomial();
    json proj = json::object();
    for (int v = 0; v < q.num_vertices(); ++v)
      proj[q.vertex(v)] = by_vertex(q, projective_module(alg, v).dims());
    r["projectives"] = proj;
    int loewy = 0;
    for (int i = 0; i < alg->dim(); ++i) loewy = std::max(loewy, alg->degree(i) + 1);
    r["loewy_length"] = loewy;
    if (!s.layers.empty()) {
      r["layers"] = s.layers;
      if (s.layers.size() >= 2) {
        auto part = partition_of(*alg, s, "");
        r["partition_valid"] = check_partition(*alg, part).empty();
      }
    }
    c.report["results"] = r;
  });
}

void algebra_dot(Ctx& c, const std::string& path) {
  auto s = load_alg(c, path);
  c.report["results"] = {{"dot", quiver_dot(s.quiver, s.layers)}};
}

void module_cmd(Ctx& c, const std::string& what, const std::string& alg_path, const std::string& mod_path, int k,
                const std::string& partition) {
  auto g = load_graph(c, mod_path);
  if (what == "dot") {
    c.report["results"] = {{"dot", graph_dot(g)}};
    return;
  }
  auto s = load_alg(c, alg_path);
  with_field(s.field, [&]<class F>() {
    auto alg = build<F>(s);
    const Quiver& q = alg->quiver();
    auto gm = module_of(alg, g, mod_path);
    const auto& m = gm.module;
    json r;
    r["dims"] = by_vertex(q, m.dims());
    r["tree"] = gm.tree();
    if (!gm.basis_matches) c.warn("the graph has fewer basis vectors than nodes (some node is zero in P/V)");
    if (what == "pdim") {
      std::vector<std::vector<std::string>> layers = s.layers;
      if (!partition.empty()) {
        auto p = partition_of(*alg, s, partition);
        std::vector<std::string> lo, up;
        for (int v : p.lower) lo.push_back(q.vertex(v));
        for (int v : p.upper) up.push_back(q.vertex(v));
        layers = {lo, up};
      }
      std::unique_ptr<PdimEngine<F>> eng;
      try {
        eng = layers.size() >= 2 ? std::make_unique<PdimEngine<F>>(alg, layers) : std::make_unique<PdimEngine<F>>(alg);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      auto d = eng->pdim(m);
      r["pdim"] = pdim_json(d);
      r["route"] = eng->stacked() ? "stacked" : alg->is_monomial() ? "monomial" : "generic";
      if (d.is_finite()) {
        json res = json::array();
        for (auto& x : eng->resolution(m, d.value + 1)) res.push_back(x.total_dim());
        r["syzygy_total_dims"] = res;
      }
    } else if (what == "syzygy") {
      json steps = json::array();
      auto cur = m;
      for (int i = 1; i <= k; ++i) {
        cur = syzygy(cur, 1);
        steps.push_back({{"k", i}, {"dims", by_vertex(q, cur.dims())}, {"top", by_vertex(q, top_vector(cur))},
                         {"projective", is_projective(cur)}});
        if (cur.is_zero()) break;
      }
      r["syzygies"] = steps;
    } else if (what == "layers") {
      auto l = module_layers(m);
      r["loewy_length"] = l.loewy_length;
      json ls = json::array();
      for (auto& d : l.layers) ls.push_back(by_vertex(q, d));
      r["radical_layers"] = ls;
      r["socle"] = by_vertex(q, l.socle);
    }
    c.report["results"] = r;
  });
}

void monomial_report(Ctx& c, const std::string& path) {
  auto s = load_alg(c, path);
  with_field(s.field, [&]<class F>() {
    auto alg = build<F>(s);
    if (!alg->is_monomial()) throw InputError(path + ": the algebra is not monomial");
    const Quiver& q = alg->quiver();
    AnnihilatorGraph<F> g(alg);
    auto rep = critical_report(g);
    json r;
    json crit = json::array();
    for (int p : rep.critical)
      crit.push_back({{"path", format_path(q, alg->basis_path(p))}, {"pdim", pdim_json(g.pdim(p))}});
    r["critical_paths"] = crit;
    r["s"] = {{"kind", "exact"}, {"value", rep.s}};
    if (rep.witness >= 0) r["s_witness"] = format_path(q, alg->basis_path(rep.witness));
    auto [lo, hi] = findim_interval(rep);
    r["findim"] = interval_json({lo, hi});
    json paths = json::array();
    for (int i = 0; i < alg->dim(); ++i)
      if (alg->degree(i) > 0) {
        json mins = json::array();
        for (int m : g.minimal_annihilators(i)) mins.push_back(format_path(q, alg->basis_path(m)));
        paths.push_back({{"path", format_path(q, alg->basis_path(i))}, {"pdim", pdim_json(g.pdim(i))},
                         {"minimal_annihilators", mins}});
      }
    r["paths"] = paths;
    c.report["results"] = r;
  });
}

void stack_cmd(Ctx& c, const std::string& what, const std::string& path, const std::string& partition,
               const std::string& mod_path, int depth) {
  auto s = load_alg(c, path);
  GraphSpec g;
  if (what == "verify") g = load_graph(c, mod_path);
  with_field(s.field, [&]<class F>() {
    auto alg = build<F>(s);
    const Quiver& q = alg->quiver();
    auto part = partition_of(*alg, s, partition);
    json r;
    auto bad = check_partition(*alg, part);
    json viol = json::array();
    for (auto& v : bad) viol.push_back({{"condition", std::string(1, v.condition)}, {"message", v.message}});
    r["valid"] = bad.empty();
    r["violations"] = viol;
    if (what == "check") {
      if (!bad.empty()) c.status = 1;
    } else if (!bad.empty()) {
      c.status = 1;
    } else if (what == "invariants") {
      auto inv = stack_invariants(alg, part);
      r["t"] = inv.t ? json{{"kind", "exact"}, {"value", *inv.t}} : json{{"kind", "cutoff"}};
      if (inv.t && *inv.t < 0) r["t"]["note"] = "no non-source corner e'Λe of finite projective dimension";
      json cp = json::object();
      for (auto& [v, d] : inv.corner_pdims) cp[v] = pdim_json(d);
      r["corner_pdims"] = cp;
      r["infinite_corner"] = inv.infinite_corner;
      json hv = json::array();
      for (int v : inv.homogeneous) hv.push_back(q.vertex(v));
      r["homogeneous"] = hv;
      r["upper_monomial"] = inv.upper_monomial;
      r["monomial_reduction_applies"] = inv.monomial_reduction_applies;
      r["inhomogeneous_critical"] = inv.inhomogeneous_critical;
      if (inv.lower_findim) r["lower_findim"] = interval_json(*inv.lower_findim);
      if (inv.upper_findim) r["upper_findim"] = interval_json(*inv.upper_findim);
      if (inv.bounds) r["findim_bounds"] = interval_json(*inv.bounds);
      else c.warn("no finitistic bounds: a corner is not monomial");
    } else {
      auto m = module_of(alg, g, mod_path).module;
      auto rep = verify_splitting(alg, part, m, depth);
      r["ok"] = rep.ok();
      r["failures"] = rep.failures;
      r["notes"] = rep.notes;
      for (auto& w : rep.warnings) c.warn(w);
      if (!rep.ok()) c.status = 1;
    }
    c.report["results"] = r;
  });
}

void family_cmd(Ctx& c, const std::string& jumps, const std::string& out_dir, const std::string& field) {
  StepFunction f;
  try {
    f = StepFunction::parse(jumps);
    f.validate();
  } catch (const std::exception& e) {
    throw InputError(std::string("--jumps: ") + e.what());
  }
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  with_field(field, [&]<class F>() {
    auto fam = generate_family<F>(f);
    json r;
    r["f"] = f.str();
    r["d"] = f.d();
    json levels = json::array();
    bool ok = true;
    for (int l = 0; l <= f.d(); ++l) {
      auto alg = fam.algebra(l);
      const Quiver& q = alg->quiver();
      json lv;
      lv["level"] = l;
      lv["vertices"] = q.num_vertices();
      lv["arrows"] = q.num_arrows();
      lv["dimension"] = alg->dim();
      bool j3 = alg->radical_power(3).empty();
      lv["J3_zero"] = j3;
      ok = ok && j3;
      if (l > 0) {
        bool v = check_partition(*alg, fam.standard[l]).empty();
        bool same = same_presentation(*corner_algebra(*alg, fam.standard[l].lower).algebra, *fam.algebra(l - 1));
        lv["standard_partition_valid"] = v;
        lv["lower_corner_is_previous"] = same;
        ok = ok && v && same;
      }
      lv["alternate_layers"] = fam.layers[l];
      auto w = fam.witness(l);
      PdimEngine<F> eng(alg, standard_layers(f, l));
      auto d = eng.pdim(w.module);
      lv["witness_pdim"] = pdim_json(d);
      lv["witness_expected"] = f.r + l;
      lv["witness_tree"] = w.tree();
      lv["witness_loewy_length"] = module_layers(w.module).loewy_length;
      bool good = d == PdimResult::finite(f.r + l) && w.tree();
      lv["witness_ok"] = good;
      ok = ok && good;
      if (!out_dir.empty()) {
        auto base = out_dir + "/level" + std::to_string(l);
        write_text(base + ".alg", format_alg(spec_of(*alg, normalize_field(field), fam.layers[l])));
        write_text(base + ".dot", quiver_dot(q, fam.layers[l], "Q" + std::to_string(l)));
        write_text(out_dir + "/N" + std::to_string(l) + ".mod", format_graph(fam.witness_specs[l]));
        write_text(out_dir + "/N" + std::to_string(l) + ".dot", graph_dot(fam.witness_specs[l], "N" + std::to_string(l)));
      }
      levels.push_back(lv);
    }
    r["levels"] = levels;
    r["ok"] = ok;
    if (!out_dir.empty()) r["out"] = out_dir;
    if (!ok) c.status = 1;
    c.report["results"] = r;
    if (!out_dir.empty()) {
      std::ofstream rep(out_dir + "/report.json");
      rep << r.dump(2) << '\n';
    }
  });
}

void oracle_cmd(Ctx& c, const std::string& path, int n, const std::string& field, double budget, std::uint64_t seed,
                std::uint64_t samples, unsigned threads) {
  auto s = load_alg(c, path);
  std::string fld = field.empty() ? s.field : field;
  std::uint32_t p;
  try {
    p = field_prime(fld);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  if (p == 0) throw InputError("the oracle needs a prime field (--field F2, F3, ...)");
  if (n < 1) throw InputError("--n must be >= 1");
  if (budget < 1) throw InputError("--budget must be positive");
  ScopedModulus mod(p);
  auto alg = build<Zp>(s);
  std::unique_ptr<PdimEngine<Zp>> eng;
  try {
    eng = s.layers.size() >= 2 ? std::make_unique<PdimEngine<Zp>>(alg, s.layers) : std::make_unique<PdimEngine<Zp>>(alg);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  EnumerationBudget b;
  b.max_modules = static_cast<std::uint64_t>(budget);
  b.seed = seed;
  b.samples = samples;
  b.threads = threads;
  auto obs = observed_findim(*eng, n, b);
  json r;
  r["field"] = "F" + std::to_string(p);
  r["n"] = n;
  r["findim_n"] = {{"kind", "observed"}, {"value", obs.value}, {"exhaustive", obs.exhaustive},
                   {"scope", "modules of Loewy length <= 2 with top multiplicities <= n"}};
  r["attaining_tops"] = obs.attaining_mu;
  r["attaining_graph"] = obs.attaining_graph;
  r["attaining_resolution_dims"] = obs.attaining_resolution;
  r["attaining_count"] = obs.attaining_count;
  r["modules"] = obs.modules;
  r["infinite"] = obs.infinite + obs.quick_infinite;
  r["unresolved"] = obs.unresolved;
  r["unresolved_examples"] = obs.unresolved_examples;
  r["top_vectors"] = obs.top_vectors;
  r["skipped_large"] = obs.skipped_large;
  r["skipped_reducible"] = obs.skipped_reducible;
  r["sampled_tops"] = obs.sampled_tops;
  r["seed"] = obs.seed;
  r["budget"] = b.max_modules;
  if (!obs.exhaustive) c.warn("not exhaustive: the value is a lower bound within the class");
  if (obs.unresolved) c.warn(std::to_string(obs.unresolved) + " modules exceeded the pdim cutoff");
  c.report["results"] = r;
}

void verify_all(Ctx& c, const std::vector<int>& only, int lemma_samples, unsigned threads, const std::string& dump) {
  AcceptanceOptions opt;
  opt.only = only;
  opt.lemma_samples = lemma_samples;
  opt.threads = threads;
  for (int id : only)
    if (id < 1 || id > kCriteria) throw InputError("--only: no criterion " + std::to_string(id));
  opt.on_result = [&](const CriterionResult& r) {
    if (!c.quiet) std::cerr << format_result(r) << std::endl;
  };
  auto res = run_acceptance(opt);
  json arr = json::array();
  std::vector<std::string> dumps;
  for (auto& r : res) {
    arr.push_back({{"id", r.id}, {"title", r.title}, {"verdict", r.pass ? "PASS" : "FAIL"}, {"detail", r.detail},
                   {"seconds", r.seconds}, {"log", r.log}});
    if (!r.pass) c.status = 1;
    dumps.insert(dumps.end(), r.dumps.begin(), r.dumps.end());
  }
  if (!dump.empty() && !dumps.empty()) {
    std::string text;
    for (auto& d : dumps) text += d + "\n\n";
    write_text(dump, text);
  }
  c.report["results"] = {{"criteria", arr}, {"reproducers", dumps}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qstack: stacked quiver algebras, projective and finitistic dimensions"};
  app.require_subcommand(1);
  app.fallthrough();
  Ctx c;
  app.add_option("-o,--out", c.out, "write the JSON report here instead of stdout");
  app.add_flag("-q,--quiet", c.quiet, "no progress output");

  std::string alg_path, mod_path, partition, jumps, field, out_dir, dump;
  int k = 3, depth = 3, n = 1, lemma_samples = 200;
  double budget = 5e7;
  std::uint64_t seed = 7, samples = 20000;
  unsigned threads = 0;
  std::vector<int> only;

  auto* algebra = app.add_subcommand("algebra", "inspect an algebra file");
  algebra->require_subcommand(1);
  for (auto name : {"info", "dot"}) {
    auto* sc = algebra->add_subcommand(name);
    sc->add_option("algebra", alg_path, ".alg file")->required();
  }

  auto* module = app.add_subcommand("module", "homology of a module given by a layered graph");
  module->require_subcommand(1);
  for (auto name : {"pdim", "syzygy", "layers", "dot"}) {
    auto* sc = module->add_subcommand(name);
    sc->add_option("--graph", mod_path, ".mod file")->required();
    if (std::string(name) != "dot") sc->add_option("algebra", alg_path, ".alg file")->required();
    if (std::string(name) == "syzygy") sc->add_option("-k", k, "number of syzygies")->check(CLI::PositiveNumber);
    if (std::string(name) == "pdim") sc->add_option("--partition", partition, "E'=...;E''=...");
  }

  auto* monomial = app.add_subcommand("monomial", "annihilator graph of a monomial algebra");
  monomial->require_subcommand(1);
  monomial->add_subcommand("report")->add_option("algebra", alg_path, ".alg file")->required();

  auto* stack = app.add_subcommand("stack", "stacking partitions");
  stack->require_subcommand(1);
  for (auto name : {"check", "invariants", "verify"}) {
    auto* sc = stack->add_subcommand(name);
    sc->add_option("algebra", alg_path, ".alg file")->required();
    sc->add_option("--partition", partition, "E'=...;E''=... (overrides the file)");
    if (std::string(name) == "verify") {
      sc->add_option("--graph", mod_path, ".mod file")->required();
      sc->add_option("--depth", depth, "syzygies to check")->check(CLI::PositiveNumber);
    }
  }

  auto* family = app.add_subcommand("family", "generate and check the algebras for a step function");
  family->add_option("--jumps", jumps, "breakpoints k:f(k), e.g. 1:2,2:3")->required();
  family->add_option("--out", out_dir, "directory for .alg/.mod/.dot files and report.json");
  family->add_option("--field", field, "Q, F2, F<p>")->default_val("Q");

  auto* oracle = app.add_subcommand("oracle", "observed fin dim_n over Loewy-length-2 modules");
  oracle->add_option("--algebra", alg_path, ".alg file")->required();
  oracle->add_option("--n", n, "top multiplicity bound")->required();
  oracle->add_option("--field", field, "F2, F3, ... (default: the file's field)");
  oracle->add_option("--budget", budget, "modules per top vector before sampling");
  oracle->add_option("--seed", seed, "sampling seed");
  oracle->add_option("--samples", samples, "samples per oversized top vector");
  oracle->add_option("--threads", threads, "0: hardware");

  auto* verify = app.add_subcommand("verify-all", "run the acceptance checks");
  verify->add_option("--only", only, "criterion ids");
  verify->add_option("--lemma-samples", lemma_samples, "finite-pdim samples per level")->check(CLI::PositiveNumber);
  verify->add_option("--threads", threads, "0: hardware");
  verify->add_option("--dump", dump, "write counterexample reproducers here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string cmd;
  for (int i = 1; i < argc; ++i) cmd += (i > 1 ? " " : "") + std::string(argv[i]);
  c.report["schema_version"] = kSchema;
  c.report["command"] = cmd;
  c.report["inputs"] = json::array();
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (algebra->got_subcommand("info")) algebra_info(c, alg_path);
    else if (algebra->got_subcommand("dot")) algebra_dot(c, alg_path);
    else if (*module) module_cmd(c, module->get_subcommands().front()->get_name(), alg_path, mod_path, k, partition);
    else if (*monomial) monomial_report(c, alg_path);
    else if (*stack) stack_cmd(c, stack->get_subcommands().front()->get_name(), alg_path, partition, mod_path, depth);
    else if (*family) family_cmd(c, jumps, out_dir, field);
    else if (*oracle) oracle_cmd(c, alg_path, n, field, budget, seed, samples, threads);
    else if (*verify) verify_all(c, only, lemma_samples, threads, dump);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  c.report["status"] = c.status == 0 ? "ok" : "verification-failed";
  c.report["warnings"] = c.warnings;
  c.report["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};

  std::string text = c.report.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out);
    if (!f) {
      std::cerr << "error: " << c.out << ": cannot write\n";
      return 2;
    }
    f << text;
  }
  return c.status;
}
