#include "qstack/oracle.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>

namespace qstack {

namespace {

std::uint64_t checked_pow(std::uint64_t p, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (std::uint64_t(1) << 62) / p) throw std::overflow_error("subspace lattice too large to index");
    r *= p;
  }
  return r;
}

void combinations(int k, int r, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == r) {
    out.push_back(cur);
    return;
  }
  for (int c = from; c < k; ++c) {
    cur.push_back(c);
    combinations(k, r, c + 1, cur, out);
    cur.pop_back();
  }
}

std::shared_ptr<SubspaceLattice> lattice(int k, std::uint32_t p) {
  static std::mutex m;
  static std::map<std::pair<int, std::uint32_t>, std::shared_ptr<SubspaceLattice>> cache;
  std::lock_guard<std::mutex> g(m);
  auto& slot = cache[{k, p}];
  if (!slot) slot = std::make_shared<SubspaceLattice>(k, p);
  return slot;
}

Vector<Zp> unit(int n, int i) {
  Vector<Zp> e = Vector<Zp>::Zero(n);
  e(i) = Zp(1);
  return e;
}

}  // namespace

SubspaceLattice::SubspaceLattice(int k, std::uint32_t p) : k_(k), p_(p) {
  for (int r = 0; r <= k; ++r) {
    std::vector<std::vector<int>> combos;
    std::vector<int> cur;
    combinations(k, r, 0, cur, combos);
    for (auto& piv : combos) {
      Cell c;
      c.piv = piv;
      std::vector<char> is_piv(k, 0);
      for (int x : piv) is_piv[x] = 1;
      for (int i = 0; i < r; ++i)
        for (int j = piv[i] + 1; j < k; ++j)
          if (!is_piv[j]) c.free.push_back({i, j});
      c.offset = total_;
      c.count = checked_pow(p, static_cast<int>(c.free.size()));
      if (total_ > (std::uint64_t(1) << 62) - c.count) throw std::overflow_error("subspace lattice too large to index");
      total_ += c.count;
      cells_.push_back(std::move(c));
    }
  }
}

std::uint64_t SubspaceLattice::count(int k, std::uint32_t p) { return lattice(k, p)->size(); }

RowMatrix<Zp> SubspaceLattice::unrank(std::uint64_t idx, std::vector<int>* piv) const {
  if (idx >= total_) throw std::out_of_range("subspace index out of range");
  auto it = std::upper_bound(cells_.begin(), cells_.end(), idx,
                             [](std::uint64_t x, const Cell& c) { return x < c.offset; });
  const Cell& c = *(it - 1);
  std::uint64_t local = idx - c.offset;
  const int r = static_cast<int>(c.piv.size());
  RowMatrix<Zp> m = RowMatrix<Zp>::Zero(r, k_);
  for (int i = 0; i < r; ++i) m(i, c.piv[i]) = Zp(1);
  for (auto [i, j] : c.free) {
    m(i, j) = Zp(static_cast<std::uint32_t>(local % p_));
    local /= p_;
  }
  if (piv) *piv = c.piv;
  return m;
}

Loewy2Space::Loewy2Space(const AlgebraPtr<Zp>& alg, std::vector<int> mu) : alg_(alg), mu_(std::move(mu)) {
  const Quiver& q = alg_->quiver();
  const int nv = q.num_vertices();
  if (static_cast<int>(mu_.size()) != nv) throw std::invalid_argument("top vector has the wrong length");
  top_at_.assign(nv, {});
  for (int v = 0; v < nv; ++v) {
    if (mu_[v] < 0) throw std::invalid_argument("negative multiplicity");
    for (int i = 0; i < mu_[v]; ++i) {
      top_at_[v].push_back(static_cast<int>(types_.size()));
      types_.push_back(v);
    }
  }
  if (types_.empty()) throw std::invalid_argument("top vector is zero");
  const int nt = static_cast<int>(types_.size());
  coord_.assign(nv, {});
  coord_of_.assign(nt, std::vector<int>(q.num_arrows(), -1));
  for (int k = 0; k < nt; ++k)
    for (int a : q.arrows_from(types_[k])) {
      int v = q.arrow(a).target;
      coord_of_[k][a] = static_cast<int>(coord_[v].size());
      coord_[v].push_back({k, a});
    }
  // degree-two coordinates: (top, degree-2 basis element ending at v)
  std::vector<std::vector<std::vector<int>>> d2(nt, std::vector<std::vector<int>>(nv));
  std::vector<std::vector<int>> off2(nt, std::vector<int>(nv, 0));
  deg2_.assign(nv, 0);
  for (int k = 0; k < nt; ++k)
    for (int v = 0; v < nv; ++v) {
      for (int i : alg_->projective_block(types_[k], v))
        if (alg_->degree(i) == 2) d2[k][v].push_back(i);
      off2[k][v] = deg2_[v];
      deg2_[v] += static_cast<int>(d2[k][v].size());
    }
  act_.resize(q.num_arrows());
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix<Zp> m = Matrix<Zp>::Zero(deg2_[ar.target], coords(ar.source));
    for (int c = 0; c < coords(ar.source); ++c) {
      auto [k, b] = coord_[ar.source][c];
      Path p = Path::arrow(q, b).then(q, a);
      for (auto& [i, x] : alg_->normal_form(p)) {
        const auto& lst = d2[k][ar.target];
        auto pos = std::find(lst.begin(), lst.end(), i) - lst.begin();
        m(off2[k][ar.target] + static_cast<int>(pos), c) += x;
      }
    }
    act_[a] = std::move(m);
  }
  lat_.resize(nv);
  for (int v = 0; v < nv; ++v) {
    lat_[v] = lattice(coords(v), Zp::modulus());
    std::uint64_t s = lat_[v]->size();
    if (count_ > std::numeric_limits<std::uint64_t>::max() / s)
      saturated_ = true, count_ = std::numeric_limits<std::uint64_t>::max();
    else if (!saturated_)
      count_ *= s;
  }
}

int Loewy2Space::radical_dim() const {
  int d = 0;
  for (auto& c : coord_) d += static_cast<int>(c.size());
  return d;
}

std::vector<Subspace<Zp>> Loewy2Space::choice(std::uint64_t idx) const {
  std::vector<Subspace<Zp>> w;
  for (size_t v = 0; v < lat_.size(); ++v) {
    std::uint64_t s = lat_[v]->size();
    std::vector<int> piv;
    auto rows = lat_[v]->unrank(idx % s, &piv);
    idx /= s;
    w.push_back(Subspace<Zp>::from_rref(std::move(rows), std::move(piv)));
  }
  return w;
}

std::vector<Subspace<Zp>> Loewy2Space::random_choice(std::mt19937_64& rng) const {
  std::vector<Subspace<Zp>> w;
  for (size_t v = 0; v < lat_.size(); ++v) {
    std::uniform_int_distribution<std::uint64_t> d(0, lat_[v]->size() - 1);
    std::vector<int> piv;
    auto rows = lat_[v]->unrank(d(rng), &piv);
    w.push_back(Subspace<Zp>::from_rref(std::move(rows), std::move(piv)));
  }
  return w;
}

Representation<Zp> Loewy2Space::module(const std::vector<Subspace<Zp>>& w) const {
  const Quiver& q = alg_->quiver();
  const int nv = q.num_vertices();
  std::vector<int> dims(nv);
  for (int v = 0; v < nv; ++v) dims[v] = mu_[v] + coords(v) - w[v].dim();
  std::vector<Matrix<Zp>> maps;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix<Zp> m = Matrix<Zp>::Zero(dims[ar.target], dims[ar.source]);
    for (int j = 0; j < mu_[ar.source]; ++j) {
      int k = top_at_[ar.source][j];
      auto img = w[ar.target].quotient_coordinates(unit(coords(ar.target), coord_of_[k][a]));
      m.block(mu_[ar.target], j, img.size(), 1) = img;
    }
    maps.push_back(std::move(m));
  }
  return Representation<Zp>(alg_, dims, maps, false);
}

bool Loewy2Space::quick_infinite(const std::vector<Subspace<Zp>>& w, const std::vector<char>& inf) const {
  const Quiver& q = alg_->quiver();
  const int nv = q.num_vertices();
  for (int v = 0; v < nv; ++v) {
    if (!inf[v]) continue;
    // a top combination at v killed by every arrow: S(v) splits off M
    if (mu_[v] > 0) {
      int rows = 0;
      for (int a : q.arrows_from(v)) rows += coords(q.arrow(a).target) - w[q.arrow(a).target].dim();
      Matrix<Zp> t = Matrix<Zp>::Zero(rows, mu_[v]);
      int r0 = 0;
      for (int a : q.arrows_from(v)) {
        int u = q.arrow(a).target;
        int h = coords(u) - w[u].dim();
        for (int j = 0; j < mu_[v]; ++j)
          if (h) t.block(r0, j, h, 1) = w[u].quotient_coordinates(unit(coords(u), coord_of_[top_at_[v][j]][a]));
        r0 += h;
      }
      if (rank<Zp>(t) < mu_[v]) return true;
    }
    // J²P_v ⊄ JW: a degree-two socle element of V outside JV
    if (deg2_[v] > 0) {
      int cols = 0;
      for (int a : q.arrows_into(v)) cols += w[q.arrow(a).source].dim();
      if (cols < deg2_[v]) return true;
      Matrix<Zp> jw(deg2_[v], cols);
      int c0 = 0;
      for (int a : q.arrows_into(v)) {
        const auto& ws = w[q.arrow(a).source];
        if (!ws.dim()) continue;
        jw.block(0, c0, deg2_[v], ws.dim()) = act_[a] * ws.basis();
        c0 += ws.dim();
      }
      if (rank<Zp>(jw) < deg2_[v]) return true;
    }
    // an element of W_v killed by every arrow
    if (w[v].dim() > 0) {
      int rows = 0;
      for (int a : q.arrows_from(v)) rows += deg2_[q.arrow(a).target];
      if (rows < w[v].dim()) return true;
      Matrix<Zp> k(rows, w[v].dim());
      int r0 = 0;
      Matrix<Zp> b = w[v].basis();
      for (int a : q.arrows_from(v)) {
        int h = deg2_[q.arrow(a).target];
        if (h) k.block(r0, 0, h, b.cols()) = act_[a] * b;
        r0 += h;
      }
      if (rank<Zp>(k) < w[v].dim()) return true;
    }
  }
  return false;
}

std::string Loewy2Space::describe(const std::vector<Subspace<Zp>>& w) const {
  const Quiver& q = alg_->quiver();
  GraphSpec g;
  const int nt = static_cast<int>(types_.size());
  for (int k = 0; k < nt; ++k) g.tops.push_back({"x" + std::to_string(k), q.vertex(types_[k]), 0});
  std::vector<std::vector<std::pair<std::string, Vector<Zp>>>> at(q.num_vertices());
  int fresh = 0;
  bool exact = true;
  for (int k = 0; k < nt; ++k)
    for (int a : q.arrows_from(types_[k])) {
      int v = q.arrow(a).target;
      auto img = w[v].quotient_coordinates(unit(coords(v), coord_of_[k][a]));
      if (is_zero_matrix(img)) continue;
      std::string name = "n" + std::to_string(fresh++);
      g.edges.push_back({g.tops[k].name, q.arrow(a).id, name, "", 0});
      bool matched = false;
      for (auto& [other, vec] : at[v])
        if (vec == img) {
          g.identify.push_back({name, other, 0});
          matched = true;
          break;
        }
      if (!matched) at[v].push_back({name, img});
    }
  for (int v = 0; v < q.num_vertices(); ++v) {
    int d = coords(v) - w[v].dim();
    if (static_cast<int>(at[v].size()) != d) exact = false;
  }
  if (!exact) g.comments.push_back(" approximate: some radical elements are not single arrow images of tops");
  return format_graph(g);
}

std::vector<std::vector<int>> candidate_tops(const Algebra<Zp>& alg, int n, std::uint64_t* reducible) {
  const Quiver& q = alg.quiver();
  const int nv = q.num_vertices();
  std::vector<int> free;
  for (int v = 0; v < nv; ++v)
    if (!q.arrows_from(v).empty()) free.push_back(v);
  std::vector<std::vector<char>> linked(nv, std::vector<char>(nv, 0));
  for (int u = 0; u < nv; ++u)
    for (int u2 = 0; u2 < nv; ++u2)
      for (int a : q.arrows_from(u))
        for (int b : q.arrows_from(u2))
          if (q.arrow(a).target == q.arrow(b).target) linked[u][u2] = 1;
  std::vector<std::vector<int>> out;
  std::vector<int> digits(free.size(), 0);
  if (reducible) *reducible = 0;
  while (true) {
    size_t i = 0;
    while (i < digits.size() && digits[i] == n) digits[i++] = 0;
    if (i == digits.size()) break;
    ++digits[i];
    std::vector<int> mu(nv, 0), supp;
    for (size_t j = 0; j < free.size(); ++j)
      if (digits[j]) mu[free[j]] = digits[j], supp.push_back(free[j]);
    // connectivity of the support under "shares an arrow target"
    std::vector<char> seen(supp.size(), 0);
    std::vector<size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      size_t x = stack.back();
      stack.pop_back();
      for (size_t y = 0; y < supp.size(); ++y)
        if (!seen[y] && linked[supp[x]][supp[y]]) seen[y] = 1, stack.push_back(y);
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
      if (reducible) ++*reducible;
      continue;
    }
    out.push_back(mu);
  }
  // deterministic order: by total multiplicity, then lexicographic
  std::stable_sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    int sa = 0, sb = 0;
    for (int x : a) sa += x;
    for (int x : b) sb += x;
    return sa != sb ? sa < sb : a < b;
  });
  return out;
}

FindimObservation observed_findim(const PdimEngine<Zp>& eng, int n, const EnumerationBudget& budget,
                                  const std::vector<std::vector<int>>* tops) {
  auto t0 = std::chrono::steady_clock::now();
  const auto& alg = eng.algebra();
  const int nv = alg->quiver().num_vertices();
  FindimObservation obs;
  obs.n = n;
  obs.seed = budget.seed;
  std::vector<char> inf(nv, 0);
  for (int v = 0; v < nv; ++v) inf[v] = eng.simple_pdim(v).is_infinite();

  std::vector<std::vector<int>> cands = tops ? *tops : candidate_tops(*alg, n, &obs.skipped_reducible);
  const unsigned nthreads = budget.threads ? budget.threads : std::max(1u, std::thread::hardware_concurrency());

  struct Best {
    int value = -1;
    size_t cand = 0;
    std::uint64_t idx = 0;
    std::uint64_t count = 0;
    std::vector<Subspace<Zp>> w;
    // (value, cand, idx) ordering: larger value wins, then earlier position
    void merge(const Best& o) {
      if (o.value < 0) return;
      if (o.value > value) {
        *this = o;
        return;
      }
      if (o.value < value) return;
      count += o.count;
      if (std::tie(o.cand, o.idx) < std::tie(cand, idx)) cand = o.cand, idx = o.idx, w = o.w;
    }
  };
  Best best;
  std::mutex lock;
  for (size_t ci = 0; ci < cands.size(); ++ci) {
    Loewy2Space space(alg, cands[ci]);
    if (space.radical_dim() > budget.max_radical_dim) {
      ++obs.skipped_large;
      obs.exhaustive = false;
      continue;
    }
    ++obs.top_vectors;
    const bool full = !space.saturated() && space.count() <= budget.max_modules;
    const std::uint64_t total = full ? space.count() : budget.samples;
    if (!full) obs.exhaustive = false, ++obs.sampled_tops;
    std::atomic<std::uint64_t> next{0};
    auto work = [&]() {
      Best local;
      std::uint64_t lq = 0, li = 0, lu = 0;
      std::vector<std::string> ex;
      const std::uint64_t chunk = 512;
      while (true) {
        std::uint64_t start = next.fetch_add(chunk);
        if (start >= total) break;
        for (std::uint64_t idx = start; idx < std::min(total, start + chunk); ++idx) {
          std::vector<Subspace<Zp>> w;
          if (full) {
            w = space.choice(idx);
          } else {
            // sample idx comes from a stream keyed by (seed, top vector, idx)
            std::mt19937_64 r(budget.seed * 1000003ULL + ci * 7919ULL + idx);
            w = space.random_choice(r);
          }
          if (space.quick_infinite(w, inf)) {
            ++lq;
            continue;
          }
          auto d = eng.pdim(space.module(w));
          if (d.is_infinite()) {
            ++li;
          } else if (d.kind == PdimResult::Kind::ExceedsCutoff) {
            ++lu;
            if (ex.size() < 3) ex.push_back(space.describe(w));
          } else {
            Best one;
            one.value = d.value, one.cand = ci, one.idx = idx, one.count = 1, one.w = w;
            local.merge(one);
          }
        }
      }
      std::lock_guard<std::mutex> g(lock);
      obs.quick_infinite += lq, obs.infinite += li, obs.unresolved += lu;
      for (auto& e : ex)
        if (obs.unresolved_examples.size() < 5) obs.unresolved_examples.push_back(e);
      best.merge(local);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    obs.modules += total;
  }
  obs.value = std::max(0, best.value);
  obs.attaining_count = best.count;
  if (best.value >= 0) {
    Loewy2Space space(alg, cands[best.cand]);
    obs.attaining_mu = cands[best.cand];
    obs.attaining_graph = space.describe(best.w);
    for (auto& r : eng.resolution(space.module(best.w), best.value + 1))
      obs.attaining_resolution.push_back(r.total_dim());
  }
  obs.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return obs;
}

}  // namespace qstack
