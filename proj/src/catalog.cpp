#include "qstack/catalog.hpp"

#include <random>

namespace qstack {

Quiver loop_sink_quiver() {
  Quiver q;
  for (auto v : {"1", "2", "3", "4", "5"}) q.add_vertex(v);
  q.add_arrow("a12", "1", "2");
  q.add_arrow("a15", "1", "5");
  q.add_arrow("a23", "2", "3");
  q.add_arrow("a25", "2", "5");
  q.add_arrow("a34", "3", "4");
  q.add_arrow("a35", "3", "5");
  q.add_arrow("a45", "4", "5");
  q.add_arrow("l5", "5", "5");
  return q;
}

Quiver linear_a5_quiver() {
  Quiver q;
  for (auto v : {"1", "2", "3", "4", "5"}) q.add_vertex(v);
  for (int i = 1; i < 5; ++i) q.add_arrow("a" + std::to_string(i), std::to_string(i), std::to_string(i + 1));
  return q;
}

std::vector<Relation> all_length_two(const Quiver& q) {
  std::vector<Relation> out;
  for (int a = 0; a < q.num_arrows(); ++a)
    for (int b : q.arrows_from(q.arrow(a).target)) out.push_back(Relation::monomial(Path::arrow(q, a).then(q, b)));
  return out;
}

MonomialPresentation random_monomial(const RandomMonomialSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pct = [&](int p) { return static_cast<int>(rng() % 100) < p; };
  MonomialPresentation out;
  Quiver& q = out.quiver;
  for (int v = 0; v < spec.vertices; ++v) q.add_vertex("v" + std::to_string(v));
  for (int a = 0; a < spec.arrows; ++a) {
    int s = static_cast<int>(rng() % spec.vertices);
    int t = pct(spec.loops_pct) ? s : static_cast<int>(rng() % spec.vertices);
    q.add_arrow("x" + std::to_string(a), q.vertex(s), q.vertex(t));
  }
  out.nilp = spec.nilp;
  // kill length-two paths at random; then every surviving path of length
  // nilp, so the presentation is admissible
  std::vector<std::vector<int>> dead;
  for (int a = 0; a < q.num_arrows(); ++a)
    for (int b : q.arrows_from(q.arrow(a).target))
      if (pct(spec.kill_pct)) {
        out.relations.push_back(Relation::monomial(Path::arrow(q, a).then(q, b)));
        dead.push_back({a, b});
      }
  auto contains_dead = [&](const std::vector<int>& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
      for (auto& d : dead)
        if (w[i] == d[0] && w[i + 1] == d[1]) return true;
    return false;
  };
  if (spec.nilp > 2)
    for (auto& p : enumerate_paths(q, spec.nilp))
      if (p.length() == spec.nilp && !contains_dead(p.arrows())) out.relations.push_back(Relation::monomial(p));
  return out;
}

}  // namespace qstack
