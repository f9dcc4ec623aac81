#include "qstack/family.hpp"

#include <sstream>

namespace qstack {

namespace names {
std::string a(int l) { return "a" + std::to_string(l); }
std::string b(int l) { return "b" + std::to_string(l); }
std::string c(int j) { return "c" + std::to_string(j); }
std::string bp(int l) { return "b'" + std::to_string(l); }
std::string gamma(int j) { return "gamma" + std::to_string(j); }
std::string alpha(int l, int i) { return "alpha" + std::to_string(l) + "_" + std::to_string(i); }
std::string alphap(int l, int j) { return "alpha'" + std::to_string(l) + "_" + std::to_string(j); }
std::string beta(int l) { return "beta" + std::to_string(l); }
std::string betap(int l) { return "beta'" + std::to_string(l); }
std::string eps(int l) { return "eps" + std::to_string(l); }
std::string epsp(int l) { return "eps'" + std::to_string(l); }
}  // namespace names

using namespace names;

StepFunction StepFunction::make(int r, int m, int s) {
  StepFunction f;
  f.r = r, f.m = m, f.s = s;
  f.validate();
  return f;
}

StepFunction StepFunction::make(int r, int m, int s, int n, int t) {
  StepFunction f;
  f.r = r, f.m = m, f.s = s, f.n = n, f.t = t;
  f.validate();
  return f;
}

void StepFunction::validate() const {
  if (r < 2) throw std::invalid_argument("f takes values >= 2");
  if (m < 2) throw std::invalid_argument("the first jump threshold must be >= 2");
  if (s < 0 || t < 0) throw std::invalid_argument("f must be increasing");
  if (t > 0 && (s == 0 || n <= m)) throw std::invalid_argument("jump thresholds must increase");
}

StepFunction StepFunction::parse(const std::string& text) {
  std::vector<std::pair<int, int>> pts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto c = item.find(':');
    if (c == std::string::npos) throw std::invalid_argument("jump '" + item + "' is not of the form k:value");
    try {
      pts.push_back({std::stoi(item.substr(0, c)), std::stoi(item.substr(c + 1))});
    } catch (const std::logic_error&) {
      throw std::invalid_argument("jump '" + item + "' is not of the form k:value");
    }
  }
  if (pts.empty() || pts.front().first != 1) throw std::invalid_argument("the jump list must start with 1:r");
  for (size_t i = 1; i < pts.size(); ++i)
    if (pts[i].first <= pts[i - 1].first || pts[i].second <= pts[i - 1].second)
      throw std::invalid_argument("thresholds and values must strictly increase");
  if (pts.size() > 3)
    throw std::invalid_argument(
        "three or more jumps are not supported: the construction recurses by adding one primed chain per jump, "
        "but only the one- and two-jump quivers are spelled out");
  StepFunction f;
  f.r = pts[0].second;
  if (pts.size() >= 2) f.m = pts[1].first, f.s = pts[1].second - f.r;
  if (pts.size() == 3) f.n = pts[2].first, f.t = pts[2].second - pts[1].second;
  f.validate();
  return f;
}

std::string StepFunction::str() const {
  std::string out = "1:" + std::to_string(r);
  if (s > 0) out += "," + std::to_string(m) + ":" + std::to_string(r + s);
  if (t > 0) out += "," + std::to_string(n) + ":" + std::to_string(r + s + t);
  return out;
}

LevelData level_data(const StepFunction& f, int k) {
  LevelData ld;
  auto arrow = [&](std::string id, std::string s, std::string t) { ld.arrows.push_back({id, s, t}); };
  if (k == 0) {
    ld.new_vertices.push_back(a(0));
    for (int j = 1; j <= f.r; ++j) ld.new_vertices.push_back(c(j));
    ld.new_vertices.push_back(b(-1));
    ld.new_vertices.push_back(b(0));
    arrow(gamma(0), a(0), c(1));
    for (int j = 1; j < f.r; ++j) arrow(gamma(j), c(j), c(j + 1));
    for (int i = 1; i <= f.m; ++i) arrow(alpha(0, i), a(0), b(-1));
    arrow(eps(-1), b(-1), b(-1));
    arrow(beta(0), b(0), b(-1));
    arrow(eps(0), b(0), b(0));
    ld.relations = {eps(-1) + "*" + eps(-1), eps(0) + "*" + eps(0), eps(-1) + "*" + beta(0), beta(0) + "*" + eps(0)};
    for (int j = 1; j < f.r; ++j) ld.relations.push_back(gamma(j) + "*" + gamma(j - 1));
    return ld;
  }
  if (k > f.d()) throw std::invalid_argument("level beyond the family");

  ld.new_vertices = {a(k), b(k)};
  arrow(eps(k), b(k), b(k));
  ld.relations.push_back(eps(k) + "*" + eps(k));
  ld.connecting.push_back({alpha(k, 0), a(k), a(k - 1)});
  for (int i = 1; i <= f.m; ++i) ld.connecting.push_back({alpha(k, i), a(k), b(k - 1)});
  ld.connecting.push_back({beta(k), b(k), b(k - 1)});
  ld.extra.push_back(k == 1 ? gamma(0) + "*" + alpha(1, 0) : alpha(k - 1, 0) + "*" + alpha(k, 0));
  for (int i = 1; i <= f.m; ++i) {
    ld.extra.push_back(eps(k - 1) + "*" + alpha(k, i));
    ld.extra.push_back(alpha(k - 1, i) + "*" + alpha(k, 0) + " - " + beta(k - 1) + "*" + alpha(k, i));
  }
  ld.extra.push_back(beta(k - 1) + "*" + beta(k));

  if (!f.two_jumps() || k < f.s) return ld;
  if (k == f.s) {
    ld.new_vertices.push_back(bp(-1));
    ld.new_vertices.push_back(bp(0));
    for (int j = 1; j <= f.n; ++j) arrow(alphap(0, j), a(k), bp(-1));
    arrow(epsp(-1), bp(-1), bp(-1));
    arrow(betap(0), bp(0), bp(-1));
    arrow(epsp(0), bp(0), bp(0));
    for (auto r : {epsp(-1) + "*" + epsp(-1), epsp(-1) + "*" + betap(0), betap(0) + "*" + epsp(0),
                   epsp(0) + "*" + epsp(0)})
      ld.relations.push_back(r);
    return ld;
  }
  const int l = k - f.s;
  ld.new_vertices.push_back(bp(l));
  arrow(epsp(l), bp(l), bp(l));
  ld.relations.push_back(epsp(l) + "*" + epsp(l));
  for (int j = 1; j <= f.n; ++j) ld.connecting.push_back({alphap(l, j), a(k), bp(l - 1)});
  ld.connecting.push_back({betap(l), bp(l), bp(l - 1)});
  for (int j = 1; j <= f.n; ++j) {
    ld.extra.push_back(epsp(l - 1) + "*" + alphap(l, j));
    ld.extra.push_back(alphap(l - 1, j) + "*" + alpha(k, 0) + " - " + betap(l - 1) + "*" + alphap(l, j));
  }
  ld.extra.push_back(betap(l - 1) + "*" + betap(l));
  return ld;
}

std::vector<std::vector<std::string>> alternate_layers(const StepFunction& f, int level) {
  std::vector<std::vector<std::string>> out((level + 1) / 2 + 1);
  for (int k = 0; k <= level; ++k) {
    for (auto& v : level_data(f, k).new_vertices) {
      int layer = (k + 1) / 2;
      if (v.rfind("b'", 0) == 0) layer = std::max(0, (std::stoi(v.substr(2)) + 1) / 2);
      out[layer].push_back(v);
    }
  }
  return out;
}

GraphSpec witness_graph(const StepFunction& f, int l) {
  GraphSpec g;
  g.comments.push_back(" N" + std::to_string(l) + ": witness of projective dimension " +
                       std::to_string(f.r + l));
  auto I = [](const char* p, int i) { return std::string(p) + std::to_string(i); };
  g.tops.push_back({"x0", a(l), 0});
  for (int i = 1; i <= f.m; ++i) g.tops.push_back({I("x", i), b(l), 0});
  const bool primed = f.two_jumps() && l > f.s;
  const int lp = l - f.s;
  if (primed)
    for (int j = 1; j <= f.n; ++j) g.tops.push_back({I("y", j), bp(lp), 0});
  for (int i = 1; i <= f.m; ++i) {
    g.edges.push_back({"x0", alpha(l, i), I("u", i), b(l - 1), 0});
    g.edges.push_back({I("x", i), beta(l), I("v", i), b(l - 1), 0});
    g.edges.push_back({I("x", i), eps(l), I("w", i), b(l), 0});
    g.identify.push_back({I("u", i), I("v", i), 0});
  }
  if (primed)
    for (int j = 1; j <= f.n; ++j) {
      g.edges.push_back({"x0", alphap(lp, j), I("p", j), bp(lp - 1), 0});
      g.edges.push_back({I("y", j), betap(lp), I("q", j), bp(lp - 1), 0});
      g.edges.push_back({I("y", j), epsp(lp), I("z", j), bp(lp), 0});
      g.identify.push_back({I("p", j), I("q", j), 0});
    }
  return g;
}

GraphSpec uniserial_x(int l) {
  GraphSpec g;
  g.tops.push_back({"x", b(l), 0});
  g.edges.push_back({"x", eps(l), "y", b(l), 0});
  return g;
}

std::vector<std::vector<std::string>> standard_layers(const StepFunction& f, int level) {
  std::vector<std::vector<std::string>> out;
  for (int k = 0; k <= level; ++k) out.push_back(level_data(f, k).new_vertices);
  return out;
}

}  // namespace qstack
