#include "qstack/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qstack {

int Quiver::add_vertex(const std::string& id) {
  if (id.empty()) throw std::invalid_argument("empty vertex id");
  if (vidx_.count(id)) throw std::invalid_argument("duplicate vertex '" + id + "'");
  vidx_[id] = num_vertices();
  vertices_.push_back(id);
  out_.emplace_back();
  in_.emplace_back();
  return num_vertices() - 1;
}

int Quiver::add_arrow(const std::string& id, const std::string& source, const std::string& target) {
  if (id.empty()) throw std::invalid_argument("empty arrow id");
  if (aidx_.count(id)) throw std::invalid_argument("duplicate arrow '" + id + "'");
  int s = vertex_index(source), t = vertex_index(target);
  int a = num_arrows();
  aidx_[id] = a;
  arrows_.push_back({id, s, t});
  out_[s].push_back(a);
  in_[t].push_back(a);
  return a;
}

std::optional<int> Quiver::find_vertex(const std::string& id) const {
  auto it = vidx_.find(id);
  if (it == vidx_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Quiver::find_arrow(const std::string& id) const {
  auto it = aidx_.find(id);
  if (it == aidx_.end()) return std::nullopt;
  return it->second;
}

int Quiver::vertex_index(const std::string& id) const {
  auto v = find_vertex(id);
  if (!v) throw std::invalid_argument("unknown vertex '" + id + "'");
  return *v;
}

int Quiver::arrow_index(const std::string& id) const {
  auto a = find_arrow(id);
  if (!a) throw std::invalid_argument("unknown arrow '" + id + "'");
  return *a;
}

std::vector<int> Quiver::sources() const {
  std::vector<int> out;
  for (int v = 0; v < num_vertices(); ++v)
    if (is_source(v)) out.push_back(v);
  return out;
}

Quiver Quiver::full_subquiver(const std::vector<int>& vs, std::vector<int>* arrow_map) const {
  Quiver sub;
  std::vector<char> in(num_vertices(), 0);
  for (int v : vs) {
    in.at(v) = 1;
    sub.add_vertex(vertices_[v]);
  }
  if (arrow_map) arrow_map->clear();
  for (int a = 0; a < num_arrows(); ++a) {
    const Arrow& ar = arrows_[a];
    if (in[ar.source] && in[ar.target]) {
      sub.add_arrow(ar.id, vertices_[ar.source], vertices_[ar.target]);
      if (arrow_map) arrow_map->push_back(a);
    }
  }
  return sub;
}

Path Path::from_arrows(const Quiver& q, const std::vector<int>& arrows, int vertex_if_empty) {
  if (arrows.empty()) {
    if (vertex_if_empty < 0) throw std::invalid_argument("trivial path needs a vertex");
    return trivial(vertex_if_empty);
  }
  Path p = arrow(q, arrows[0]);
  for (size_t i = 1; i < arrows.size(); ++i) p = p.then(q, arrows[i]);
  return p;
}

Path Path::then(const Quiver& q, int a) const {
  const Arrow& ar = q.arrow(a);
  if (ar.source != target_)
    throw std::invalid_argument("arrow '" + ar.id + "' does not start where the path ends");
  Path p = *this;
  p.arrows_.push_back(a);
  p.target_ = ar.target;
  return p;
}

bool operator<(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.length() == 0) return a.source_ < b.source_;
  return a.arrows_ < b.arrows_;
}

std::optional<Path> compose(const Path& p, const Path& q) {
  if (q.target_ != p.source_) return std::nullopt;
  Path r = q;
  r.arrows_.insert(r.arrows_.end(), p.arrows_.begin(), p.arrows_.end());
  r.target_ = p.target_;
  return r;
}

std::vector<Path> enumerate_paths(const Quiver& q, int max_len, std::size_t cap) {
  if (max_len < 0) throw std::invalid_argument("max_len must be >= 0");
  std::vector<Path> out;
  std::vector<Path> layer;
  for (int v = 0; v < q.num_vertices(); ++v) layer.push_back(Path::trivial(v));
  out = layer;
  for (int len = 1; len <= max_len && !layer.empty(); ++len) {
    std::vector<Path> next;
    for (const Path& p : layer)
      for (int a : q.arrows_from(p.target())) {
        next.push_back(p.then(q, a));
        if (out.size() + next.size() > cap) throw std::length_error("path enumeration exceeds cap");
      }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::string format_path(const Quiver& q, const Path& p) {
  if (p.length() == 0) return "e_" + q.vertex(p.source());
  std::string s;
  for (int i = p.length() - 1; i >= 0; --i) {
    s += q.arrow(p.arrows()[i]).id;
    if (i) s += "*";
  }
  return s;
}

Path parse_path(const Quiver& q, const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty path");
  if (t.rfind("e_", 0) == 0 && q.find_vertex(t.substr(2)) && !q.find_arrow(t))
    return Path::trivial(q.vertex_index(t.substr(2)));
  if (!q.find_arrow(t) && q.find_vertex(t)) return Path::trivial(q.vertex_index(t));
  std::vector<int> word;
  std::stringstream ss(t);
  std::string tok;
  while (std::getline(ss, tok, '*')) {
    if (tok.empty()) throw std::invalid_argument("empty factor in path '" + text + "'");
    word.push_back(q.arrow_index(tok));
  }
  std::reverse(word.begin(), word.end());
  for (size_t i = 1; i < word.size(); ++i)
    if (q.arrow(word[i - 1]).target != q.arrow(word[i]).source)
      throw std::invalid_argument("path '" + text + "' does not compose");
  return Path::from_arrows(q, word);
}

}  // namespace qstack
