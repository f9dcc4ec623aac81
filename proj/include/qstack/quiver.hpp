#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qstack {

struct Arrow {
  std::string id;
  int source;
  int target;
};

class Quiver {
 public:
  int add_vertex(const std::string& id);
  int add_arrow(const std::string& id, const std::string& source, const std::string& target);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex(int v) const { return vertices_.at(v); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<int> find_vertex(const std::string& id) const;
  std::optional<int> find_arrow(const std::string& id) const;
  int vertex_index(const std::string& id) const;  // throws on unknown ids
  int arrow_index(const std::string& id) const;

  const std::vector<int>& arrows_from(int v) const { return out_.at(v); }
  const std::vector<int>& arrows_into(int v) const { return in_.at(v); }
  bool is_source(int v) const { return in_.at(v).empty(); }
  std::vector<int> sources() const;

  // Full subquiver on the given vertices (kept in the given order).
  // arrow_map receives, per arrow of the result, the index of the
  // arrow it came from.
  Quiver full_subquiver(const std::vector<int>& vs, std::vector<int>* arrow_map = nullptr) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vidx_, aidx_;
  std::vector<std::vector<int>> out_, in_;
};

// Arrows are kept in traversal order; the printed form reads right to left,
// so "b*a" means a first, then b.
class Path {
 public:
  Path() = default;
  static Path trivial(int v) {
    Path p;
    p.source_ = p.target_ = v;
    return p;
  }
  static Path arrow(const Quiver& q, int a) {
    Path p;
    p.source_ = q.arrow(a).source;
    p.target_ = q.arrow(a).target;
    p.arrows_.push_back(a);
    return p;
  }
  // Arrows in traversal order; throws if they do not compose.
  static Path from_arrows(const Quiver& q, const std::vector<int>& arrows, int vertex_if_empty = -1);

  int source() const { return source_; }
  int target() const { return target_; }
  int length() const { return static_cast<int>(arrows_.size()); }
  const std::vector<int>& arrows() const { return arrows_; }

  // This path followed by arrow a.
  Path then(const Quiver& q, int a) const;

  friend bool operator==(const Path& a, const Path& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.arrows_ == b.arrows_;
  }
  friend bool operator<(const Path& a, const Path& b);
  friend std::optional<Path> compose(const Path& p, const Path& q);

 private:
  int source_ = -1;
  int target_ = -1;
  std::vector<int> arrows_;
};

// pq: q first, then p.
std::optional<Path> compose(const Path& p, const Path& q);

// All paths of length <= max_len, by length and then lexicographically in
// arrow order; trivial paths come in vertex order.
std::vector<Path> enumerate_paths(const Quiver& q, int max_len, std::size_t cap = 2000000);

std::string format_path(const Quiver& q, const Path& p);
// Accepts "b*a" words or "e_v" / a bare vertex id for trivial paths.
Path parse_path(const Quiver& q, const std::string& text);

}  // namespace qstack
