#include "qstack/stacking.hpp"

#include <sstream>

namespace qstack {

StackingPartition partition_from_ids(const Quiver& q, const std::vector<std::string>& lower,
                                     const std::vector<std::string>& upper, int complexity) {
  StackingPartition p;
  for (auto& v : lower) p.lower.push_back(q.vertex_index(v));
  for (auto& v : upper) p.upper.push_back(q.vertex_index(v));
  p.complexity = complexity;
  return p;
}

std::vector<char> ends_of_paths(const Quiver& q, int c) {
  // reach[v] after k rounds: v ends a path of length exactly k
  std::vector<char> cur(q.num_vertices(), 1);
  for (int k = 0; k < c; ++k) {
    std::vector<char> next(q.num_vertices(), 0);
    for (auto& a : q.arrows())
      if (cur[a.source]) next[a.target] = 1;
    cur = std::move(next);
  }
  return cur;
}

}  // namespace qstack
