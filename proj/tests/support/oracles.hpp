#pragma once

// Brute-force oracles, independent of the library's algorithmic paths; they
// define the expected values the implementation is checked against.

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <vector>

#include "tressec/graph_tree.hpp"
#include "tressec/separation_system.hpp"

namespace oracles {

using tressec::GraphTree;
using tressec::SeparationSystem;

// Consistency straight from the definition: no distinct separations r, s with
// orientations r < s such that inverse(r) and s are both present.
inline bool consistent_by_definition(const SeparationSystem& sys, const std::vector<int>& members) {
  for (int a : members)
    for (int b : members) {
      if (sys.canonical(a) == sys.canonical(b)) continue;
      if (sys.lt(sys.inverse(a), b)) return false;
    }
  return true;
}

// All full consistent orientations by trying all 2^|S| choice vectors.
inline std::vector<std::vector<int>> brute_force_consistent(const SeparationSystem& sys) {
  const auto reps = sys.separations();
  if (reps.size() > 20) throw std::logic_error("brute force oracle is limited to 20 separations");
  std::vector<std::vector<int>> found;
  const size_t total = size_t{1} << reps.size();
  for (size_t mask = 0; mask < total; ++mask) {
    std::vector<int> members;
    bool valid = true;
    for (size_t k = 0; k < reps.size(); ++k) {
      const int rep = reps[k];
      if (mask & (size_t{1} << k)) {
        if (sys.degenerate(rep)) {
          valid = false;  // degenerate separations have a single orientation
          break;
        }
        members.push_back(sys.inverse(rep));
      } else {
        members.push_back(rep);
      }
    }
    if (!valid) continue;
    std::sort(members.begin(), members.end());
    if (consistent_by_definition(sys, members)) found.push_back(std::move(members));
  }
  std::sort(found.begin(), found.end());
  return found;
}

inline std::vector<int> brute_force_maxima(const SeparationSystem& sys,
                                           const std::vector<int>& members) {
  std::vector<int> out;
  for (int a : members) {
    bool topped = false;
    for (int b : members)
      if (a != b && sys.le(a, b)) topped = true;
    if (!topped) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Splitting sets as max-element sets of the brute-forced orientations.
inline std::vector<std::vector<int>> brute_force_splitting_sets(const SeparationSystem& sys) {
  std::vector<std::vector<int>> out;
  for (const auto& orientation : brute_force_consistent(sys))
    out.push_back(brute_force_maxima(sys, orientation));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// The natural edge order by literally walking the tree: find the unique path
// between the two edges and read off which endpoints it joins.
inline bool edge_le_by_path(const GraphTree& tree, int d, int e) {
  if (d == e) return true;
  if (d / 2 == e / 2) return false;
  const int x = tree.tail(d), y = tree.head(d);
  const int u = tree.tail(e), v = tree.head(e);
  // BFS from {x, y} to the first of {u, v}; parents give the path.
  std::vector<int> parent(tree.node_count(), -1);
  std::vector<bool> seen(tree.node_count(), false);
  std::queue<int> frontier;
  seen[x] = seen[y] = true;
  frontier.push(x);
  frontier.push(y);
  int hit = -1;
  while (!frontier.empty() && hit == -1) {
    const int t = frontier.front();
    frontier.pop();
    if (t == u || t == v) {
      hit = t;
      break;
    }
    for (int w : tree.neighbors(t))
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = t;
        frontier.push(w);
      }
  }
  if (hit == -1) throw std::logic_error("tree is not connected");
  int start = hit;
  while (parent[start] != -1) start = parent[start];
  // The path joins `start` (an endpoint of d's edge) to `hit` (of e's edge);
  // d < e iff it joins head(d) to tail(e).
  return start == y && hit == u;
}

// The same order generated from adjacent edges only: (x,t) < (t,v) for edges
// meeting at t, transitively closed.
inline std::vector<std::vector<bool>> edge_order_by_star_adjacency(const GraphTree& tree) {
  const int m = tree.oriented_count();
  std::vector<std::vector<bool>> le(m, std::vector<bool>(m, false));
  for (int d = 0; d < m; ++d) le[d][d] = true;
  for (int d = 0; d < m; ++d)
    for (int e = 0; e < m; ++e)
      if (d / 2 != e / 2 && tree.head(d) == tree.tail(e) && tree.tail(d) != tree.head(e))
        le[d][e] = true;
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      if (le[i][k])
        for (int j = 0; j < m; ++j)
          if (le[k][j]) le[i][j] = true;
  return le;
}

}  // namespace oracles
