#include "tressec/graph_tree.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace tressec {

GraphTree::GraphTree(std::vector<std::string> nodes, std::vector<std::pair<int, int>> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  const int n = node_count();
  require(n >= 1, errc::precondition_violated, "a tree has at least one node");
  require(static_cast<int>(edges_.size()) == n - 1, errc::precondition_violated,
          "a tree on " + std::to_string(n) + " nodes has " + std::to_string(n - 1) + " edges");
  std::set<std::string> seen(nodes_.begin(), nodes_.end());
  require(static_cast<int>(seen.size()) == n, errc::precondition_violated,
          "node labels must be distinct");
  adjacency_.assign(n, {});
  for (const auto& [u, v] : edges_) {
    require(u >= 0 && u < n && v >= 0 && v < n, errc::unknown_node, "edge endpoint out of range");
    require(u != v, errc::precondition_violated, "loops are not allowed");
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  // Connectivity; acyclicity then follows from the edge count.
  std::vector<bool> visited(n, false);
  std::queue<int> frontier;
  frontier.push(0);
  visited[0] = true;
  int reached = 1;
  while (!frontier.empty()) {
    const int t = frontier.front();
    frontier.pop();
    for (int u : adjacency_[t])
      if (!visited[u]) {
        visited[u] = true;
        ++reached;
        frontier.push(u);
      }
  }
  require(reached == n, errc::precondition_violated, "tree is not connected");

  head_side_.assign(oriented_count(), std::vector<bool>(n, false));
  for (int d = 0; d < oriented_count(); ++d) {
    std::vector<bool>& side = head_side_[d];
    std::queue<int> queue;
    queue.push(head(d));
    side[head(d)] = true;
    while (!queue.empty()) {
      const int t = queue.front();
      queue.pop();
      for (int u : adjacency_[t]) {
        if (side[u]) continue;
        if (t == head(d) && u == tail(d)) continue;  // the removed edge
        side[u] = true;
        queue.push(u);
      }
    }
  }
}

int GraphTree::node_index(const std::string& label) const {
  for (int t = 0; t < node_count(); ++t)
    if (nodes_[t] == label) return t;
  fail(errc::unknown_node, "no node labelled '" + label + "'");
}

bool GraphTree::adjacent(int u, int v) const {
  const auto& nb = adjacency_[u];
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

int GraphTree::tail(int oriented) const {
  const auto& [u, v] = edges_[oriented / 2];
  return (oriented & 1) ? v : u;
}

int GraphTree::head(int oriented) const {
  const auto& [u, v] = edges_[oriented / 2];
  return (oriented & 1) ? u : v;
}

int GraphTree::oriented_between(int from, int to) const {
  for (int k = 0; k < edge_count(); ++k) {
    if (edges_[k] == std::pair{from, to}) return 2 * k;
    if (edges_[k] == std::pair{to, from}) return 2 * k + 1;
  }
  fail(errc::unknown_node, "no edge between the given nodes");
}

bool GraphTree::edge_le(int d, int e) const {
  if (d == e) return true;
  if (d / 2 == e / 2) return false;  // two orientations of one edge are incomparable
  // The path between the two edges joins head(d) to tail(e) iff both ends of
  // e lie on the head side of d and both ends of d lie on the tail side of e.
  const std::vector<bool>& ahead = head_side_[d];
  const std::vector<bool>& behind = head_side_[reverse(e)];
  return ahead[tail(e)] && ahead[head(e)] && behind[tail(d)] && behind[head(d)];
}

SeparationSystem edge_tree_set(const GraphTree& tree) {
  const int m = tree.oriented_count();
  std::vector<int> inv(m);
  std::vector<std::string> labels(m);
  for (int d = 0; d < m; ++d) {
    inv[d] = tree.reverse(d);
    labels[d] = "(" + tree.node_label(tree.tail(d)) + "," + tree.node_label(tree.head(d)) + ")";
  }
  std::vector<std::pair<int, int>> gens;
  for (int d = 0; d < m; ++d)
    for (int e = 0; e < m; ++e)
      if (d != e && tree.edge_le(d, e)) gens.emplace_back(d, e);
  SeparationSystem sys = SeparationSystem::build_exact(m, std::move(inv), gens, std::move(labels));
  require(is_regular(sys) && is_tree_set(sys), errc::violation_found,
          "edge tree set failed to validate as a regular tree set");
  return sys;
}

std::vector<int> oriented_star_at(const GraphTree& tree, int t) {
  require(t >= 0 && t < tree.node_count(), errc::unknown_node, "node index out of range");
  std::vector<int> star;
  for (int x : tree.neighbors(t)) star.push_back(tree.oriented_between(x, t));
  return normalize_set(std::move(star));
}

std::vector<int> node_orientation(const GraphTree& tree, int t) {
  require(t >= 0 && t < tree.node_count(), errc::unknown_node, "node index out of range");
  std::vector<int> out;
  for (int d = 0; d < tree.oriented_count(); ++d)
    if (tree.head_side(d)[t]) out.push_back(d);
  return normalize_set(std::move(out));
}

SplittingStarReport check_splitting_stars(const GraphTree& tree) {
  SplittingStarReport report;
  const SeparationSystem tau = edge_tree_set(tree);
  for (const auto& split : splitting_stars(tau)) report.computed.push_back(split.members);
  for (int t = 0; t < tree.node_count(); ++t) report.expected.push_back(oriented_star_at(tree, t));
  std::sort(report.computed.begin(), report.computed.end());
  std::sort(report.expected.begin(), report.expected.end());
  report.expected.erase(std::unique(report.expected.begin(), report.expected.end()),
                        report.expected.end());
  report.match = report.computed == report.expected;
  require(report.match, errc::mismatch,
          "splitting stars do not match the oriented node stars");
  return report;
}

std::string orientation_fingerprint(const std::vector<int>& orientation) {
  return "O" + set_to_string(orientation);
}

TreeFromTreeSet tree_from_treeset(const SeparationSystem& tau, const EnumerationLimits& limits) {
  require(is_tree_set(tau), errc::not_a_tree_set,
          "reconstruction needs a nested essential system");
  const auto orientations = enumerate_consistent(tau, limits);

  // t_fwd[s]: the unique orientation in which s is maximal.
  std::vector<int> t_fwd(tau.count(), -1);
  for (size_t o = 0; o < orientations.size(); ++o)
    for (int s : maximal_elements(tau, orientations[o])) {
      require(t_fwd[s] == -1, errc::not_a_tree_set,
              "element maximal in two consistent orientations");
      t_fwd[s] = static_cast<int>(o);
    }
  for (int s = 0; s < tau.count(); ++s)
    require(t_fwd[s] != -1, errc::not_a_tree_set,
            "element maximal in no consistent orientation");

  std::vector<std::string> labels;
  labels.reserve(orientations.size());
  for (const auto& orientation : orientations)
    labels.push_back(orientation_fingerprint(orientation));

  TreeFromTreeSet out{GraphTree({"O{}"}, {}), {}, {}, {}};
  std::vector<std::pair<int, int>> edges;
  out.oriented_edge_of.assign(tau.count(), -1);
  for (int rep : tau.separations()) {
    const int fwd = t_fwd[rep], bwd = t_fwd[tau.inverse(rep)];
    require(fwd != bwd, errc::not_a_tree_set, "separation with a loop in the reconstruction");
    // Edge 2k is oriented like rep: from the node where inverse(rep) is
    // maximal to the node where rep is.
    out.oriented_edge_of[rep] = 2 * static_cast<int>(edges.size());
    out.oriented_edge_of[tau.inverse(rep)] = 2 * static_cast<int>(edges.size()) + 1;
    edges.emplace_back(bwd, fwd);
  }
  out.tree = GraphTree(std::move(labels), std::move(edges));
  out.system_index_of.assign(tau.count(), -1);
  for (int s = 0; s < tau.count(); ++s) out.system_index_of[out.oriented_edge_of[s]] = s;
  out.orientations = orientations;
  return out;
}

bool verify_identity_isomorphism(const SeparationSystem& tau_prime,
                                 const EnumerationLimits& limits) {
  require(is_regular(tau_prime), errc::not_regular, "identity verification requires a regular tree set");
  const TreeFromTreeSet rebuilt = tree_from_treeset(tau_prime, limits);
  const SeparationSystem tau = edge_tree_set(rebuilt.tree);
  for (int i = 0; i < tau_prime.count(); ++i)
    if (rebuilt.oriented_edge_of[tau_prime.inverse(i)] !=
        tau.inverse(rebuilt.oriented_edge_of[i]))
      return false;
  for (int i = 0; i < tau_prime.count(); ++i)
    for (int j = 0; j < tau_prime.count(); ++j)
      if (tau_prime.le(i, j) !=
          tau.le(rebuilt.oriented_edge_of[i], rebuilt.oriented_edge_of[j]))
        return false;
  return true;
}

bool verify_node_bijection(const GraphTree& tree, const EnumerationLimits& limits) {
  const SeparationSystem tau = edge_tree_set(tree);
  const TreeFromTreeSet rebuilt = tree_from_treeset(tau, limits);
  std::vector<int> image(tree.node_count(), -1);
  std::vector<bool> hit(rebuilt.tree.node_count(), false);
  for (int t = 0; t < tree.node_count(); ++t) {
    const auto o_t = node_orientation(tree, t);
    const auto it = std::find(rebuilt.orientations.begin(), rebuilt.orientations.end(), o_t);
    if (it == rebuilt.orientations.end()) return false;
    image[t] = static_cast<int>(it - rebuilt.orientations.begin());
    if (hit[image[t]]) return false;  // not injective
    hit[image[t]] = true;
  }
  if (tree.node_count() != rebuilt.tree.node_count()) return false;  // not surjective
  for (int t = 0; t < tree.node_count(); ++t)
    for (int u = 0; u < tree.node_count(); ++u)
      if (tree.adjacent(t, u) != rebuilt.tree.adjacent(image[t], image[u])) return false;
  return true;
}

}  // namespace tressec
