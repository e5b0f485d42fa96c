#include "tressec/graph_decomposition.hpp"

#include <algorithm>
#include <memory>
#include <queue>
#include <set>

namespace tressec {

Graph::Graph(std::vector<std::string> vertices, std::vector<std::pair<int, int>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const int n = vertex_count();
  std::set<std::string> seen(vertices_.begin(), vertices_.end());
  require(static_cast<int>(seen.size()) == n, errc::precondition_violated,
          "vertex labels must be distinct");
  std::set<std::pair<int, int>> undirected;
  for (auto& [u, v] : edges_) {
    require(u >= 0 && u < n && v >= 0 && v < n, errc::unknown_element,
            "edge endpoint out of range");
    require(u != v, errc::precondition_violated, "loops are not allowed");
    require(undirected.insert({std::min(u, v), std::max(u, v)}).second,
            errc::precondition_violated, "multi-edges are not allowed");
  }
}

int Graph::vertex_index(const std::string& label) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (vertices_[v] == label) return v;
  fail(errc::unknown_element, "no vertex labelled '" + label + "'");
}

bool is_graph_separation(const Graph& graph, const std::vector<int>& a, const std::vector<int>& b) {
  const int n = graph.vertex_count();
  std::vector<bool> in_a(n, false), in_b(n, false);
  for (int v : a) {
    if (v < 0 || v >= n) return false;
    in_a[v] = true;
  }
  for (int v : b) {
    if (v < 0 || v >= n) return false;
    in_b[v] = true;
  }
  for (int v = 0; v < n; ++v)
    if (!in_a[v] && !in_b[v]) return false;  // not covering
  for (const auto& [u, v] : graph.edges()) {
    const bool crosses = (in_a[u] && !in_b[u] && in_b[v] && !in_a[v]) ||
                         (in_a[v] && !in_b[v] && in_b[u] && !in_a[u]);
    if (crosses) return false;
  }
  return true;
}

TreeDecomposition::TreeDecomposition(Graph graph, GraphTree tree,
                                     std::vector<std::vector<int>> parts)
    : graph_(std::move(graph)), tree_(std::move(tree)), parts_(std::move(parts)) {
  require(static_cast<int>(parts_.size()) == tree_.node_count(), errc::invalid_decomposition,
          "one part per tree node is required");
  const int n = graph_.vertex_count();
  for (auto& part : parts_) {
    part = normalize_set(std::move(part));
    for (int v : part)
      require(v >= 0 && v < n, errc::invalid_decomposition, "part contains an unknown vertex");
  }
  std::vector<bool> covered(n, false);
  for (const auto& part : parts_)
    for (int v : part) covered[v] = true;
  for (int v = 0; v < n; ++v)
    require(covered[v], errc::invalid_decomposition,
            "vertex " + graph_.vertex_label(v) + " lies in no part");
  for (const auto& [u, v] : graph_.edges()) {
    bool housed = false;
    for (const auto& part : parts_)
      if (std::binary_search(part.begin(), part.end(), u) &&
          std::binary_search(part.begin(), part.end(), v)) {
        housed = true;
        break;
      }
    require(housed, errc::invalid_decomposition,
            "edge " + graph_.vertex_label(u) + "-" + graph_.vertex_label(v) +
                " lies in no part");
  }
  // Path-intersection: whenever t' separates t from t'' in the tree, the
  // parts at t and t'' meet inside the part at t'.
  for (int t = 0; t < tree_.node_count(); ++t)
    for (int u = 0; u < tree_.node_count(); ++u) {
      if (t == u) continue;
      for (int d = 0; d < tree_.oriented_count(); ++d) {
        // t' = head(d) lies on the t--u path iff t is behind d and u ahead.
        if (tree_.head_side(d)[t] || !tree_.head_side(d)[u]) continue;
        const int mid = tree_.head(d);
        if (mid == u) continue;
        for (int v : parts_[t])
          if (std::binary_search(parts_[u].begin(), parts_[u].end(), v))
            require(std::binary_search(parts_[mid].begin(), parts_[mid].end(), v),
                    errc::invalid_decomposition,
                    "vertex " + graph_.vertex_label(v) + " violates the path-intersection property");
      }
    }
}

ExtractedSTree extract_separations(const TreeDecomposition& decomposition) {
  const GraphTree& tree = decomposition.tree();
  const Graph& graph = decomposition.graph();

  // Oriented edge d -> union of parts over the component behind d.
  auto side_union = [&](int d, bool ahead) {
    std::vector<int> out;
    for (int t = 0; t < tree.node_count(); ++t)
      if (tree.head_side(d)[t] == ahead)
        for (int v : decomposition.part(t)) out.push_back(v);
    return normalize_set(std::move(out));
  };

  std::vector<VertexBipartition> per_edge(tree.oriented_count());
  for (int d = 0; d < tree.oriented_count(); ++d)
    per_edge[d] = {side_union(d, false), side_union(d, true)};

  std::vector<VertexBipartition> sides = per_edge;
  std::sort(sides.begin(), sides.end());
  sides.erase(std::unique(sides.begin(), sides.end()), sides.end());

  const int m = static_cast<int>(sides.size());
  std::vector<int> inv(m);
  std::vector<std::string> labels(m);
  auto find_side = [&](const VertexBipartition& pair) {
    const auto it = std::lower_bound(sides.begin(), sides.end(), pair);
    require(it != sides.end() && *it == pair, errc::violation_found, "separation lost");
    return static_cast<int>(it - sides.begin());
  };
  for (int i = 0; i < m; ++i) {
    inv[i] = find_side({sides[i].second, sides[i].first});
    std::string label = "(";
    for (size_t k = 0; k < sides[i].first.size(); ++k)
      label += (k ? " " : "") + graph.vertex_label(sides[i].first[k]);
    label += "|";
    for (size_t k = 0; k < sides[i].second.size(); ++k)
      label += (k ? " " : "") + graph.vertex_label(sides[i].second[k]);
    label += ")";
    labels[i] = std::move(label);
  }
  std::vector<std::pair<int, int>> gens;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j &&
          std::includes(sides[j].first.begin(), sides[j].first.end(), sides[i].first.begin(),
                        sides[i].first.end()) &&
          std::includes(sides[i].second.begin(), sides[i].second.end(), sides[j].second.begin(),
                        sides[j].second.end()))
        gens.emplace_back(i, j);

  auto host = std::make_shared<SeparationSystem>(
      SeparationSystem::build_exact(m, std::move(inv), gens, std::move(labels)));
  for (const auto& [a, b] : sides)
    require(is_graph_separation(graph, a, b), errc::invalid_decomposition,
            "an associated pair is not a separation of the graph");

  std::vector<int> alpha(tree.oriented_count());
  for (int d = 0; d < tree.oriented_count(); ++d) alpha[d] = find_side(per_edge[d]);
  ExtractedSTree out{STree(tree, std::move(host), std::move(alpha)), std::move(sides)};
  return out;
}

std::vector<std::vector<int>> parts_from_stree(const STree& st,
                                               const std::vector<VertexBipartition>& sides,
                                               int vertex_count) {
  std::vector<std::vector<int>> parts;
  for (int t = 0; t < st.tree().node_count(); ++t) {
    std::vector<int> part(vertex_count);
    for (int v = 0; v < vertex_count; ++v) part[v] = v;  // empty intersection convention
    for (int s : st.star_image(t)) {
      const auto& right = sides[s].second;
      std::vector<int> cut;
      std::set_intersection(part.begin(), part.end(), right.begin(), right.end(),
                            std::back_inserter(cut));
      part = std::move(cut);
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

TreeDecomposition decomposition_from_treeset(const Graph& graph,
                                             const std::vector<VertexBipartition>& separations,
                                             const EnumerationLimits& limits) {
  std::vector<VertexBipartition> sides;
  for (auto [a, b] : separations)
    sides.emplace_back(normalize_set(std::move(a)), normalize_set(std::move(b)));
  std::sort(sides.begin(), sides.end());
  sides.erase(std::unique(sides.begin(), sides.end()), sides.end());

  const int m = static_cast<int>(sides.size());
  std::vector<int> inv(m, -1);
  for (int i = 0; i < m; ++i) {
    require(is_graph_separation(graph, sides[i].first, sides[i].second),
            errc::not_separations_of_graph, "pair " + std::to_string(i) +
                " is not a separation of the graph");
    const VertexBipartition swapped{sides[i].second, sides[i].first};
    const auto it = std::lower_bound(sides.begin(), sides.end(), swapped);
    require(it != sides.end() && *it == swapped, errc::precondition_violated,
            "separation list is not closed under inversion");
    inv[i] = static_cast<int>(it - sides.begin());
  }
  std::vector<std::pair<int, int>> gens;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j &&
          std::includes(sides[j].first.begin(), sides[j].first.end(), sides[i].first.begin(),
                        sides[i].first.end()) &&
          std::includes(sides[i].second.begin(), sides[i].second.end(), sides[j].second.begin(),
                        sides[j].second.end()))
        gens.emplace_back(i, j);
  auto host = std::make_shared<SeparationSystem>(
      SeparationSystem::build_exact(m, std::move(inv), gens));

  require(is_nested(*host), errc::not_nested, "the separations are not nested");
  require(is_essential(*host), errc::not_essential,
          "the separations contain a trivial or degenerate element");

  std::vector<std::vector<int>> splitting;
  for (const auto& split : splitting_stars(*host, limits)) splitting.push_back(split.members);
  const STree st = stree_from_treeset(host, StarFamily(std::move(splitting)), limits);
  TreeDecomposition rebuilt(graph, st.tree(),
                            parts_from_stree(st, sides, graph.vertex_count()));

  // The decomposition must induce exactly the separations it was built from.
  const ExtractedSTree extracted = extract_separations(rebuilt);
  require(extracted.sides == sides, errc::violation_found,
          "rebuilt decomposition induces different separations");
  return rebuilt;
}

}  // namespace tressec
