#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tressec/graph_tree.hpp"
#include "tressec/stree.hpp"

namespace tressec {

/// A finite simple graph with labelled vertices.
class Graph {
 public:
  Graph(std::vector<std::string> vertices, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertex_labels() const { return vertices_; }
  const std::string& vertex_label(int v) const { return vertices_[v]; }
  int vertex_index(const std::string& label) const;  // unknown_element if absent
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  std::vector<std::string> vertices_;
  std::vector<std::pair<int, int>> edges_;
};

/// A and B cover the vertex set and no edge runs between A minus B and B
/// minus A.  Improper separations (e.g. (V, V)) are allowed.
bool is_graph_separation(const Graph& graph, const std::vector<int>& a, const std::vector<int>& b);

/// Parts indexed by the nodes of a decomposition tree, covering the graph
/// (vertices and edges) and satisfying the path-intersection property.
class TreeDecomposition {
 public:
  TreeDecomposition(Graph graph, GraphTree tree, std::vector<std::vector<int>> parts);

  const Graph& graph() const { return graph_; }
  const GraphTree& tree() const { return tree_; }
  const std::vector<std::vector<int>>& parts() const { return parts_; }
  const std::vector<int>& part(int t) const { return parts_[t]; }

 private:
  Graph graph_;
  GraphTree tree_;
  std::vector<std::vector<int>> parts_;
};

using VertexBipartition = std::pair<std::vector<int>, std::vector<int>>;

/// The S-tree a decomposition induces: each oriented tree edge maps to the
/// oriented separation (union of parts behind it, union of parts ahead of
/// it).  Distinct tree edges with equal separations share one host index.
struct ExtractedSTree {
  STree stree;
  std::vector<VertexBipartition> sides;  // host index -> (A, B)
};

ExtractedSTree extract_separations(const TreeDecomposition& decomposition);

/// Recomputes parts as the intersection of the right-hand sides over each
/// node's star (the empty intersection being the whole vertex set).
std::vector<std::vector<int>> parts_from_stree(const STree& st,
                                               const std::vector<VertexBipartition>& sides,
                                               int vertex_count);

/// Rebuilds a tree-decomposition from a tree set of oriented graph
/// separations (closed under inversion, nested, without trivial or degenerate
/// elements).  The induced S-tree's splitting sets serve as the star family.
TreeDecomposition decomposition_from_treeset(const Graph& graph,
                                             const std::vector<VertexBipartition>& separations,
                                             const EnumerationLimits& limits = {});

}  // namespace tressec
