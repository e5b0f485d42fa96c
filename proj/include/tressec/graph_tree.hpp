#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tressec/orientation.hpp"
#include "tressec/separation_system.hpp"

namespace tressec {

/// A finite tree as a graph: nonempty, connected, acyclic, distinct node
/// labels.  Oriented edges are indexed 2k = (u_k -> v_k) and 2k+1 = the
/// reverse, for edge k of the edge list.
class GraphTree {
 public:
  GraphTree(std::vector<std::string> nodes, std::vector<std::pair<int, int>> edges);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int oriented_count() const { return 2 * edge_count(); }

  const std::vector<std::string>& node_labels() const { return nodes_; }
  const std::string& node_label(int t) const { return nodes_[t]; }
  int node_index(const std::string& label) const;  // unknown_node if absent

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int t) const { return adjacency_[t]; }
  bool adjacent(int u, int v) const;

  int reverse(int oriented) const { return oriented ^ 1; }
  int tail(int oriented) const;  // initial node of the oriented edge
  int head(int oriented) const; // terminal node
  int oriented_between(int from, int to) const;  // unknown_node if not an edge

  /// The natural partial order on oriented edges: (x,y) < (u,v) iff the edges
  /// differ and the unique path between them joins y to u.
  bool edge_le(int d, int e) const;

  /// Nodes of the component of the tree minus the given edge that contains
  /// the edge's head.
  const std::vector<bool>& head_side(int oriented) const { return head_side_[oriented]; }

 private:
  std::vector<std::string> nodes_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<bool>> head_side_;
};

/// The edge tree set of a tree; system index i is oriented edge i, labelled
/// "(x,y)" from the node labels.  Always a regular tree set.
SeparationSystem edge_tree_set(const GraphTree& tree);

/// Oriented star at a node: all edges at t oriented towards t.
std::vector<int> oriented_star_at(const GraphTree& tree, int t);

/// O_t: every edge oriented towards t.  Always a full consistent orientation
/// of the edge tree set.
std::vector<int> node_orientation(const GraphTree& tree, int t);

struct SplittingStarReport {
  bool match = false;
  std::vector<std::vector<int>> computed;  // splitting stars of the edge tree set
  std::vector<std::vector<int>> expected;  // the oriented stars at the nodes
};

/// Checks that the splitting stars of the edge tree set are exactly the
/// oriented node stars; a mismatch indicates an implementation bug.
SplittingStarReport check_splitting_stars(const GraphTree& tree);

/// The tree built on the consistent orientations of a tree set: one node per
/// orientation (labelled by its canonical fingerprint), one edge per
/// separation joining the two orientations in which its respective
/// orientations are maximal.
struct TreeFromTreeSet {
  GraphTree tree;
  std::vector<int> oriented_edge_of;            // system index -> oriented edge
  std::vector<int> system_index_of;             // oriented edge -> system index
  std::vector<std::vector<int>> orientations;   // node -> consistent orientation
};

TreeFromTreeSet tree_from_treeset(const SeparationSystem& tau,
                                  const EnumerationLimits& limits = {});

std::string orientation_fingerprint(const std::vector<int>& orientation);

/// For a finite regular tree set, the identity map onto the edge
/// tree set of the reconstructed tree preserves order and involution.
bool verify_identity_isomorphism(const SeparationSystem& tau_prime,
                                 const EnumerationLimits& limits = {});

/// t -> O_t is a graph isomorphism between a finite tree and the
/// tree reconstructed from its edge tree set.
bool verify_node_bijection(const GraphTree& tree, const EnumerationLimits& limits = {});

}  // namespace tressec
