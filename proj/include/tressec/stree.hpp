#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tressec/graph_tree.hpp"
#include "tressec/orientation.hpp"
#include "tressec/separation_system.hpp"

namespace tressec {

/// A tree with an edge labelling into a host separation system that commutes
/// with inversion: alpha(y,x) is the inverse of alpha(x,y).
class STree {
 public:
  STree(GraphTree tree, std::shared_ptr<const SeparationSystem> host, std::vector<int> alpha);

  const GraphTree& tree() const { return tree_; }
  const SeparationSystem& host() const { return *host_; }
  const std::shared_ptr<const SeparationSystem>& host_ptr() const { return host_; }
  int alpha(int oriented_edge) const { return alpha_[oriented_edge]; }
  const std::vector<int>& alpha() const { return alpha_; }

  /// The labels of the oriented star at a node, as a set.
  std::vector<int> star_image(int node) const;
  /// True when every node's star image is a star in the host.
  bool over_stars() const;

 private:
  GraphTree tree_;
  std::shared_ptr<const SeparationSystem> host_;
  std::vector<int> alpha_;
};

/// A family of subsets of the host's oriented separations.
class StarFamily {
 public:
  explicit StarFamily(std::vector<std::vector<int>> members);

  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<std::vector<int>>& members() const { return members_; }
  bool contains(const std::vector<int>& member) const;

  bool stars_only(const SeparationSystem& sys) const;

  /// The family {alpha(star at t) : t} of the given S-tree.
  static StarFamily of_stree(const STree& st);

  bool operator==(const StarFamily& other) const = default;

 private:
  std::vector<std::vector<int>> members_;
};

/// Every node's star image belongs to the family.
bool is_over(const STree& st, const StarFamily& family);

/// The family contains every co-trivial singleton of the system.
bool is_standard(const SeparationSystem& sys, const StarFamily& family);

/// A node with two distinct neighbours reached by equal labels.
bool is_redundant(const STree& st);

/// Deletes redundant branches until irredundant; each step removes, at the
/// lexicographically least witness (by node labels), the component of T - t
/// containing the second neighbour.  Star images survive as sets.
STree prune(const STree& st);

struct OrderPreservationReport {
  bool image_nested = true;
  int comparable_pairs = 0;      // oriented edge pairs with e <= f
  int exception_small = 0;       // alpha(e) = alpha(reverse(f)) small
  int exception_trivial = 0;     // alpha(e) or alpha(reverse(f)) trivial
};

/// For irredundant S-trees over stars: e <= f implies alpha(e) <= alpha(f),
/// and the converse of the strict form holds except in the documented small /
/// trivial cases.  A violation indicates an implementation bug.
OrderPreservationReport check_order_preserving(const STree& st);

/// All star images are antisymmetric.
bool is_tight(const STree& st);

/// Contracts label repetitions alpha(t',t) = alpha(t,t'') until tight; prunes
/// first if needed.  Each step deletes the part hanging between t' and t''
/// and joins t' to t'' with the repeated label, making the result a minor of
/// the input tree.
STree tighten(const STree& st);

struct FacingDuplicateReport {
  int facing_pairs = 0;  // pairs e < reverse(f) with alpha(e) = alpha(f), all trivial
};

/// Distinct edges with orientations pointing towards each other can only
/// carry the same label if that label is trivial.
FacingDuplicateReport check_no_facing_duplicates(const STree& st);

/// Irredundant, tight, and no trivial labels.
bool is_essential(const STree& st);

/// Each member with its trivial elements removed, deduplicated.
StarFamily essential_core_of(const StarFamily& family, const SeparationSystem& sys);

struct Essentialized {
  STree stree;
  StarFamily family_core;
};

/// Prunes and tightens if necessary, then deletes every trivially labelled
/// edge together with its initial vertex.  The trivially labelled oriented
/// edges are down-closed, so the rest is a tree (possibly a single node).
Essentialized essentialize(const STree& st, const StarFamily& family);

/// For an essential S-tree over stars the labelling is injective on oriented
/// edges; false is never returned, a violation throws.
bool check_injective(const STree& st);

/// One direction of the reconstruction: a finite nested system over a
/// star family yields an essential S-tree whose labelling is an isomorphism
/// from the edge tree set of its tree onto the regularization of the
/// essential core, with star images exactly the splitting sets.
STree stree_from_treeset(std::shared_ptr<const SeparationSystem> sys, const StarFamily& family,
                         const EnumerationLimits& limits = {});

struct StreeImage {
  InducedSubsystem image;  // alpha(E(T)) inside the host
  bool isomorphism_verified = false;
};

/// The other direction: the image of an essential S-tree over stars is an
/// essential tree set, and alpha is an isomorphism from the edge tree set of
/// T onto its regularization.
StreeImage treeset_from_stree(const STree& st);

struct CanonicalizeLog {
  std::vector<std::string> steps;
  int pruned = 0, contracted = 0, deleted_edges = 0;
};

/// prune, tighten, essentialize; logs one line per elementary step.
std::pair<STree, CanonicalizeLog> canonicalize(const STree& st, const StarFamily& family);

}  // namespace tressec
