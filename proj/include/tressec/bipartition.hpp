#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tressec/orientation.hpp"
#include "tressec/separation_system.hpp"

namespace tressec {

/// A symmetric set of ordered bipartitions (A, B) of a ground set: sides
/// disjoint, non-empty, covering, with (B, A) present whenever (A, B) is.
/// Sides are sorted lists of ground indices; pairs are stored deduplicated in
/// lexicographic order, so equal families compare equal.
class BipartitionFamily {
 public:
  using Side = std::vector<int>;
  using Pair = std::pair<Side, Side>;

  BipartitionFamily(std::vector<std::string> ground, std::vector<Pair> pairs);

  int ground_size() const { return static_cast<int>(ground_.size()); }
  const std::vector<std::string>& ground() const { return ground_; }
  const std::string& ground_label(int x) const { return ground_[x]; }
  int ground_index(const std::string& label) const;  // unknown_element if absent

  int pair_count() const { return static_cast<int>(pairs_.size()); }
  const Pair& pair(int p) const { return pairs_[p]; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  int inverse(int p) const { return inverse_[p]; }
  int find(const Pair& pair) const;  // -1 if absent

  /// The family as a separation system: inclusion order on first components,
  /// swap involution.
  SeparationSystem as_system() const;

  bool operator==(const BipartitionFamily& other) const {
    return ground_ == other.ground_ && pairs_ == other.pairs_;
  }

 private:
  std::vector<std::string> ground_;
  std::vector<Pair> pairs_;
  std::vector<int> inverse_;
};

/// An embedding of a tree set into a bipartition family: map[i] is the pair
/// representing oriented separation i.
struct FamilyEmbedding {
  BipartitionFamily family;
  std::vector<int> map;
  bool injective = true;
};

/// A finite regular tree set is isomorphic to the family of
/// bipartitions of itself in which the side of s consists of s, everything
/// strictly below s, and their inverses.
FamilyEmbedding simple_embed(const SeparationSystem& tau, const EnumerationLimits& limits = {});

/// s -> ({O : inverse(s) in O}, {O : s in O}) over the consistent
/// orientations is an isomorphism of tree sets.
FamilyEmbedding orientation_embed(const SeparationSystem& tau,
                                  const EnumerationLimits& limits = {});

/// Same construction over the directed consistent orientations only; an
/// isomorphism onto its image iff injective iff the tree set branches
/// everywhere.
FamilyEmbedding directed_embed(const SeparationSystem& tau, const EnumerationLimits& limits = {});

/// No inclusion-maximal proper star of order 2; equivalently every proper
/// 2-star extends to a proper 3-star.
bool is_ever_branching(const SeparationSystem& tau);

/// O_x: the pairs whose right side contains x.  Always a full consistent
/// orientation of the family system.
std::vector<int> induced_orientation(const BipartitionFamily& family, int x);

/// Unordered ground pairs never separated by the family.
std::vector<std::pair<int, int>> indistinguishable_pairs(const BipartitionFamily& family);

/// Collapses indistinguishable ground elements onto their least
/// representative (the footnote's deletion, offered as explicit
/// preprocessing).
struct DedupedFamily {
  BipartitionFamily family;
  std::vector<int> kept;         // new ground index -> old ground index
  std::vector<int> representative;  // old ground index -> new ground index
};
DedupedFamily dedupe(const BipartitionFamily& family);

/// When the family distinguishes all ground pairs and every
/// consistent orientation is induced by a ground element, x -> g(O_x) is a
/// bijection onto the consistent orientations of tau whose action on the
/// family equals the orientation embedding composed with g.
struct Recovery {
  std::vector<int> h;  // ground index -> position in enumerate_consistent(tau)
  std::vector<std::vector<int>> orientations_of_tau;
};
Recovery recover(const BipartitionFamily& family, const SeparationSystem& tau,
                 const std::vector<int>& g, const EnumerationLimits& limits = {});

/// For an ever-branching nested family in which every directed
/// consistent orientation is induced by a unique ground element, those
/// elements enumerate the directed orientations.
struct SparseRecovery {
  std::vector<int> ground_subset;                    // X': the inducing elements
  std::vector<int> h;                                // ground index -> position in O' or -1
  std::vector<std::vector<int>> directed_orientations;  // O' of the family system
};
SparseRecovery recover_sparse(const BipartitionFamily& family,
                              const EnumerationLimits& limits = {});

/// The mixture construction: label some consistent orientations (all directed
/// ones must be labelled), then represent s by the bipartition of the labels
/// into the orientations containing inverse(s) and those containing s.
/// labels is aligned with enumerate_consistent(tau).
FamilyEmbedding mixed_embed(const SeparationSystem& tau,
                            const std::vector<std::optional<std::string>>& labels,
                            const EnumerationLimits& limits = {});

}  // namespace tressec
