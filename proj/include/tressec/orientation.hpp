#pragma once

#include <vector>

#include "tressec/separation_system.hpp"

namespace tressec {

/// Caps for the operations that walk the set of consistent orientations.
/// Enumeration refuses systems with more oriented elements than max_oriented.
struct EnumerationLimits {
  int max_oriented = 40;
};

bool is_antisymmetric(const SeparationSystem& sys, const std::vector<int>& members);

/// No distinct separations r, s have orientations r < s with inverse(r) and s
/// both in the set.
bool is_consistent(const SeparationSystem& sys, const std::vector<int>& members);

/// Exactly one orientation of every separation (degenerate elements must be
/// present).
bool is_full_orientation(const SeparationSystem& sys, const std::vector<int>& members);

/// { r : r <= s for some s in members }.
std::vector<int> down_closure(const SeparationSystem& sys, const std::vector<int>& members);

/// Members with no strictly greater member.
std::vector<int> maximal_elements(const SeparationSystem& sys, const std::vector<int>& members);

/// Extends a consistent antisymmetric partial orientation of a nested system
/// to a full consistent orientation.  Deterministic: forced orientations are
/// propagated, then the least admissible index is chosen.  Throws
/// unextendable when stuck, which on a nested system means the preconditions
/// were violated (or a degenerate element rules the input out).
std::vector<int> extend_partial(const SeparationSystem& sys, const std::vector<int>& members);

/// All full consistent orientations, as sorted member lists in lexicographic
/// order.  Backtracks over separations with pairwise admissibility pruning.
std::vector<std::vector<int>> enumerate_consistent(const SeparationSystem& sys,
                                                   const EnumerationLimits& limits = {});

/// A set splitting the system: the maximal elements of a full consistent
/// orientation (the orientation is kept as the witness).  In a system without
/// degenerate elements these are stars.
struct SplittingSet {
  std::vector<int> members;
  std::vector<int> witness;
};

std::vector<SplittingSet> splitting_stars(const SeparationSystem& sys,
                                          const EnumerationLimits& limits = {});

/// The unique full consistent orientation in which s is maximal; not_found /
/// not_unique signal that the system is not a tree set.
std::vector<int> orientation_with_max(const SeparationSystem& sys, int s,
                                      const EnumerationLimits& limits = {});

/// Every two members have a common upper bound inside the orientation.
bool is_directed(const SeparationSystem& sys, const std::vector<int>& orientation);

std::vector<std::vector<int>> directed_orientations(const SeparationSystem& sys,
                                                    const EnumerationLimits& limits = {});

/// For a finite regular tree set: a directed full consistent orientation
/// containing s, built as the down-closure of a maximal chain through s
/// (extended by least admissible indices).
std::vector<int> directed_orientation_containing(const SeparationSystem& sys, int s);

}  // namespace tressec
