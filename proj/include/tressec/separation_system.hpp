#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tressec/errors.hpp"

namespace tressec {

/// Square boolean matrix with 64-bit packed rows; used for order relations.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {}

  int size() const { return n_; }

  bool get(int i, int j) const {
    return (bits_[row(i) + static_cast<size_t>(j >> 6)] >> (j & 63)) & 1u;
  }
  void set(int i, int j) { bits_[row(i) + static_cast<size_t>(j >> 6)] |= uint64_t{1} << (j & 63); }
  void clear(int i, int j) { bits_[row(i) + static_cast<size_t>(j >> 6)] &= ~(uint64_t{1} << (j & 63)); }

  // row_i |= row_k
  void or_row(int i, int k) {
    const size_t a = row(i), b = row(k);
    for (size_t w = 0; w < words_; ++w) bits_[a + w] |= bits_[b + w];
  }

  void transitive_close() {
    for (int k = 0; k < n_; ++k)
      for (int i = 0; i < n_; ++i)
        if (get(i, k)) or_row(i, k);
  }

  bool operator==(const BitMatrix& other) const = default;

 private:
  size_t row(int i) const { return static_cast<size_t>(i) * words_; }

  int n_ = 0;
  size_t words_ = 0;
  std::vector<uint64_t> bits_;
};

/// A finite separation system: a poset of oriented separations with an
/// order-reversing involution.  Elements are dense indices 0..count-1; a
/// separation is the unordered pair {i, inverse(i)}, degenerate when the two
/// coincide.  The order is stored as its full reflexive-transitive closure,
/// so all predicates are O(1) lookups.  Instances are immutable; every
/// constructor path validates the axioms eagerly.
class SeparationSystem {
 public:
  /// The empty system.
  SeparationSystem() = default;

  /// Builds from generator pairs (i < j).  Each generator also contributes
  /// its dual pair (inverse(j) < inverse(i)), so the involution is
  /// order-reversing by construction.
  static SeparationSystem build(int count, std::vector<int> involution,
                                const std::vector<std::pair<int, int>>& le_generators,
                                std::vector<std::string> labels = {});

  /// Builds from generator pairs without adding dual pairs; the closure must
  /// already satisfy i<=j <=> inverse(j)<=inverse(i) or construction fails
  /// with involution_not_order_reversing.  Used when reading external data.
  static SeparationSystem build_exact(int count, std::vector<int> involution,
                                      const std::vector<std::pair<int, int>>& le_generators,
                                      std::vector<std::string> labels = {});

  int count() const { return count_; }
  int inverse(int i) const { return inv_[i]; }
  bool degenerate(int i) const { return inv_[i] == i; }

  bool le(int i, int j) const { return le_.get(i, j); }
  bool lt(int i, int j) const { return i != j && le_.get(i, j); }
  bool comparable(int i, int j) const { return le_.get(i, j) || le_.get(j, i); }

  /// Identity of the underlying separation: min(i, inverse(i)).
  int canonical(int i) const { return i < inv_[i] ? i : inv_[i]; }
  bool same_separation(int i, int j) const { return canonical(i) == canonical(j); }

  int separation_count() const;
  /// Canonical representatives, one per separation, ascending.
  std::vector<int> separations() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  /// Label of i when present, otherwise "#i".
  std::string display(int i) const;

  /// All strict pairs (i, j) with i < j in the order, sorted; the diagonal is
  /// implied.  This is the serialized form of the relation.
  std::vector<std::pair<int, int>> strict_pairs() const;

  bool operator==(const SeparationSystem& other) const {
    return count_ == other.count_ && inv_ == other.inv_ && le_ == other.le_;
  }

 private:
  static SeparationSystem finish(int count, std::vector<int> involution, BitMatrix closure,
                                 std::vector<std::string> labels, bool check_duality);

  int count_ = 0;
  std::vector<int> inv_;
  BitMatrix le_;
  std::vector<std::string> labels_;
};

/// Per-element flags from the definitions in terms of the order alone.
/// witness[i] is the canonical index of the least separation witnessing that
/// i is trivial, or -1.
struct Classification {
  std::vector<bool> small, trivial, cotrivial, degenerate;
  std::vector<int> witness;
};

Classification classify(const SeparationSystem& sys);

/// True iff separations r and s (given by any orientation) have comparable
/// orientations.
bool nested_pair(const SeparationSystem& sys, int r, int s);
bool is_nested(const SeparationSystem& sys);

bool is_regular(const SeparationSystem& sys);    // no small elements
bool is_essential(const SeparationSystem& sys);  // no trivial, no degenerate
bool is_tree_set(const SeparationSystem& sys);   // nested and essential

/// A subsystem induced on a subset of indices, with the index translation in
/// both directions (from_host[i] == -1 for dropped indices).
struct InducedSubsystem {
  SeparationSystem system;
  std::vector<int> to_host;
  std::vector<int> from_host;
};

/// keep must be closed under the involution.
InducedSubsystem induced_subsystem(const SeparationSystem& sys, const std::vector<int>& keep);

/// Deletes every degenerate, trivial and co-trivial element; the result is
/// essential, and a tree set whenever the input is nested.
InducedSubsystem essential_core(const SeparationSystem& sys);

/// Same elements and involution, with every relation s <= inverse(s) removed
/// from the order.  The input must be essential (otherwise transitivity of
/// the reduced relation can fail); the result is regular.
SeparationSystem regularization(const SeparationSystem& sys);

/// Stars: sets of nondegenerate oriented separations pointing towards each
/// other (r <= inverse(s) for all distinct members).
bool is_star(const SeparationSystem& sys, const std::vector<int>& members);
/// Proper: between distinct members only the star relation holds.
bool is_proper_star(const SeparationSystem& sys, const std::vector<int>& members);
/// Proper in sys: proper and not a co-trivial singleton.
bool is_proper_in(const SeparationSystem& sys, const std::vector<int>& members);

/// sigma <= tau as subsets: every member of sigma lies below some member of
/// tau.  Reflexive and transitive; antisymmetric on proper stars only.
bool star_le(const SeparationSystem& sys, const std::vector<int>& sigma, const std::vector<int>& tau);

/// Checks that map is an isomorphism of separation systems from `from` onto
/// `onto`: bijective, involution-commuting, order-preserving both ways.
bool verify_system_isomorphism(const SeparationSystem& from, const SeparationSystem& onto,
                               const std::vector<int>& map);

/// Sorts and deduplicates a member list into the canonical subset form.
std::vector<int> normalize_set(std::vector<int> members);

std::string set_to_string(const std::vector<int>& members);

}  // namespace tressec
