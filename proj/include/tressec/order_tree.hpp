#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tressec/orientation.hpp"
#include "tressec/separation_system.hpp"

namespace tressec {

/// A finite strict partial order, stored as the transitive closure of its
/// generators; construction fails with not_a_poset on a cycle.
class StrictPoset {
 public:
  StrictPoset(int n, const std::vector<std::pair<int, int>>& lt_generators);

  int size() const { return n_; }
  bool lt(int a, int b) const { return lt_.get(a, b); }
  bool le(int a, int b) const { return a == b || lt_.get(a, b); }
  bool comparable(int a, int b) const { return a == b || lt_.get(a, b) || lt_.get(b, a); }

 private:
  int n_;
  BitMatrix lt_;
};

/// The strict down-set below every element is a chain.
bool is_order_tree(const StrictPoset& poset);
/// Order tree in which every two elements have a common lower bound.
bool is_connected_order_tree(const StrictPoset& poset);

class OrderTree {
 public:
  /// Fails with not_an_order_tree when some down-set is not a chain.
  OrderTree(std::vector<std::string> elements, StrictPoset order);

  int size() const { return order_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& element(int a) const { return elements_[a]; }
  const StrictPoset& order() const { return order_; }
  bool lt(int a, int b) const { return order_.lt(a, b); }
  bool connected() const { return is_connected_order_tree(order_); }

  std::vector<std::pair<int, int>> strict_pairs() const;

 private:
  std::vector<std::string> elements_;
  StrictPoset order_;
};

/// The canonical extension of an order tree (X, <=) to a regular tree set on
/// X and a disjoint copy X*: indices 0..n-1 are X in element order, n..2n-1
/// the inverses.  x* < y* iff y < x, and x* < y iff x, y are incomparable.
/// O_T = X* is a full consistent orientation.
struct OrderTreeEmbedding {
  SeparationSystem system;
  std::vector<int> ground;       // the X part, {0..n-1}
  std::vector<int> orientation;  // O_T = X* = {n..2n-1}
};

OrderTreeEmbedding treeset_from_order_tree(const OrderTree& tree);

/// The order tree induced on the complement of a full consistent orientation
/// of a regular tree set.
struct InducedOrderTree {
  OrderTree tree;
  std::vector<int> host_index;  // tree element k -> index in the host system
};

InducedOrderTree order_tree_from_oriented(const SeparationSystem& tau,
                                          const std::vector<int>& orientation);

/// The canonization of tau' given O: the tree-set isomorphism onto
/// treeset_from_order_tree(order_tree_from_oriented(tau', O)) that is the
/// identity on tau' minus O and commutes with the involutions on O.
struct Canonization {
  std::vector<int> map;  // tau' index -> index of the canonical system
  SeparationSystem system;
  OrderTree order_tree;
  std::vector<int> image_of_orientation;  // = X*, the image of O
};

Canonization canonize(const SeparationSystem& tau_prime, const std::vector<int>& orientation);

/// The identity on the ground set is an order isomorphism between an
/// order tree and the tree induced by its own canonical extension.
bool verify_order_roundtrip(const OrderTree& tree);

/// For antisymmetric X in a regular tree set tau with (X, <=) an order
/// tree and X* consistent, tau induces the canonical extension on the union
/// of X and X*.
bool check_unique_extension(const SeparationSystem& tau, const std::vector<int>& ground);

}  // namespace tressec
