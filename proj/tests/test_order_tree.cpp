#include <doctest.h>

#include "support/generators.hpp"
#include "tressec/graph_tree.hpp"
#include "tressec/order_tree.hpp"

using namespace tressec;

namespace {

OrderTree antichain2() { return OrderTree({"x", "y"}, StrictPoset(2, {})); }
OrderTree chain(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> lt;
  for (int t = 0; t < n; ++t) {
    labels.push_back("x" + std::to_string(t));
    if (t > 0) lt.emplace_back(t - 1, t);
  }
  return OrderTree(std::move(labels), StrictPoset(n, lt));
}

}  // namespace

TEST_CASE("order tree predicates") {
  CHECK(is_order_tree(StrictPoset(2, {})));                    // antichain
  CHECK_FALSE(is_connected_order_tree(StrictPoset(2, {})));    // no common lower bound
  CHECK(is_connected_order_tree(StrictPoset(3, {{0, 1}, {1, 2}})));  // chain
  CHECK_FALSE(is_order_tree(StrictPoset(3, {{0, 2}, {1, 2}})));      // V: down-set not a chain
  CHECK_THROWS_AS(StrictPoset(2, {{0, 1}, {1, 0}}), error);          // cycle
  CHECK_THROWS_AS(OrderTree({"x", "y", "z"}, StrictPoset(3, {{0, 2}, {1, 2}})), error);
}

TEST_CASE("treeset_from_order_tree on the antichain and the chain") {
  SUBCASE("antichain: only x* < y and y* < x") {
    const OrderTreeEmbedding embedding = treeset_from_order_tree(antichain2());
    // Indices: 0=x 1=y 2=x* 3=y*.
    CHECK(embedding.system.count() == 4);
    CHECK(embedding.system.strict_pairs() ==
          std::vector<std::pair<int, int>>{{2, 1}, {3, 0}});
  }
  SUBCASE("chain x < y: only x < y and y* < x*") {
    const OrderTreeEmbedding embedding = treeset_from_order_tree(chain(2));
    CHECK(embedding.system.strict_pairs() ==
          std::vector<std::pair<int, int>>{{0, 1}, {3, 2}});
  }
  SUBCASE("random order trees make regular tree sets with consistent X*") {
    generators::Rng rng(41);
    for (int round = 0; round < 60; ++round) {
      const OrderTree tree = generators::random_order_tree(rng, 1 + static_cast<int>(rng() % 8));
      const OrderTreeEmbedding embedding = treeset_from_order_tree(tree);
      CHECK(is_regular(embedding.system));
      CHECK(is_tree_set(embedding.system));
      CHECK(is_consistent(embedding.system, embedding.orientation));
      CHECK(is_full_orientation(embedding.system, embedding.orientation));
      // No fixed points, and the two blocks are disjoint by construction.
      for (int i = 0; i < embedding.system.count(); ++i)
        CHECK(embedding.system.inverse(i) != i);
    }
  }
}

TEST_CASE("the extended order is transitive by the case analysis") {
  // Re-derive the relation from the three defining rules and check that the
  // two problematic compositions land back inside it.
  generators::Rng rng(43);
  for (int round = 0; round < 40; ++round) {
    const OrderTree tree = generators::random_order_tree(rng, 1 + static_cast<int>(rng() % 7));
    const OrderTreeEmbedding embedding = treeset_from_order_tree(tree);
    const SeparationSystem& sys = embedding.system;
    const int n = tree.size();
    auto literal_lt = [&](int a, int b) {
      const bool a_star = a >= n, b_star = b >= n;
      const int x = a % n, y = b % n;
      if (!a_star && !b_star) return tree.lt(x, y);
      if (a_star && b_star) return tree.lt(y, x);
      if (a_star && !b_star) return x != y && !tree.lt(x, y) && !tree.lt(y, x);
      return false;  // never x < y*
    };
    for (int a = 0; a < 2 * n; ++a)
      for (int b = 0; b < 2 * n; ++b) {
        CHECK(sys.lt(a, b) == literal_lt(a, b));  // the closure added nothing
        for (int c = 0; c < 2 * n; ++c)
          if (literal_lt(a, b) && literal_lt(b, c)) CHECK(literal_lt(a, c));
      }
  }
}

TEST_CASE("order_tree_from_oriented") {
  SUBCASE("the antichain returns as itself") {
    const OrderTreeEmbedding embedding = treeset_from_order_tree(antichain2());
    const InducedOrderTree induced =
        order_tree_from_oriented(embedding.system, embedding.orientation);
    CHECK(induced.tree.size() == 2);
    CHECK_FALSE(induced.tree.lt(0, 1));
    CHECK_FALSE(induced.tree.lt(1, 0));
  }
  SUBCASE("tau(P3) with the midpoint orientation") {
    const SeparationSystem tau = edge_tree_set(generators::path(3));
    const InducedOrderTree induced = order_tree_from_oriented(tau, {0, 3});  // O_b
    CHECK(induced.tree.size() == 2);
    CHECK(is_order_tree(induced.tree.order()));
    CHECK(induced.host_index == std::vector<int>{1, 2});  // (b,a) and (b,c)
    CHECK_FALSE(induced.tree.lt(0, 1));
  }
  SUBCASE("inconsistent orientations are rejected") {
    const SeparationSystem tau = edge_tree_set(generators::path(3));
    CHECK_THROWS_AS(order_tree_from_oriented(tau, {1, 2}), error);
  }
}

TEST_CASE("canonize") {
  SUBCASE("antichain round trip maps O onto X*") {
    const OrderTreeEmbedding embedding = treeset_from_order_tree(antichain2());
    const Canonization canonization = canonize(embedding.system, embedding.orientation);
    CHECK(canonization.image_of_orientation == normalize_set(embedding.orientation));
  }
  SUBCASE("edge tree sets with node orientations") {
    generators::Rng rng(47);
    for (int round = 0; round < 25; ++round) {
      const GraphTree tree = generators::random_tree(rng, 2 + static_cast<int>(rng() % 7));
      const SeparationSystem tau = edge_tree_set(tree);
      const int t = static_cast<int>(rng() % tree.node_count());
      CHECK_NOTHROW(canonize(tau, node_orientation(tree, t)));  // verifies internally
    }
  }
  SUBCASE("chain round trip") {
    const OrderTreeEmbedding embedding = treeset_from_order_tree(chain(2));
    const Canonization canonization = canonize(embedding.system, embedding.orientation);
    CHECK(canonization.system.strict_pairs() == embedding.system.strict_pairs());
  }
}

TEST_CASE("verify_order_roundtrip") {
  CHECK(verify_order_roundtrip(chain(5)));
  CHECK(verify_order_roundtrip(antichain2()));
  generators::Rng rng(53);
  for (int round = 0; round < 60; ++round)
    CHECK(verify_order_roundtrip(
        generators::random_order_tree(rng, 1 + static_cast<int>(rng() % 10))));
}

TEST_CASE("check_unique_extension") {
  SUBCASE("X = complement of a consistent orientation") {
    generators::Rng rng(59);
    for (int round = 0; round < 20; ++round) {
      const GraphTree tree = generators::random_tree(rng, 2 + static_cast<int>(rng() % 6));
      const SeparationSystem tau = edge_tree_set(tree);
      const int t = static_cast<int>(rng() % tree.node_count());
      const auto orientation = node_orientation(tree, t);
      std::vector<int> ground;
      for (int s : orientation) ground.push_back(tau.inverse(s));
      CHECK(check_unique_extension(tau, ground));
    }
  }
  SUBCASE("a single element extends") {
    const SeparationSystem tau = edge_tree_set(generators::path(3));
    CHECK(check_unique_extension(tau, {0}));
  }
  SUBCASE("inconsistent X* is rejected") {
    const SeparationSystem tau = edge_tree_set(generators::path(3));
    // X = {(a,b),(c,b)} has X* = {(b,a),(b,c)}, which is inconsistent.
    CHECK_THROWS_AS(check_unique_extension(tau, {0, 3}), error);
  }
}
