#include "tressec/order_tree.hpp"

#include <algorithm>
#include <set>

namespace tressec {

StrictPoset::StrictPoset(int n, const std::vector<std::pair<int, int>>& lt_generators)
    : n_(n), lt_(n) {
  require(n >= 0, errc::precondition_violated, "negative element count");
  for (const auto& [a, b] : lt_generators) {
    require(a >= 0 && a < n && b >= 0 && b < n, errc::precondition_violated,
            "order generator index out of range");
    lt_.set(a, b);
  }
  lt_.transitive_close();
  for (int a = 0; a < n; ++a)
    require(!lt_.get(a, a), errc::not_a_poset,
            "strict order has a cycle through " + std::to_string(a));
}

bool is_order_tree(const StrictPoset& poset) {
  for (int t = 0; t < poset.size(); ++t)
    for (int a = 0; a < poset.size(); ++a)
      for (int b = a + 1; b < poset.size(); ++b)
        if (poset.lt(a, t) && poset.lt(b, t) && !poset.comparable(a, b)) return false;
  return true;
}

bool is_connected_order_tree(const StrictPoset& poset) {
  if (!is_order_tree(poset)) return false;
  for (int a = 0; a < poset.size(); ++a)
    for (int b = a + 1; b < poset.size(); ++b) {
      bool bounded = false;
      for (int c = 0; c < poset.size() && !bounded; ++c)
        if (poset.le(c, a) && poset.le(c, b)) bounded = true;
      if (!bounded) return false;
    }
  return true;
}

OrderTree::OrderTree(std::vector<std::string> elements, StrictPoset order)
    : elements_(std::move(elements)), order_(std::move(order)) {
  require(static_cast<int>(elements_.size()) == order_.size(), errc::precondition_violated,
          "element list does not match order size");
  std::set<std::string> seen(elements_.begin(), elements_.end());
  require(seen.size() == elements_.size(), errc::precondition_violated,
          "element labels must be distinct");
  require(is_order_tree(order_), errc::not_an_order_tree,
          "a strict down-set is not a chain");
}

std::vector<std::pair<int, int>> OrderTree::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (lt(a, b)) out.emplace_back(a, b);
  return out;
}

OrderTreeEmbedding treeset_from_order_tree(const OrderTree& tree) {
  const int n = tree.size();
  std::vector<int> inv(2 * n);
  std::vector<std::string> labels(2 * n);
  for (int i = 0; i < n; ++i) {
    inv[i] = i + n;
    inv[i + n] = i;
    labels[i] = tree.element(i);
    labels[i + n] = tree.element(i) + "*";
  }
  std::vector<std::pair<int, int>> gens;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (tree.lt(x, y)) {
        gens.emplace_back(x, y);          // x < y carried over
        gens.emplace_back(y + n, x + n);  // hence y* < x*
      } else if (!tree.lt(y, x)) {
        gens.emplace_back(x + n, y);      // incomparable: x* < y
      }
    }
  OrderTreeEmbedding out;
  out.system = SeparationSystem::build_exact(2 * n, std::move(inv), gens, std::move(labels));
  for (int i = 0; i < n; ++i) {
    out.ground.push_back(i);
    out.orientation.push_back(i + n);
  }
  require(is_regular(out.system) && is_tree_set(out.system), errc::violation_found,
          "extension of an order tree failed to validate as a regular tree set");
  require(is_full_orientation(out.system, out.orientation) &&
              is_consistent(out.system, out.orientation),
          errc::violation_found, "X* failed to validate as a full consistent orientation");
  return out;
}

InducedOrderTree order_tree_from_oriented(const SeparationSystem& tau,
                                          const std::vector<int>& orientation) {
  require(is_regular(tau) && is_nested(tau), errc::precondition_violated,
          "order trees arise from regular tree sets");
  require(is_full_orientation(tau, orientation) && is_consistent(tau, orientation),
          errc::precondition_violated, "not a full consistent orientation");
  std::vector<int> ground;  // tau minus O = the inverses of O
  for (int s : orientation) ground.push_back(tau.inverse(s));
  ground = normalize_set(std::move(ground));

  const int n = static_cast<int>(ground.size());
  std::vector<std::string> labels;
  for (int x : ground) labels.push_back(tau.display(x));
  std::vector<std::pair<int, int>> lt;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (tau.lt(ground[a], ground[b])) lt.emplace_back(a, b);
  InducedOrderTree out{OrderTree(std::move(labels), StrictPoset(n, lt)), std::move(ground)};
  return out;
}

Canonization canonize(const SeparationSystem& tau_prime, const std::vector<int>& orientation) {
  const InducedOrderTree induced = order_tree_from_oriented(tau_prime, orientation);
  OrderTreeEmbedding embedding = treeset_from_order_tree(induced.tree);
  const int n = induced.tree.size();

  Canonization out{std::vector<int>(tau_prime.count(), -1), std::move(embedding.system),
                   induced.tree, {}};
  for (int k = 0; k < n; ++k) out.map[induced.host_index[k]] = k;  // identity on tau' minus O
  for (int s : orientation)  // commute with the involutions on O
    out.map[s] = out.system.inverse(out.map[tau_prime.inverse(s)]);
  for (int s : orientation) out.image_of_orientation.push_back(out.map[s]);
  out.image_of_orientation = normalize_set(std::move(out.image_of_orientation));

  // The map must come out as an isomorphism of tree sets carrying O onto
  // X*; verify it.
  std::vector<bool> hit(out.system.count(), false);
  for (int i = 0; i < tau_prime.count(); ++i) {
    require(out.map[i] >= 0 && !hit[out.map[i]], errc::violation_found,
            "canonization map is not a bijection");
    hit[out.map[i]] = true;
  }
  for (int i = 0; i < tau_prime.count(); ++i)
    require(out.map[tau_prime.inverse(i)] == out.system.inverse(out.map[i]),
            errc::violation_found, "canonization map does not commute with the involutions");
  for (int i = 0; i < tau_prime.count(); ++i)
    for (int j = 0; j < tau_prime.count(); ++j)
      require(tau_prime.le(i, j) == out.system.le(out.map[i], out.map[j]), errc::violation_found,
              "canonization map does not preserve the order");
  require(out.image_of_orientation == normalize_set(embedding.orientation),
          errc::violation_found, "canonization does not map O onto X*");
  return out;
}

bool verify_order_roundtrip(const OrderTree& tree) {
  const OrderTreeEmbedding embedding = treeset_from_order_tree(tree);
  const InducedOrderTree induced =
      order_tree_from_oriented(embedding.system, embedding.orientation);
  if (induced.tree.size() != tree.size()) return false;
  // Ground of the induced tree is X = indices 0..n-1 of the embedding, which
  // are the original elements in order.
  for (int k = 0; k < tree.size(); ++k)
    if (induced.host_index[k] != k || induced.tree.element(k) != tree.element(k)) return false;
  for (int a = 0; a < tree.size(); ++a)
    for (int b = 0; b < tree.size(); ++b)
      if (induced.tree.lt(a, b) != tree.lt(a, b)) return false;
  return true;
}

bool check_unique_extension(const SeparationSystem& tau, const std::vector<int>& ground) {
  require(is_regular(tau) && is_nested(tau), errc::precondition_violated,
          "requires a regular tree set");
  const std::vector<int> x = normalize_set(ground);
  require(is_antisymmetric(tau, x), errc::precondition_violated, "X must be antisymmetric");
  std::vector<int> x_star;
  for (int s : x) x_star.push_back(tau.inverse(s));
  x_star = normalize_set(std::move(x_star));
  require(is_consistent(tau, x_star), errc::precondition_violated, "X* must be consistent");

  const int n = static_cast<int>(x.size());
  std::vector<std::string> labels;
  for (int s : x) labels.push_back(tau.display(s));
  std::vector<std::pair<int, int>> lt;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (tau.lt(x[a], x[b])) lt.emplace_back(a, b);
  StrictPoset order(n, lt);
  require(is_order_tree(order), errc::precondition_violated, "(X, <=) must be an order tree");

  const OrderTreeEmbedding canonical = treeset_from_order_tree(OrderTree(labels, order));
  // Identify x[k] with index k and its inverse with k + n, then compare the
  // two orders on all pairs.
  std::vector<int> host(2 * n), image(2 * n);
  for (int k = 0; k < n; ++k) {
    host[k] = x[k];
    host[k + n] = tau.inverse(x[k]);
    image[k] = k;
    image[k + n] = k + n;
  }
  for (int a = 0; a < 2 * n; ++a)
    for (int b = 0; b < 2 * n; ++b)
      if (tau.le(host[a], host[b]) != canonical.system.le(image[a], image[b])) return false;
  return true;
}

}  // namespace tressec
