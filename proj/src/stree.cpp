#include "tressec/stree.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <tuple>

namespace tressec {

STree::STree(GraphTree tree, std::shared_ptr<const SeparationSystem> host, std::vector<int> alpha)
    : tree_(std::move(tree)), host_(std::move(host)), alpha_(std::move(alpha)) {
  require(host_ != nullptr, errc::precondition_violated, "S-tree needs a host system");
  require(static_cast<int>(alpha_.size()) == tree_.oriented_count(), errc::precondition_violated,
          "one label per oriented edge is required");
  for (int d = 0; d < tree_.oriented_count(); ++d) {
    require(alpha_[d] >= 0 && alpha_[d] < host_->count(), errc::precondition_violated,
            "label out of range");
    require(alpha_[tree_.reverse(d)] == host_->inverse(alpha_[d]), errc::precondition_violated,
            "labelling does not commute with inversion at oriented edge " + std::to_string(d));
  }
}

std::vector<int> STree::star_image(int node) const {
  std::vector<int> image;
  for (int x : tree_.neighbors(node)) image.push_back(alpha_[tree_.oriented_between(x, node)]);
  return normalize_set(std::move(image));
}

bool STree::over_stars() const {
  for (int t = 0; t < tree_.node_count(); ++t)
    if (!is_star(*host_, star_image(t))) return false;
  return true;
}

StarFamily::StarFamily(std::vector<std::vector<int>> members) {
  for (auto& member : members) member = normalize_set(std::move(member));
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
}

bool StarFamily::contains(const std::vector<int>& member) const {
  return std::binary_search(members_.begin(), members_.end(), normalize_set(member));
}

bool StarFamily::stars_only(const SeparationSystem& sys) const {
  for (const auto& member : members_)
    if (!is_star(sys, member)) return false;
  return true;
}

StarFamily StarFamily::of_stree(const STree& st) {
  std::vector<std::vector<int>> members;
  for (int t = 0; t < st.tree().node_count(); ++t) members.push_back(st.star_image(t));
  return StarFamily(std::move(members));
}

bool is_over(const STree& st, const StarFamily& family) {
  for (int t = 0; t < st.tree().node_count(); ++t)
    if (!family.contains(st.star_image(t))) return false;
  return true;
}

bool is_standard(const SeparationSystem& sys, const StarFamily& family) {
  const Classification c = classify(sys);
  for (int i = 0; i < sys.count(); ++i)
    if (c.cotrivial[i] && !family.contains({i})) return false;
  return true;
}

namespace {

struct Witness {
  int t, first, second;
};

// Nodes reachable from start without using any of the banned edges (as
// unordered node pairs) and without entering the banned node (-1 for none).
std::vector<bool> component_of(const GraphTree& tree, int start,
                               const std::vector<std::pair<int, int>>& banned_edges,
                               int banned_node) {
  std::vector<bool> in(tree.node_count(), false);
  std::queue<int> frontier;
  frontier.push(start);
  in[start] = true;
  auto banned = [&](int a, int b) {
    for (const auto& [u, v] : banned_edges)
      if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
  };
  while (!frontier.empty()) {
    const int t = frontier.front();
    frontier.pop();
    for (int u : tree.neighbors(t)) {
      if (in[u] || u == banned_node || banned(t, u)) continue;
      in[u] = true;
      frontier.push(u);
    }
  }
  return in;
}

STree rebuild_stree(const STree& st, const std::vector<bool>& keep,
                    const std::vector<std::tuple<int, int, int>>& extra_edges) {
  const GraphTree& tree = st.tree();
  std::vector<int> new_index(tree.node_count(), -1);
  std::vector<std::string> labels;
  for (int t = 0; t < tree.node_count(); ++t)
    if (keep[t]) {
      new_index[t] = static_cast<int>(labels.size());
      labels.push_back(tree.node_label(t));
    }
  std::vector<std::pair<int, int>> edges;
  std::vector<int> alpha;
  for (int k = 0; k < tree.edge_count(); ++k) {
    const auto& [u, v] = tree.edges()[k];
    if (keep[u] && keep[v]) {
      edges.emplace_back(new_index[u], new_index[v]);
      alpha.push_back(st.alpha(2 * k));
      alpha.push_back(st.alpha(2 * k + 1));
    }
  }
  for (const auto& [u, v, label] : extra_edges) {
    edges.emplace_back(new_index[u], new_index[v]);
    alpha.push_back(label);
    alpha.push_back(st.host().inverse(label));
  }
  return STree(GraphTree(std::move(labels), std::move(edges)), st.host_ptr(), std::move(alpha));
}

// Lexicographically least witness by node labels, or nothing.  The outgoing
// flavour matches redundancy (alpha(t,t') = alpha(t,t'')); the through
// flavour matches tightness violations (alpha(t',t) = alpha(t,t'')).
std::optional<Witness> least_witness(const STree& st, bool outgoing) {
  const GraphTree& tree = st.tree();
  std::optional<Witness> best;
  auto better = [&](const Witness& w) {
    if (!best) return true;
    const auto key = [&](const Witness& x) {
      return std::tie(tree.node_label(x.t), tree.node_label(x.first), tree.node_label(x.second));
    };
    return key(w) < key(*best);
  };
  for (int t = 0; t < tree.node_count(); ++t)
    for (int a : tree.neighbors(t))
      for (int b : tree.neighbors(t)) {
        if (a == b) continue;
        const int left = outgoing ? st.alpha(tree.oriented_between(t, a))
                                  : st.alpha(tree.oriented_between(a, t));
        const int right = st.alpha(tree.oriented_between(t, b));
        if (left != right) continue;
        const Witness w{t, a, b};
        if (better(w)) best = w;
      }
  return best;
}

Classification host_classification(const STree& st) { return classify(st.host()); }

}  // namespace

bool is_redundant(const STree& st) { return least_witness(st, /*outgoing=*/true).has_value(); }

STree prune(const STree& st) {
  STree current = st;
  while (auto w = least_witness(current, /*outgoing=*/true)) {
    const auto dropped = component_of(current.tree(), w->second, {}, w->t);
    std::vector<bool> keep(current.tree().node_count());
    for (int t = 0; t < current.tree().node_count(); ++t) keep[t] = !dropped[t];
    current = rebuild_stree(current, keep, {});
  }
  return current;
}

OrderPreservationReport check_order_preserving(const STree& st) {
  require(!is_redundant(st) && st.over_stars(), errc::precondition_violated,
          "order preservation holds for irredundant S-trees over stars");
  const GraphTree& tree = st.tree();
  const SeparationSystem& host = st.host();
  const Classification c = host_classification(st);
  OrderPreservationReport report;
  for (int d = 0; d < tree.oriented_count(); ++d)
    for (int e = 0; e < tree.oriented_count(); ++e) {
      if (d == e) continue;
      if (tree.edge_le(d, e)) {
        ++report.comparable_pairs;
        require(host.le(st.alpha(d), st.alpha(e)), errc::violation_found,
                "labelling does not preserve the edge order");
      } else if (host.lt(st.alpha(d), st.alpha(e))) {
        const int a = st.alpha(d), b = st.alpha(tree.reverse(e));
        if (a == b && c.small[a])
          ++report.exception_small;
        else if (c.trivial[a] || c.trivial[b])
          ++report.exception_trivial;
        else
          fail(errc::violation_found,
               "strict label order without edge order and without an admissible exception");
      }
    }
  // Nestedness of the image follows from order preservation; assert it.
  std::vector<int> image;
  for (int d = 0; d < tree.oriented_count(); ++d) image.push_back(st.alpha(d));
  image = normalize_set(std::move(image));
  for (int a : image)
    for (int b : image)
      if (!nested_pair(host, a, b)) {
        report.image_nested = false;
        fail(errc::violation_found, "image of the labelling is not nested");
      }
  return report;
}

bool is_tight(const STree& st) {
  for (int t = 0; t < st.tree().node_count(); ++t)
    if (!is_antisymmetric(st.host(), st.star_image(t))) return false;
  return true;
}

STree tighten(const STree& st) {
  STree current = is_redundant(st) ? prune(st) : st;
  while (auto w = least_witness(current, /*outgoing=*/false)) {
    // Everything attached to t other than through t' and t'' goes; t' and
    // t'' get joined by an edge carrying the repeated label.
    const int label = current.alpha(current.tree().oriented_between(w->first, w->t));
    const auto dropped = component_of(current.tree(), w->t,
                                      {{w->first, w->t}, {w->t, w->second}}, -1);
    std::vector<bool> keep(current.tree().node_count());
    for (int t = 0; t < current.tree().node_count(); ++t) keep[t] = !dropped[t];
    current = rebuild_stree(current, keep, {{w->first, w->second, label}});
  }
  return current;
}

FacingDuplicateReport check_no_facing_duplicates(const STree& st) {
  require(!is_redundant(st) && st.over_stars(), errc::precondition_violated,
          "facing duplicates are checked on irredundant S-trees over stars");
  const GraphTree& tree = st.tree();
  const Classification c = host_classification(st);
  FacingDuplicateReport report;
  for (int d = 0; d < tree.oriented_count(); ++d)
    for (int e = 0; e < tree.oriented_count(); ++e) {
      if (d / 2 == e / 2) continue;
      if (!tree.edge_le(d, tree.reverse(e)) || d == tree.reverse(e)) continue;
      if (st.alpha(d) != st.alpha(e)) continue;
      ++report.facing_pairs;
      require(c.trivial[st.alpha(d)], errc::violation_found,
              "facing duplicate label " + std::to_string(st.alpha(d)) + " is not trivial");
    }
  return report;
}

bool is_essential(const STree& st) {
  if (is_redundant(st) || !is_tight(st)) return false;
  const Classification c = host_classification(st);
  for (int d = 0; d < st.tree().oriented_count(); ++d)
    if (c.trivial[st.alpha(d)]) return false;
  return true;
}

StarFamily essential_core_of(const StarFamily& family, const SeparationSystem& sys) {
  const Classification c = classify(sys);
  std::vector<std::vector<int>> members;
  for (const auto& member : family.members()) {
    std::vector<int> reduced;
    for (int s : member)
      if (!c.trivial[s]) reduced.push_back(s);
    members.push_back(std::move(reduced));
  }
  return StarFamily(std::move(members));
}

Essentialized essentialize(const STree& st, const StarFamily& family) {
  STree current = st;
  if (is_redundant(current) || !is_tight(current)) current = tighten(current);
  require(current.over_stars(), errc::precondition_violated,
          "essentialization is about S-trees over stars");
  const Classification c = classify(current.host());
  const GraphTree& tree = current.tree();
  std::vector<bool> keep(tree.node_count(), true);
  for (int d = 0; d < tree.oriented_count(); ++d)
    if (c.trivial[current.alpha(d)]) keep[tree.tail(d)] = false;
  // Down-closedness of the trivially labelled edges makes the rest a tree:
  // every edge losing an endpoint is itself trivially labelled.
  for (int k = 0; k < tree.edge_count(); ++k) {
    const auto& [u, v] = tree.edges()[k];
    if (!keep[u] || !keep[v])
      require(c.trivial[current.alpha(2 * k)] || c.trivial[current.alpha(2 * k + 1)],
              errc::violation_found, "non-trivial edge lost an endpoint during essentialization");
  }
  require(std::any_of(keep.begin(), keep.end(), [](bool b) { return b; }), errc::violation_found,
          "essentialization deleted the whole tree");
  return Essentialized{rebuild_stree(current, keep, {}), essential_core_of(family, current.host())};
}

bool check_injective(const STree& st) {
  require(is_essential(st) && st.over_stars(), errc::precondition_violated,
          "injectivity is asserted for essential S-trees over stars");
  const int m = st.tree().oriented_count();
  for (int d = 0; d < m; ++d)
    for (int e = d + 1; e < m; ++e)
      require(st.alpha(d) != st.alpha(e), errc::violation_found,
              "labelling is not injective on oriented edges");
  return true;
}

STree stree_from_treeset(std::shared_ptr<const SeparationSystem> sys, const StarFamily& family,
                         const EnumerationLimits& limits) {
  require(sys != nullptr, errc::precondition_violated, "host system required");
  require(is_nested(*sys), errc::not_nested, "reconstruction needs a nested system");
  for (int i = 0; i < sys->count(); ++i)
    require(!sys->degenerate(i), errc::degenerate_element,
            "a degenerate element would form a singleton set splitting the system");
  const auto splits = splitting_stars(*sys, limits);
  for (const auto& split : splits)
    require(family.contains(split.members), errc::not_over_family,
            "splitting set " + set_to_string(split.members) + " is not in the family");

  const InducedSubsystem core = essential_core(*sys);
  const SeparationSystem regular = regularization(core.system);
  const TreeFromTreeSet rebuilt = tree_from_treeset(regular, limits);

  std::vector<int> alpha(rebuilt.tree.oriented_count(), -1);
  for (int d = 0; d < rebuilt.tree.oriented_count(); ++d)
    alpha[d] = core.to_host[rebuilt.system_index_of[d]];
  STree st(rebuilt.tree, std::move(sys), std::move(alpha));

  // The labelling, read into the regularized core, must be an isomorphism of
  // tree sets from the edge tree set of T.
  require(verify_system_isomorphism(edge_tree_set(st.tree()), regular, rebuilt.system_index_of),
          errc::violation_found, "labelling is not an isomorphism onto the regularized core");
  std::vector<std::vector<int>> images, expected;
  for (int t = 0; t < st.tree().node_count(); ++t) images.push_back(st.star_image(t));
  for (const auto& split : splits) expected.push_back(split.members);
  std::sort(images.begin(), images.end());
  std::sort(expected.begin(), expected.end());
  require(images == expected, errc::violation_found,
          "star images differ from the splitting sets of the host");
  return st;
}

StreeImage treeset_from_stree(const STree& st) {
  require(is_essential(st) && st.over_stars(), errc::precondition_violated,
          "the image is read off essential S-trees over stars");
  std::vector<int> image;
  for (int d = 0; d < st.tree().oriented_count(); ++d) image.push_back(st.alpha(d));
  StreeImage out{induced_subsystem(st.host(), image), false};
  require(is_tree_set(out.image.system), errc::violation_found,
          "image of an essential S-tree failed to be an essential tree set");
  const SeparationSystem regular = regularization(out.image.system);
  std::vector<int> map(st.tree().oriented_count(), -1);
  for (int d = 0; d < st.tree().oriented_count(); ++d)
    map[d] = out.image.from_host[st.alpha(d)];
  require(verify_system_isomorphism(edge_tree_set(st.tree()), regular, map),
          errc::violation_found,
          "labelling is not an isomorphism onto the regularized image");
  out.isomorphism_verified = true;
  return out;
}

std::pair<STree, CanonicalizeLog> canonicalize(const STree& st, const StarFamily& family) {
  CanonicalizeLog log;
  STree current = st;
  while (auto w = least_witness(current, /*outgoing=*/true)) {
    log.steps.push_back("prune: dropped the branch at " + current.tree().node_label(w->t) +
                        " towards " + current.tree().node_label(w->second));
    ++log.pruned;
    const auto dropped = component_of(current.tree(), w->second, {}, w->t);
    std::vector<bool> keep(current.tree().node_count());
    for (int t = 0; t < current.tree().node_count(); ++t) keep[t] = !dropped[t];
    current = rebuild_stree(current, keep, {});
  }
  while (auto w = least_witness(current, /*outgoing=*/false)) {
    log.steps.push_back("tighten: contracted through " + current.tree().node_label(w->t) +
                        " joining " + current.tree().node_label(w->first) + " to " +
                        current.tree().node_label(w->second));
    ++log.contracted;
    const int label = current.alpha(current.tree().oriented_between(w->first, w->t));
    const auto dropped =
        component_of(current.tree(), w->t, {{w->first, w->t}, {w->t, w->second}}, -1);
    std::vector<bool> keep(current.tree().node_count());
    for (int t = 0; t < current.tree().node_count(); ++t) keep[t] = !dropped[t];
    current = rebuild_stree(current, keep, {{w->first, w->second, label}});
  }
  const int edges_before = current.tree().edge_count();
  Essentialized ess = essentialize(current, family);
  log.deleted_edges = edges_before - ess.stree.tree().edge_count();
  if (log.deleted_edges > 0)
    log.steps.push_back("essentialize: deleted " + std::to_string(log.deleted_edges) +
                        " trivially labelled edge(s)");
  return {std::move(ess.stree), std::move(log)};
}

}  // namespace tressec
