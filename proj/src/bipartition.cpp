#include "tressec/bipartition.hpp"

#include <algorithm>
#include <set>

#include "tressec/graph_tree.hpp"

namespace tressec {

BipartitionFamily::BipartitionFamily(std::vector<std::string> ground, std::vector<Pair> pairs)
    : ground_(std::move(ground)) {
  const int n = ground_size();
  std::set<std::string> seen(ground_.begin(), ground_.end());
  require(static_cast<int>(seen.size()) == n, errc::invalid_family,
          "ground labels must be distinct");
  for (auto& [a, b] : pairs) {
    a = normalize_set(std::move(a));
    b = normalize_set(std::move(b));
    require(!a.empty() && !b.empty(), errc::invalid_family, "bipartition side is empty");
    std::vector<int> all;
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(all));
    require(static_cast<int>(all.size()) == n && std::adjacent_find(all.begin(), all.end()) == all.end() &&
                all.front() == 0 && all.back() == n - 1,
            errc::invalid_family, "sides must partition the ground set");
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  pairs_ = std::move(pairs);
  inverse_.assign(pair_count(), -1);
  for (int p = 0; p < pair_count(); ++p) {
    inverse_[p] = find({pairs_[p].second, pairs_[p].first});
    require(inverse_[p] != -1, errc::invalid_family,
            "family is not symmetric: missing the swapped pair of #" + std::to_string(p));
  }
}

int BipartitionFamily::ground_index(const std::string& label) const {
  for (int x = 0; x < ground_size(); ++x)
    if (ground_[x] == label) return x;
  fail(errc::unknown_element, "no ground element labelled '" + label + "'");
}

int BipartitionFamily::find(const Pair& pair) const {
  const auto it = std::lower_bound(pairs_.begin(), pairs_.end(), pair);
  if (it != pairs_.end() && *it == pair) return static_cast<int>(it - pairs_.begin());
  return -1;
}

SeparationSystem BipartitionFamily::as_system() const {
  std::vector<int> inv = inverse_;
  std::vector<std::string> labels;
  labels.reserve(pair_count());
  for (const auto& [a, b] : pairs_) {
    std::string label = "(";
    for (size_t k = 0; k < a.size(); ++k) label += (k ? " " : "") + ground_[a[k]];
    label += "|";
    for (size_t k = 0; k < b.size(); ++k) label += (k ? " " : "") + ground_[b[k]];
    label += ")";
    labels.push_back(std::move(label));
  }
  std::vector<std::pair<int, int>> gens;
  for (int p = 0; p < pair_count(); ++p)
    for (int q = 0; q < pair_count(); ++q)
      if (p != q && std::includes(pairs_[q].first.begin(), pairs_[q].first.end(),
                                  pairs_[p].first.begin(), pairs_[p].first.end()))
        gens.emplace_back(p, q);
  return SeparationSystem::build_exact(pair_count(), std::move(inv), gens, std::move(labels));
}

namespace {

BipartitionFamily family_of_pairs(std::vector<std::string> ground,
                                  const std::vector<BipartitionFamily::Pair>& raw,
                                  std::vector<int>& map_out) {
  BipartitionFamily family(std::move(ground), raw);
  map_out.clear();
  for (const auto& pair : raw) {
    const int p = family.find(pair);
    require(p != -1, errc::violation_found, "constructed pair lost in normalization");
    map_out.push_back(p);
  }
  return family;
}

}  // namespace

FamilyEmbedding simple_embed(const SeparationSystem& tau, const EnumerationLimits& limits) {
  (void)limits;
  require(is_regular(tau), errc::not_regular, "the simple embedding needs a regular tree set");
  require(is_tree_set(tau), errc::not_a_tree_set, "the simple embedding needs a tree set");
  const int n = tau.count();
  std::vector<std::string> ground;
  for (int i = 0; i < n; ++i) ground.push_back(tau.display(i));

  // Side of s: s itself, everything strictly below s, and the inverses of
  // those elements (never the inverse of s; regularity keeps it out).
  auto side_of = [&](int s) {
    std::vector<int> side{s};
    for (int r = 0; r < n; ++r)
      if (tau.lt(r, s)) {
        side.push_back(r);
        side.push_back(tau.inverse(r));
      }
    side = normalize_set(std::move(side));
    require(!std::binary_search(side.begin(), side.end(), tau.inverse(s)), errc::violation_found,
            "side of s contains the inverse of s");
    return side;
  };

  std::vector<BipartitionFamily::Pair> raw;
  for (int s = 0; s < n; ++s) raw.emplace_back(side_of(s), side_of(tau.inverse(s)));
  FamilyEmbedding out{BipartitionFamily({}, {}), {}, true};
  out.family = family_of_pairs(std::move(ground), raw, out.map);
  require(verify_system_isomorphism(tau, out.family.as_system(), out.map), errc::violation_found,
          "simple embedding is not an isomorphism of tree sets");
  return out;
}

namespace {

FamilyEmbedding orientation_set_embed(const SeparationSystem& tau,
                                      const std::vector<std::vector<int>>& orientations,
                                      const std::vector<std::string>& ground,
                                      bool require_isomorphism) {
  std::vector<BipartitionFamily::Pair> raw;
  for (int s = 0; s < tau.count(); ++s) {
    BipartitionFamily::Pair pair;
    for (size_t o = 0; o < orientations.size(); ++o) {
      const auto& members = orientations[o];
      if (std::binary_search(members.begin(), members.end(), s))
        pair.second.push_back(static_cast<int>(o));
      else if (std::binary_search(members.begin(), members.end(), tau.inverse(s)))
        pair.first.push_back(static_cast<int>(o));
    }
    require(!pair.first.empty() && !pair.second.empty(), errc::violation_found,
            "an oriented separation lies in no (or every) listed orientation");
    raw.push_back(std::move(pair));
  }
  FamilyEmbedding out{BipartitionFamily({}, {}), {}, true};
  out.family = family_of_pairs(ground, raw, out.map);
  for (int i = 0; i < tau.count() && out.injective; ++i)
    for (int j = i + 1; j < tau.count(); ++j)
      if (out.map[i] == out.map[j]) {
        out.injective = false;
        break;
      }
  if (require_isomorphism || out.injective)
    require(verify_system_isomorphism(tau, out.family.as_system(), out.map),
            errc::violation_found, "embedding is not an isomorphism of tree sets");
  return out;
}

std::vector<std::string> fingerprint_labels(const std::vector<std::vector<int>>& orientations) {
  std::vector<std::string> labels;
  labels.reserve(orientations.size());
  for (const auto& orientation : orientations)
    labels.push_back(orientation_fingerprint(orientation));
  return labels;
}

}  // namespace

FamilyEmbedding orientation_embed(const SeparationSystem& tau, const EnumerationLimits& limits) {
  require(is_regular(tau), errc::not_regular, "the orientation embedding needs a regular tree set");
  require(is_tree_set(tau), errc::not_a_tree_set, "the orientation embedding needs a tree set");
  const auto orientations = enumerate_consistent(tau, limits);
  return orientation_set_embed(tau, orientations, fingerprint_labels(orientations), true);
}

FamilyEmbedding directed_embed(const SeparationSystem& tau, const EnumerationLimits& limits) {
  require(is_regular(tau), errc::not_regular, "the directed embedding needs a regular tree set");
  require(is_tree_set(tau), errc::not_a_tree_set, "the directed embedding needs a tree set");
  const auto directed = directed_orientations(tau, limits);
  return orientation_set_embed(tau, directed, fingerprint_labels(directed), false);
}

bool is_ever_branching(const SeparationSystem& tau) {
  require(is_regular(tau), errc::not_regular, "ever-branching is defined for regular tree sets");
  require(is_nested(tau), errc::not_nested, "ever-branching is defined for tree sets");
  for (int u = 0; u < tau.count(); ++u)
    for (int v = u + 1; v < tau.count(); ++v) {
      if (!is_proper_star(tau, {u, v})) continue;
      bool extends = false;
      for (int w = 0; w < tau.count() && !extends; ++w)
        if (w != u && w != v && is_proper_star(tau, {u, v, w})) extends = true;
      if (!extends) return false;  // a maximal proper 2-star
    }
  return true;
}

std::vector<int> induced_orientation(const BipartitionFamily& family, int x) {
  require(x >= 0 && x < family.ground_size(), errc::unknown_element,
          "ground index out of range");
  std::vector<int> members;
  for (int p = 0; p < family.pair_count(); ++p) {
    const auto& b = family.pair(p).second;
    if (std::binary_search(b.begin(), b.end(), x)) members.push_back(p);
  }
  return members;  // already sorted by pair index
}

std::vector<std::pair<int, int>> indistinguishable_pairs(const BipartitionFamily& family) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < family.ground_size(); ++x)
    for (int y = x + 1; y < family.ground_size(); ++y) {
      bool separated = false;
      for (int p = 0; p < family.pair_count() && !separated; ++p) {
        const auto& [a, b] = family.pair(p);
        if (std::binary_search(a.begin(), a.end(), x) &&
            std::binary_search(b.begin(), b.end(), y))
          separated = true;
      }
      if (!separated) out.emplace_back(x, y);
    }
  return out;
}

DedupedFamily dedupe(const BipartitionFamily& family) {
  const int n = family.ground_size();
  std::vector<int> representative(n);
  for (int x = 0; x < n; ++x) representative[x] = x;
  for (const auto& [x, y] : indistinguishable_pairs(family))
    representative[y] = std::min(representative[y], representative[x]);
  DedupedFamily out{BipartitionFamily({}, {}), {}, {}};
  std::vector<int> new_index(n, -1);
  std::vector<std::string> ground;
  for (int x = 0; x < n; ++x)
    if (representative[x] == x) {
      new_index[x] = static_cast<int>(out.kept.size());
      out.kept.push_back(x);
      ground.push_back(family.ground_label(x));
    }
  for (int x = 0; x < n; ++x) new_index[x] = new_index[representative[x]];
  std::vector<BipartitionFamily::Pair> pairs;
  for (int p = 0; p < family.pair_count(); ++p) {
    BipartitionFamily::Pair pair;
    for (int x : family.pair(p).first) pair.first.push_back(new_index[x]);
    for (int x : family.pair(p).second) pair.second.push_back(new_index[x]);
    pairs.push_back(std::move(pair));
  }
  out.family = BipartitionFamily(std::move(ground), std::move(pairs));
  out.representative = std::move(new_index);
  return out;
}

Recovery recover(const BipartitionFamily& family, const SeparationSystem& tau,
                 const std::vector<int>& g, const EnumerationLimits& limits) {
  const SeparationSystem fam_sys = family.as_system();
  require(verify_system_isomorphism(fam_sys, tau, g), errc::precondition_violated,
          "g must be an isomorphism of tree sets from the family onto tau");
  {
    const auto pairs = indistinguishable_pairs(family);
    if (!pairs.empty())
      fail(errc::premise_failed_first,
           "ground elements " + family.ground_label(pairs.front().first) + " and " +
               family.ground_label(pairs.front().second) + " are indistinguishable");
  }
  std::vector<std::vector<int>> induced(family.ground_size());
  for (int x = 0; x < family.ground_size(); ++x) {
    induced[x] = induced_orientation(family, x);
    require(is_full_orientation(fam_sys, induced[x]) && is_consistent(fam_sys, induced[x]),
            errc::violation_found, "induced orientation failed its own invariants");
  }
  for (const auto& orientation : enumerate_consistent(fam_sys, limits)) {
    if (std::find(induced.begin(), induced.end(), orientation) == induced.end())
      fail(errc::premise_failed_second,
           "consistent orientation " + orientation_fingerprint(orientation) +
               " is induced by no ground element");
  }

  Recovery out;
  out.orientations_of_tau = enumerate_consistent(tau, limits);
  out.h.assign(family.ground_size(), -1);
  std::vector<bool> hit(out.orientations_of_tau.size(), false);
  for (int x = 0; x < family.ground_size(); ++x) {
    std::vector<int> mapped;
    for (int p : induced[x]) mapped.push_back(g[p]);
    mapped = normalize_set(std::move(mapped));
    const auto it =
        std::find(out.orientations_of_tau.begin(), out.orientations_of_tau.end(), mapped);
    require(it != out.orientations_of_tau.end(), errc::violation_found,
            "g(O_x) is not a consistent orientation of tau");
    out.h[x] = static_cast<int>(it - out.orientations_of_tau.begin());
    require(!hit[out.h[x]], errc::violation_found, "h is not injective");
    hit[out.h[x]] = true;
  }
  require(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }), errc::violation_found,
          "h is not surjective");

  // The action of h on the family must equal the orientation embedding
  // composed with g.
  const FamilyEmbedding f = orientation_embed(tau, limits);
  for (int p = 0; p < family.pair_count(); ++p) {
    BipartitionFamily::Pair acted;
    for (int x : family.pair(p).first) acted.first.push_back(out.h[x]);
    for (int x : family.pair(p).second) acted.second.push_back(out.h[x]);
    acted.first = normalize_set(std::move(acted.first));
    acted.second = normalize_set(std::move(acted.second));
    require(acted == f.family.pair(f.map[g[p]]), errc::violation_found,
            "action of h on the family does not equal f o g at pair " + std::to_string(p));
  }
  return out;
}

SparseRecovery recover_sparse(const BipartitionFamily& family, const EnumerationLimits& limits) {
  const SeparationSystem fam_sys = family.as_system();
  require(is_nested(fam_sys), errc::not_nested, "the family must be a tree set of bipartitions");
  require(is_ever_branching(fam_sys), errc::precondition_violated,
          "the family is not ever-branching");

  SparseRecovery out;
  out.directed_orientations = directed_orientations(fam_sys, limits);
  std::vector<std::vector<int>> induced(family.ground_size());
  for (int x = 0; x < family.ground_size(); ++x) induced[x] = induced_orientation(family, x);

  out.h.assign(family.ground_size(), -1);
  for (size_t o = 0; o < out.directed_orientations.size(); ++o) {
    std::vector<int> inducers;
    for (int x = 0; x < family.ground_size(); ++x)
      if (induced[x] == out.directed_orientations[o]) inducers.push_back(x);
    if (inducers.empty())
      fail(errc::premise_failed_second,
           "directed orientation " + orientation_fingerprint(out.directed_orientations[o]) +
               " is induced by no ground element");
    if (inducers.size() > 1)
      fail(errc::premise_failed_uniqueness,
           "directed orientation induced by several elements, e.g. " +
               family.ground_label(inducers[0]) + " and " + family.ground_label(inducers[1]) +
               "; dedupe the family first");
    out.ground_subset.push_back(inducers.front());
    out.h[inducers.front()] = static_cast<int>(o);
  }
  out.ground_subset = normalize_set(std::move(out.ground_subset));

  // Action check against the directed embedding of the family system itself
  // (g is the identity here).
  const FamilyEmbedding f_sparse = directed_embed(fam_sys, limits);
  require(f_sparse.injective, errc::violation_found,
          "directed embedding of an ever-branching tree set must be injective");
  for (int p = 0; p < family.pair_count(); ++p) {
    BipartitionFamily::Pair acted;
    for (int x : family.pair(p).first)
      if (out.h[x] != -1) acted.first.push_back(out.h[x]);
    for (int x : family.pair(p).second)
      if (out.h[x] != -1) acted.second.push_back(out.h[x]);
    acted.first = normalize_set(std::move(acted.first));
    acted.second = normalize_set(std::move(acted.second));
    require(acted == f_sparse.family.pair(f_sparse.map[p]), errc::violation_found,
            "action of h' does not equal f' o g at pair " + std::to_string(p));
  }
  return out;
}

FamilyEmbedding mixed_embed(const SeparationSystem& tau,
                            const std::vector<std::optional<std::string>>& labels,
                            const EnumerationLimits& limits) {
  require(is_regular(tau), errc::not_regular, "the mixture needs a regular tree set");
  require(is_tree_set(tau), errc::not_a_tree_set, "the mixture needs a tree set");
  const auto orientations = enumerate_consistent(tau, limits);
  require(labels.size() == orientations.size(), errc::precondition_violated,
          "one optional label per consistent orientation is required");
  std::set<std::string> distinct;
  for (const auto& label : labels)
    if (label) require(distinct.insert(*label).second, errc::invalid_family,
                       "labels must be distinct");
  for (size_t o = 0; o < orientations.size(); ++o)
    if (!labels[o] && is_directed(tau, orientations[o]))
      fail(errc::missing_directed_label,
           "directed orientation " + orientation_fingerprint(orientations[o]) + " is unlabelled");

  std::vector<std::vector<int>> labelled;
  std::vector<std::string> ground;
  for (size_t o = 0; o < orientations.size(); ++o)
    if (labels[o]) {
      labelled.push_back(orientations[o]);
      ground.push_back(*labels[o]);
    }
  FamilyEmbedding out = orientation_set_embed(tau, labelled, ground, false);
  require(out.injective, errc::not_injective_embedding,
          "the labelled orientations do not separate all separations");
  require(verify_system_isomorphism(tau, out.family.as_system(), out.map), errc::violation_found,
          "mixture embedding is not an isomorphism of tree sets");
  return out;
}

}  // namespace tressec
