#include <doctest.h>

#include <algorithm>
#include <memory>

#include "support/generators.hpp"
#include "tressec/stree.hpp"

using namespace tressec;

namespace {

std::shared_ptr<const SeparationSystem> shared(SeparationSystem sys) {
  return std::make_shared<SeparationSystem>(std::move(sys));
}

StarFamily splitting_family(const SeparationSystem& sys) {
  std::vector<std::vector<int>> members;
  for (const auto& split : splitting_stars(sys)) members.push_back(split.members);
  return StarFamily(std::move(members));
}

// The canonical S-tree of a tree set, labelled by itself.
STree identity_stree(SeparationSystem sys) {
  auto host = shared(std::move(sys));
  return stree_from_treeset(host, splitting_family(*host));
}

// A single edge labelled by the one small separation 0 < 1 = inverse(0).
STree small_image_stree() {
  auto host = shared(SeparationSystem::build(2, {1, 0}, {{0, 1}}));
  return STree(GraphTree({"t0", "t1"}, {{0, 1}}), host, {0, 1});
}

// t1 - t2 - t3 with both edges labelled by the same separation.
STree repeated_label_path() {
  auto host = shared(edge_tree_set(generators::path(2)));
  return STree(GraphTree({"t1", "t2", "t3"}, {{0, 1}, {1, 2}}), host, {0, 1, 0, 1});
}

}  // namespace

TEST_CASE("is_over and is_standard") {
  const STree st = identity_stree(edge_tree_set(generators::path(3)));
  const StarFamily tautological = StarFamily::of_stree(st);
  CHECK(is_over(st, tautological));
  CHECK(tautological.stars_only(st.host()));

  // Remove one member and the S-tree is no longer over the family.
  std::vector<std::vector<int>> fewer(tautological.members().begin(),
                                      tautological.members().end() - 1);
  CHECK_FALSE(is_over(st, StarFamily(fewer)));

  // Standardness: co-trivial singletons must be present.
  const SeparationSystem with_trivial =
      SeparationSystem::build(4, {1, 0, 3, 2}, {{0, 2}, {0, 3}});
  CHECK_FALSE(is_standard(with_trivial, StarFamily({})));
  CHECK(is_standard(with_trivial, StarFamily(std::vector<std::vector<int>>{{1}})));
  CHECK(is_standard(edge_tree_set(generators::path(3)), StarFamily({})));  // vacuous
}

TEST_CASE("prune") {
  SUBCASE("irredundant input is a fixed point") {
    const STree st = identity_stree(edge_tree_set(generators::path(3)));
    REQUIRE_FALSE(is_redundant(st));
    const STree pruned = prune(st);
    CHECK(pruned.tree().node_count() == st.tree().node_count());
  }
  SUBCASE("a duplicated branch is deleted and star images survive") {
    // Star at c with two leaves reached by the same label.
    auto host = shared(edge_tree_set(generators::path(2)));
    const STree st(GraphTree({"c", "u", "v"}, {{0, 1}, {0, 2}}), host, {0, 1, 0, 1});
    REQUIRE(is_redundant(st));
    const StarFamily family = StarFamily::of_stree(st);
    const STree pruned = prune(st);
    CHECK_FALSE(is_redundant(pruned));
    CHECK(pruned.tree().node_count() == 2);
    CHECK(is_over(pruned, family));
  }
  SUBCASE("random injected redundancy always prunes back over the family") {
    generators::Rng rng(83);
    for (int round = 0; round < 30; ++round) {
      const generators::RandomSTree sample = generators::random_stree(rng, 6, 2);
      const STree pruned = prune(sample.stree);
      CHECK_FALSE(is_redundant(pruned));
      CHECK(is_over(pruned, sample.family));
      CHECK(pruned.tree().edge_count() <= sample.stree.tree().edge_count());
    }
  }
}

TEST_CASE("check_order_preserving") {
  SUBCASE("identity S-trees are monotone without exceptions") {
    const OrderPreservationReport report =
        check_order_preserving(identity_stree(edge_tree_set(generators::path(3))));
    CHECK(report.image_nested);
    CHECK(report.exception_small == 0);
    CHECK(report.exception_trivial == 0);
    CHECK(report.comparable_pairs > 0);
  }
  SUBCASE("the small-image exception branch") {
    const OrderPreservationReport report = check_order_preserving(small_image_stree());
    CHECK(report.exception_small > 0);
  }
  SUBCASE("images of irredundant S-trees over stars are nested") {
    generators::Rng rng(89);
    for (int round = 0; round < 40; ++round) {
      const generators::RandomSTree sample = generators::random_stree(rng, 6, 2);
      const STree pruned = prune(sample.stree);
      CHECK(check_order_preserving(pruned).image_nested);
    }
  }
}

TEST_CASE("tighten") {
  SUBCASE("tight input is unchanged") {
    const STree st = identity_stree(edge_tree_set(generators::path(3)));
    REQUIRE(is_tight(st));
    CHECK(tighten(st).tree().node_count() == st.tree().node_count());
  }
  SUBCASE("a repeated-label path contracts to a single edge") {
    const STree st = repeated_label_path();
    REQUIRE_FALSE(is_tight(st));
    const STree tight = tighten(st);
    CHECK(is_tight(tight));
    CHECK(tight.tree().node_count() == 2);
    CHECK(tight.tree().edge_count() == 1);
    CHECK(tight.alpha(0) == 0);
  }
  SUBCASE("star images survive as sets through tighten") {
    generators::Rng rng(97);
    for (int round = 0; round < 30; ++round) {
      const generators::RandomSTree sample = generators::random_stree(rng, 6, 2);
      const STree tight = tighten(sample.stree);
      CHECK(is_tight(tight));
      CHECK_FALSE(is_redundant(tight));
      CHECK(is_over(tight, sample.family));
    }
  }
}

TEST_CASE("check_no_facing_duplicates") {
  SUBCASE("essential S-trees have no facing duplicates") {
    const FacingDuplicateReport report =
        check_no_facing_duplicates(identity_stree(edge_tree_set(generators::star(3))));
    CHECK(report.facing_pairs == 0);
  }
  SUBCASE("single edges are vacuous") {
    const FacingDuplicateReport report =
        check_no_facing_duplicates(identity_stree(edge_tree_set(generators::path(2))));
    CHECK(report.facing_pairs == 0);
  }
  SUBCASE("a constructed facing duplicate is trivial") {
    // Host: a trivial bottom pair under a single separation; hang the bottom
    // label twice, pointing towards each other across the tree.
    generators::Rng rng(101);
    for (int round = 0; round < 40; ++round) {
      const generators::RandomSTree sample = generators::random_stree(rng, 6, 2);
      const STree pruned = prune(sample.stree);
      const FacingDuplicateReport report = check_no_facing_duplicates(pruned);
      CHECK(report.facing_pairs >= 0);  // every counted pair was verified trivial
    }
  }
}

TEST_CASE("essentialize") {
  SUBCASE("trivial-free input is unchanged") {
    const STree st = identity_stree(edge_tree_set(generators::path(3)));
    const StarFamily family = StarFamily::of_stree(st);
    const Essentialized out = essentialize(st, family);
    CHECK(out.stree.tree().node_count() == st.tree().node_count());
    CHECK(out.family_core == family);
  }
  SUBCASE("trivially labelled pendant edges are deleted with their leaves") {
    generators::Rng rng(105);
    for (int round = 0; round < 20; ++round) {
      const generators::RandomSTree sample = generators::random_stree(rng, 5, 2);
      const Essentialized out = essentialize(sample.stree, sample.family);
      CHECK(is_essential(out.stree));
      CHECK(is_over(out.stree, out.family_core));
      CHECK(check_injective(out.stree));
    }
  }
  SUBCASE("the pipeline never grows the edge set") {
    generators::Rng rng(107);
    for (int round = 0; round < 20; ++round) {
      const generators::RandomSTree sample = generators::random_stree(rng, 6, 2);
      const Essentialized out = essentialize(sample.stree, sample.family);
      CHECK(out.stree.tree().edge_count() <= sample.stree.tree().edge_count());
    }
  }
}

TEST_CASE("stree_from_treeset") {
  SUBCASE("identity reconstruction of tau(P3)") {
    const SeparationSystem tau = edge_tree_set(generators::path(3));
    const STree st = identity_stree(tau);
    CHECK(st.tree().node_count() == 3);
    std::vector<int> image;
    for (int d = 0; d < st.tree().oriented_count(); ++d) image.push_back(st.alpha(d));
    CHECK(normalize_set(image) == std::vector<int>{0, 1, 2, 3});
  }
  SUBCASE("trivial elements disappear from the labels") {
    generators::Rng rng(109);
    SeparationSystem sys = generators::random_nested_system(rng, 5, 2);
    const Classification c = classify(sys);
    auto host = shared(std::move(sys));
    const STree st = stree_from_treeset(host, splitting_family(*host));
    for (int d = 0; d < st.tree().oriented_count(); ++d) {
      CHECK_FALSE(c.trivial[st.alpha(d)]);
      CHECK_FALSE(c.cotrivial[st.alpha(d)]);
    }
  }
  SUBCASE("degenerate elements are rejected") {
    auto host = shared(generators::degenerate_system(1));
    CHECK_THROWS_WITH_AS(stree_from_treeset(host, StarFamily({})),
                         doctest::Contains("DegenerateElement"), error);
  }
  SUBCASE("a family missing a splitting set is rejected") {
    auto host = shared(edge_tree_set(generators::path(3)));
    CHECK_THROWS_WITH_AS(stree_from_treeset(host, StarFamily({})),
                         doctest::Contains("NotOverF"), error);
  }
  SUBCASE("crossing systems are rejected") {
    auto host = shared(SeparationSystem::build(4, {1, 0, 3, 2}, {}));
    CHECK_THROWS_WITH_AS(stree_from_treeset(host, StarFamily({})),
                         doctest::Contains("NotNested"), error);
  }
}

TEST_CASE("treeset_from_stree") {
  SUBCASE("the identity S-tree gives back its tree set") {
    const SeparationSystem tau = edge_tree_set(generators::path(3));
    const STree st = identity_stree(tau);
    const StreeImage image = treeset_from_stree(st);
    CHECK(image.isomorphism_verified);
    CHECK(image.image.system == tau);
  }
  SUBCASE("essentialized random S-trees verify the isomorphism") {
    generators::Rng rng(113);
    for (int round = 0; round < 40; ++round) {
      const generators::RandomSTree sample = generators::random_stree(rng, 6, 2);
      const Essentialized out = essentialize(sample.stree, sample.family);
      CHECK(treeset_from_stree(out.stree).isomorphism_verified);
    }
  }
  SUBCASE("round trip: image equals the regularized essential core") {
    generators::Rng rng(127);
    for (int round = 0; round < 40; ++round) {
      auto host = shared(generators::random_nested_system(rng, 6, 2));
      const STree st = stree_from_treeset(host, splitting_family(*host));
      const StreeImage image = treeset_from_stree(st);
      CHECK(image.image.to_host == essential_core(*host).to_host);
    }
  }
  SUBCASE("non-essential input is rejected") {
    CHECK_THROWS_AS(treeset_from_stree(repeated_label_path()), error);
  }
}

TEST_CASE("canonicalize logs its steps") {
  auto host = shared(edge_tree_set(generators::path(2)));
  const STree redundant(GraphTree({"c", "u", "v"}, {{0, 1}, {0, 2}}), host, {0, 1, 0, 1});
  const auto [essential, log] = canonicalize(redundant, StarFamily::of_stree(redundant));
  CHECK(log.pruned == 1);
  CHECK(is_essential(essential));
  CHECK(essential.tree().node_count() == 2);
}
