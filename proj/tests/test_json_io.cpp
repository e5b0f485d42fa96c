#include <doctest.h>

#include "support/generators.hpp"
#include "tressec/json_io.hpp"
#include "tressec/validate.hpp"

using namespace tressec;
namespace io = tressec::io;

TEST_CASE("serialization round trips every kind") {
  generators::Rng rng(131);
  SUBCASE("system") {
    const SeparationSystem sys = generators::random_nested_system(rng, 6, 2);
    CHECK(io::read_system(io::write_system(sys)) == sys);
  }
  SUBCASE("tree") {
    const GraphTree tree = generators::random_tree(rng, 7);
    const GraphTree back = io::read_tree(io::write_tree(tree));
    CHECK(back.node_labels() == tree.node_labels());
    CHECK(back.edges() == tree.edges());
  }
  SUBCASE("order_tree") {
    const OrderTree tree = generators::random_order_tree(rng, 6);
    const OrderTree back = io::read_order_tree(io::write_order_tree(tree));
    CHECK(back.elements() == tree.elements());
    CHECK(back.strict_pairs() == tree.strict_pairs());
  }
  SUBCASE("bipartition_family") {
    const BipartitionFamily family = generators::leaf_family(generators::double_star());
    CHECK(io::read_family(io::write_family(family)) == family);
  }
  SUBCASE("stree") {
    const generators::RandomSTree sample = generators::random_stree(rng, 5, 1);
    const STree back = io::read_stree(io::write_stree(sample.stree));
    CHECK(back.alpha() == sample.stree.alpha());
    CHECK(back.tree().node_labels() == sample.stree.tree().node_labels());
    CHECK(back.host() == sample.stree.host());
  }
  SUBCASE("graph and tree_decomposition") {
    Graph graph({"a", "b", "c"}, {{0, 1}, {1, 2}});
    const Graph graph_back = io::read_graph(io::write_graph(graph));
    CHECK(graph_back.vertex_labels() == graph.vertex_labels());
    CHECK(graph_back.edges() == graph.edges());

    TreeDecomposition td(graph, GraphTree({"t0", "t1"}, {{0, 1}}), {{0, 1}, {1, 2}});
    const TreeDecomposition td_back = io::read_decomposition(io::write_decomposition(td));
    CHECK(td_back.parts() == td.parts());
  }
}

TEST_CASE("envelopes") {
  const auto sys = edge_tree_set(generators::path(3));
  const io::json doc = io::make_envelope(io::Kind::system, io::write_system(sys));
  CHECK(doc.at("format_version") == "1");
  const io::Envelope envelope = io::read_envelope(doc);
  CHECK(envelope.kind == io::Kind::system);
  CHECK(io::read_system(envelope.payload) == sys);
  CHECK_THROWS_AS(io::read_envelope(io::json{{"kind", "system"}}), error);
  CHECK_THROWS_AS(io::parse_text("{not json"), error);
}

TEST_CASE("validation reports") {
  SUBCASE("a valid system passes all lines") {
    const auto payload = io::write_system(edge_tree_set(generators::path(3)));
    const auto report = io::validate_payload(io::Kind::system, payload);
    CHECK(report.ok);
    CHECK(report.lines.size() == 3);
    CHECK(report.properties.at("tree_set") == true);
  }
  SUBCASE("a relation missing its dual pairs fails Eq. (1) by name") {
    io::json payload;
    payload["count"] = 4;
    payload["inv"] = {1, 0, 3, 2};
    payload["le"] = io::json::array({io::json::array({0, 2})});
    const auto report = io::validate_payload(io::Kind::system, payload);
    CHECK_FALSE(report.ok);
    bool found = false;
    for (const auto& line : report.lines)
      if (!line.ok && !line.skipped && line.name.find("Eq. (1)") != std::string::npos) found = true;
    CHECK(found);
  }
  SUBCASE("the V-poset fails the order-tree chain invariant") {
    io::json payload;
    payload["elements"] = {"x", "y", "z"};
    payload["lt"] = io::json::array(
        {io::json::array({"x", "z"}), io::json::array({"y", "z"})});
    const auto report = io::validate_payload(io::Kind::order_tree, payload);
    CHECK_FALSE(report.ok);
  }
  SUBCASE("stree labellings that break inversion fail their line") {
    io::json payload;
    payload["tree"] = io::json{{"nodes", {"a", "b"}},
                               {"edges", io::json::array({io::json::array({"a", "b"})})}};
    payload["system"] = io::json{{"count", 4}, {"inv", {1, 0, 3, 2}}, {"le", io::json::array()}};
    payload["alpha"] = io::json::array({io::json::array({"a", "b", 0}),
                                        io::json::array({"b", "a", 2})});
    const auto report = io::validate_payload(io::Kind::stree, payload);
    CHECK_FALSE(report.ok);
    CHECK(report.lines.at(0).ok);
    CHECK(report.lines.at(1).ok);
    CHECK_FALSE(report.lines.at(2).ok);
  }
  SUBCASE("asymmetric families fail the symmetry line") {
    io::json payload;
    payload["ground"] = {"a", "b"};
    payload["pairs"] = io::json::array({io::json::array(
        {io::json::array({"a"}), io::json::array({"b"})})});
    const auto report = io::validate_payload(io::Kind::bipartition_family, payload);
    CHECK_FALSE(report.ok);
    CHECK(report.lines.at(0).ok);  // partition shape is fine
    CHECK_FALSE(report.lines.at(1).ok);
  }
}
