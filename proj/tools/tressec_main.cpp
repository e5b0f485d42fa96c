#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tressec/json_io.hpp"
#include "tressec/validate.hpp"

namespace {

using tressec::errc;
using tressec::EnumerationLimits;
using tressec::fail;
namespace io = tressec::io;
using io::json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) fail(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

io::Envelope load_envelope(const std::string& path) {
  return io::read_envelope(io::parse_text(read_input(path)));
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

EnumerationLimits limits_from(const std::optional<int>& max_size) {
  EnumerationLimits limits;
  if (const char* env = std::getenv("TRESSEC_MAX_ORIENTED")) limits.max_oriented = std::atoi(env);
  if (max_size) limits.max_oriented = *max_size;
  return limits;
}

json witness_map(const std::vector<int>& map) {
  json out = json::array();
  for (size_t i = 0; i < map.size(); ++i) out.push_back(json::array({static_cast<int>(i), map[i]}));
  return out;
}

int cmd_validate(const std::string& file) {
  const io::Envelope envelope = load_envelope(file);
  const io::ValidationReport report = io::validate_payload(envelope.kind, envelope.payload);
  emit(io::report_to_json(envelope.kind, report));
  return report.ok ? 0 : 1;
}

int cmd_convert(const std::string& file, const std::string& target,
                const std::optional<std::string>& orientation_file,
                const EnumerationLimits& limits) {
  const io::Envelope envelope = load_envelope(file);
  json out;

  if (envelope.kind == io::Kind::system) {
    const tressec::SeparationSystem sys = io::read_system(envelope.payload);
    if (target == "tree") {
      const tressec::TreeFromTreeSet rebuilt = tressec::tree_from_treeset(sys, limits);
      out = io::make_envelope(io::Kind::tree, io::write_tree(rebuilt.tree));
      json witness;
      json edges = json::array();
      for (int i = 0; i < sys.count(); ++i) {
        const int d = rebuilt.oriented_edge_of[i];
        edges.push_back(json::array({i, rebuilt.tree.node_label(rebuilt.tree.tail(d)),
                                     rebuilt.tree.node_label(rebuilt.tree.head(d))}));
      }
      witness["index_to_oriented_edge"] = std::move(edges);
      out["witness"] = std::move(witness);
    } else if (target == "order_tree") {
      if (!orientation_file) fail(errc::precondition_violated, "--orientation file is required");
      const auto orientation = io::read_index_set(io::parse_text(read_input(*orientation_file)));
      const tressec::InducedOrderTree induced = tressec::order_tree_from_oriented(sys, orientation);
      out = io::make_envelope(io::Kind::order_tree, io::write_order_tree(induced.tree));
      out["witness"] = json{{"host_index", induced.host_index}};
    } else if (target == "bipartitions") {
      const tressec::FamilyEmbedding embedding = tressec::orientation_embed(sys, limits);
      out = io::make_envelope(io::Kind::bipartition_family, io::write_family(embedding.family));
      out["witness"] = json{{"f", witness_map(embedding.map)}};
    } else if (target == "bipartitions-sparse") {
      const tressec::FamilyEmbedding embedding = tressec::directed_embed(sys, limits);
      if (!embedding.injective)
        fail(errc::not_injective_embedding,
             "the tree set does not branch everywhere, so the sparse map is not injective");
      out = io::make_envelope(io::Kind::bipartition_family, io::write_family(embedding.family));
      out["witness"] = json{{"f_sparse", witness_map(embedding.map)}};
    } else {
      fail(errc::unsupported_conversion, "system -> " + target);
    }
  } else if (envelope.kind == io::Kind::tree) {
    if (target != "system") fail(errc::unsupported_conversion, "tree -> " + target);
    const tressec::GraphTree tree = io::read_tree(envelope.payload);
    const tressec::SeparationSystem sys = tressec::edge_tree_set(tree);
    out = io::make_envelope(io::Kind::system, io::write_system(sys));
    json edges = json::array();
    for (int d = 0; d < tree.oriented_count(); ++d)
      edges.push_back(json::array(
          {tree.node_label(tree.tail(d)), tree.node_label(tree.head(d)), d}));
    out["witness"] = json{{"oriented_edge_to_index", std::move(edges)}};
  } else if (envelope.kind == io::Kind::order_tree) {
    if (target != "system") fail(errc::unsupported_conversion, "order_tree -> " + target);
    const tressec::OrderTree tree = io::read_order_tree(envelope.payload);
    const tressec::OrderTreeEmbedding embedding = tressec::treeset_from_order_tree(tree);
    out = io::make_envelope(io::Kind::system, io::write_system(embedding.system));
    out["witness"] = json{{"ground", embedding.ground}, {"orientation", embedding.orientation}};
  } else if (envelope.kind == io::Kind::bipartition_family) {
    if (target != "system") fail(errc::unsupported_conversion, "bipartition_family -> " + target);
    const tressec::BipartitionFamily family = io::read_family(envelope.payload);
    out = io::make_envelope(io::Kind::system, io::write_system(family.as_system()));
  } else if (envelope.kind == io::Kind::stree) {
    if (target != "system") fail(errc::unsupported_conversion, "stree -> " + target);
    const tressec::STree st = io::read_stree(envelope.payload);
    const tressec::StreeImage image = tressec::treeset_from_stree(st);
    out = io::make_envelope(io::Kind::system, io::write_system(image.image.system));
    out["witness"] = json{{"to_host", image.image.to_host},
                          {"isomorphism_verified", image.isomorphism_verified}};
  } else if (envelope.kind == io::Kind::tree_decomposition) {
    const tressec::TreeDecomposition decomposition = io::read_decomposition(envelope.payload);
    const tressec::ExtractedSTree extracted = tressec::extract_separations(decomposition);
    if (target == "system") {
      out = io::make_envelope(io::Kind::system, io::write_system(extracted.stree.host()));
      json sides = json::array();
      for (const auto& [a, b] : extracted.sides) sides.push_back(json::array({a, b}));
      out["witness"] = json{{"sides", std::move(sides)}};
    } else if (target == "decomposition") {
      // The canonical rebuild: through the tree set and back.
      const tressec::TreeDecomposition rebuilt = tressec::decomposition_from_treeset(
          decomposition.graph(), extracted.sides, limits);
      out = io::make_envelope(io::Kind::tree_decomposition, io::write_decomposition(rebuilt));
    } else {
      fail(errc::unsupported_conversion, "tree_decomposition -> " + target);
    }
  } else {
    fail(errc::unsupported_conversion, std::string(io::kind_name(envelope.kind)) + " -> " + target);
  }
  emit(out);
  return 0;
}

int cmd_roundtrip(const std::string& file, const std::string& theorem,
                  const std::optional<std::string>& orientation_file,
                  const EnumerationLimits& limits) {
  const io::Envelope envelope = load_envelope(file);
  json report;
  report["theorem"] = theorem;
  bool pass = false;

  if (theorem == "trees-i") {
    const auto sys = io::read_system(envelope.payload);
    pass = tressec::verify_identity_isomorphism(sys, limits);
  } else if (theorem == "trees-ii") {
    const auto tree = io::read_tree(envelope.payload);
    pass = tressec::verify_node_bijection(tree, limits);
    json nodes = json::array();
    for (int t = 0; t < tree.node_count(); ++t)
      nodes.push_back(json::array(
          {tree.node_label(t), tressec::orientation_fingerprint(tressec::node_orientation(tree, t))}));
    report["witness"] = json{{"node_to_orientation", std::move(nodes)}};
  } else if (theorem == "order-i") {
    if (!orientation_file) fail(errc::precondition_violated, "--orientation file is required");
    const auto sys = io::read_system(envelope.payload);
    const auto orientation = io::read_index_set(io::parse_text(read_input(*orientation_file)));
    const tressec::Canonization canonization = tressec::canonize(sys, orientation);
    pass = true;  // canonize verifies or throws
    report["witness"] = json{{"map", witness_map(canonization.map)},
                             {"image_of_orientation", canonization.image_of_orientation}};
  } else if (theorem == "order-ii") {
    pass = tressec::verify_order_roundtrip(io::read_order_tree(envelope.payload));
  } else if (theorem == "bipartitions") {
    const auto sys = io::read_system(envelope.payload);
    const tressec::FamilyEmbedding embedding = tressec::orientation_embed(sys, limits);
    pass = true;  // the embedding verifies or throws
    report["witness"] = json{{"f", witness_map(embedding.map)}};
  } else if (theorem == "sparse") {
    const auto sys = io::read_system(envelope.payload);
    const bool branching = tressec::is_ever_branching(sys);
    const tressec::FamilyEmbedding embedding = tressec::directed_embed(sys, limits);
    report["ever_branching"] = branching;
    report["injective"] = embedding.injective;
    pass = branching == embedding.injective && branching;
    if (!branching) {
      // Surface a maximal proper 2-star and the collision it forces.
      for (int u = 0; u < sys.count() && !report.contains("counterexample"); ++u)
        for (int v = u + 1; v < sys.count(); ++v) {
          if (!tressec::is_proper_star(sys, {u, v})) continue;
          bool extends = false;
          for (int w = 0; w < sys.count() && !extends; ++w)
            if (w != u && w != v && tressec::is_proper_star(sys, {u, v, w})) extends = true;
          if (!extends) {
            report["counterexample"] =
                json{{"maximal_proper_2_star", json::array({u, v})},
                     {"collision",
                      json::array({u, sys.inverse(v)})}};  // f'(u) equals f'(inverse(v))
            break;
          }
        }
    }
  } else if (theorem == "stree") {
    const auto st = io::read_stree(envelope.payload);
    const auto host = st.host_ptr();
    std::vector<std::vector<int>> splits;
    for (const auto& split : tressec::splitting_stars(*host, limits))
      splits.push_back(split.members);
    const tressec::STree canonical =
        tressec::stree_from_treeset(host, tressec::StarFamily(std::move(splits)), limits);
    const tressec::StreeImage image = tressec::treeset_from_stree(canonical);
    const tressec::InducedSubsystem core = tressec::essential_core(*host);
    pass = image.image.to_host == core.to_host && image.isomorphism_verified;
    report["witness"] = json{{"image", image.image.to_host}};
  } else {
    fail(errc::precondition_violated, "unknown theorem '" + theorem + "'");
  }
  report["pass"] = pass;
  emit(report);
  return pass ? 0 : 1;
}

int cmd_canonicalize(const std::string& file) {
  const io::Envelope envelope = load_envelope(file);
  if (envelope.kind != io::Kind::stree)
    fail(errc::precondition_violated, "canonicalize expects an stree envelope");
  const tressec::STree st = io::read_stree(envelope.payload);
  const tressec::StarFamily family = tressec::StarFamily::of_stree(st);
  auto [essential, log] = tressec::canonicalize(st, family);
  json out = io::make_envelope(io::Kind::stree, io::write_stree(essential));
  out["log"] = json{{"steps", log.steps},
                    {"pruned_branches", log.pruned},
                    {"contracted_edges", log.contracted},
                    {"deleted_edges", log.deleted_edges}};
  emit(out);
  return 0;
}

int cmd_gen(const std::string& kind, int nodes, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  if (nodes < 1) fail(errc::precondition_violated, "--nodes must be positive");
  if (kind == "tree") {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (int t = 0; t < nodes; ++t) {
      labels.push_back("n" + std::to_string(t));
      if (t > 0) edges.emplace_back(static_cast<int>(rng() % t), t);
    }
    emit(io::make_envelope(io::Kind::tree,
                           io::write_tree(tressec::GraphTree(labels, edges))));
    return 0;
  }
  if (kind == "order_tree") {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> lt;
    for (int t = 0; t < nodes; ++t) {
      labels.push_back("x" + std::to_string(t));
      if (t > 0 && rng() % 4 != 0) lt.emplace_back(static_cast<int>(rng() % t), t);
    }
    emit(io::make_envelope(
        io::Kind::order_tree,
        io::write_order_tree(tressec::OrderTree(labels, tressec::StrictPoset(nodes, lt)))));
    return 0;
  }
  fail(errc::precondition_violated, "gen supports kinds 'tree' and 'order_tree'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tressec: separation systems, tree sets and their representations"};
  app.require_subcommand(1);

  std::string file, target, theorem, gen_kind = "tree";
  std::optional<std::string> orientation_file;
  std::optional<int> max_size;
  int gen_nodes = 6;
  unsigned long long seed = 1;

  CLI::App* validate = app.add_subcommand("validate", "run the invariant suite of an envelope");
  validate->add_option("file", file, "input envelope (- for stdin)")->required();

  CLI::App* convert = app.add_subcommand("convert", "convert between representations");
  convert->add_option("file", file, "input envelope (- for stdin)")->required();
  convert->add_option("--to", target, "target representation")
      ->required()
      ->check(CLI::IsMember(
          {"tree", "system", "order_tree", "bipartitions", "bipartitions-sparse", "decomposition"}));
  convert->add_option("--orientation", orientation_file,
                      "orientation file (sorted index array), for order_tree targets");
  convert->add_option("--max-size", max_size, "cap on oriented elements for enumeration");

  CLI::App* roundtrip = app.add_subcommand("roundtrip", "verify a reconstruction theorem");
  roundtrip->add_option("file", file, "input envelope (- for stdin)")->required();
  roundtrip->add_option("--theorem", theorem, "which round trip to verify")
      ->required()
      ->check(CLI::IsMember(
          {"trees-i", "trees-ii", "order-i", "order-ii", "bipartitions", "sparse", "stree"}));
  roundtrip->add_option("--orientation", orientation_file,
                        "orientation file, required for order-i");
  roundtrip->add_option("--max-size", max_size, "cap on oriented elements for enumeration");

  CLI::App* canonicalize =
      app.add_subcommand("canonicalize", "prune, tighten and essentialize an S-tree");
  canonicalize->add_option("file", file, "input stree envelope (- for stdin)")->required();

  CLI::App* gen = app.add_subcommand("gen", "emit a random instance");
  gen->add_option("--kind", gen_kind, "tree or order_tree")
      ->check(CLI::IsMember({"tree", "order_tree"}));
  gen->add_option("--nodes", gen_nodes, "number of nodes/elements");
  gen->add_option("--seed", seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(file);
    if (convert->parsed()) return cmd_convert(file, target, orientation_file, limits_from(max_size));
    if (roundtrip->parsed())
      return cmd_roundtrip(file, theorem, orientation_file, limits_from(max_size));
    if (canonicalize->parsed()) return cmd_canonicalize(file);
    if (gen->parsed()) return cmd_gen(gen_kind, gen_nodes, seed);
  } catch (const tressec::error& e) {
    json out;
    out["error"] = json{{"code", tressec::errc_name(e.code())}, {"message", e.what()}};
    std::cout << out.dump(2) << "\n";
    std::cerr << e.what() << "\n";
    return e.code() == errc::parse_error ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
