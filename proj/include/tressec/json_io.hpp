#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tressec/bipartition.hpp"
#include "tressec/graph_decomposition.hpp"
#include "tressec/graph_tree.hpp"
#include "tressec/order_tree.hpp"
#include "tressec/separation_system.hpp"
#include "tressec/stree.hpp"

namespace tressec::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "1";

enum class Kind {
  system,
  tree,
  order_tree,
  bipartition_family,
  stree,
  graph,
  tree_decomposition,
};

const char* kind_name(Kind kind) noexcept;
Kind kind_from_name(const std::string& name);  // parse_error if unknown

/// Reads the envelope frame {"format_version","kind","payload"}; payload
/// errors surface as parse_error, domain validation as the module errors.
struct Envelope {
  Kind kind;
  json payload;
};
Envelope read_envelope(const json& doc);
json make_envelope(Kind kind, json payload);

json write_system(const SeparationSystem& sys);
SeparationSystem read_system(const json& payload);

json write_tree(const GraphTree& tree);
GraphTree read_tree(const json& payload);

json write_order_tree(const OrderTree& tree);
OrderTree read_order_tree(const json& payload);

json write_family(const BipartitionFamily& family);
BipartitionFamily read_family(const json& payload);

json write_stree(const STree& st);
STree read_stree(const json& payload);

json write_graph(const Graph& graph);
Graph read_graph(const json& payload);

json write_decomposition(const TreeDecomposition& decomposition);
TreeDecomposition read_decomposition(const json& payload);

/// Sorted index array, the serialized form of an orientation.
json write_index_set(const std::vector<int>& members);
std::vector<int> read_index_set(const json& doc);

json parse_text(const std::string& text);  // parse_error on bad JSON

}  // namespace tressec::io
