#include "tressec/json_io.hpp"

#include <memory>

namespace tressec::io {

namespace {

[[noreturn]] void bad(const std::string& message) { fail(errc::parse_error, message); }

const json& field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) bad(std::string("missing field '") + name + "'");
  return doc.at(name);
}

std::vector<std::string> string_list(const json& doc, const char* what) {
  if (!doc.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : doc) {
    if (!item.is_string()) bad(std::string(what) + " entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

int int_of(const json& doc, const char* what) {
  if (!doc.is_number_integer()) bad(std::string(what) + " must be an integer");
  return doc.get<int>();
}

std::vector<std::pair<int, int>> index_pairs(const json& doc, const char* what) {
  if (!doc.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::pair<int, int>> out;
  for (const auto& item : doc) {
    if (!item.is_array() || item.size() != 2) bad(std::string(what) + " entries must be pairs");
    out.emplace_back(int_of(item[0], what), int_of(item[1], what));
  }
  return out;
}

// Edges and order relations reference labels; resolve against a label list.
std::vector<std::pair<int, int>> label_pairs(const json& doc, const std::vector<std::string>& labels,
                                             const char* what) {
  if (!doc.is_array()) bad(std::string(what) + " must be an array");
  auto resolve = [&](const json& item) {
    if (!item.is_string()) bad(std::string(what) + " entries must be label pairs");
    const std::string label = item.get<std::string>();
    for (size_t k = 0; k < labels.size(); ++k)
      if (labels[k] == label) return static_cast<int>(k);
    bad(std::string(what) + " references unknown label '" + label + "'");
  };
  std::vector<std::pair<int, int>> out;
  for (const auto& item : doc) {
    if (!item.is_array() || item.size() != 2) bad(std::string(what) + " entries must be pairs");
    out.emplace_back(resolve(item[0]), resolve(item[1]));
  }
  return out;
}

}  // namespace

const char* kind_name(Kind kind) noexcept {
  switch (kind) {
    case Kind::system: return "system";
    case Kind::tree: return "tree";
    case Kind::order_tree: return "order_tree";
    case Kind::bipartition_family: return "bipartition_family";
    case Kind::stree: return "stree";
    case Kind::graph: return "graph";
    case Kind::tree_decomposition: return "tree_decomposition";
  }
  return "unknown";
}

Kind kind_from_name(const std::string& name) {
  for (Kind kind : {Kind::system, Kind::tree, Kind::order_tree, Kind::bipartition_family,
                    Kind::stree, Kind::graph, Kind::tree_decomposition})
    if (name == kind_name(kind)) return kind;
  bad("unknown kind '" + name + "'");
}

Envelope read_envelope(const json& doc) {
  const json& version = field(doc, "format_version");
  if (!version.is_string() || version.get<std::string>() != kFormatVersion)
    bad("unsupported format_version");
  const json& kind = field(doc, "kind");
  if (!kind.is_string()) bad("kind must be a string");
  return Envelope{kind_from_name(kind.get<std::string>()), field(doc, "payload")};
}

json make_envelope(Kind kind, json payload) {
  json out;
  out["format_version"] = kFormatVersion;
  out["kind"] = kind_name(kind);
  out["payload"] = std::move(payload);
  return out;
}

json write_system(const SeparationSystem& sys) {
  json out;
  out["count"] = sys.count();
  json inv = json::array();
  for (int i = 0; i < sys.count(); ++i) inv.push_back(sys.inverse(i));
  out["inv"] = std::move(inv);
  json le = json::array();
  for (const auto& [i, j] : sys.strict_pairs()) le.push_back(json::array({i, j}));
  out["le"] = std::move(le);
  if (sys.has_labels()) out["labels"] = sys.labels();
  return out;
}

SeparationSystem read_system(const json& payload) {
  const int count = int_of(field(payload, "count"), "count");
  const json& inv_doc = field(payload, "inv");
  if (!inv_doc.is_array()) bad("inv must be an array");
  std::vector<int> inv;
  for (const auto& item : inv_doc) inv.push_back(int_of(item, "inv"));
  auto le = index_pairs(field(payload, "le"), "le");
  std::vector<std::string> labels;
  if (payload.contains("labels")) labels = string_list(payload.at("labels"), "labels");
  return SeparationSystem::build_exact(count, std::move(inv), le, std::move(labels));
}

json write_tree(const GraphTree& tree) {
  json out;
  out["nodes"] = tree.node_labels();
  json edges = json::array();
  for (const auto& [u, v] : tree.edges())
    edges.push_back(json::array({tree.node_label(u), tree.node_label(v)}));
  out["edges"] = std::move(edges);
  return out;
}

GraphTree read_tree(const json& payload) {
  auto nodes = string_list(field(payload, "nodes"), "nodes");
  auto edges = label_pairs(field(payload, "edges"), nodes, "edges");
  return GraphTree(std::move(nodes), std::move(edges));
}

json write_order_tree(const OrderTree& tree) {
  json out;
  out["elements"] = tree.elements();
  json lt = json::array();
  for (const auto& [a, b] : tree.strict_pairs())
    lt.push_back(json::array({tree.element(a), tree.element(b)}));
  out["lt"] = std::move(lt);
  return out;
}

OrderTree read_order_tree(const json& payload) {
  auto elements = string_list(field(payload, "elements"), "elements");
  auto lt = label_pairs(field(payload, "lt"), elements, "lt");
  const int n = static_cast<int>(elements.size());
  return OrderTree(std::move(elements), StrictPoset(n, lt));
}

json write_family(const BipartitionFamily& family) {
  json out;
  out["ground"] = family.ground();
  json pairs = json::array();
  for (int p = 0; p < family.pair_count(); ++p) {
    json a = json::array(), b = json::array();
    for (int x : family.pair(p).first) a.push_back(family.ground_label(x));
    for (int x : family.pair(p).second) b.push_back(family.ground_label(x));
    pairs.push_back(json::array({std::move(a), std::move(b)}));
  }
  out["pairs"] = std::move(pairs);
  return out;
}

BipartitionFamily read_family(const json& payload) {
  auto ground = string_list(field(payload, "ground"), "ground");
  auto resolve = [&](const std::string& label) {
    for (size_t k = 0; k < ground.size(); ++k)
      if (ground[k] == label) return static_cast<int>(k);
    bad("pair references unknown ground element '" + label + "'");
  };
  const json& pairs_doc = field(payload, "pairs");
  if (!pairs_doc.is_array()) bad("pairs must be an array");
  std::vector<BipartitionFamily::Pair> pairs;
  for (const auto& item : pairs_doc) {
    if (!item.is_array() || item.size() != 2) bad("pairs entries must be [A, B]");
    BipartitionFamily::Pair pair;
    for (const auto& label : string_list(item[0], "pair side")) pair.first.push_back(resolve(label));
    for (const auto& label : string_list(item[1], "pair side")) pair.second.push_back(resolve(label));
    pairs.push_back(std::move(pair));
  }
  return BipartitionFamily(std::move(ground), std::move(pairs));
}

json write_stree(const STree& st) {
  json out;
  out["tree"] = write_tree(st.tree());
  json alpha = json::array();
  for (int d = 0; d < st.tree().oriented_count(); ++d)
    alpha.push_back(json::array({st.tree().node_label(st.tree().tail(d)),
                                 st.tree().node_label(st.tree().head(d)), st.alpha(d)}));
  out["alpha"] = std::move(alpha);
  out["system"] = write_system(st.host());
  return out;
}

STree read_stree(const json& payload) {
  GraphTree tree = read_tree(field(payload, "tree"));
  auto host = std::make_shared<SeparationSystem>(read_system(field(payload, "system")));
  const json& alpha_doc = field(payload, "alpha");
  if (!alpha_doc.is_array()) bad("alpha must be an array");
  std::vector<int> alpha(tree.oriented_count(), -1);
  for (const auto& item : alpha_doc) {
    if (!item.is_array() || item.size() != 3) bad("alpha entries must be [from, to, index]");
    if (!item[0].is_string() || !item[1].is_string()) bad("alpha endpoints must be labels");
    const int from = tree.node_index(item[0].get<std::string>());
    const int to = tree.node_index(item[1].get<std::string>());
    const int d = tree.oriented_between(from, to);
    const int label = int_of(item[2], "alpha index");
    if (label < 0 || label >= host->count()) bad("alpha index out of range");
    require(alpha[d] == -1 || alpha[d] == label, errc::precondition_violated,
            "conflicting alpha entries for one oriented edge");
    alpha[d] = label;
    const int reverse_label = host->inverse(label);
    require(alpha[tree.reverse(d)] == -1 || alpha[tree.reverse(d)] == reverse_label,
            errc::precondition_violated, "alpha entries do not commute with inversion");
    alpha[tree.reverse(d)] = reverse_label;
  }
  for (int d = 0; d < tree.oriented_count(); ++d)
    if (alpha[d] == -1) bad("alpha is missing an oriented edge");
  return STree(std::move(tree), std::move(host), std::move(alpha));
}

json write_graph(const Graph& graph) {
  json out;
  out["vertices"] = graph.vertex_labels();
  json edges = json::array();
  for (const auto& [u, v] : graph.edges())
    edges.push_back(json::array({graph.vertex_label(u), graph.vertex_label(v)}));
  out["edges"] = std::move(edges);
  return out;
}

Graph read_graph(const json& payload) {
  auto vertices = string_list(field(payload, "vertices"), "vertices");
  auto edges = label_pairs(field(payload, "edges"), vertices, "edges");
  return Graph(std::move(vertices), std::move(edges));
}

json write_decomposition(const TreeDecomposition& decomposition) {
  json out = write_graph(decomposition.graph());
  out["tree"] = write_tree(decomposition.tree());
  json parts = json::object();
  for (int t = 0; t < decomposition.tree().node_count(); ++t) {
    json part = json::array();
    for (int v : decomposition.part(t))
      part.push_back(decomposition.graph().vertex_label(v));
    parts[decomposition.tree().node_label(t)] = std::move(part);
  }
  out["parts"] = std::move(parts);
  return out;
}

TreeDecomposition read_decomposition(const json& payload) {
  Graph graph = read_graph(payload);
  GraphTree tree = read_tree(field(payload, "tree"));
  const json& parts_doc = field(payload, "parts");
  if (!parts_doc.is_object()) bad("parts must map node labels to vertex lists");
  std::vector<std::vector<int>> parts(tree.node_count());
  std::vector<bool> given(tree.node_count(), false);
  for (const auto& [node_label, list] : parts_doc.items()) {
    const int t = tree.node_index(node_label);
    for (const auto& label : string_list(list, "part"))
      parts[t].push_back(graph.vertex_index(label));
    given[t] = true;
  }
  for (int t = 0; t < tree.node_count(); ++t)
    if (!given[t]) bad("part missing for node '" + tree.node_label(t) + "'");
  return TreeDecomposition(std::move(graph), std::move(tree), std::move(parts));
}

json write_index_set(const std::vector<int>& members) {
  json out = json::array();
  for (int s : normalize_set(members)) out.push_back(s);
  return out;
}

std::vector<int> read_index_set(const json& doc) {
  if (!doc.is_array()) bad("an orientation must be an array of indices");
  std::vector<int> out;
  for (const auto& item : doc) out.push_back(int_of(item, "orientation"));
  return normalize_set(std::move(out));
}

json parse_text(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) bad("malformed JSON");
  return doc;
}

}  // namespace tressec::io
