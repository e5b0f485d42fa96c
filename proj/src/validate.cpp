#include "tressec/validate.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tressec::io {

namespace {

const json& field_or_throw(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name))
    fail(errc::parse_error, std::string("missing field '") + name + "'");
  return doc.at(name);
}

std::vector<std::string> string_list_of(const json& doc, const char* name) {
  std::vector<std::string> out;
  for (const auto& item : field_or_throw(doc, name)) {
    if (!item.is_string()) fail(errc::parse_error, std::string(name) + " entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<std::pair<int, int>> label_pairs_of(const json& doc,
                                                const std::vector<std::string>& labels,
                                                const char* name) {
  std::vector<std::pair<int, int>> out;
  auto resolve = [&](const json& item) -> int {
    const std::string label = item.get<std::string>();
    for (size_t k = 0; k < labels.size(); ++k)
      if (labels[k] == label) return static_cast<int>(k);
    fail(errc::parse_error, std::string(name) + " references unknown label '" + label + "'");
  };
  for (const auto& item : field_or_throw(doc, name))
    out.emplace_back(resolve(item.at(0)), resolve(item.at(1)));
  return out;
}

// Runs named checks in order; a check that throws a domain error fails its
// line and skips the rest (later invariants usually presuppose it).  Parse
// errors are structural, not domain failures, and propagate.
class Checklist {
 public:
  void run(const std::string& name, const std::function<void()>& check) {
    InvariantLine line;
    line.name = name;
    if (broken_) {
      line.skipped = true;
      report_.lines.push_back(std::move(line));
      return;
    }
    try {
      check();
      line.ok = true;
    } catch (const error& e) {
      if (e.code() == errc::parse_error) throw;
      line.ok = false;
      line.detail = e.what();
      broken_ = true;
    }
    report_.lines.push_back(std::move(line));
  }

  ValidationReport finish() {
    report_.ok = !broken_;
    return std::move(report_);
  }

  json& properties() { return report_.properties; }

 private:
  ValidationReport report_;
  bool broken_ = false;
};

ValidationReport validate_system(const json& payload) {
  Checklist list;
  list.run("involution is a self-inverse map", [&] {
    json reduced = payload;
    reduced["le"] = json::array();  // involution only
    read_system(reduced);
  });
  list.run("order closure is antisymmetric (a poset)", [&] {
    // Build with the dual pairs added, so only antisymmetry can fail here;
    // whether the given relation already contained them is the next check.
    if (!field_or_throw(payload, "count").is_number_integer())
      fail(errc::parse_error, "count must be an integer");
    const int count = payload.at("count").get<int>();
    std::vector<int> inv;
    for (const auto& item : field_or_throw(payload, "inv")) inv.push_back(item.get<int>());
    std::vector<std::pair<int, int>> gens;
    for (const auto& item : field_or_throw(payload, "le"))
      gens.emplace_back(item.at(0).get<int>(), item.at(1).get<int>());
    SeparationSystem::build(count, inv, gens);
  });
  list.run("involution is order-reversing (Eq. (1))", [&] { read_system(payload); });
  try {
    const SeparationSystem sys = read_system(payload);
    const Classification c = classify(sys);
    int small = 0, trivial = 0, degenerate = 0;
    for (int i = 0; i < sys.count(); ++i) {
      small += c.small[i];
      trivial += c.trivial[i];
      degenerate += c.degenerate[i];
    }
    json& props = list.properties();
    props["small"] = small;
    props["trivial"] = trivial;
    props["degenerate"] = degenerate;
    props["nested"] = is_nested(sys);
    props["regular"] = is_regular(sys);
    props["essential"] = is_essential(sys);
    props["tree_set"] = is_tree_set(sys);
  } catch (const error&) {
  }
  return list.finish();
}

ValidationReport validate_tree(const json& payload) {
  Checklist list;
  list.run("node labels are distinct", [&] {
    std::set<std::string> seen;
    for (const auto& label : string_list_of(payload, "nodes"))
      require(seen.insert(label).second, errc::precondition_violated,
              "duplicate node label " + label);
  });
  list.run("connected and acyclic with |E| = |V| - 1", [&] { read_tree(payload); });
  return list.finish();
}

ValidationReport validate_order_tree(const json& payload) {
  Checklist list;
  list.run("strict order is acyclic", [&] {
    const auto elements = string_list_of(payload, "elements");
    StrictPoset(static_cast<int>(elements.size()), label_pairs_of(payload, elements, "lt"));
  });
  list.run("strict down-sets are chains", [&] { read_order_tree(payload); });
  try {
    list.properties()["connected"] = read_order_tree(payload).connected();
  } catch (const error&) {
  }
  return list.finish();
}

ValidationReport validate_family(const json& payload) {
  Checklist list;
  list.run("sides are disjoint, non-empty and cover the ground set", [&] {
    json symmetrized = payload;
    json pairs = json::array();
    for (const auto& item : field_or_throw(payload, "pairs")) {
      pairs.push_back(item);
      pairs.push_back(json::array({item.at(1), item.at(0)}));  // symmetry is the next check
    }
    symmetrized["pairs"] = std::move(pairs);
    read_family(symmetrized);
  });
  list.run("family is symmetric", [&] { read_family(payload); });
  try {
    const BipartitionFamily family = read_family(payload);
    const SeparationSystem sys = family.as_system();
    list.properties()["nested"] = is_nested(sys);
    list.properties()["indistinguishable_pairs"] =
        static_cast<int>(indistinguishable_pairs(family).size());
  } catch (const error&) {
  }
  return list.finish();
}

ValidationReport validate_stree(const json& payload) {
  Checklist list;
  list.run("decomposition tree is valid", [&] { read_tree(field_or_throw(payload, "tree")); });
  list.run("host system is valid", [&] { read_system(field_or_throw(payload, "system")); });
  list.run("labelling commutes with inversion", [&] { read_stree(payload); });
  try {
    const STree st = read_stree(payload);
    list.properties()["over_stars"] = st.over_stars();
    list.properties()["irredundant"] = !is_redundant(st);
    list.properties()["tight"] = is_tight(st);
    list.properties()["essential"] = is_essential(st);
  } catch (const error&) {
  }
  return list.finish();
}

ValidationReport validate_graph(const json& payload) {
  Checklist list;
  list.run("simple graph with distinct vertex labels", [&] { read_graph(payload); });
  return list.finish();
}

ValidationReport validate_decomposition(const json& payload) {
  Checklist list;
  list.run("graph is valid", [&] { read_graph(payload); });
  list.run("decomposition tree is valid", [&] { read_tree(field_or_throw(payload, "tree")); });
  list.run("parts cover the graph and satisfy path-intersection",
           [&] { read_decomposition(payload); });
  return list.finish();
}

}  // namespace

ValidationReport validate_payload(Kind kind, const json& payload) {
  switch (kind) {
    case Kind::system: return validate_system(payload);
    case Kind::tree: return validate_tree(payload);
    case Kind::order_tree: return validate_order_tree(payload);
    case Kind::bipartition_family: return validate_family(payload);
    case Kind::stree: return validate_stree(payload);
    case Kind::graph: return validate_graph(payload);
    case Kind::tree_decomposition: return validate_decomposition(payload);
  }
  fail(errc::parse_error, "unknown kind");
}

json report_to_json(Kind kind, const ValidationReport& report) {
  json out;
  out["kind"] = kind_name(kind);
  out["ok"] = report.ok;
  json lines = json::array();
  for (const auto& line : report.lines) {
    json entry;
    entry["name"] = line.name;
    if (line.skipped)
      entry["skipped"] = true;
    else
      entry["ok"] = line.ok;
    if (!line.detail.empty()) entry["detail"] = line.detail;
    lines.push_back(std::move(entry));
  }
  out["invariants"] = std::move(lines);
  if (!report.properties.empty()) out["properties"] = report.properties;
  return out;
}

}  // namespace tressec::io
