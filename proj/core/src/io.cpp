#include "vfree/io.hpp"

#include <fstream>

namespace vfree {

using nlohmann::json;

finite_group parse_group_spec(const json& j) {
  if (!j.is_object()) throw spec_error("group spec must be an object");
  if (j.contains("cyclic")) {
    if (!j["cyclic"].is_number_integer())
      throw spec_error("\"cyclic\" must be an integer");
    return finite_group::cyclic(j["cyclic"].get<int>());
  }
  if (!j.contains("elements") || !j.contains("table"))
    throw spec_error("group spec needs \"cyclic\" or \"elements\"+\"table\"");
  std::vector<std::string> names;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw spec_error("element names must be strings");
    names.push_back(e.get<std::string>());
  }
  std::vector<std::vector<int>> table;
  for (const auto& row : j["table"]) {
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw spec_error("table entries are indices");
      r.push_back(v.get<int>());
    }
    table.push_back(std::move(r));
  }
  return finite_group::from_table(std::move(names), std::move(table));
}

namespace {

std::vector<int> parse_map(const json& j, const finite_group& from,
                           const finite_group& into) {
  if (!j.is_object()) throw spec_error("embedding map must be an object");
  std::vector<int> map(from.order(), -1);
  map[0] = 0;
  for (const auto& [key, val] : j.items()) {
    auto s = from.find(key);
    if (!s) throw spec_error("embedding map: unknown source element " + key);
    if (!val.is_string()) throw spec_error("embedding images must be names");
    auto t = into.find(val.get<std::string>());
    if (!t)
      throw spec_error("embedding map: unknown target element " +
                       val.get<std::string>());
    map[*s] = *t;
  }
  for (int i = 0; i < from.order(); ++i)
    if (map[i] < 0)
      throw spec_error("embedding map: no image for element " + from.name(i));
  return map;
}

}  // namespace

graph_of_groups parse_graph(const json& j) {
  if (!j.is_object() || !j.contains("vertices"))
    throw spec_error("graph spec needs a \"vertices\" array");
  graph_of_groups g;
  for (const auto& v : j["vertices"]) g.vertices.push_back(parse_group_spec(v));
  if (j.contains("edges")) {
    for (const auto& je : j["edges"]) {
      if (!je.contains("ends") || !je["ends"].is_array() ||
          je["ends"].size() != 2)
        throw spec_error("edge needs \"ends\": [i, j]");
      graph_edge e;
      e.u = je["ends"][0].get<int>();
      e.v = je["ends"][1].get<int>();
      if (e.u < 0 || e.u >= static_cast<int>(g.vertices.size()) || e.v < 0 ||
          e.v >= static_cast<int>(g.vertices.size()))
        throw spec_error("edge endpoint out of range");
      e.group = je.contains("group") ? parse_group_spec(je["group"])
                                     : finite_group::trivial();
      if (e.group.order() > 1) {
        if (!je.contains("maps") || !je["maps"].is_array() ||
            je["maps"].size() != 2)
          throw spec_error("edge with non-trivial group needs two maps");
        e.into_u = parse_map(je["maps"][0], e.group, g.vertices[e.u]);
        e.into_v = parse_map(je["maps"][1], e.group, g.vertices[e.v]);
      } else {
        e.into_u = {0};
        e.into_v = {0};
      }
      g.edges.push_back(std::move(e));
    }
  }
  return g;
}

graph_of_groups load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw spec_error("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw spec_error("JSON parse error in " + path + ": " + e.what());
  }
  return parse_graph(j);
}

}  // namespace vfree
