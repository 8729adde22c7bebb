#pragma once

#include <string>

#include "vfree/graph_of_groups.hpp"

#include "json.hpp"

namespace vfree {

// Group spec: {"cyclic": n} or {"elements": [names], "table": [[indices]]}.
finite_group parse_group_spec(const nlohmann::json& j);

// Graph spec: {"vertices": [group specs],
//              "edges": [{"ends": [i, j], "group": spec,
//                         "maps": [{name: name}, {name: name}]}]}.
graph_of_groups parse_graph(const nlohmann::json& j);

graph_of_groups load_graph_file(const std::string& path);

}  // namespace vfree
