#pragma once

#include <string>

#include "vfree/io.hpp"

namespace fixtures {

// The five desk-scale groups the suites run on.  All are one
// construction step beyond the base, so the guaranteed k' is 4 except
// for single-vertex graphs (k = 2).
inline const char* json_text(const std::string& name) {
  if (name == "dinf")  // C2 * C2, infinite dihedral
    return R"({
      "vertices": [
        {"elements": ["1", "a"], "table": [[0, 1], [1, 0]]},
        {"elements": ["1", "b"], "table": [[0, 1], [1, 0]]}
      ],
      "edges": [{"ends": [0, 1]}]
    })";
  if (name == "c2c3")  // C2 * C3, PSL(2, Z)
    return R"({
      "vertices": [
        {"elements": ["1", "a"], "table": [[0, 1], [1, 0]]},
        {"elements": ["1", "b", "B"],
         "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]}
      ],
      "edges": [{"ends": [0, 1]}]
    })";
  if (name == "c4c2c4")  // C4 *_{C2} C4
    return R"({
      "vertices": [
        {"elements": ["1", "x", "x2", "x3"],
         "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]},
        {"elements": ["1", "y", "y2", "y3"],
         "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]}
      ],
      "edges": [{
        "ends": [0, 1],
        "group": {"elements": ["1", "g"], "table": [[0, 1], [1, 0]]},
        "maps": [{"g": "x2"}, {"g": "y2"}]
      }]
    })";
  if (name == "hnn_c2")  // HNN(C2, id) = C2 x Z
    return R"({
      "vertices": [{"elements": ["1", "a"], "table": [[0, 1], [1, 0]]}],
      "edges": [{
        "ends": [0, 0],
        "group": {"elements": ["1", "g"], "table": [[0, 1], [1, 0]]},
        "maps": [{"g": "a"}, {"g": "a"}]
      }]
    })";
  if (name == "z")  // HNN(1) = Z
    return R"({
      "vertices": [{"elements": ["1"], "table": [[0]]}],
      "edges": [{"ends": [0, 0]}]
    })";
  throw std::runtime_error("unknown fixture: " + name);
}

inline vfree::graph_of_groups graph(const std::string& name) {
  return vfree::parse_graph(nlohmann::json::parse(json_text(name)));
}

inline vfree::constructed_group group(const std::string& name) {
  return vfree::build(graph(name));
}

}  // namespace fixtures
