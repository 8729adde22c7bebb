#pragma once

#include <string>
#include <vector>

#include "vfree/finite_group.hpp"
#include "vfree/normal_form.hpp"
#include "vfree/words.hpp"

namespace vfree {

// One edge of a graph of groups: the edge group together with its
// embeddings into both endpoint vertex groups.  Loops are allowed
// (both embeddings into the same vertex group).
struct graph_edge {
  int u = 0;
  int v = 0;
  finite_group group = finite_group::trivial();
  std::vector<int> into_u;  // edge-group index -> vertices[u] index
  std::vector<int> into_v;
};

struct graph_of_groups {
  std::vector<finite_group> vertices;
  std::vector<graph_edge> edges;
};

// Empty result means valid: connected, every embedding injective and
// homomorphic.  Each failure gets one diagnostic line.
std::vector<std::string> validate(const graph_of_groups& g);

// One step of the construction 1 = H1, H2, ..., Hr = G: the base vertex
// group, then amalgamations along a BFS spanning tree, then HNN
// extensions for the remaining edges.
struct plan_step {
  enum class kind { base, amalgamate, hnn_extend };
  kind what = kind::base;
  int vertex = -1;  // base / amalgamate target
  int edge = -1;    // tree edge or HNN edge index
  int k_before = 0;
  int k_after = 0;  // 3k-2, except the base step where k_after = 2
  int x_before = 0;                       // |X| entering the step
  std::vector<std::string> new_letters;   // X' \ X, in declaration order
};

struct construction_plan {
  std::vector<plan_step> steps;
  int k_final = 2;
  int x_size = 0;
};

// A generating set of a constructed group: an inverse-closed alphabet
// whose letters carry their group values.
struct generating_set {
  layer_ptr top;
  alphabet x;
  std::vector<group_elem> values;  // one per letter

  group_elem evaluate(const word& w) const;
  group_elem evaluate(const std::string& text) const {
    return evaluate(parse_word(x, text));
  }
};

struct constructed_group {
  generating_set gens;
  construction_plan plan;
  int k() const { return plan.k_final; }
};

// Deterministic construction: spanning tree by BFS from the first
// declared vertex (edges tried in declaration order), amalgamations in
// discovery order, HNN steps in edge declaration order.  The base step
// gets X = G1 \ {1} and k = 2.  Throws validation_error on an invalid
// graph or on generator-name collisions between vertex groups.
constructed_group build(const graph_of_groups& g);

inline construction_plan plan(const graph_of_groups& g) {
  return build(g).plan;
}

// Final |X'| and guaranteed k'.
struct star_report {
  int x_size;
  int k;
};
inline star_report star_size(const construction_plan& p) {
  return {p.x_size, p.k_final};
}

// Sub-generating-set by letter name; the selection must be inverse-closed.
generating_set restrict_letters(const generating_set& gens,
                                const std::vector<std::string>& names);

}  // namespace vfree
