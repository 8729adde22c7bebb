#include "vfree/graph_of_groups.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace vfree {

std::vector<std::string> validate(const graph_of_groups& g) {
  std::vector<std::string> diags;
  if (g.vertices.empty()) {
    diags.push_back("graph has no vertices");
    return diags;
  }
  int n = static_cast<int>(g.vertices.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      diags.push_back("edge " + std::to_string(i) + ": endpoint out of range");
      continue;
    }
    subgroup_embedding eu{&e.group, &g.vertices[e.u], e.into_u};
    subgroup_embedding ev{&e.group, &g.vertices[e.v], e.into_v};
    if (auto r = check_embedding(eu))
      diags.push_back("edge " + std::to_string(i) + ", map into vertex " +
                      std::to_string(e.u) + ": " + *r);
    if (auto r = check_embedding(ev))
      diags.push_back("edge " + std::to_string(i) + ", map into vertex " +
                      std::to_string(e.v) + ": " + *r);
  }
  // Connectivity over the undirected multigraph.
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const auto& e : g.edges) {
      int other = -1;
      if (e.u == u) other = e.v;
      else if (e.v == u) other = e.u;
      if (other >= 0 && !seen[other]) {
        seen[other] = true;
        queue.push_back(other);
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v])
      diags.push_back("graph is disconnected: vertex " + std::to_string(v) +
                      " unreachable from vertex 0");
  return diags;
}

group_elem generating_set::evaluate(const word& w) const {
  group_elem g = top->identity();
  for (letter x : w) g = top->mul(g, values.at(x));
  return g;
}

namespace {

// Alphabet insertion that reports name clashes between vertex groups as
// validation problems rather than parse problems.
letter add_letter(alphabet& x, const std::string& name) {
  try {
    return x.add_involution(name);
  } catch (const spec_error&) {
    throw validation_error("generator name collision: " + name +
                           " (element names must be unique across vertices)");
  }
}

}  // namespace

constructed_group build(const graph_of_groups& g) {
  if (auto diags = validate(g); !diags.empty()) {
    std::string msg = "invalid graph of groups:";
    for (const auto& d : diags) msg += "\n  " + d;
    throw validation_error(msg);
  }

  // Spanning tree by BFS from vertex 0; edges tried in declaration order.
  int n = static_cast<int>(g.vertices.size());
  std::vector<int> discovery_order;     // vertices, BFS order
  std::vector<int> tree_edge(n, -1);    // edge that discovered the vertex
  std::vector<bool> in_tree_edge(g.edges.size(), false);
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      const auto& e = g.edges[i];
      int other = -1;
      if (e.u == u) other = e.v;
      else if (e.v == u) other = e.u;
      if (other >= 0 && !seen[other]) {
        seen[other] = true;
        tree_edge[other] = static_cast<int>(i);
        in_tree_edge[i] = true;
        discovery_order.push_back(other);
        queue.push_back(other);
      }
    }
  }

  constructed_group out;
  auto& steps = out.plan.steps;
  alphabet& x = out.gens.x;
  std::vector<group_elem>& letter_values = out.gens.values;

  // Per-vertex lift of each vertex-group element into the current layer.
  std::vector<std::vector<group_elem>> lift(n);

  // Base step: the first vertex group, X = G1 \ {1}, k = 2.  (For the
  // trivial group X is empty; still k = 2, vacuously locally excluding.)
  const finite_group& g0 = g.vertices[0];
  auto base = std::make_shared<base_layer>(g0);
  layer_ptr top = base;
  lift[0].reserve(g0.order());
  for (int i = 0; i < g0.order(); ++i) lift[0].push_back(base->element(i));

  plan_step base_step;
  base_step.what = plan_step::kind::base;
  base_step.vertex = 0;
  base_step.k_before = 2;
  base_step.k_after = 2;
  base_step.x_before = 0;
  for (int i = 1; i < g0.order(); ++i) {
    add_letter(x, g0.name(i));
    letter_values.push_back(lift[0][i]);
    base_step.new_letters.push_back(g0.name(i));
  }
  for (int i = 1; i < g0.order(); ++i) {
    letter a = *x.find(g0.name(i));
    letter b = *x.find(g0.name(g0.inv(i)));
    if (a < b) x.pair(a, b);
  }
  steps.push_back(std::move(base_step));
  int k = 2;

  auto reembed_all = [&](auto&& embed) {
    for (auto& v : letter_values) v = embed(v);
    for (auto& lv : lift)
      for (auto& e : lv) {
        if (!e.null()) e = embed(e);
      }
  };

  // Amalgamations along the tree, in BFS discovery order.
  for (int w : discovery_order) {
    const auto& e = g.edges[tree_edge[w]];
    int parent = (e.v == w) ? e.u : e.v;
    const std::vector<int>& parent_map = (e.v == w) ? e.into_u : e.into_v;
    const std::vector<int>& new_map = (e.v == w) ? e.into_v : e.into_u;
    const finite_group& kg = g.vertices[w];

    std::vector<group_elem> a_in_h;
    a_in_h.reserve(e.group.order());
    for (int a = 0; a < e.group.order(); ++a)
      a_in_h.push_back(lift[parent][parent_map[a]]);

    auto am = std::make_shared<amalgam_layer>(top, kg, e.group, a_in_h,
                                              new_map);
    reembed_all([&](const group_elem& v) { return am->embed_h(v); });
    lift[w].clear();
    for (int i = 0; i < kg.order(); ++i) lift[w].push_back(am->embed_k(i));
    top = am;

    plan_step st;
    st.what = plan_step::kind::amalgamate;
    st.vertex = w;
    st.edge = tree_edge[w];
    st.k_before = k;
    st.k_after = 3 * k - 2;
    st.x_before = x.size();
    std::set<int> a_image(new_map.begin(), new_map.end());
    for (int i = 1; i < kg.order(); ++i) {
      if (a_image.count(i)) continue;  // already a letter of X via A
      add_letter(x, kg.name(i));
      letter_values.push_back(lift[w][i]);
      st.new_letters.push_back(kg.name(i));
    }
    for (int i = 1; i < kg.order(); ++i) {
      if (a_image.count(i)) continue;
      letter a = *x.find(kg.name(i));
      letter b = *x.find(kg.name(kg.inv(i)));
      if (a < b) x.pair(a, b);
    }
    k = st.k_after;
    steps.push_back(std::move(st));
  }

  // HNN extensions for the remaining edges, in declaration order.
  int hnn_index = 0;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (in_tree_edge[i]) continue;
    const auto& e = g.edges[i];
    ++hnn_index;
    std::string tname = "t" + std::to_string(hnn_index);
    std::string iname = "T" + std::to_string(hnn_index);

    std::vector<group_elem> a_in_h, b_in_h;
    for (int a = 0; a < e.group.order(); ++a) {
      a_in_h.push_back(lift[e.u][e.into_u[a]]);
      b_in_h.push_back(lift[e.v][e.into_v[a]]);
    }
    auto hn = std::make_shared<hnn_layer>(top, a_in_h, b_in_h);
    reembed_all([&](const group_elem& v) { return hn->embed_h(v); });
    top = hn;

    plan_step st;
    st.what = plan_step::kind::hnn_extend;
    st.edge = static_cast<int>(i);
    st.k_before = k;
    st.k_after = 3 * k - 2;
    st.x_before = x.size();

    group_elem t_pos = hn->stable_letter(1);
    group_elem t_neg = hn->stable_letter(-1);
    auto letter_name = [&](const std::string& stem, int a) {
      return a == 0 ? stem : stem + "." + e.group.name(a);
    };
    // t a for a in A, then t^-1 b for b in B (mutually inverse sets).
    for (int a = 0; a < e.group.order(); ++a) {
      add_letter(x, letter_name(tname, a));
      letter_values.push_back(
          hn->mul(t_pos, hn->embed_h(hn->a_image(a))));
      st.new_letters.push_back(letter_name(tname, a));
    }
    for (int b = 0; b < e.group.order(); ++b) {
      add_letter(x, letter_name(iname, b));
      letter_values.push_back(
          hn->mul(t_neg, hn->embed_h(hn->b_image(b))));
      st.new_letters.push_back(letter_name(iname, b));
    }
    // (t a)^-1 = t^-1 phi(a^-1).
    for (int a = 0; a < e.group.order(); ++a) {
      letter la = *x.find(letter_name(tname, a));
      letter lb = *x.find(letter_name(iname, e.group.inv(a)));
      x.pair(la, lb);
    }
    k = st.k_after;
    steps.push_back(std::move(st));
  }

  out.gens.top = top;
  out.plan.k_final = k;
  out.plan.x_size = x.size();
  return out;
}

generating_set restrict_letters(const generating_set& gens,
                                const std::vector<std::string>& names) {
  generating_set out;
  out.top = gens.top;
  std::vector<letter> old_idx;
  for (const auto& nm : names) {
    auto l = gens.x.find(nm);
    if (!l) throw spec_error("unknown letter: " + nm);
    old_idx.push_back(*l);
    out.x.add_involution(nm);
    out.values.push_back(gens.values[*l]);
  }
  for (std::size_t i = 0; i < old_idx.size(); ++i) {
    letter inv_old = gens.x.inverse(old_idx[i]);
    auto it = std::find(old_idx.begin(), old_idx.end(), inv_old);
    if (it == old_idx.end())
      throw validation_error("letter selection is not inverse-closed: " +
                             names[i]);
    letter j = static_cast<letter>(it - old_idx.begin());
    if (static_cast<letter>(i) < j) out.x.pair(static_cast<letter>(i), j);
  }
  return out;
}

}  // namespace vfree
