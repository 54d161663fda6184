#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "coxcent/diagram.hpp"
#include "coxcent/error.hpp"

namespace coxcent {

// A connected component of the odd subdiagram (edges with odd finite label),
// rooted at a base vertex.  Carries the BFS spanning tree and one fundamental
// loop per non-tree odd edge; reflections whose vertices share a component
// are exactly the conjugate ones.
struct OddComponent {
  int base = -1;
  std::vector<int> members;                    // BFS discovery order, base first
  std::vector<char> in_component;              // indexed by diagram vertex
  std::vector<int> parent;                     // BFS tree; -1 at base and outside
  std::vector<std::pair<int, int>> odd_edges;  // within component, u < v
  std::vector<std::vector<int>> loops;         // closed vertex paths at base
  int cycle_rank = 0;

  bool contains(int v) const {
    return v >= 0 && v < static_cast<int>(in_component.size()) &&
           in_component[v];
  }
  bool is_tree() const { return cycle_rank == 0; }

  // Unique tree path base .. t.
  std::vector<int> tree_path(int t) const {
    std::vector<int> path;
    for (int v = t; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
  }
};

// Component of `base`, with the spanning tree grown by BFS from `base`,
// neighbours visited in diagram vertex order.
inline OddComponent odd_component_of(const CoxeterDiagram& d, int base) {
  if (base < 0 || base >= d.size())
    fail(ErrorCode::UnknownVertex, "vertex index " + std::to_string(base));
  OddComponent c;
  c.base = base;
  c.in_component.assign(d.size(), 0);
  c.parent.assign(d.size(), -1);
  c.in_component[base] = 1;
  std::deque<int> queue{base};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    c.members.push_back(v);
    for (int u : d.odd_neighbors(v)) {
      if (c.in_component[u]) continue;
      c.in_component[u] = 1;
      c.parent[u] = v;
      queue.push_back(u);
    }
  }
  for (int u : c.members)
    for (int v : d.odd_neighbors(u))
      if (u < v && c.in_component[v]) c.odd_edges.emplace_back(u, v);
  std::sort(c.odd_edges.begin(), c.odd_edges.end());
  c.cycle_rank = static_cast<int>(c.odd_edges.size()) -
                 static_cast<int>(c.members.size()) + 1;
  for (auto [u, v] : c.odd_edges) {
    if (c.parent[u] == v || c.parent[v] == u) continue;  // tree edge
    std::vector<int> loop = c.tree_path(u);
    std::vector<int> back = c.tree_path(v);
    loop.insert(loop.end(), back.rbegin(), back.rend());
    c.loops.push_back(std::move(loop));
  }
  return c;
}

inline OddComponent odd_component_of(const CoxeterDiagram& d,
                                     std::string_view base) {
  return odd_component_of(d, d.index_of(base));
}

// All components of the odd subdiagram, plus a vertex -> component lookup.
// Each component is rooted at its least-named member; components are listed
// in diagram order of first member.
struct OddDecomposition {
  std::vector<OddComponent> components;
  std::vector<int> component_of;  // diagram vertex -> index into components

  const OddComponent& component(int v) const {
    return components[component_of[v]];
  }
};

inline OddDecomposition odd_components(const CoxeterDiagram& d) {
  OddDecomposition out;
  out.component_of.assign(d.size(), -1);
  for (int v = 0; v < d.size(); ++v) {
    if (out.component_of[v] != -1) continue;
    // find the least-named member of v's component
    std::vector<char> seen(d.size(), 0);
    std::deque<int> queue{v};
    seen[v] = 1;
    int base = v;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      if (d.name(x) < d.name(base)) base = x;
      for (int u : d.odd_neighbors(x))
        if (!seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
    }
    int idx = static_cast<int>(out.components.size());
    out.components.push_back(odd_component_of(d, base));
    for (int u : out.components.back().members) out.component_of[u] = idx;
  }
  return out;
}

}  // namespace coxcent
