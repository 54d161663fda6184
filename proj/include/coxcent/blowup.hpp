#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "coxcent/diagram.hpp"
#include "coxcent/error.hpp"

namespace coxcent {

namespace detail {

// Unique path between two vertices of a tree, via DFS.
inline bool tree_path_between(const CoxeterDiagram& d, int from, int to,
                              int prev, std::vector<int>& path) {
  path.push_back(from);
  if (from == to) return true;
  for (int u = 0; u < d.size(); ++u) {
    if (u == prev || u == from || !d.label(from, u).joined()) continue;
    if (tree_path_between(d, u, to, from, path)) return true;
  }
  path.pop_back();
  return false;
}

// A three-vertex path x - m - y; the vertex of the blown-up diagram.
struct Triple {
  int end1, mid, end2;  // end1 < end2
};

enum class HullShape { Path, TypeD, TypeTildeD };

// Shape of the minimal subtree spanning two triples.  The possible shapes
// are a path, a D diagram (one branch vertex whose other branches are two
// single leaves), and a tilde-D diagram (two such branch vertices, or the
// degree-4 star).
inline HullShape classify_hull(const CoxeterDiagram& d,
                               const std::vector<char>& in_hull) {
  int n = d.size();
  std::vector<int> deg(n, 0);
  for (int u = 0; u < n; ++u) {
    if (!in_hull[u]) continue;
    for (int v = 0; v < n; ++v)
      if (v != u && in_hull[v] && d.label(u, v).joined()) ++deg[u];
  }
  auto leaf_branches = [&](int v) {
    int leaves = 0;
    for (int u = 0; u < n; ++u)
      if (u != v && in_hull[u] && d.label(v, u).joined() && deg[u] == 1)
        ++leaves;
    return leaves;
  };
  std::vector<int> branch3, branch4;
  for (int v = 0; v < n; ++v) {
    if (!in_hull[v]) continue;
    if (deg[v] == 3) branch3.push_back(v);
    if (deg[v] >= 4) branch4.push_back(v);
  }
  if (branch4.size() == 1 && branch3.empty() && deg[branch4[0]] == 4 &&
      leaf_branches(branch4[0]) == 4)
    return HullShape::TypeTildeD;
  if (branch4.empty() && branch3.size() == 2 &&
      leaf_branches(branch3[0]) == 2 && leaf_branches(branch3[1]) == 2)
    return HullShape::TypeTildeD;
  if (branch4.empty() && branch3.size() == 1 && leaf_branches(branch3[0]) >= 2)
    return HullShape::TypeD;
  return HullShape::Path;
}

}  // namespace detail

// Shortcut for single-edge trees: the centralizer diagram has one vertex per
// three-vertex path of the input, with edge labels decided by the shape of
// the convex hull of each pair.  Hull of type D gives label 2, type tilde-D
// gives infinity, and otherwise the label between the middle vertices is
// inherited.
inline CoxeterDiagram blowup_fast_path(const CoxeterDiagram& d) {
  int n = d.size();
  auto edges = d.edges();
  for (auto [u, v] : edges)
    if (d.label(u, v) != CoxLabel::finite(3))
      fail(ErrorCode::NotSingleEdgeTree,
           "edge " + d.name(u) + " " + d.name(v) + " has label " +
               d.label(u, v).str());
  if (static_cast<int>(edges.size()) != n - 1)
    fail(ErrorCode::NotSingleEdgeTree,
         n == 0 ? "empty diagram"
                : "diagram has " + std::to_string(edges.size()) +
                      " edges on " + std::to_string(n) + " vertices");
  // connectivity: a tree with n-1 edges is connected iff acyclic; check by
  // reaching everything from vertex 0
  {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++count;
      for (int u = 0; u < n; ++u)
        if (!seen[u] && d.label(v, u).joined()) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    if (count != n)
      fail(ErrorCode::NotSingleEdgeTree, "diagram is not connected");
  }

  std::vector<detail::Triple> triples;
  for (int m = 0; m < n; ++m) {
    auto nbrs = d.neighbors(m);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        triples.push_back({nbrs[i], m, nbrs[j]});
  }

  CoxeterDiagram out;
  auto vertex_name = [&](const detail::Triple& t) {
    return d.name(t.end1) + "-" + d.name(t.mid) + "-" + d.name(t.end2);
  };
  for (const auto& t : triples) out.ensure_vertex(vertex_name(t));

  for (std::size_t i = 0; i < triples.size(); ++i) {
    for (std::size_t j = i + 1; j < triples.size(); ++j) {
      const auto& x = triples[i];
      const auto& y = triples[j];
      // hull: union of the paths from x.mid to all six members
      std::vector<char> in_hull(n, 0);
      for (int target : {x.end1, x.mid, x.end2, y.end1, y.mid, y.end2}) {
        std::vector<int> path;
        detail::tree_path_between(d, x.mid, target, -1, path);
        for (int v : path) in_hull[v] = 1;
      }
      CoxLabel label;  // 2 unless decided otherwise
      switch (detail::classify_hull(d, in_hull)) {
        case detail::HullShape::TypeD:
          break;
        case detail::HullShape::TypeTildeD:
          label = CoxLabel::infinity();
          break;
        case detail::HullShape::Path:
          label = d.label(x.mid, y.mid);
          break;
      }
      if (label.joined())
        out.set_label(static_cast<int>(i), static_cast<int>(j), label);
    }
  }
  return out;
}

}  // namespace coxcent
