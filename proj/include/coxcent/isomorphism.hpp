#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxcent/diagram.hpp"

namespace coxcent {

namespace detail {

// Per-vertex invariant: the sorted multiset of labels to all other vertices
// (2 for unjoined pairs, a large sentinel for infinity).
inline std::vector<int> label_signature(const CoxeterDiagram& d, int v) {
  std::vector<int> sig;
  sig.reserve(d.size() - 1);
  for (int u = 0; u < d.size(); ++u) {
    if (u == v) continue;
    CoxLabel l = d.label(v, u);
    sig.push_back(l.is_infinity() ? 1 << 30 : l.value());
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace detail

// Label-preserving vertex bijection between two diagrams, if one exists.
// Plain backtracking with signature pruning; intended for small diagrams.
inline std::optional<std::map<std::string, std::string>> diagram_isomorphism(
    const CoxeterDiagram& a, const CoxeterDiagram& b) {
  if (a.size() != b.size()) return std::nullopt;
  int n = a.size();
  if (n == 0) return std::map<std::string, std::string>{};

  std::vector<std::vector<int>> sig_a(n), sig_b(n);
  for (int v = 0; v < n; ++v) {
    sig_a[v] = detail::label_signature(a, v);
    sig_b[v] = detail::label_signature(b, v);
  }
  {
    auto sorted_a = sig_a, sorted_b = sig_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return std::nullopt;
  }

  // assign the most constrained vertices first
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::vector<int> candidates(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (sig_a[v] == sig_b[u]) ++candidates[v];
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return candidates[x] < candidates[y];
  });

  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  auto backtrack = [&](auto&& self, int pos) -> bool {
    if (pos == n) return true;
    int v = order[pos];
    for (int u = 0; u < n; ++u) {
      if (used[u] || sig_a[v] != sig_b[u]) continue;
      bool ok = true;
      for (int p = 0; p < pos; ++p) {
        int w = order[p];
        if (a.label(v, w) != b.label(u, image[w])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[v] = u;
      used[u] = 1;
      if (self(self, pos + 1)) return true;
      image[v] = -1;
      used[u] = 0;
    }
    return false;
  };
  if (!backtrack(backtrack, 0)) return std::nullopt;

  std::map<std::string, std::string> witness;
  for (int v = 0; v < n; ++v) witness[a.name(v)] = b.name(image[v]);
  return witness;
}

inline bool diagrams_isomorphic(const CoxeterDiagram& a,
                                const CoxeterDiagram& b) {
  return diagram_isomorphism(a, b).has_value();
}

}  // namespace coxcent
