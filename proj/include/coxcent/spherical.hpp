#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "coxcent/diagram.hpp"

namespace coxcent {

// One irreducible finite type: A_n, B_n (= C_n), D_n, E6..E8, F4, H3, H4,
// or I2(m).  Rank-2 diagrams are canonicalized: label 3 -> A2, 4 -> B2.
struct IrreducibleType {
  char family = 'A';
  int rank = 1;
  int m = 0;  // I2 only

  friend bool operator==(const IrreducibleType&, const IrreducibleType&) = default;
  friend bool operator<(const IrreducibleType& a, const IrreducibleType& b) {
    return std::tie(a.family, a.rank, a.m) < std::tie(b.family, b.rank, b.m);
  }

  std::string str() const {
    if (family == 'I') return "I2(" + std::to_string(m) + ")";
    return std::string(1, family) + std::to_string(rank);
  }
};

namespace detail {

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    return std::numeric_limits<std::uint64_t>::max();
  return r;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r = sat_mul(r, static_cast<std::uint64_t>(i));
  return r;
}

}  // namespace detail

inline std::uint64_t irreducible_order(const IrreducibleType& t) {
  using detail::factorial;
  using detail::sat_mul;
  switch (t.family) {
    case 'A': return factorial(t.rank + 1);
    case 'B': return sat_mul(std::uint64_t{1} << t.rank, factorial(t.rank));
    case 'D': return sat_mul(std::uint64_t{1} << (t.rank - 1), factorial(t.rank));
    case 'E': return t.rank == 6 ? 51840ULL : t.rank == 7 ? 2903040ULL : 696729600ULL;
    case 'F': return 1152ULL;
    case 'H': return t.rank == 3 ? 120ULL : 14400ULL;
    case 'I': return 2ULL * static_cast<std::uint64_t>(t.m);
  }
  return 0;
}

// Classification result: spherical (finite group) with an irreducible factor
// multiset and the group order, or not spherical.
struct SphericalType {
  bool spherical = false;
  std::vector<IrreducibleType> factors;  // sorted
  std::uint64_t order = 0;               // meaningful only when spherical

  std::string str() const {
    if (!spherical) return "not spherical";
    if (factors.empty()) return "trivial";
    std::ostringstream out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out << " + ";
      out << factors[i].str();
    }
    return out.str();
  }
};

namespace detail {

// Classify one connected component; returns false if not finite type.
inline bool classify_component(const CoxeterDiagram& d,
                               const std::vector<int>& verts,
                               IrreducibleType& out) {
  int n = static_cast<int>(verts.size());
  if (n == 1) {
    out = {'A', 1, 0};
    return true;
  }
  int edge_count = 0;
  int high = 0;  // labels > 3 (finite)
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      CoxLabel l = d.label(verts[i], verts[j]);
      if (l.is_infinity()) return false;
      if (l.joined()) {
        ++edge_count;
        if (l.value() > 3) ++high;
      }
    }
  if (edge_count != n - 1) return false;  // cycle

  std::vector<int> deg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && d.label(verts[i], verts[j]).joined()) ++deg[i];
  int branch = -1;
  for (int i = 0; i < n; ++i) {
    if (deg[i] > 3) return false;
    if (deg[i] == 3) {
      if (branch != -1) return false;  // two branch points
      branch = i;
    }
  }

  if (branch != -1) {
    if (high > 0) return false;  // branched diagrams need single edges
    // leg lengths from the branch vertex
    std::vector<int> legs;
    for (int j = 0; j < n; ++j) {
      if (j == branch || !d.label(verts[branch], verts[j]).joined()) continue;
      int len = 1, prev = branch, cur = j;
      for (;;) {
        int next = -1;
        for (int k = 0; k < n; ++k)
          if (k != prev && k != cur && d.label(verts[cur], verts[k]).joined())
            next = k;
        if (next == -1) break;
        prev = cur;
        cur = next;
        ++len;
      }
      legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs[0] == 1 && legs[1] == 1) {
      out = {'D', n, 0};
      return true;
    }
    if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4) {
      out = {'E', n, 0};
      return n >= 6 && n <= 8;
    }
    return false;
  }

  // path: walk from one endpoint and collect labels
  int start = -1;
  for (int i = 0; i < n; ++i)
    if (deg[i] <= 1) start = i;
  std::vector<int> labels;
  int prev = -1, cur = start;
  for (int step = 0; step + 1 < n; ++step) {
    int next = -1;
    for (int k = 0; k < n; ++k)
      if (k != prev && k != cur && d.label(verts[cur], verts[k]).joined())
        next = k;
    labels.push_back(d.label(verts[cur], verts[next]).value());
    prev = cur;
    cur = next;
  }
  int e = n - 1;  // number of edges
  if (high == 0) {
    out = {'A', n, 0};
    return true;
  }
  if (high > 1) return false;
  int pos = -1, val = 0;
  for (int i = 0; i < e; ++i)
    if (labels[i] > 3) {
      pos = i;
      val = labels[i];
    }
  bool at_end = (pos == 0 || pos == e - 1);
  if (val == 4) {
    if (at_end) {
      out = {'B', n, 0};
      return true;
    }
    if (n == 4 && pos == 1) {
      out = {'F', 4, 0};
      return true;
    }
    return false;
  }
  if (val == 5 && at_end) {
    if (n == 2) {
      out = {'I', 2, 5};
      return true;
    }
    if (n == 3) {
      out = {'H', 3, 0};
      return true;
    }
    if (n == 4) {
      out = {'H', 4, 0};
      return true;
    }
    return false;
  }
  if (val >= 6 && n == 2) {
    out = {'I', 2, val};
    return true;
  }
  return false;
}

}  // namespace detail

// Decides whether the diagram generates a finite group, and if so which one.
// Works component by component against the classification of finite Coxeter
// groups; the order of a disjoint union is the product of component orders.
inline SphericalType recognize_spherical(const CoxeterDiagram& d) {
  SphericalType result;
  std::vector<int> comp(d.size(), -1);
  std::vector<std::vector<int>> groups;
  for (int v = 0; v < d.size(); ++v) {
    if (comp[v] != -1) continue;
    int id = static_cast<int>(groups.size());
    groups.emplace_back();
    std::deque<int> queue{v};
    comp[v] = id;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      groups[id].push_back(x);
      for (int u : d.neighbors(x))
        if (comp[u] == -1) {
          comp[u] = id;
          queue.push_back(u);
        }
    }
  }
  std::uint64_t order = 1;
  for (const auto& g : groups) {
    IrreducibleType t;
    if (!detail::classify_component(d, g, t)) return result;  // not spherical
    result.factors.push_back(t);
    order = detail::sat_mul(order, irreducible_order(t));
  }
  std::sort(result.factors.begin(), result.factors.end());
  result.spherical = true;
  result.order = order;
  return result;
}

}  // namespace coxcent
