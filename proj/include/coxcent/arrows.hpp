#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "coxcent/diagram.hpp"
#include "coxcent/error.hpp"
#include "coxcent/odd_components.hpp"

namespace coxcent {

// An arrow [J,K]: J a vertex of the chosen reflection's odd component (the
// tile type), K any other vertex joined to J by an even label, with the
// absent label 2 counting as even and infinity excluded.
struct Arrow {
  int tile = -1;
  int target = -1;

  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

inline std::string arrow_id(const CoxeterDiagram& d, const Arrow& a) {
  return d.name(a.tile) + ">" + d.name(a.target);
}

// All arrows of the component, sorted by (tile, target) in vertex order.
inline std::vector<Arrow> enumerate_arrows(const CoxeterDiagram& d,
                                           const OddComponent& comp) {
  std::vector<Arrow> arrows;
  for (int j = 0; j < d.size(); ++j) {
    if (!comp.contains(j)) continue;
    for (int k = 0; k < d.size(); ++k) {
      if (k == j) continue;
      if (d.label(j, k).even()) arrows.push_back({j, k});
    }
  }
  std::sort(arrows.begin(), arrows.end());
  return arrows;
}

inline std::vector<Arrow> enumerate_arrows(const CoxeterDiagram& d,
                                           std::string_view s) {
  return enumerate_arrows(d, odd_component_of(d, s));
}

// A fusion class of arrows; all lie in one facet of the centralizer chamber,
// so they name a single simple generator of the reflection part.  The
// canonical representative is the least (tile, target) member.
struct ArrowClass {
  Arrow rep;
  std::vector<Arrow> members;  // sorted
};

enum class FusionMode {
  TailClassesOnly,  // tail-sliding move only
  Full,             // tail sliding plus reversal
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

// Fuses arrows into classes.  Two moves generate the equivalence:
//
//   tail slide:  [J,K] ~ [L,K]  when m(J,L) is odd and K is unjoined to both
//   reversal:    [J,K] ~ [K,J]  when some L has m(J,L) = m(K,L) = 3 and
//                               J,K unjoined
//
// Only defined when the component is a tree (tiles are then identified with
// component vertices); cyclic components are refused.
inline std::vector<ArrowClass> fuse_arrow_classes(const CoxeterDiagram& d,
                                                  const OddComponent& comp,
                                                  std::span<const Arrow> arrows,
                                                  FusionMode mode = FusionMode::Full) {
  if (!comp.is_tree())
    fail(ErrorCode::UnsupportedCycles,
         "odd component of '" + d.name(comp.base) + "' has cycle rank " +
             std::to_string(comp.cycle_rank));

  std::map<Arrow, int> index;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    index.emplace(arrows[i], static_cast<int>(i));
  detail::UnionFind uf(arrows.size());

  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const Arrow a = arrows[i];
    // tail slide along each odd edge at the tile
    for (int l : d.odd_neighbors(a.tile)) {
      if (l == a.target) continue;
      if (d.label(a.tile, a.target) == CoxLabel() &&
          d.label(l, a.target) == CoxLabel()) {
        auto it = index.find(Arrow{l, a.target});
        assert(it != index.end());
        uf.unite(static_cast<int>(i), it->second);
      }
    }
    if (mode == FusionMode::Full && d.label(a.tile, a.target) == CoxLabel()) {
      // reversal through a common single-edge neighbour
      for (int l = 0; l < d.size(); ++l) {
        if (d.label(a.tile, l) == CoxLabel::finite(3) &&
            d.label(a.target, l) == CoxLabel::finite(3)) {
          assert(comp.contains(a.target));
          auto it = index.find(Arrow{a.target, a.tile});
          assert(it != index.end());
          uf.unite(static_cast<int>(i), it->second);
          break;
        }
      }
    }
  }

  std::map<int, std::vector<Arrow>> grouped;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    grouped[uf.find(static_cast<int>(i))].push_back(arrows[i]);
  std::vector<ArrowClass> classes;
  for (auto& [root, members] : grouped) {
    std::sort(members.begin(), members.end());
    classes.push_back({members.front(), std::move(members)});
  }
  std::sort(classes.begin(), classes.end(),
            [](const ArrowClass& a, const ArrowClass& b) { return a.rep < b.rep; });
  return classes;
}

// Symmetric map from unordered class pairs to Coxeter labels; pairs with no
// certificate keep the default label infinity.
class EdgeLabels {
 public:
  explicit EdgeLabels(std::size_t num_classes)
      : k_(num_classes), labels_(k_ * k_, CoxLabel::infinity()) {}

  CoxLabel at(int c1, int c2) const { return labels_[c1 * k_ + c2]; }

  std::size_t num_classes() const { return k_; }

  void set(int c1, int c2, CoxLabel l) {
    labels_[c1 * k_ + c2] = l;
    labels_[c2 * k_ + c1] = l;
  }

 private:
  std::size_t k_;
  std::vector<CoxLabel> labels_;
};

// Computes the edge label for every pair of arrow classes by scanning all
// certificate configurations.  Each certificate is a spherical three-vertex
// pattern pinning the dihedral angle between two facets:
//
//   shared tile J:    m(J,K)=2, m(J,L)=4, m(K,L)=3          -> label 4
//                     m(J,K) even >= 4, m(J,L)=2, m(K,L)=2  -> label 2
//                     m(J,K)=2, m(J,L)=2, m(K,L)=n finite   -> label n
//   shared target K:  m(J,K)=4, m(J,L)=3, m(K,L)=2          -> label 2
//   reversed pair:    m(J,K)=2 and {m(J,L), m(K,L)} = {3,5} -> label 2
//
// The scan is exhaustive, with no early exit, so inconsistent certificates
// are detected: two certificates that disagree on one pair, or any
// certificate linking two arrows of the same class, raise
// ConflictingCertificates.
inline EdgeLabels compute_edge_labels(const CoxeterDiagram& d,
                                      const OddComponent& comp,
                                      std::span<const ArrowClass> classes) {
  if (!comp.is_tree())
    fail(ErrorCode::UnsupportedCycles,
         "odd component of '" + d.name(comp.base) + "' has cycle rank " +
             std::to_string(comp.cycle_rank));

  std::map<Arrow, int> class_of;
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (const Arrow& a : classes[c].members)
      class_of.emplace(a, static_cast<int>(c));

  EdgeLabels labels(classes.size());
  std::vector<char> certified(classes.size() * classes.size(), 0);

  auto record = [&](const Arrow& a1, const Arrow& a2, int n) {
    int c1 = class_of.at(a1);
    int c2 = class_of.at(a2);
    if (c1 == c2)
      fail(ErrorCode::ConflictingCertificates,
           "certificate gives angle pi/" + std::to_string(n) +
               " between arrows " + arrow_id(d, a1) + " and " +
               arrow_id(d, a2) + " of one class");
    char& seen = certified[c1 * classes.size() + c2];
    if (seen && labels.at(c1, c2) != CoxLabel::finite(n))
      fail(ErrorCode::ConflictingCertificates,
           "classes " + arrow_id(d, classes[c1].rep) + " and " +
               arrow_id(d, classes[c2].rep) + " certified with labels " +
               labels.at(c1, c2).str() + " and " + std::to_string(n));
    seen = 1;
    certified[c2 * classes.size() + c1] = 1;
    labels.set(c1, c2, CoxLabel::finite(n));
  };

  std::vector<Arrow> arrows;
  for (const auto& cls : classes)
    arrows.insert(arrows.end(), cls.members.begin(), cls.members.end());
  std::sort(arrows.begin(), arrows.end());

  const CoxLabel absent;  // label 2
  for (const Arrow& a1 : arrows) {
    for (const Arrow& a2 : arrows) {
      if (a1 == a2) continue;
      if (a1.tile == a2.tile) {
        int j = a1.tile, k = a1.target, l = a2.target;
        CoxLabel jk = d.label(j, k), jl = d.label(j, l), kl = d.label(k, l);
        if (jk == absent && jl == CoxLabel::finite(4) && kl == CoxLabel::finite(3))
          record(a1, a2, 4);
        if (jk.even() && jk.value() >= 4 && jl == absent && kl == absent)
          record(a1, a2, 2);
        if (jk == absent && jl == absent && kl.is_finite())
          record(a1, a2, kl.value());
      } else if (a1.target == a2.target) {
        int j = a1.tile, l = a2.tile, k = a1.target;
        if (d.label(j, k) == CoxLabel::finite(4) &&
            d.label(j, l) == CoxLabel::finite(3) && d.label(k, l) == absent)
          record(a1, a2, 2);
      } else if (a1.tile == a2.target && a1.target == a2.tile) {
        int j = a1.tile, k = a1.target;
        if (d.label(j, k) == absent) {
          for (int l = 0; l < d.size(); ++l) {
            CoxLabel jl = d.label(j, l), kl = d.label(k, l);
            if ((jl == CoxLabel::finite(3) && kl == CoxLabel::finite(5)) ||
                (jl == CoxLabel::finite(5) && kl == CoxLabel::finite(3)))
              record(a1, a2, 2);
          }
        }
      }
    }
  }
  return labels;
}

}  // namespace coxcent
