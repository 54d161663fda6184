#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxcent/error.hpp"

namespace coxcent {

// Coxeter edge label m(u,v).  The value 2 means "unjoined" and is never
// stored explicitly by the diagram; infinity is a distinct sentinel, not a
// large integer.  m(v,v) = 1 is returned for diagonal queries.
class CoxLabel {
 public:
  constexpr CoxLabel() = default;  // label 2, unjoined

  static constexpr CoxLabel finite(int m) {
    CoxLabel l;
    l.m_ = m;
    return l;
  }
  static constexpr CoxLabel infinity() {
    CoxLabel l;
    l.m_ = kInfinity;
    return l;
  }

  constexpr bool is_infinity() const { return m_ == kInfinity; }
  constexpr bool is_finite() const { return m_ != kInfinity; }

  // Finite value; meaningless for infinity (callers check first).
  constexpr int value() const { return m_; }

  // Parity in the diagram sense: infinity is neither even nor odd, and only
  // labels >= 3 count as odd edges.  even() includes the absent label 2.
  constexpr bool odd() const { return is_finite() && m_ >= 3 && m_ % 2 == 1; }
  constexpr bool even() const { return is_finite() && m_ % 2 == 0; }

  // Whether the pair is joined in the diagram (label > 2).
  constexpr bool joined() const { return is_infinity() || m_ >= 3; }

  friend constexpr bool operator==(CoxLabel a, CoxLabel b) = default;

  std::string str() const {
    return is_infinity() ? "inf" : std::to_string(m_);
  }

 private:
  static constexpr int kInfinity = -1;
  int m_ = 2;
};

// A Coxeter diagram: an ordered set of named vertices plus a symmetric label
// map.  Pairs without a stored label have label 2.  Vertex order is
// insertion order and is used everywhere determinism matters (BFS trees,
// canonical representatives, serialization).
class CoxeterDiagram {
 public:
  CoxeterDiagram() = default;

  // Adds the vertex if absent and returns its index.  Names must be nonempty
  // tokens without whitespace.
  int ensure_vertex(std::string_view name) {
    if (auto it = index_.find(std::string(name)); it != index_.end())
      return it->second;
    if (name.empty()) fail(ErrorCode::BadFormat, "empty vertex name");
    for (char c : name)
      if (std::isspace(static_cast<unsigned char>(c)))
        fail(ErrorCode::BadFormat,
             "vertex name contains whitespace: '" + std::string(name) + "'");
    int id = static_cast<int>(names_.size());
    names_.emplace_back(name);
    index_.emplace(names_.back(), id);
    grow_labels();
    return id;
  }

  // Sets m(u,v) = l, which must be >= 3 or infinity.  Each pair may be set
  // at most once.
  void set_label(int u, int v, CoxLabel l) {
    check_index(u);
    check_index(v);
    if (u == v)
      fail(ErrorCode::SelfEdge, "self edge at '" + names_[u] + "'");
    if (l.is_finite() && l.value() <= 2)
      fail(ErrorCode::BadLabel, "label " + l.str() + " for edge " + names_[u] +
                                    " " + names_[v] + " (must be >= 3 or inf)");
    CoxLabel& slot = labels_[u * static_cast<int>(names_.size()) + v];
    if (slot != CoxLabel())
      fail(ErrorCode::DuplicateEdge, "edge " + names_[u] + " " + names_[v] +
                                         " given twice (labels " + slot.str() +
                                         " and " + l.str() + ")");
    slot = l;
    labels_[v * static_cast<int>(names_.size()) + u] = l;
  }

  void add_edge(std::string_view u, std::string_view v, CoxLabel l) {
    int iu = ensure_vertex(u);
    int iv = ensure_vertex(v);
    set_label(iu, iv, l);
  }

  int size() const { return static_cast<int>(names_.size()); }

  const std::string& name(int v) const {
    check_index(v);
    return names_[v];
  }

  const std::vector<std::string>& vertex_names() const { return names_; }

  std::optional<int> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int index_of(std::string_view name) const {
    auto v = find(name);
    if (!v)
      fail(ErrorCode::UnknownVertex, "no vertex '" + std::string(name) + "'");
    return *v;
  }

  // Total, symmetric label query; the diagonal reports the sentinel 1.
  CoxLabel label(int u, int v) const {
    check_index(u);
    check_index(v);
    if (u == v) return CoxLabel::finite(1);
    return labels_[u * static_cast<int>(names_.size()) + v];
  }

  CoxLabel label(std::string_view u, std::string_view v) const {
    return label(index_of(u), index_of(v));
  }

  // Joined neighbours (label >= 3 or infinity) in vertex order.
  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < size(); ++u)
      if (u != v && label(v, u).joined()) out.push_back(u);
    return out;
  }

  // Neighbours across odd finite labels, in vertex order.
  std::vector<int> odd_neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < size(); ++u)
      if (u != v && label(v, u).odd()) out.push_back(u);
    return out;
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  // All joined pairs (u, v) with u < v, in lexicographic vertex order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u)
      for (int v = u + 1; v < size(); ++v)
        if (label(u, v).joined()) out.emplace_back(u, v);
    return out;
  }

 private:
  void check_index(int v) const {
    if (v < 0 || v >= size())
      fail(ErrorCode::UnknownVertex,
           "vertex index " + std::to_string(v) + " out of range");
  }

  void grow_labels() {
    int n = static_cast<int>(names_.size());
    std::vector<CoxLabel> next(static_cast<std::size_t>(n) * n);
    for (int u = 0; u + 1 < n; ++u)
      for (int v = 0; v + 1 < n; ++v)
        next[u * n + v] = labels_[u * (n - 1) + v];
    labels_ = std::move(next);
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<CoxLabel> labels_;  // n*n, symmetric, diagonal unused
};

}  // namespace coxcent
