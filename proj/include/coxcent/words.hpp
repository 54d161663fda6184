#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "coxcent/arrows.hpp"
#include "coxcent/diagram.hpp"
#include "coxcent/error.hpp"
#include "coxcent/odd_components.hpp"

namespace coxcent {

// A word in the simple generators.  Letters are vertex names, written in
// product order: (w1, ..., wk) denotes the product of the reflections
// w1 * w2 * ... * wk, with the rightmost factor applied first to vectors.
// Words are emitted exactly as the defining formulas produce them, with no
// free cancellation.
struct Word {
  std::vector<std::string> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  // Inverse word; valid because every letter is an involution.
  Word reversed() const {
    Word w = *this;
    std::reverse(w.letters.begin(), w.letters.end());
    return w;
  }

  void append(const Word& other) {
    letters.insert(letters.end(), other.letters.begin(), other.letters.end());
  }

  // Space-separated letters, left to right in product order.
  std::string str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) out << " ";
      out << letters[i];
    }
    return out.str();
  }

  static Word parse(std::string_view text) {
    Word w;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) w.letters.push_back(tok);
    return w;
  }

  friend bool operator==(const Word&, const Word&) = default;
};

namespace detail {

inline std::vector<int> path_indices(const CoxeterDiagram& d,
                                     std::span<const std::string> gamma) {
  std::vector<int> path;
  path.reserve(gamma.size());
  for (const auto& name : gamma) path.push_back(d.index_of(name));
  return path;
}

}  // namespace detail

// The loop word p_gamma of an edge-path gamma = (t0, ..., tn) in the odd
// diagram: with m(t_{i-1}, t_i) = 2*l_i + 1, it is the concatenation of l_i
// copies of the two-letter block (t_i, t_{i-1}) for i = 1..n.  An empty or
// single-vertex path gives the empty word.
inline Word p_gamma_indices(const CoxeterDiagram& d, std::span<const int> gamma) {
  Word w;
  for (std::size_t i = 1; i < gamma.size(); ++i) {
    CoxLabel m = d.label(gamma[i - 1], gamma[i]);
    if (!m.odd())
      fail(ErrorCode::NotOddPath, "consecutive path vertices " +
                                      d.name(gamma[i - 1]) + ", " +
                                      d.name(gamma[i]) + " have label " +
                                      m.str());
    int li = (m.value() - 1) / 2;
    for (int rep = 0; rep < li; ++rep) {
      w.letters.push_back(d.name(gamma[i]));
      w.letters.push_back(d.name(gamma[i - 1]));
    }
  }
  return w;
}

inline Word p_gamma(const CoxeterDiagram& d, std::span<const std::string> gamma) {
  auto path = detail::path_indices(d, gamma);
  return p_gamma_indices(d, path);
}

// The reflection word r_{gamma,u} = p_gamma * u (t_n u)^{lambda-1} *
// p_gamma^{-1}, where t_n is the endpoint of gamma and m(t_n, u) = 2*lambda
// is finite and even.
inline Word r_gamma_u_indices(const CoxeterDiagram& d, std::span<const int> gamma,
                              int u) {
  if (gamma.empty()) fail(ErrorCode::NotOddPath, "empty path");
  int tn = gamma.back();
  CoxLabel m = d.label(tn, u);
  if (!m.even())
    fail(ErrorCode::NotEvenJoin, "label between " + d.name(tn) + " and " +
                                     d.name(u) + " is " + m.str());
  int lambda = m.value() / 2;
  Word p = p_gamma_indices(d, gamma);
  Word w = p;
  w.letters.push_back(d.name(u));
  for (int rep = 1; rep < lambda; ++rep) {
    w.letters.push_back(d.name(tn));
    w.letters.push_back(d.name(u));
  }
  w.append(p.reversed());
  return w;
}

inline Word r_gamma_u(const CoxeterDiagram& d, std::span<const std::string> gamma,
                      std::string_view u) {
  auto path = detail::path_indices(d, gamma);
  return r_gamma_u_indices(d, path, d.index_of(u));
}

// The explicit finite generating set for the centralizer of s: one loop word
// per fundamental loop of s's odd component, and one reflection word per
// arrow (t, u), built along the spanning-tree path from s to t.  Together
// with s itself these generate the whole centralizer.
struct GeneratorSet {
  std::string s;
  OddComponent component;
  std::vector<Word> gamma_words;                    // one per fundamental loop
  std::vector<std::pair<Arrow, Word>> r_words;      // sorted by arrow
  std::vector<std::pair<Arrow, Arrow>> class_map;   // arrow -> canonical rep
  bool has_class_map = false;                       // tree components only

  const Word& r_word(const Arrow& a) const {
    auto it = std::lower_bound(
        r_words.begin(), r_words.end(), a,
        [](const auto& entry, const Arrow& key) { return entry.first < key; });
    if (it == r_words.end() || it->first != a)
      fail(ErrorCode::UnknownVertex, "no such arrow " + std::to_string(a.tile) +
                                         ">" + std::to_string(a.target));
    return it->second;
  }
};

inline GeneratorSet generator_set(const CoxeterDiagram& d, std::string_view s) {
  GeneratorSet g;
  g.s = std::string(s);
  g.component = odd_component_of(d, s);

  for (const auto& loop : g.component.loops)
    g.gamma_words.push_back(p_gamma_indices(d, loop));

  auto arrows = enumerate_arrows(d, g.component);
  for (const Arrow& a : arrows) {
    auto delta = g.component.tree_path(a.tile);
    g.r_words.emplace_back(a, r_gamma_u_indices(d, delta, a.target));
  }

  if (g.component.is_tree()) {
    auto classes = fuse_arrow_classes(d, g.component, arrows);
    for (const auto& cls : classes)
      for (const Arrow& a : cls.members) g.class_map.emplace_back(a, cls.rep);
    std::sort(g.class_map.begin(), g.class_map.end());
    g.has_class_map = true;
  }
  return g;
}

}  // namespace coxcent
