#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coxcent/arrows.hpp"
#include "coxcent/diagram.hpp"
#include "coxcent/odd_components.hpp"
#include "coxcent/spherical.hpp"
#include "coxcent/words.hpp"

namespace coxcent {

// Everything the centralizer of a simple reflection s decomposes into: the
// direct factor <s>, a free part of rank cycle_rank(odd component) with one
// loop word per fundamental loop, and a reflection part presented by the
// diagram `domega` when the component is a tree.  For cyclic components the
// diagram is withheld (the reflection part is then rarely finitely
// presented this way) but rank and words are still produced.
struct CentralizerResult {
  std::string reflection;
  OddComponent component;
  int gamma_rank = 0;
  std::vector<Word> gamma_words;

  bool domega_supported = false;
  CoxeterDiagram domega;            // vertices are class ids "tile>target"
  std::vector<ArrowClass> classes;  // in domega vertex order
  std::vector<std::pair<std::string, Word>> class_words;
  SphericalType spherical;          // of domega, when supported

  GeneratorSet generators;  // the full word family, one r-word per arrow
};

inline CentralizerResult centralizer_diagram(const CoxeterDiagram& d,
                                             std::string_view s) {
  CentralizerResult res;
  res.reflection = std::string(s);
  res.generators = generator_set(d, s);
  res.component = res.generators.component;
  res.gamma_rank = res.component.cycle_rank;
  res.gamma_words = res.generators.gamma_words;

  if (!res.component.is_tree()) return res;  // diagram withheld

  auto arrows = enumerate_arrows(d, res.component);
  res.classes = fuse_arrow_classes(d, res.component, arrows);
  EdgeLabels labels = compute_edge_labels(d, res.component, res.classes);

  for (const auto& cls : res.classes)
    res.domega.ensure_vertex(arrow_id(d, cls.rep));
  for (std::size_t i = 0; i < res.classes.size(); ++i)
    for (std::size_t j = i + 1; j < res.classes.size(); ++j) {
      CoxLabel l = labels.at(static_cast<int>(i), static_cast<int>(j));
      if (l.joined())
        res.domega.set_label(static_cast<int>(i), static_cast<int>(j), l);
    }

  for (const auto& cls : res.classes)
    res.class_words.emplace_back(arrow_id(d, cls.rep),
                                 res.generators.r_word(cls.rep));

  res.spherical = recognize_spherical(res.domega);
  res.domega_supported = true;
  return res;
}

}  // namespace coxcent
