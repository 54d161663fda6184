#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxcent/diagram.hpp"
#include "coxcent/error.hpp"
#include "coxcent/spherical.hpp"
#include "coxcent/tits.hpp"
#include "coxcent/words.hpp"

namespace coxcent {

namespace detail {

// Quantized coordinate key for deduplicating floating-point vectors.
struct VectorKey {
  std::vector<std::int64_t> q;
  friend bool operator==(const VectorKey&, const VectorKey&) = default;
};

struct VectorKeyHash {
  std::size_t operator()(const VectorKey& k) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : k.q) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline VectorKey quantize(const Eigen::VectorXd& v, double quantum) {
  VectorKey k;
  k.q.reserve(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    k.q.push_back(static_cast<std::int64_t>(std::llround(v[i] / quantum)));
  return k;
}

struct PermHash {
  std::size_t operator()(const std::vector<std::uint16_t>& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace detail

// Enumerates the root system of a representation by closing the simple basis
// vectors under all generators.  Vectors are deduplicated on a quantized
// grid.  Throws OrderExceeded when the cap is hit, which is how infinite
// root systems surface.
inline std::vector<Eigen::VectorXd> enumerate_roots(
    const TitsRepresentation& rep, std::size_t max_roots = 20000,
    double quantum = 1e-9) {
  std::vector<Eigen::VectorXd> roots;
  std::unordered_map<detail::VectorKey, int, detail::VectorKeyHash> index;
  std::deque<int> queue;
  auto push = [&](const Eigen::VectorXd& v) {
    auto key = detail::quantize(v, quantum);
    if (index.contains(key)) return;
    if (roots.size() >= max_roots)
      fail(ErrorCode::OrderExceeded,
           "root system exceeds cap of " + std::to_string(max_roots));
    index.emplace(key, static_cast<int>(roots.size()));
    queue.push_back(static_cast<int>(roots.size()));
    roots.push_back(v);
  };
  for (int i = 0; i < rep.rank(); ++i)
    push(Eigen::VectorXd::Unit(rep.rank(), i));
  while (!queue.empty()) {
    int r = queue.front();
    queue.pop_front();
    for (int i = 0; i < rep.rank(); ++i) push(rep.generator(i) * roots[r]);
  }
  return roots;
}

struct BruteForceOptions {
  std::size_t max_order = 200000;
  std::size_t max_roots = 20000;
  double quantum = 1e-9;
};

// Brute-force model of a finite Coxeter group: every element is stored as a
// permutation of the root system, enumerated by breadth-first search of the
// Cayley graph.  The permutation action is exact, so membership, products
// and centralizers are integer computations once the roots are fixed.
class BruteForceGroup {
 public:
  using Perm = std::vector<std::uint16_t>;
  using Options = BruteForceOptions;

  static BruteForceGroup enumerate(const CoxeterDiagram& d,
                                   const Options& opts = Options()) {
    SphericalType sph = recognize_spherical(d);
    if (!sph.spherical)
      fail(ErrorCode::NotFinite, "diagram does not define a finite group");
    if (sph.order > opts.max_order)
      fail(ErrorCode::OrderExceeded,
           "group order " + std::to_string(sph.order) + " exceeds cap " +
               std::to_string(opts.max_order));
    return BruteForceGroup(d, opts);
  }

  const TitsRepresentation& representation() const { return rep_; }
  const std::vector<Eigen::VectorXd>& roots() const { return roots_; }
  std::size_t num_roots() const { return roots_.size(); }
  std::size_t order() const { return elements_.size(); }
  const Perm& perm(std::size_t id) const { return elements_[id]; }

  std::size_t identity() const { return 0; }
  std::size_t generator_element(int i) const { return gen_ids_.at(i); }

  std::size_t product(std::size_t a, std::size_t b) const {
    return id_of_perm(compose(elements_[a], elements_[b]));
  }

  // Word of generators reaching the element, from the BFS parent chain.
  Word word_of(std::size_t id) const {
    std::vector<std::string> letters;
    for (std::size_t e = id; e != 0; e = parent_[e])
      letters.push_back(rep_.diagram().name(via_gen_[e]));
    std::reverse(letters.begin(), letters.end());
    return Word{std::move(letters)};
  }

  std::size_t id_of_word(const Word& w) const {
    Perm p = identity_perm();
    for (const auto& letter : w.letters) {
      auto idx = rep_.diagram().find(letter);
      if (!idx)
        fail(ErrorCode::UnknownLetter, "word letter '" + letter + "'");
      p = compose(p, gen_perms_[*idx]);
    }
    return id_of_perm(p);
  }

  // Maps a form-preserving matrix to its element, by where it sends roots.
  std::optional<std::size_t> id_of_matrix(const Eigen::MatrixXd& m) const {
    Perm p(roots_.size());
    for (std::size_t r = 0; r < roots_.size(); ++r) {
      auto key = detail::quantize(m * roots_[r], quantum_);
      auto it = root_index_.find(key);
      if (it == root_index_.end()) return std::nullopt;
      p[r] = static_cast<std::uint16_t>(it->second);
    }
    auto it = element_index_.find(p);
    if (it == element_index_.end()) return std::nullopt;
    return it->second;
  }

  // All elements commuting with the reflection of vertex v, sorted.
  std::vector<std::size_t> centralizer_elements(int v) const {
    const Perm& c = elements_[gen_ids_.at(v)];
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < elements_.size(); ++e)
      if (compose(elements_[e], c) == compose(c, elements_[e])) out.push_back(e);
    return out;
  }

  std::size_t centralizer_order(int v) const {
    return centralizer_elements(v).size();
  }

  // Conjugacy orbit of an element under the whole group (closure under
  // conjugation by generators).
  std::vector<std::size_t> conjugacy_class(std::size_t id) const {
    std::vector<std::size_t> orbit{id};
    std::vector<char> seen(elements_.size(), 0);
    seen[id] = 1;
    std::deque<std::size_t> queue{id};
    while (!queue.empty()) {
      std::size_t e = queue.front();
      queue.pop_front();
      for (const auto& [i, gid] : gen_ids_) {
        const Perm& g = elements_[gid];
        std::size_t conj = id_of_perm(compose(g, compose(elements_[e], g)));
        if (!seen[conj]) {
          seen[conj] = 1;
          orbit.push_back(conj);
          queue.push_back(conj);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
  }

  bool generators_conjugate(int i, int j) const {
    auto orbit = conjugacy_class(gen_ids_.at(i));
    return std::binary_search(orbit.begin(), orbit.end(), gen_ids_.at(j));
  }

  // Subgroup generated by the given words, as a sorted element set.
  std::vector<std::size_t> closure(std::span<const Word> words) const {
    std::vector<std::size_t> gens;
    for (const auto& w : words) gens.push_back(id_of_word(w));
    std::vector<char> seen(elements_.size(), 0);
    std::vector<std::size_t> group{identity()};
    seen[identity()] = 1;
    std::deque<std::size_t> queue{identity()};
    while (!queue.empty()) {
      std::size_t e = queue.front();
      queue.pop_front();
      for (std::size_t g : gens) {
        std::size_t x = product(e, g);
        if (!seen[x]) {
          seen[x] = 1;
          group.push_back(x);
          queue.push_back(x);
        }
      }
    }
    std::sort(group.begin(), group.end());
    return group;
  }

 private:
  BruteForceGroup(const CoxeterDiagram& d, const Options& opts)
      : rep_(d), quantum_(opts.quantum) {
    roots_ = enumerate_roots(rep_, opts.max_roots, opts.quantum);
    for (std::size_t r = 0; r < roots_.size(); ++r)
      root_index_.emplace(detail::quantize(roots_[r], quantum_), static_cast<int>(r));

    gen_perms_.reserve(d.size());
    for (int i = 0; i < d.size(); ++i) {
      Perm p(roots_.size());
      for (std::size_t r = 0; r < roots_.size(); ++r) {
        auto key = detail::quantize(rep_.generator(i) * roots_[r], quantum_);
        p[r] = static_cast<std::uint16_t>(root_index_.at(key));
      }
      gen_perms_.push_back(std::move(p));
    }

    // Cayley graph BFS from the identity.
    add_element(identity_perm(), 0, 0);
    for (std::size_t head = 0; head < elements_.size(); ++head) {
      for (int i = 0; i < d.size(); ++i) {
        Perm next = compose(elements_[head], gen_perms_[i]);
        if (!element_index_.contains(next)) {
          if (elements_.size() >= opts.max_order)
            fail(ErrorCode::OrderExceeded,
                 "group enumeration exceeds cap of " +
                     std::to_string(opts.max_order));
          add_element(std::move(next), head, i);
        }
      }
    }
    for (int i = 0; i < d.size(); ++i)
      gen_ids_.emplace(i, element_index_.at(gen_perms_[i]));
  }

  Perm identity_perm() const {
    Perm p(roots_.size());
    for (std::size_t r = 0; r < roots_.size(); ++r)
      p[r] = static_cast<std::uint16_t>(r);
    return p;
  }

  // (a then-applied-after b): result[i] = a[b[i]], matching word order.
  static Perm compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
  }

  std::size_t id_of_perm(const Perm& p) const { return element_index_.at(p); }

  void add_element(Perm p, std::size_t parent, int gen) {
    std::size_t id = elements_.size();
    element_index_.emplace(p, id);
    elements_.push_back(std::move(p));
    parent_.push_back(parent);
    via_gen_.push_back(gen);
  }

  TitsRepresentation rep_;
  double quantum_;
  std::vector<Eigen::VectorXd> roots_;
  std::unordered_map<detail::VectorKey, int, detail::VectorKeyHash> root_index_;
  std::vector<Perm> gen_perms_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::size_t, detail::PermHash> element_index_;
  std::vector<std::size_t> parent_;
  std::vector<int> via_gen_;
  std::unordered_map<int, std::size_t> gen_ids_;
};

// Spec-shaped wrapper: group order, centralizer order and a membership
// oracle for the centralizer of one simple reflection.
struct BruteForceCentralizer {
  BruteForceGroup group;
  int s;
  std::vector<std::size_t> centralizer;  // sorted element ids

  std::uint64_t group_order() const { return group.order(); }
  std::uint64_t centralizer_order() const { return centralizer.size(); }

  bool contains(const Word& w) const {
    return std::binary_search(centralizer.begin(), centralizer.end(),
                              group.id_of_word(w));
  }

  // Whether the given words generate exactly the centralizer.
  bool words_generate_centralizer(std::span<const Word> words) const {
    return group.closure(words) == centralizer;
  }
};

inline BruteForceCentralizer brute_force_centralizer(
    const CoxeterDiagram& d, std::string_view s,
    std::size_t max_order = 200000) {
  int v = d.index_of(s);
  BruteForceGroup g =
      BruteForceGroup::enumerate(d, {.max_order = max_order});
  auto cent = g.centralizer_elements(v);
  return BruteForceCentralizer{std::move(g), v, std::move(cent)};
}

}  // namespace coxcent
