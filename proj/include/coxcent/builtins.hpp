#pragma once

#include <string>
#include <string_view>

#include "coxcent/diagram.hpp"
#include "coxcent/error.hpp"

namespace coxcent {

namespace detail {

inline int parse_rank(std::string_view stem, std::string_view num) {
  if (num.empty() || num.find_first_not_of("0123456789") != std::string_view::npos)
    fail(ErrorCode::BadRank, std::string(stem) + ":" + std::string(num));
  long v = 0;
  try {
    v = std::stol(std::string(num));
  } catch (const std::exception&) {
    fail(ErrorCode::BadRank, std::string(stem) + ":" + std::string(num));
  }
  if (v < 1 || v > 1000) fail(ErrorCode::BadRank, std::string(stem) + ":" + std::string(num));
  return static_cast<int>(v);
}

inline CoxLabel L3() { return CoxLabel::finite(3); }

}  // namespace detail

// Named diagrams: the standard families A:n, B:n, D:n, affA:n, affD:n,
// E:6|7|8, F4, H3, H4, I2:m, and the fixtures Y555, bugaenko8, lorentz18.
inline CoxeterDiagram builtin_diagram(std::string_view name) {
  using detail::L3;
  CoxeterDiagram d;
  auto num = [&](int i) { return std::to_string(i); };

  std::string_view stem = name;
  std::string_view arg;
  if (auto colon = name.find(':'); colon != std::string_view::npos) {
    stem = name.substr(0, colon);
    arg = name.substr(colon + 1);
  }

  if (stem == "A" && !arg.empty()) {
    int n = detail::parse_rank(stem, arg);
    d.ensure_vertex("a1");
    for (int i = 2; i <= n; ++i)
      d.add_edge("a" + num(i - 1), "a" + num(i), L3());
    return d;
  }
  if (stem == "B" && !arg.empty()) {
    int n = detail::parse_rank(stem, arg);
    if (n < 2) fail(ErrorCode::BadRank, "B:" + std::string(arg));
    for (int i = 2; i <= n; ++i)
      d.add_edge("b" + num(i - 1), "b" + num(i),
                 i == n ? CoxLabel::finite(4) : L3());
    return d;
  }
  if (stem == "D" && !arg.empty()) {
    int n = detail::parse_rank(stem, arg);
    if (n < 4) fail(ErrorCode::BadRank, "D:" + std::string(arg));
    for (int i = 2; i <= n - 2; ++i)
      d.add_edge("d" + num(i - 1), "d" + num(i), L3());
    d.add_edge("d" + num(n - 2), "d" + num(n - 1), L3());
    d.add_edge("d" + num(n - 2), "d" + num(n), L3());
    return d;
  }
  if (stem == "affA" && !arg.empty()) {
    int n = detail::parse_rank(stem, arg);
    if (n == 1) {
      d.add_edge("a1", "a2", CoxLabel::infinity());
      return d;
    }
    for (int i = 2; i <= n + 1; ++i)
      d.add_edge("a" + num(i - 1), "a" + num(i), L3());
    d.add_edge("a" + num(n + 1), "a1", L3());
    return d;
  }
  if (stem == "affD" && !arg.empty()) {
    int n = detail::parse_rank(stem, arg);
    if (n < 4) fail(ErrorCode::BadRank, "affD:" + std::string(arg));
    // central path c1..c_{n-3} with two leaves at each end
    int len = n - 3;
    d.ensure_vertex("c1");
    for (int i = 2; i <= len; ++i)
      d.add_edge("c" + num(i - 1), "c" + num(i), L3());
    d.add_edge("c1", "l1", L3());
    d.add_edge("c1", "l2", L3());
    d.add_edge("c" + num(len), "r1", L3());
    d.add_edge("c" + num(len), "r2", L3());
    return d;
  }
  if (stem == "E" && !arg.empty()) {
    int n = detail::parse_rank(stem, arg);
    if (n < 6 || n > 8) fail(ErrorCode::BadRank, "E:" + std::string(arg));
    for (int i = 2; i <= n - 1; ++i)
      d.add_edge("e" + num(i - 1), "e" + num(i), L3());
    d.add_edge("e3", "e" + num(n), L3());
    return d;
  }
  if (stem == "I2" && !arg.empty()) {
    int m = detail::parse_rank(stem, arg);
    if (m < 3) fail(ErrorCode::BadRank, "I2:" + std::string(arg));
    d.add_edge("i1", "i2", CoxLabel::finite(m));
    return d;
  }
  if (name == "F4") {
    d.add_edge("f1", "f2", L3());
    d.add_edge("f2", "f3", CoxLabel::finite(4));
    d.add_edge("f3", "f4", L3());
    return d;
  }
  if (name == "H3") {
    d.add_edge("h1", "h2", CoxLabel::finite(5));
    d.add_edge("h2", "h3", L3());
    return d;
  }
  if (name == "H4") {
    d.add_edge("h1", "h2", CoxLabel::finite(5));
    d.add_edge("h2", "h3", L3());
    d.add_edge("h3", "h4", L3());
    return d;
  }
  if (name == "Y555") {
    d.ensure_vertex("y0");
    for (std::string arm : {"a", "b", "c"}) {
      d.add_edge("y0", arm + "1", L3());
      for (int i = 2; i <= 5; ++i)
        d.add_edge(arm + num(i - 1), arm + num(i), L3());
    }
    return d;
  }
  if (name == "bugaenko8") {
    // Row of nine with 5s at both ends, pendants below positions 4 and 6,
    // and an infinite edge between the pendants.
    for (int i = 2; i <= 9; ++i) {
      CoxLabel l = (i == 2 || i == 9) ? CoxLabel::finite(5) : L3();
      d.add_edge("r" + num(i - 1), "r" + num(i), l);
    }
    d.add_edge("r4", "p4", L3());
    d.add_edge("r6", "p6", L3());
    d.add_edge("p4", "p6", CoxLabel::infinity());
    return d;
  }
  if (name == "lorentz18") {
    // Reflection group of the even unimodular Lorentzian lattice of
    // dimension 18: a 17-vertex path with one extra leaf at each third node.
    for (int i = 2; i <= 17; ++i)
      d.add_edge("p" + num(i - 1), "p" + num(i), L3());
    d.add_edge("p3", "q1", L3());
    d.add_edge("p15", "q2", L3());
    return d;
  }
  fail(ErrorCode::UnknownName, "no builtin diagram '" + std::string(name) + "'");
}

}  // namespace coxcent
