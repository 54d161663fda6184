#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "coxcent/diagram.hpp"
#include "coxcent/error.hpp"

namespace coxcent {

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> toks;
  std::istringstream in{std::string(line)};
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

inline CoxLabel parse_label_token(const std::string& tok) {
  if (tok == "inf") return CoxLabel::infinity();
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    fail(ErrorCode::BadLabel, "label '" + tok + "' is not an integer or inf");
  long v = 0;
  try {
    v = std::stol(tok);
  } catch (const std::exception&) {
    fail(ErrorCode::BadLabel, "label '" + tok + "' out of range");
  }
  if (v <= 2)
    fail(ErrorCode::BadLabel, "label " + tok + " must be >= 3 or inf");
  return CoxLabel::finite(static_cast<int>(v));
}

}  // namespace detail

// Line-based diagram format:
//   # comment
//   vertex NAME
//   edge NAME1 NAME2 LABEL     with LABEL an integer >= 3 or "inf"
// Vertices are auto-created by edge lines; pairs with no edge line have
// label 2.
inline CoxeterDiagram parse_diagram(std::string_view text) {
  CoxeterDiagram d;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    auto toks = detail::split_ws(raw);
    if (toks.empty()) continue;
    const std::string where = " (line " + std::to_string(lineno) + ")";
    if (toks[0] == "vertex") {
      if (toks.size() != 2)
        fail(ErrorCode::BadFormat, "vertex line needs one name" + where);
      d.ensure_vertex(toks[1]);
    } else if (toks[0] == "edge") {
      if (toks.size() != 4)
        fail(ErrorCode::BadFormat,
             "edge line needs two names and a label" + where);
      if (toks[1] == toks[2])
        fail(ErrorCode::SelfEdge, "edge " + toks[1] + " " + toks[2] + where);
      d.add_edge(toks[1], toks[2], detail::parse_label_token(toks[3]));
    } else {
      fail(ErrorCode::BadFormat, "unknown directive '" + toks[0] + "'" + where);
    }
  }
  if (d.size() == 0) fail(ErrorCode::EmptyDiagram, "no vertices");
  return d;
}

// Inverse of parse_diagram; all vertices are declared so isolated ones
// survive a round trip.
inline std::string write_diagram(const CoxeterDiagram& d) {
  std::ostringstream out;
  for (int v = 0; v < d.size(); ++v) out << "vertex " << d.name(v) << "\n";
  for (auto [u, v] : d.edges())
    out << "edge " << d.name(u) << " " << d.name(v) << " "
        << d.label(u, v).str() << "\n";
  return out.str();
}

// DOT export: undirected graph, label attribute for the Coxeter label
// (omitted for 3, "inf" for infinity), dashed style for infinity.
inline std::string write_dot(const CoxeterDiagram& d,
                             std::string_view graph_name = "coxeter") {
  std::ostringstream out;
  out << "graph \"" << graph_name << "\" {\n";
  for (int v = 0; v < d.size(); ++v) out << "  \"" << d.name(v) << "\";\n";
  for (auto [u, v] : d.edges()) {
    CoxLabel l = d.label(u, v);
    out << "  \"" << d.name(u) << "\" -- \"" << d.name(v) << "\"";
    if (l.is_infinity())
      out << " [label=\"inf\", style=dashed]";
    else if (l.value() != 3)
      out << " [label=\"" << l.value() << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace coxcent
