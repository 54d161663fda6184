#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxcent/blowup.hpp"
#include "coxcent/brute_force.hpp"
#include "coxcent/builtins.hpp"
#include "coxcent/centralizer.hpp"
#include "coxcent/diagram.hpp"
#include "coxcent/io.hpp"
#include "coxcent/isomorphism.hpp"
#include "coxcent/odd_components.hpp"
#include "coxcent/spherical.hpp"
#include "coxcent/tits.hpp"

namespace coxcent {

namespace cli_detail {

using nlohmann::ordered_json;

// --diagram accepts a file path or, failing that, a builtin name.
inline CoxeterDiagram load_diagram(const std::string& source) {
  if (std::filesystem::exists(source)) {
    std::ifstream in(source);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_diagram(text.str());
  }
  return builtin_diagram(source);
}

inline ordered_json label_json(CoxLabel l) {
  if (l.is_infinity()) return ordered_json("inf");
  return ordered_json(l.value());
}

inline ordered_json diagram_json(const CoxeterDiagram& d) {
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (int v = 0; v < d.size(); ++v) j["vertices"].push_back(d.name(v));
  j["edges"] = ordered_json::array();
  for (auto [u, v] : d.edges()) {
    ordered_json e;
    e["u"] = d.name(u);
    e["v"] = d.name(v);
    e["label"] = label_json(d.label(u, v));
    j["edges"].push_back(e);
  }
  return j;
}

inline ordered_json spherical_json(const SphericalType& s) {
  ordered_json j;
  j["spherical"] = s.spherical;
  if (s.spherical) {
    j["type"] = s.str();
    j["order"] = s.order;
  }
  return j;
}

inline void print_diagram_block(std::ostream& out, const CoxeterDiagram& d,
                                const std::string& indent) {
  for (int v = 0; v < d.size(); ++v)
    out << indent << "vertex " << d.name(v) << "\n";
  for (auto [u, v] : d.edges())
    out << indent << "edge " << d.name(u) << " " << d.name(v) << " "
        << d.label(u, v).str() << "\n";
}

inline int cmd_info(const std::string& source, bool as_json, std::ostream& out) {
  CoxeterDiagram d = load_diagram(source);
  auto decomp = odd_components(d);
  SphericalType sph = recognize_spherical(d);
  if (as_json) {
    ordered_json j;
    j["diagram"] = diagram_json(d);
    j["odd_components"] = ordered_json::array();
    for (const auto& c : decomp.components) {
      ordered_json cj;
      cj["base"] = d.name(c.base);
      cj["members"] = ordered_json::array();
      for (int v : c.members) cj["members"].push_back(d.name(v));
      cj["cycle_rank"] = c.cycle_rank;
      j["odd_components"].push_back(cj);
    }
    j["spherical"] = spherical_json(sph);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "vertices: " << d.size() << "\n";
  out << "odd components: " << decomp.components.size() << "\n";
  for (const auto& c : decomp.components) {
    out << "  base " << d.name(c.base) << ":";
    for (int v : c.members) out << " " << d.name(v);
    out << " (cycle rank " << c.cycle_rank << ")\n";
  }
  out << "spherical: " << sph.str();
  if (sph.spherical) out << " (order " << sph.order << ")";
  out << "\n";
  return 0;
}

inline int cmd_centralize(const std::string& source, const std::string& s,
                          bool as_json, const std::string& dot_path,
                          bool all_words, std::ostream& out) {
  CoxeterDiagram d = load_diagram(source);
  CentralizerResult res = centralizer_diagram(d, s);

  if (!dot_path.empty()) {
    if (!res.domega_supported)
      fail(ErrorCode::UnsupportedCycles,
           "cannot export a diagram: odd component of '" + s +
               "' has cycles");
    std::ofstream dot(dot_path);
    dot << write_dot(res.domega, "domega");
  }

  if (as_json) {
    ordered_json j;
    j["reflection"] = res.reflection;
    ordered_json members = ordered_json::array();
    for (int v : res.component.members) members.push_back(d.name(v));
    j["component"] = members;
    j["gamma_rank"] = res.gamma_rank;
    j["gamma_words"] = ordered_json::array();
    for (const auto& w : res.gamma_words) j["gamma_words"].push_back(w.str());
    ordered_json dj;
    dj["supported"] = res.domega_supported;
    if (res.domega_supported) {
      auto sub = diagram_json(res.domega);
      dj["vertices"] = sub["vertices"];
      dj["edges"] = sub["edges"];
    }
    j["domega"] = dj;
    if (res.domega_supported) {
      j["class_words"] = ordered_json::array();
      for (const auto& [id, w] : res.class_words) {
        ordered_json cw;
        cw["class"] = id;
        cw["word"] = w.str();
        j["class_words"].push_back(cw);
      }
      j["spherical"] = spherical_json(res.spherical);
    }
    if (all_words) {
      j["r_words"] = ordered_json::array();
      for (const auto& [a, w] : res.generators.r_words) {
        ordered_json rw;
        rw["tile"] = d.name(a.tile);
        rw["target"] = d.name(a.target);
        rw["word"] = w.str();
        j["r_words"].push_back(rw);
      }
    }
    out << j.dump(2) << "\n";
    return 0;
  }

  out << "reflection: " << res.reflection << "\n";
  out << "component:";
  for (int v : res.component.members) out << " " << d.name(v);
  out << "\n";
  out << "gamma rank: " << res.gamma_rank << "\n";
  for (std::size_t i = 0; i < res.gamma_words.size(); ++i)
    out << "gamma word " << (i + 1) << ": " << res.gamma_words[i].str() << "\n";
  if (!res.domega_supported) {
    out << "domega: UNSUPPORTED-CYCLES (cycle rank "
        << res.component.cycle_rank << ")\n";
    if (all_words) {
      out << "r-words:\n";
      for (const auto& [a, w] : res.generators.r_words)
        out << "  " << arrow_id(d, a) << ": " << w.str() << "\n";
    }
    return 0;
  }
  out << "domega: " << res.domega.size() << " vertices\n";
  print_diagram_block(out, res.domega, "  ");
  out << "class words:\n";
  for (const auto& [id, w] : res.class_words)
    out << "  " << id << ": " << w.str() << "\n";
  if (all_words) {
    out << "r-words:\n";
    for (const auto& [a, w] : res.generators.r_words)
      out << "  " << arrow_id(d, a) << ": " << w.str() << "\n";
  }
  out << "spherical: " << res.spherical.str();
  if (res.spherical.spherical) out << " (order " << res.spherical.order << ")";
  out << "\n";
  return 0;
}

inline int cmd_blowup(const std::string& source, bool as_json,
                      const std::string& dot_path, std::ostream& out) {
  CoxeterDiagram d = load_diagram(source);
  CoxeterDiagram result = blowup_fast_path(d);
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path);
    dot << write_dot(result, "blowup");
  }
  if (as_json) {
    ordered_json j;
    j["blowup"] = diagram_json(result);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "blowup: " << result.size() << " vertices\n";
  print_diagram_block(out, result, "  ");
  SphericalType sph = recognize_spherical(result);
  out << "spherical: " << sph.str();
  if (sph.spherical) out << " (order " << sph.order << ")";
  out << "\n";
  return 0;
}

inline int cmd_verify(const std::string& source, const std::string& s,
                      double tol, int order_bound, std::ostream& out) {
  CoxeterDiagram d = load_diagram(source);
  CentralizerResult res = centralizer_diagram(d, s);
  TitsRepresentation rep(d);
  Eigen::MatrixXd sigma_s = rep.generator(d.index_of(s));
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(rep.rank(), rep.rank());
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok, const std::string& note) {
    out << "check " << name << ": " << (ok ? "PASS" : "FAIL");
    if (!note.empty()) out << " (" << note << ")";
    out << "\n";
    all_ok = all_ok && ok;
  };

  std::vector<Eigen::MatrixXd> r_mats;
  for (const auto& [a, w] : res.generators.r_words)
    r_mats.push_back(rep.evaluate(w));

  {
    bool ok = true;
    std::size_t count = 0;
    for (const auto& w : res.gamma_words) {
      ok = ok && commutation_defect(rep.evaluate(w), sigma_s) < tol;
      ++count;
    }
    for (const auto& m : r_mats) {
      ok = ok && commutation_defect(m, sigma_s) < tol;
      ++count;
    }
    report("commutation", ok, std::to_string(count) + " words");
  }
  {
    bool ok = true;
    for (const auto& m : r_mats) {
      ok = ok && max_abs(m * m - id) < tol;
      ok = ok && std::abs(m.trace() - (rep.rank() - 2)) < tol;
    }
    report("involution", ok, std::to_string(r_mats.size()) + " r-words");
  }
  if (!res.domega_supported) {
    out << "check fusion: SKIP (component has cycles)\n";
    out << "check labels: SKIP (component has cycles)\n";
  } else {
    bool ok = true;
    for (const auto& cls : res.classes) {
      Eigen::MatrixXd ref = rep.evaluate(res.generators.r_word(cls.rep));
      for (const Arrow& a : cls.members)
        ok = ok && max_abs(rep.evaluate(res.generators.r_word(a)) - ref) < tol;
    }
    report("fusion", ok, std::to_string(res.classes.size()) + " classes");

    bool labels_ok = true;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < res.classes.size(); ++i) {
      Eigen::MatrixXd mi = rep.evaluate(res.generators.r_word(res.classes[i].rep));
      for (std::size_t j = i + 1; j < res.classes.size(); ++j) {
        Eigen::MatrixXd mj =
            rep.evaluate(res.generators.r_word(res.classes[j].rep));
        CoxLabel l = res.domega.label(static_cast<int>(i), static_cast<int>(j));
        auto order = element_order(mi * mj, order_bound, tol);
        if (l.is_infinity())
          labels_ok = labels_ok && !order.has_value();
        else
          labels_ok = labels_ok && order.has_value() && *order == l.value();
        ++pairs;
      }
    }
    report("labels", labels_ok, std::to_string(pairs) + " class pairs");
  }
  out << "verify: " << (all_ok ? "PASS" : "FAIL") << "\n";
  return all_ok ? 0 : 1;
}

inline int cmd_brute(const std::string& source, const std::string& s,
                     std::size_t max_order, std::ostream& out) {
  CoxeterDiagram d = load_diagram(source);
  auto oracle = brute_force_centralizer(d, s, max_order);
  CentralizerResult res = centralizer_diagram(d, s);
  std::vector<Word> words;
  words.push_back(Word{{std::string(s)}});
  for (const auto& w : res.gamma_words) words.push_back(w);
  for (const auto& [a, w] : res.generators.r_words) words.push_back(w);
  bool equal = oracle.words_generate_centralizer(words);
  out << "group order: " << oracle.group_order() << "\n";
  out << "centralizer order: " << oracle.centralizer_order() << "\n";
  out << "generator closure: " << (equal ? "EQUAL" : "DIFFERENT") << "\n";
  return equal ? 0 : 1;
}

}  // namespace cli_detail

// Command-line driver; parses args (without argv[0]) and executes.  Exit
// codes: 0 success, 1 usage or input error, 2 internal consistency failure.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Reflection centralizers in Coxeter groups"};
  app.require_subcommand(1);

  std::string diagram_source, reflection, dot_path, builtin_name;
  bool as_json = false, all_words = false;
  double tol = 1e-8;
  int order_bound = 50;
  std::size_t max_order = 200000;

  auto* info = app.add_subcommand("info", "components and classification");
  info->add_option("--diagram", diagram_source, "diagram file or builtin name")
      ->required();
  info->add_flag("--json", as_json, "machine-readable output");

  auto* centralize =
      app.add_subcommand("centralize", "centralizer of a simple reflection");
  centralize->add_option("--diagram", diagram_source)->required();
  centralize->add_option("--reflection", reflection)->required();
  centralize->add_flag("--json", as_json);
  centralize->add_option("--dot", dot_path, "write the result diagram as DOT");
  centralize->add_flag("--all-words", all_words, "emit every (tile,target) word");

  auto* blowup = app.add_subcommand("blowup", "fast path for single-edge trees");
  blowup->add_option("--diagram", diagram_source)->required();
  blowup->add_flag("--json", as_json);
  blowup->add_option("--dot", dot_path);

  auto* verify = app.add_subcommand("verify", "numeric checks of the word family");
  verify->add_option("--diagram", diagram_source)->required();
  verify->add_option("--reflection", reflection)->required();
  verify->add_option("--tol", tol, "comparison tolerance");
  verify->add_option("--order-bound", order_bound, "power bound for order checks");

  auto* brute = app.add_subcommand("brute", "brute-force oracle comparison");
  brute->add_option("--diagram", diagram_source)->required();
  brute->add_option("--reflection", reflection)->required();
  brute->add_option("--max-order", max_order, "group enumeration cap");

  auto* builtin = app.add_subcommand("builtin", "print a builtin diagram");
  builtin->add_option("name", builtin_name)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    using namespace cli_detail;
    if (info->parsed()) return cmd_info(diagram_source, as_json, out);
    if (centralize->parsed())
      return cmd_centralize(diagram_source, reflection, as_json, dot_path,
                            all_words, out);
    if (blowup->parsed()) return cmd_blowup(diagram_source, as_json, dot_path, out);
    if (verify->parsed())
      return cmd_verify(diagram_source, reflection, tol, order_bound, out);
    if (brute->parsed()) return cmd_brute(diagram_source, reflection, max_order, out);
    if (builtin->parsed()) {
      out << write_diagram(builtin_diagram(builtin_name));
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ConflictingCertificates ? 2 : 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace coxcent
