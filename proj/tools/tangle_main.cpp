#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tangles/direct_builder.hpp"
#include "tangles/oracles.hpp"
#include "tangles/perfect_builder.hpp"
#include "tangles/recognizer.hpp"
#include "tangles/svg.hpp"
#include "tangles/tangle_json.hpp"

namespace {

constexpr int kOk = 0;        // success / property holds
constexpr int kPropertyFail = 1;
constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tangles::Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tangles::Error("cannot open " + path + " for writing");
  out << text;
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

void print_marking(std::ostream& os, const tangles::Marking& m) {
  for (std::size_t v = 1; v < m.size(); ++v) {
    const std::string s = tangles::to_string(m[v]);
    os << v << ": " << (s.empty() ? "-" : s) << "\n";
  }
}

int cmd_analyze(const std::string& perm_text) {
  using namespace tangles;
  const Permutation p = parse_permutation(perm_text);
  std::cout << "permutation: " << p.to_string() << "\n";
  std::cout << "n: " << p.size() << "\n";
  std::cout << "inversions: " << inversion_number(p) << "\n";
  const auto cls = classify(p);
  std::vector<int> ls, rs, sb, ne;
  for (int v = 1; v <= p.size(); ++v) {
    switch (cls[static_cast<std::size_t>(v)]) {
      case ElementClass::left_straight: ls.push_back(v); break;
      case ElementClass::right_straight: rs.push_back(v); break;
      case ElementClass::switchback: sb.push_back(v); break;
      case ElementClass::neither: ne.push_back(v); break;
    }
  }
  std::cout << "left-straight: {" << join(ls) << "}\n";
  std::cout << "right-straight: {" << join(rs) << "}\n";
  std::cout << "switchbacks: {" << join(sb) << "}\n";
  std::cout << "untouched: {" << join(ne) << "}\n";
  const auto recs = enumerate_recs(p);
  int regular = 0;
  for (const auto& r : recs) regular += r.regular ? 1 : 0;
  std::cout << "recs: " << recs.size() << " (" << regular << " regular, "
            << recs.size() - static_cast<std::size_t>(regular) << " irregular)\n";
  if (auto w = find_321(p))
    std::cout << "321-avoiding: no (witness " << p((*w)[0]) << " " << p((*w)[1]) << " "
              << p((*w)[2]) << " at positions " << (*w)[0] << " " << (*w)[1] << " " << (*w)[2]
              << ")\n";
  else
    std::cout << "321-avoiding: yes\n";
  const auto rec = recognize(p);
  if (rec.perfect)
    std::cout << "perfect: yes\n";
  else
    std::cout << "perfect: no (" << to_string(rec.reason) << ": {" << join(rec.obstruction)
              << "})\n";
  return kOk;
}

int emit_tangle(const tangles::Tangle& t, const std::string& json_path,
                const std::string& svg_path, bool rounded, bool colored, int unit) {
  tangles::RenderOptions opts;
  opts.rounded = rounded;
  opts.colored = colored;
  opts.unit = unit;
  if (!json_path.empty())
    write_file(json_path, tangles::write_tangle(t) + "\n");
  if (!svg_path.empty()) write_file(svg_path, tangles::to_svg(t, opts));
  if (json_path.empty() && svg_path.empty()) std::cout << tangles::write_tangle(t) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tangle diagrams with minimum corners: construction, recognition, rendering"};
  app.require_subcommand(1);

  std::string perm_text, file, json_path, svg_path, expect, predicate = "perfect";
  bool show_marking = false, dump_graph = false, simple_mode = false;
  bool rounded = false, colored = false, list_failures = false;
  int census_n = 0, bound = 8, unit = 24;

  auto* analyze = app.add_subcommand("analyze", "inversions, classes, recs, verdicts");
  analyze->add_option("PERM", perm_text, "permutation, e.g. \"3 6 1 4 7 2 5\"")->required();

  auto* direct = app.add_subcommand("direct", "build a direct tangle (every path <= 2 corners)");
  direct->add_option("PERM", perm_text)->required();
  direct->add_option("--json", json_path, "write tangle JSON here");
  direct->add_option("--svg", svg_path, "write an SVG drawing here");

  auto* perfect = app.add_subcommand("perfect", "build a perfect tangle");
  perfect->add_option("PERM", perm_text)->required();
  perfect->add_option("--json", json_path, "write tangle JSON here");
  perfect->add_option("--svg", svg_path, "write an SVG drawing here");

  auto* recog = app.add_subcommand("recognize", "decide perfectness, optionally print the marking");
  recog->add_option("PERM", perm_text)->required();
  recog->add_flag("--marking", show_marking, "print the balanced marking");
  recog->add_flag("--dump-graph", dump_graph, "dump the matching graph as JSON");

  auto* verify = app.add_subcommand("verify", "check a tangle JSON file");
  verify->add_option("FILE", file)->required();
  verify->add_option("--expect", expect, "simple|direct|perfect")
      ->check(CLI::IsMember({"simple", "direct", "perfect"}));

  auto* oracle = app.add_subcommand("oracle", "exhaustive ground-truth searches");
  auto* oracle_min = oracle->add_subcommand("min-corners", "minimum corners over all tangles");
  oracle_min->add_option("PERM", perm_text)->required();
  oracle_min->add_flag("--simple", simple_mode, "restrict to simple tangles");
  auto* oracle_marking = oracle->add_subcommand("marking", "balanced marking by enumeration");
  oracle_marking->add_option("PERM", perm_text)->required();
  oracle->require_subcommand(1);

  auto* census = app.add_subcommand("census", "sweep all of S_n");
  census->add_option("N", census_n)->required();
  census->add_option("--predicate", predicate, "perfect|direct|both (default perfect)")
      ->check(CLI::IsMember({"perfect", "direct", "both"}));
  census->add_option("--bound", bound, "largest permitted N (default 8)");
  census->add_flag("--list", list_failures, "list non-perfect permutations");

  auto* render = app.add_subcommand("render", "tangle JSON file to SVG");
  render->add_option("FILE", file)->required();
  render->add_option("--svg", svg_path, "output path")->required();
  render->add_flag("--rounded", rounded, "rounded corners");
  render->add_flag("--color", colored, "distinct hue per path");
  render->add_option("--unit", unit, "pixels per grid step (default 24)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  using namespace tangles;
  try {
    if (*analyze) return cmd_analyze(perm_text);

    if (*direct) {
      const Permutation p = parse_permutation(perm_text);
      const auto r = build_direct(p);
      if (!r.ok()) {
        std::cerr << "not 321-avoiding: witness " << p(r.witness[0]) << " " << p(r.witness[1])
                  << " " << p(r.witness[2]) << " at positions " << r.witness[0] << " "
                  << r.witness[1] << " " << r.witness[2] << "\n";
        return kPropertyFail;
      }
      return emit_tangle(*r.tangle, json_path, svg_path, rounded, colored, unit);
    }

    if (*perfect) {
      const auto r = build_perfect(parse_permutation(perm_text));
      if (!r.ok()) {
        std::cerr << "not perfect: " << to_string(r.reason) << " {" << join(r.obstruction)
                  << "}\n";
        return kPropertyFail;
      }
      return emit_tangle(*r.tangle, json_path, svg_path, rounded, colored, unit);
    }

    if (*recog) {
      const Permutation p = parse_permutation(perm_text);
      if (dump_graph) {
        const auto g = build_match_graph(p, candidate_sets(p));
        nlohmann::ordered_json j;
        j["vertices"] = nlohmann::json::array();
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
          j["vertices"].push_back({{"id", g.vertices[i]}, {"w", g.weights[i]}});
        j["edges"] = nlohmann::json::array();
        for (const auto& e : g.edges) j["edges"].push_back({e.left, e.right});
        std::cout << j.dump() << "\n";
      }
      const auto r = recognize(p);
      if (!r.perfect) {
        std::cout << "not perfect: " << to_string(r.reason) << " {" << join(r.obstruction)
                  << "}\n";
        return kPropertyFail;
      }
      std::cout << "perfect\n";
      if (show_marking) print_marking(std::cout, r.marking);
      return kOk;
    }

    if (*verify) {
      Tangle t = [&] {
        try {
          return read_tangle(read_file(file));
        } catch (const InvalidTangle& e) {
          std::cout << "invalid: " << e.what() << "\n";
          std::exit(kPropertyFail);
        }
      }();
      std::cout << "valid tangle, n=" << t.n() << ", rows=" << t.rows().size() << "\n";
      const bool solved = solves(t, t.start());
      std::cout << "solves " << t.start().to_string() << ": " << (solved ? "yes" : "no") << "\n";
      bool simple = false, directp = false, perfectp = false;
      if (solved) {
        simple = is_simple(t);
        directp = is_direct(t);
        perfectp = is_perfect(t);
        std::cout << "crossings: " << crossing_count(t) << "\n";
        std::cout << "corners: " << corner_count(t).total << "\n";
        std::cout << "simple: " << (simple ? "yes" : "no") << "\n";
        std::cout << "direct: " << (directp ? "yes" : "no") << "\n";
        std::cout << "perfect: " << (perfectp ? "yes" : "no") << "\n";
      }
      if (expect.empty()) return kOk;
      if (!solved) return kPropertyFail;
      const bool pass = expect == "simple" ? simple : expect == "direct" ? directp : perfectp;
      return pass ? kOk : kPropertyFail;
    }

    if (*oracle_min) {
      std::cout << min_corners(parse_permutation(perm_text), simple_mode) << "\n";
      return kOk;
    }

    if (*oracle_marking) {
      const auto m = balanced_marking_bruteforce(parse_permutation(perm_text));
      if (!m) {
        std::cout << "none\n";
        return kPropertyFail;
      }
      print_marking(std::cout, *m);
      return kOk;
    }

    if (*census) {
      const auto what = predicate == "perfect" ? CensusPredicate::perfect
                        : predicate == "direct" ? CensusPredicate::direct
                                                : CensusPredicate::both;
      const auto counts = tangles::census(census_n, what, bound, list_failures);
      if (what != CensusPredicate::direct)
        std::cout << "perfect: " << counts.perfect << "/" << counts.total << "\n";
      if (what != CensusPredicate::perfect)
        std::cout << "direct: " << counts.direct << "/" << counts.total << "\n";
      for (const auto& p : counts.non_perfect) std::cout << "not perfect: " << p.to_string() << "\n";
      return kOk;
    }

    if (*render) {
      const Tangle t = read_tangle(read_file(file));
      RenderOptions opts;
      opts.rounded = rounded;
      opts.colored = colored;
      opts.unit = unit;
      write_file(svg_path, to_svg(t, opts));
      return kOk;
    }
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
