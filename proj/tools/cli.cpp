#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "effdom/effdom.hpp"
#include "json.hpp"

namespace effdom::cli {
namespace {

using nlohmann::json;

// Usage problems and unreadable inputs; always exit 3.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

WeightedGraph load_graph(const std::string& path) {
  try {
    return parse_graph(slurp(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

json one_based(const VertexSet& s) {
  json a = json::array();
  for (Vertex v : s) a.push_back(v + 1);
  return a;
}

std::string join_one_based(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  }
  return out;
}

int exit_code(Status s) {
  switch (s) {
    case Status::Solved: return kSolved;
    case Status::NoEd: return kNoEd;
    case Status::NotInClass: return kNotInClass;
  }
  return kError;
}

json outcome_json(const Outcome& o, std::string_view cls) {
  json j;
  j["status"] = std::string(status_name(o.status));
  if (o.solution) {
    j["vertices"] = one_based(o.solution->vertices);
    j["weight"] = o.solution->weight;
  }
  if (o.evidence) {
    j["witness"] = {{"pattern", std::string(pattern_name(o.evidence->pattern))},
                    {"vertices", one_based(o.evidence->vertices)}};
  }
  j["class"] = std::string(cls);
  return j;
}

void print_outcome(std::ostream& out, const Outcome& o, std::string_view cls, bool as_json) {
  if (as_json) {
    out << outcome_json(o, cls).dump() << '\n';
    return;
  }
  out << "status: " << status_name(o.status) << '\n' << "class: " << cls << '\n';
  if (o.solution) {
    out << "weight: " << o.solution->weight << '\n'
        << "vertices: " << join_one_based(o.solution->vertices) << '\n';
  }
  if (o.evidence) {
    out << "witness: " << pattern_name(o.evidence->pattern) << ' '
        << join_one_based(o.evidence->vertices) << '\n';
  }
  if (o.status == Status::NoEd && o.caveat) {
    out << "note: some anchors could not separate 'no e.d.' from 'outside the class'\n";
  }
}

Outcome from_oracle(const OracleResult& r) {
  if (!r.exists) return Outcome::no_ed();
  return Outcome::solved(Solution{*r.best_set, *r.best_weight});
}

// Whitespace-separated 1-based ids, or a JSON object with a "vertices" array
// as printed by `solve --json`.
VertexSet read_ed(const std::string& text, int n) {
  std::vector<long long> raw;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw UsageError(std::string("bad JSON: ") + e.what());
    }
    if (!j.contains("vertices") || !j["vertices"].is_array()) {
      throw UsageError("JSON input has no \"vertices\" array");
    }
    for (const auto& x : j["vertices"]) {
      if (!x.is_number_integer()) throw UsageError("non-integer vertex id");
      raw.push_back(x.get<long long>());
    }
  } else {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
      try {
        std::size_t used = 0;
        raw.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw UsageError("bad vertex id '" + tok + "'");
      }
    }
  }
  VertexSet d;
  for (long long id : raw) {
    if (id < 1 || id > n) throw UsageError("vertex id " + std::to_string(id) + " out of range");
    d.push_back(static_cast<Vertex>(id - 1));
  }
  std::sort(d.begin(), d.end());
  if (std::adjacent_find(d.begin(), d.end()) != d.end()) throw UsageError("repeated vertex id");
  return d;
}

constexpr ClassTag kRecognized[] = {ClassTag::TwoP2, ClassTag::P5, ClassTag::P6S122,
                                    ClassTag::TwoP3S122, ClassTag::P2P4};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-weight efficient dominating sets", "effdom"};
  app.require_subcommand(1, 1);

  std::string input, cls = "auto", method = "exact-cover", cnf_path, out_path, ed_path;
  int k = 2, girth = 3;
  bool as_json = false, parallel = false;

  auto* solve_cmd = app.add_subcommand("solve", "Solve with a class algorithm or oracle");
  solve_cmd->add_option("--input,-i", input, "Graph file ('-' for stdin)")->required();
  solve_cmd->add_option("--class,-c", cls,
                        "2p2|p5|p5-square|p6s122|2p3s122|p2p4|2bwed|brute|exact-cover|auto")
      ->capture_default_str();
  solve_cmd->add_option("--k", k, "Degree bound for 2bwed (0, 1 or 2)")->capture_default_str();
  solve_cmd->add_flag("--json", as_json, "JSON output");
  solve_cmd->add_flag("--parallel", parallel, "Run anchors on several threads");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact reference solver");
  oracle_cmd->add_option("--input,-i", input, "Graph file ('-' for stdin)")->required();
  oracle_cmd->add_option("--method,-m", method)
      ->check(CLI::IsMember({"brute", "exact-cover"}))
      ->capture_default_str();
  oracle_cmd->add_flag("--json", as_json, "JSON output");

  auto* recognize_cmd = app.add_subcommand("recognize", "Class membership with witnesses");
  recognize_cmd->add_option("--input,-i", input, "Graph file ('-' for stdin)")->required();
  recognize_cmd->add_flag("--json", as_json, "JSON output");

  auto* generate_cmd = app.add_subcommand("generate", "Hardness instance from a monotone 3-CNF");
  generate_cmd->add_option("--cnf", cnf_path, "DIMACS CNF file")->required();
  generate_cmd->add_option("--girth,-g", girth, "Girth parameter (>= 3)")->capture_default_str();
  generate_cmd->add_option("--out,-o", out_path, "Graph output; roles go to <out>.roles")
      ->required();

  auto* check_cmd = app.add_subcommand("check", "Validate a candidate e.d.");
  check_cmd->add_option("--input,-i", input, "Graph file")->required();
  check_cmd->add_option("--ed", ed_path, "1-based ids, or JSON from solve --json")->required();
  check_cmd->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0; everything else is a usage error.
    if (app.exit(e, out, err) == 0) return kSolved;
    return kError;
  }

  try {
    if (*solve_cmd) {
      const auto tag = parse_class_tag(cls);
      if (!tag) throw UsageError("unknown class '" + cls + "'");
      if (*tag == ClassTag::Bounded && (k < 0 || k > 2)) {
        throw UsageError("--k must be 0, 1 or 2");
      }
      const WeightedGraph g = load_graph(input);
      SolveOptions opt;
      opt.k = k;
      opt.robust.parallel = parallel;
      const Outcome o = solve(g, *tag, opt);
      print_outcome(out, o, class_tag_name(*tag), as_json);
      return exit_code(o.status);
    }
    if (*oracle_cmd) {
      const WeightedGraph g = load_graph(input);
      const Outcome o = from_oracle(method == "brute" ? brute_force_wed(g) : exact_cover_ed(g));
      print_outcome(out, o, method, as_json);
      return exit_code(o.status);
    }
    if (*recognize_cmd) {
      const WeightedGraph g = load_graph(input);
      json j = json::object();
      for (ClassTag t : kRecognized) {
        const auto w = class_witness(g, t);
        const std::string name(class_tag_name(t));
        if (as_json) {
          json entry{{"member", !w}};
          if (w) {
            entry["witness"] = {{"pattern", std::string(pattern_name(w->pattern))},
                                {"vertices", one_based(w->vertices)}};
          }
          j[name] = entry;
        } else if (w) {
          out << name << ": no (" << pattern_name(w->pattern) << ": "
              << join_one_based(w->vertices) << ")\n";
        } else {
          out << name << ": yes\n";
        }
      }
      if (as_json) out << j.dump() << '\n';
      return kSolved;
    }
    if (*generate_cmd) {
      MonotoneCnf f;
      try {
        f = parse_monotone_cnf(slurp(cnf_path));
      } catch (const ParseError& e) {
        throw UsageError(cnf_path + ": " + e.what());
      }
      const ReductionGraph r = build_reduction(f, girth);
      write_file(out_path, render_graph(r.graph));
      write_file(out_path + ".roles", render_roles(r));
      out << "wrote " << out_path << ": " << r.graph.order() << " vertices, " << r.graph.size()
          << " edges\n";
      return kSolved;
    }
    if (*check_cmd) {
      const WeightedGraph g = load_graph(input);
      const VertexSet d = read_ed(slurp(ed_path), g.order());
      const bool ok = is_efficient_dominating(g, d);
      if (as_json) {
        json j{{"valid", ok}, {"vertices", one_based(d)}};
        if (ok) j["weight"] = g.weight_of(d);
        out << j.dump() << '\n';
      } else if (ok) {
        out << "valid: weight " << g.weight_of(d) << '\n';
      } else {
        out << "invalid\n";
      }
      return ok ? kSolved : kNoEd;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace effdom::cli
