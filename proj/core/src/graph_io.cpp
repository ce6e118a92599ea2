#include "effdom/graph_io.hpp"

#include <set>
#include <sstream>
#include <vector>

namespace effdom {
namespace {

long long read_int(std::istringstream& ss, std::size_t line, const char* what) {
  long long value = 0;
  if (!(ss >> value)) throw ParseError(line, std::string("expected ") + what);
  return value;
}

void expect_end(std::istringstream& ss, std::size_t line) {
  std::string extra;
  if (ss >> extra) throw ParseError(line, "unexpected trailing token '" + extra + "'");
}

}  // namespace

WeightedGraph parse_graph(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Weight> weights;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  auto vertex = [&](long long id) {
    if (id < 1 || id > n) {
      throw ParseError(line, "vertex id " + std::to_string(id) + " out of range");
    }
    return static_cast<Vertex>(id - 1);
  };

  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ss(raw);
    std::string tag;
    if (!(ss >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (have_header) throw ParseError(line, "duplicate 'p' line");
      std::string kind;
      if (!(ss >> kind) || kind != "ed") throw ParseError(line, "expected 'p ed <n> <m>'");
      n = read_int(ss, line, "vertex count");
      m = read_int(ss, line, "edge count");
      expect_end(ss, line);
      if (n < 0 || m < 0 || n > (1LL << 30)) throw ParseError(line, "invalid header counts");
      have_header = true;
      weights.assign(static_cast<std::size_t>(n), 1);
    } else if (tag == "w" || tag == "e") {
      if (!have_header) throw ParseError(line, "'" + tag + "' line before 'p' header");
      if (tag == "w") {
        Vertex v = vertex(read_int(ss, line, "vertex id"));
        long long w = read_int(ss, line, "weight");
        expect_end(ss, line);
        if (w < 0 || w > static_cast<long long>(UINT32_MAX)) {
          throw ParseError(line, "weight out of range");
        }
        weights[v] = static_cast<Weight>(w);
      } else {
        Vertex u = vertex(read_int(ss, line, "edge endpoint"));
        Vertex v = vertex(read_int(ss, line, "edge endpoint"));
        expect_end(ss, line);
        if (u == v) throw ParseError(line, "edge endpoints are equal");
        Edge key{std::min(u, v), std::max(u, v)};
        if (!seen.insert(key).second) throw ParseError(line, "duplicate edge");
        edges.push_back(key);
      }
    } else {
      throw ParseError(line, "unknown line type '" + tag + "'");
    }
  }
  if (!have_header) throw ParseError(line, "missing 'p ed <n> <m>' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line, "header announces " + std::to_string(m) + " edges, found " +
                               std::to_string(edges.size()));
  }
  return WeightedGraph::from_edges(static_cast<int>(n), edges, std::move(weights));
}

WeightedGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::string render_graph(const WeightedGraph& g) {
  std::ostringstream out;
  out << "p ed " << g.order() << ' ' << g.size() << '\n';
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.weight(v) != 1) out << "w " << v + 1 << ' ' << g.weight(v) << '\n';
  }
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

}  // namespace effdom
