#include "effdom/cnf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

#include "effdom/graph_io.hpp"

namespace effdom {

MonotoneCnf MonotoneCnf::from_clauses(int variables,
                                      std::vector<std::array<int, 3>> clauses) {
  MonotoneCnf f;
  f.variables = variables;
  f.clauses = std::move(clauses);
  f.clause_order.assign(static_cast<std::size_t>(variables), {});
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    for (int v : f.clauses[j]) {
      if (v < 0 || v >= variables) {
        throw std::invalid_argument("variable " + std::to_string(v + 1) + " out of range");
      }
      f.clause_order[v].push_back(static_cast<int>(j));
    }
  }
  f.validate();
  return f;
}

void MonotoneCnf::validate() const {
  if (variables < 0 || static_cast<int>(clause_order.size()) != variables) {
    throw std::invalid_argument("clause ordering does not cover every variable");
  }
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(variables));
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    const auto& c = clauses[j];
    for (int v : c) {
      if (v < 0 || v >= variables) {
        throw std::invalid_argument("variable " + std::to_string(v + 1) + " out of range");
      }
      incident[v].push_back(static_cast<int>(j));
    }
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) {
      throw std::invalid_argument("clause " + std::to_string(j + 1) + " repeats a variable");
    }
  }
  for (int i = 0; i < variables; ++i) {
    auto order = clause_order[i];
    std::sort(order.begin(), order.end());
    if (order != incident[i]) {
      throw std::invalid_argument("clause ordering of variable " + std::to_string(i + 1) +
                                  " does not match its incident clauses");
    }
  }
}

int MonotoneCnf::position(int i, int j) const {
  const auto& order = clause_order[i];
  auto it = std::find(order.begin(), order.end(), j);
  return it == order.end() ? -1 : static_cast<int>(it - order.begin());
}

MonotoneCnf parse_monotone_cnf(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  bool have_header = false;
  long long vars = 0;
  long long expected = 0;
  std::vector<std::array<int, 3>> clauses;
  std::vector<long long> pending;

  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ss(raw);
    std::string tok;
    if (!(ss >> tok) || tok == "c" || tok == "%") continue;
    if (tok == "p") {
      if (have_header) throw ParseError(line, "duplicate 'p' line");
      std::string kind;
      if (!(ss >> kind >> vars >> expected) || kind != "cnf" || vars < 0 || expected < 0) {
        throw ParseError(line, "expected 'p cnf <variables> <clauses>'");
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line, "clause before 'p cnf' header");
    do {
      long long lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError(line, "bad literal '" + tok + "'");
      }
      if (lit < 0) throw ParseError(line, "negative literal " + tok);
      if (lit == 0) {
        if (pending.size() != 3) {
          throw ParseError(line, "clause has " + std::to_string(pending.size()) +
                                     " literals, expected 3");
        }
        std::array<int, 3> c{};
        for (int k = 0; k < 3; ++k) c[k] = static_cast<int>(pending[k] - 1);
        if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) {
          throw ParseError(line, "repeated variable in clause");
        }
        clauses.push_back(c);
        pending.clear();
      } else {
        if (lit > vars) throw ParseError(line, "variable " + tok + " out of range");
        pending.push_back(lit);
      }
    } while (ss >> tok);
  }
  if (!have_header) throw ParseError(line, "missing 'p cnf' header");
  if (!pending.empty()) throw ParseError(line, "unterminated clause");
  if (static_cast<long long>(clauses.size()) != expected) {
    throw ParseError(line, "header announces " + std::to_string(expected) +
                               " clauses, found " + std::to_string(clauses.size()));
  }
  return MonotoneCnf::from_clauses(static_cast<int>(vars), std::move(clauses));
}

MonotoneCnf parse_monotone_cnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_monotone_cnf(in);
}

bool one_in_three(const MonotoneCnf& f, const std::vector<bool>& assignment) {
  for (const auto& c : f.clauses) {
    int count = 0;
    for (int v : c) count += assignment[v] ? 1 : 0;
    if (count != 1) return false;
  }
  return true;
}

}  // namespace effdom
