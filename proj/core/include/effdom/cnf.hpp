#pragma once

#include <array>
#include <istream>
#include <string_view>
#include <vector>

namespace effdom {

// Monotone 3-CNF. Variables and clauses are 0-based internally; DIMACS files
// are 1-based.
struct MonotoneCnf {
  int variables = 0;
  std::vector<std::array<int, 3>> clauses;
  // clause_order[i] lists the clauses containing variable i, in the order
  // used to attach them along the variable's path.
  std::vector<std::vector<int>> clause_order;

  // Builds clause_order in ascending clause index. Throws
  // std::invalid_argument on out-of-range or repeated variables.
  static MonotoneCnf from_clauses(int variables, std::vector<std::array<int, 3>> clauses);

  // Throws std::invalid_argument unless every clause has three distinct
  // in-range variables and clause_order lists exactly the incident clauses.
  void validate() const;

  // Position of clause j in variable i's ordering, or -1.
  int position(int i, int j) const;
};

// DIMACS "p cnf <vars> <clauses>" with positive literals and three per clause.
// Throws ParseError naming the offending line.
MonotoneCnf parse_monotone_cnf(std::istream& in);
MonotoneCnf parse_monotone_cnf(std::string_view text);

// Exactly one true variable in every clause.
bool one_in_three(const MonotoneCnf& f, const std::vector<bool>& assignment);

}  // namespace effdom
