#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hedra {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Names of the verification criteria, indexed by id - 1.
const std::vector<std::string>& criterion_names();

// Runs one criterion (1-based id).  Throws std::invalid_argument for unknown
// ids.
CriterionResult run_criterion(int id);

// Criterion ids belonging to a named suite (triangulations, facelattice,
// secondary, farey, thompson) or a single numeric id.  Throws
// std::invalid_argument for unknown names.
std::vector<int> suite_criteria(const std::string& suite);

// Runs all criteria (or one suite), printing one "PASS id name :: detail" /
// "FAIL id name :: detail" line per criterion plus a summary line.  Returns
// the number of failures.
int run_verification(std::ostream& out,
                     const std::optional<std::string>& suite = std::nullopt);

}  // namespace hedra
