// Acceptance battery: run bare for all criteria, or with a single numeric
// argument to run one criterion. Exit status 0 iff everything run passed.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "hedra/verify.hpp"

int main(int argc, char** argv) {
  try {
    if (argc > 2) {
      std::cerr << "usage: " << argv[0] << " [criterion-id]\n";
      return 2;
    }
    std::optional<std::string> suite;
    if (argc == 2) suite = std::string(argv[1]);
    int failures = hedra::run_verification(std::cout, suite);
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
