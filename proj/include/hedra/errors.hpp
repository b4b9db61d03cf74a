#pragma once

#include <stdexcept>
#include <string>

namespace hedra {

// Thrown when a request exceeds an enumeration cap or exact arithmetic would
// overflow its machine-width representation. Distinct from std::invalid_argument,
// which signals malformed input.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hedra
