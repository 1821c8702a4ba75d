#pragma once

#include <stdexcept>
#include <string>

namespace qpg {

// Thrown when an input exceeds a configured resource bound (sieve limit,
// matrix size, graph order, search budget). Distinct from std::domain_error,
// which is reserved for mathematically invalid inputs.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

}  // namespace qpg
