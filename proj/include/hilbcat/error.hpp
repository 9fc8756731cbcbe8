#pragma once

#include <stdexcept>
#include <string>

namespace hilbcat {

/// Thrown on precondition violations: ring mismatches, singular grams,
/// parse failures, unknown suite names.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hilbcat
