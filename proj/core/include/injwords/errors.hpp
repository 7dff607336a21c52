#pragma once

#include <stdexcept>
#include <string>

namespace injwords {

// Thrown when an enumeration would exceed the configured element budget.
// Callers that can degrade (verification suites, CLI) catch this and
// report the work item as skipped instead of failing.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace injwords
