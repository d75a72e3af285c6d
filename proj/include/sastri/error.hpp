#pragma once

#include <stdexcept>
#include <string>

namespace sastri {

/// Raised when an argument lies outside the domain of an operation
/// (poles, degenerate triangles, violated hypotheses).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace sastri
