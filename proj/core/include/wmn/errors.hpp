#pragma once

#include <stdexcept>
#include <string>

namespace wmn {

/// Operands live in different (m, n) contexts or algebra kinds.
class ContextMismatch : public std::invalid_argument {
 public:
  explicit ContextMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class IndexOutOfRange : public std::out_of_range {
 public:
  explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

/// A precondition on the mathematical data failed (singular matrix, zero weight, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace wmn
