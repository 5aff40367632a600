#ifndef ORBITALS_ERRORS_H_
#define ORBITALS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace orbitals {

// Malformed textual input: cycle notation, group files, JSON documents.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A well-formed request that violates an operation's precondition: a point
// outside the domain, mismatched degrees, alpha == beta, and so on.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what)
      : std::invalid_argument(what) {}
};

[[noreturn]] void ThrowDomainError(const std::string& what);

}  // namespace orbitals

#endif  // ORBITALS_ERRORS_H_
