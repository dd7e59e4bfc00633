#ifndef MOMENTREC_ERROR_HPP
#define MOMENTREC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace momentrec {

// Caller passed something the operation's contract rejects (mismatched
// variables, zero operator, malformed file). CLI exit code 2.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Mathematically undefined request (t <= 0 for K0, V with negative n, ...).
// CLI exit code 3.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Division by an exact zero.
class ArithmeticError : public std::domain_error {
 public:
  explicit ArithmeticError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace momentrec

#endif  // MOMENTREC_ERROR_HPP
