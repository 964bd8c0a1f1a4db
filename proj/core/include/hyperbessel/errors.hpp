#pragma once

#include <stdexcept>
#include <string>

namespace hyperbessel {

// Malformed input: non-finite arguments, out-of-range indices, bad policies.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed request outside the approximant's domain (n >= 4p, n > n_max).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two routes that must agree did not.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperbessel
