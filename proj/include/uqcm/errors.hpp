#pragma once

#include <stdexcept>
#include <string>

namespace uqcm {

/// Invalid argument or configuration: out-of-range index, mismatched bases,
/// non-positive coupling, malformed input file.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Population found outside the subspace an operation is defined on.
class LeakageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// State does not satisfy an operation's precondition (e.g. target not in |g>).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace uqcm
