#pragma once

#include <stdexcept>
#include <string>

namespace entropic {

// Bad inputs: violated preconditions, malformed descriptors, dimension mismatch.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The inputs were fine but the numerics were not: overflow, non-convergence,
// ill-conditioning.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

}  // namespace detail
}  // namespace entropic
