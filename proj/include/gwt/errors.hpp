#pragma once

#include <stdexcept>

namespace gwt {

// An input violates a hypothesis of the computation (not smooth, not
// general, zero on the orienting divisor, degenerate zero).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two routes to the same quantity disagreed.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gwt
