#pragma once

#include <stdexcept>
#include <string>

namespace forcing {

/// Malformed input or violated precondition (bad file, vertex out of range,
/// path that is not a path, set that is not a cover, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive or exponential procedure refused to run, or gave up,
/// because the instance exceeds its configured limits.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace forcing
