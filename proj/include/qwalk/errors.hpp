#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// Parameter outside its admissible domain (p not in (0,1), bad grid size, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Initial state that is not normalized.
class InvalidState : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation called on an input outside its documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two eigenphases of a kernel closer than the separation threshold.
class DegenerateSpectrum : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qwalk
