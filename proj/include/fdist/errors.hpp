#pragma once

#include <stdexcept>
#include <string>

namespace fdist {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally invalid input: reversed intervals, grades outside [0,1],
// masses that do not sum to one.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class InvalidRestriction : public Error {
 public:
  using Error::Error;
};

// Uniform spreading over a focal element of zero length.
class DegenerateSupport : public Error {
 public:
  using Error::Error;
};

class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace fdist
