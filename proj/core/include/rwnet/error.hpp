#pragma once

#include <stdexcept>

namespace rwnet {

// Raised when a caller passes arguments outside an operation's contract
// (bad node id, probability outside [0,1], malformed input file, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a file cannot be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rwnet
