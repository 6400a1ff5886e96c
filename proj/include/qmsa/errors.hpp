#pragma once

#include <stdexcept>
#include <string>

namespace qmsa {

/// Invalid user input: bad sequences, malformed files, out-of-range options.
/// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configured resource cap was exceeded (qubit cap, enumeration cap).
/// The CLI maps this to exit code 3.
class CapError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace qmsa
