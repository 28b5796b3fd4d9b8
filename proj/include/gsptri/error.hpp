#pragma once

#include <stdexcept>
#include <string>

namespace gsptri {

// Error taxonomy shared by the library and the command line tool.  The CLI
// maps ArgumentError/PreconditionError to exit code 2 and
// DataIntegrityError to exit code 3.

struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when input data contradicts its own declared structure, e.g. an
// eigenvalue pairing that does not multiply to the similitude eigenvalue.
struct DataIntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Signals a modeling bug rather than bad input.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace gsptri
