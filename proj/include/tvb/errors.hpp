#pragma once

#include <stdexcept>
#include <string>

namespace tvb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands live in different ambient spaces or have the wrong length.
struct DimensionMismatch : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

// Non-simplicial cones are rejected rather than approximated.
struct UnsupportedError : Error {
  using Error::Error;
};

struct IncompleteFanError : Error {
  using Error::Error;
};

// A piecewise linear map whose per-cone data disagree somewhere.
struct MalformedMapError : Error {
  using Error::Error;
};

// Bad user input; `where` is a JSON-pointer-like location.
struct InputError : Error {
  InputError(const std::string& where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), location(where), detail(what) {}
  std::string location;
  std::string detail;
};

}  // namespace tvb
