#pragma once

#include <stdexcept>
#include <string>

namespace ekr {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (.grp files, cycle notation, CLI arguments).
struct ParseError : Error {
  explicit ParseError(const std::string& msg, int line = -1)
      : Error(line >= 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_number(line) {}
  int line_number;
};

// Violated preconditions: degree mismatch, intransitive input, bad construction
// parameters, and similar caller mistakes.
struct InvalidInput : Error {
  using Error::Error;
};

// A configured resource cap was hit (group order cap, graph size cap).
struct CapExceeded : Error {
  using Error::Error;
};

// A configured search budget was exhausted (clique search nodes, enumeration
// limit). Exact results are never silently degraded; this is thrown instead.
struct BudgetExceeded : Error {
  using Error::Error;
};

}  // namespace ekr
