#pragma once

#include <stdexcept>

namespace hh {

// Malformed textual/JSON input (bad rational string, schema violation).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition violation on otherwise well-formed input (negative
// evaluation point, invalid filtration, n < 2 for a relative cyclotomic
// extension, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hh
