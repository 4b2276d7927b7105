#pragma once

#include <stdexcept>
#include <string>

namespace wbc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

// Mixing elements of incompatible algebras (wrong r, t, sign type, ...).
struct ShapeError : Error {
    using Error::Error;
};

// A rewrite exceeded its step budget. Signals a non-termination bug,
// never a truncation.
struct FuelError : Error {
    using Error::Error;
};

// Cyclotomic parameters violate the admissibility recursion.
struct AdmissibilityError : Error {
    using Error::Error;
};

struct MissingVariableError : Error {
    using Error::Error;
};

} // namespace wbc
