#pragma once

#include <stdexcept>
#include <string>

namespace frieze {

/// Base class for errors raised by this library.  Precondition violations
/// (bad levels, mismatched contexts, invalid diagonals, ...) throw plain
/// std::invalid_argument instead.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input file or JSON document.
struct ParseError : Error {
    using Error::Error;
};

/// A candidate quiddity row fails closure: it is not the quiddity row of
/// any frieze (the associated matrix word is not minus the identity).
struct NotAFriezeError : Error {
    using Error::Error;
};

/// A candidate quiddity row closes up but produces a non-positive interior
/// entry; zero entries in interior rows are rejected.
struct PositivityError : Error {
    using Error::Error;
};

/// A frieze is not the image of any dissection (its interior ones cross).
struct NotInImageError : Error {
    using Error::Error;
};

} // namespace frieze
