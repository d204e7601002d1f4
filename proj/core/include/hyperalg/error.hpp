#pragma once

#include <stdexcept>
#include <string>

namespace hyperalg {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad arithmetic request: division by zero, inverse of zero, modulus mismatch.
struct ArithmeticError : Error {
    using Error::Error;
};

/// Operand shapes do not satisfy the product / composition size constraints.
struct DimensionError : Error {
    using Error::Error;
};

/// Malformed textual input; carries the position of the first bad token.
struct ParseError : Error {
    std::size_t line;
    std::size_t column;
    ParseError(const std::string& msg, std::size_t l, std::size_t c)
        : Error(msg + " (line " + std::to_string(l) + ", column " + std::to_string(c) + ")"),
          line(l), column(c) {}
};

}  // namespace hyperalg
