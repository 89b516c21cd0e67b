#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace camina {

/* Base of every error thrown by the library. */
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* Malformed input text or an invalid group table. Row/column are 0-based,
   -1 when not applicable. */
class ValidationError : public Error {
public:
    ValidationError(const std::string& what, long row = -1, long col = -1)
        : Error(what), row_(row), col_(col) {}
    long row() const noexcept { return row_; }
    long col() const noexcept { return col_; }

private:
    long row_;
    long col_;
};

/* Operation called outside its stated precondition. */
class PreconditionError : public Error {
public:
    using Error::Error;
};

/* Group is outside the scope of the requested machinery. */
class ScopeError : public Error {
public:
    using Error::Error;
};

/* Dimension or prime mismatch between operands. */
class MismatchError : public Error {
public:
    using Error::Error;
};

/* Internal consistency check failed. */
class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace camina
