#ifndef FPURE_ERROR_HPP
#define FPURE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpure {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial text or problem file. Positions are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Operands live in different rings.
class RingMismatch : public Error {
public:
    RingMismatch() : Error("operands belong to different rings") {}
};

/// A precondition on the mathematical input does not hold.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An exponent or Frobenius power left the representable range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// A configured resource cap (q or matrix width) was exceeded.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// The forms do not form a regular sequence.
class NotRegularSequence : public Error {
public:
    using Error::Error;
};

}  // namespace fpure

#endif
