#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace agrarian {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input. position() is a byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Input that parses but violates a structural requirement.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Division by zero, inverse of a singular matrix, and similar.
class DomainError : public Error {
public:
    using Error::Error;
};

// The requested invariant is not defined for this input (e.g. non-acyclic complex).
class UndefinedInvariant : public Error {
public:
    using Error::Error;
};

// Two independent computations of the same quantity disagreed.
class CrossCheckFailure : public Error {
public:
    using Error::Error;
};

}  // namespace agrarian
