#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace antirec {

// Base of every error thrown by the library. Callers that only want to
// distinguish "bad input" from "mathematical failure" can catch this.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Form of dimension k < 2.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Value outside the admissible domain (nonpositive coefficient, bad base, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class EmptyRangeError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

// 64-bit overflow or a configured size cap was exceeded.
class RangeError : public Error {
public:
    using Error::Error;
};

// Operands disagree on base or reading order.
class IncompatibleError : public Error {
public:
    using Error::Error;
};

class InsufficientDataError : public Error {
public:
    using Error::Error;
};

class NoFixedPointError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class RetrievalError : public Error {
public:
    using Error::Error;
};

}  // namespace antirec
