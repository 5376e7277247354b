#pragma once

#include <stdexcept>
#include <string>

namespace cgmatch {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input file. Carries "file:line:" context when known.
class ParseError : public Error {
public:
    using Error::Error;
    ParseError(const std::string& file, size_t line, const std::string& msg)
        : Error(file + ":" + std::to_string(line) + ": " + msg) {}
};

// Structurally invalid data (invariant violation after parsing).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Lookup of an id that does not exist (or has the wrong kind).
class NotFoundError : public Error {
public:
    using Error::Error;
};

// Caller passed an unusable argument or configuration value.
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Tensor/graph dimension mismatch.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Operation called in the wrong order (e.g. backward without forward).
class StateError : public Error {
public:
    using Error::Error;
};

// Non-finite values encountered during numeric computation.
class NumericError : public Error {
public:
    using Error::Error;
};

// A requested dataset split cannot be constructed.
class PartitionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

} // namespace cgmatch
