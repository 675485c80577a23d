#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace infrank {

/// Base of every error raised for bad input data (as opposed to misuse of the CLI).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. Carries the 1-based line number.
class ParseError : public DataError {
public:
    ParseError(const std::string& message, std::size_t line)
        : DataError("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed input that violates a domain constraint.
class ValidationError : public DataError {
public:
    using DataError::DataError;
};

}  // namespace infrank
