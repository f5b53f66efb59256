#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsing {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematically meaningful request the library cannot answer: division by
/// zero, a correction term with no tabulated value, an incompatible field.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input. Carries the offending token and its byte offset in
/// the original string.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::string token, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset) + ": '" + token + "'"),
          token_(std::move(token)),
          offset_(offset) {}

    const std::string& token() const noexcept { return token_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::string token_;
    std::size_t offset_;
};

}  // namespace qsing
