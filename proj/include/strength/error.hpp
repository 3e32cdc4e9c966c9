#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strength {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when not line oriented.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed input that violates a precondition (loop, out of range vertex, bad sizes).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// The request is outside what the graph can support, e.g. strength bounds of an edgeless graph.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A configured cap (vertex count, search nodes, order limit) was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace strength
