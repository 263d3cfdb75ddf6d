#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treewalk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed TWG input. `line()` is 1-based; 0 means "end of input".
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// The graph violates a structural precondition (loop, duplicate edge,
/// disconnected, not a tree, unknown edge, ...).
class GraphError : public Error {
public:
    using Error::Error;
};

class DisconnectedError : public GraphError {
public:
    DisconnectedError() : GraphError("graph is disconnected") {}
};

/// A size guard was exceeded, or an argument is outside the supported range.
class GuardError : public Error {
public:
    using Error::Error;
};

/// Linear algebra failure: singular system, eigensolver non-convergence.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// A proven identity or inequality failed to hold numerically. Always an
/// implementation bug or a method disagreement beyond tolerance.
class ViolationError : public Error {
public:
    using Error::Error;
};

}  // namespace treewalk
