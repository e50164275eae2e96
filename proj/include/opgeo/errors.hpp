#pragma once

#include <stdexcept>
#include <string>

namespace opgeo {

/// Base class for every error raised by the kernel.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Points, pairs or vectors taken from two different frames of reference.
class FrameMismatch : public Error {
public:
    explicit FrameMismatch(const std::string& msg) : Error(msg) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class UnknownBody : public Error {
public:
    explicit UnknownBody(const std::string& msg) : Error(msg) {}
};

/// Invalid input to a construction (coincident anchors, zero vector, ...).
class DegenerateInput : public Error {
public:
    explicit DegenerateInput(const std::string& msg) : Error(msg) {}
};

/// Arithmetic outside the domain (negative sqrt operand, division by zero,
/// negative distance scale).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// A decision needed more precision than the configuration allows.
class PrecisionExhausted : public Error {
public:
    explicit PrecisionExhausted(const std::string& msg) : Error(msg) {}
};

/// Construction-script problem, with source location.
class ScriptError : public Error {
public:
    ScriptError(int line, int column, const std::string& msg)
        : Error("line " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line(line),
          column(column),
          detail(msg) {}

    int line;
    int column;
    std::string detail;
};

}  // namespace opgeo
