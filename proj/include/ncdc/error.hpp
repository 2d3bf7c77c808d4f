#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncdc {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Evaluation of a rational function at a root of its denominator.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Syntax error in scalar or element text; `position` is a 0-based offset.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

/// Operation applied to an input outside its domain (e.g. quadratic-only checks on cubic relations).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two independently coded routes disagreed. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ncdc
