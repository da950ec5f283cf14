#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace drazin {

/// Base class for every error this library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed scalar literal or matrix file; carries the offending position.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Dimension mismatch; the message names both shapes.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Division by zero and friends.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/// A witness-consuming operation was given inputs violating its
/// hypotheses; carries the name of the failed condition.
class HypothesisError : public Error {
public:
    explicit HypothesisError(const std::string& condition)
        : Error("hypothesis violated: " + condition), condition_(condition) {}

    const std::string& condition() const { return condition_; }

private:
    std::string condition_;
};

/// Invalid argument outside any grammar (bad enum value, m < -1, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An emitted instance failed its own hypothesis re-verification; this
/// flags a generator bug, instances are never emitted silently.
class GenerationError : public Error {
public:
    using Error::Error;
};

} // namespace drazin
