#pragma once

#include <stdexcept>
#include <string>

namespace topoquality {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class MembershipError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class DegreeOutOfRange : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class BarcodeMismatch : public Error {
public:
    using Error::Error;
};

class IncompatibleReports : public Error {
public:
    using Error::Error;
};

class MissingLabels : public Error {
public:
    using Error::Error;
};

/// Subset index list contains duplicates or indices outside the dataset.
class SubsetViolation : public Error {
public:
    using Error::Error;
};

/// Raised when the image of a domain cycle cannot be written in the codomain
/// persistence basis. Only reachable through a representative or restriction bug.
class SolveInconsistency : public Error {
public:
    using Error::Error;
};

/// A nonzero matrix entry violates the interval-module morphism support pattern.
class SupportViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace topoquality
