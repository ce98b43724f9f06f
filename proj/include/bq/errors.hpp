#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bq {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands carry different basis tags where a single basis is required.
struct BasisMismatch : Error {
    using Error::Error;
};

/// Change-of-basis matrix with |det| at or below the invertibility threshold.
struct SingularMatrix : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

/// A generator expression mentions a variable its construction forbids.
struct VariableViolation : Error {
    using Error::Error;
};

/// Degenerate weight-family parameters: alpha1*alpha2 == alpha3*alpha4.
struct DegenerateParams : Error {
    using Error::Error;
};

/// Expression text rejected; position is a 0-based byte offset into the input.
struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}

    std::size_t position;
};

/// Variable family (z* vs t*) does not match the requested coordinate system.
struct WrongCoordinateSystem : SyntaxError {
    using SyntaxError::SyntaxError;
};

/// Job document violates the schema; path names the offending field.
struct SchemaError : Error {
    SchemaError(const std::string& what, std::string field_path)
        : Error(field_path + ": " + what), path(std::move(field_path)) {}

    std::string path;
};

}  // namespace bq
