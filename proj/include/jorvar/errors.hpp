#pragma once

#include <stdexcept>
#include <string>

namespace jorvar {

// User-facing errors: bad input, failed preconditions.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};
struct SingularMatrix : Error {
    using Error::Error;
};
struct NotSymmetric : Error {
    using Error::Error;
};
struct PoleAtZero : Error {
    using Error::Error;
};
struct NotJordan : Error {
    using Error::Error;
};
struct NotIdempotent : Error {
    using Error::Error;
};
struct EigenspaceGap : Error {
    using Error::Error;
};
struct UnknownId : Error {
    using Error::Error;
};
struct AllZero : Error {
    using Error::Error;
};
struct IdenticallySingular : Error {
    using Error::Error;
};
struct AuditFailure : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

// Conditions that cannot occur for valid input; reaching one means a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct NotJordanAtLimit : InternalError {
    using InternalError::InternalError;
};

} // namespace jorvar
