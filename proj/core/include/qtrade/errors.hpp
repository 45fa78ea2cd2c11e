#pragma once

#include <stdexcept>
#include <string>

namespace qtrade {

/// Base class of every recoverable engine error.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// Caller violated a documented precondition or passed an out-of-domain value.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Malformed file or payload content (bad row, bad token, wrong header).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Timestamps out of order or duplicated.
class OrderingError : public Error {
public:
    using Error::Error;
};

/// Missing minutes in the 1-minute timestamp grid.
class GapError : public Error {
public:
    using Error::Error;
};

/// Operation invoked in an invalid sequence (step past terminal, backward
/// without forward, reset of an empty stream).
class StateError : public Error {
public:
    using Error::Error;
};

/// Tensor or layer dimensions do not line up.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Non-finite values where finite arithmetic is required.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Config file holds unknown keys or out-of-domain values.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Transport-level fetch failure that persisted through retries.
class FetchError : public Error {
public:
    using Error::Error;
};

/// Remote endpoint answered with an unexpected schema or incomplete data.
class ProtocolError : public Error {
public:
    using Error::Error;
};

/// Metric has no defined value for the given inputs (e.g. zero-variance Sharpe).
class UndefinedMetricError : public Error {
public:
    using Error::Error;
};

}  // namespace qtrade
