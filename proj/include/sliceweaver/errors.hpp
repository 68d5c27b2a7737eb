#pragma once

#include <stdexcept>

namespace sliceweaver {

/// Bad argument to an operation (out-of-range index, empty grid, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Brute-force enumeration budget exceeded.
class CapacityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Sampling model is not realizable as specified.
class ModelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Overflow or non-finite intermediate during evaluation.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Config text rejected before any semantic checks run.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parsed config violates a field invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Filesystem failure while emitting output.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sliceweaver
