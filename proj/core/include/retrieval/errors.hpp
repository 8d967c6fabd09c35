#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace retrieval {

/// Input that cannot be parsed or violates a structural precondition.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotPrimeError : InputError {
    using InputError::InputError;
};

struct UnsupportedFieldError : InputError {
    using InputError::InputError;
};

struct DivideByZeroError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DimensionMismatchError : InputError {
    using InputError::InputError;
};

struct RankDeficientError : InputError {
    using InputError::InputError;
};

struct BadPartitionError : InputError {
    using InputError::InputError;
};

struct BadAllocationError : InputError {
    using InputError::InputError;
};

struct FieldTooSmallError : InputError {
    using InputError::InputError;
};

struct MismatchError : InputError {
    using InputError::InputError;
};

struct BadTargetError : InputError {
    using InputError::InputError;
};

struct ParseError : InputError {
    using InputError::InputError;
};

/// Problem size exceeds the enumeration cap (recoverable with an explicit override).
struct TooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A Monte Carlo trial exceeded the hard draw cap.
struct TrialOverflowError : std::runtime_error {
    TrialOverflowError(std::uint64_t trial_index, const std::string& what)
        : std::runtime_error(what), trial(trial_index) {}
    std::uint64_t trial;
};

}  // namespace retrieval
