#pragma once

#include <stdexcept>
#include <string>

namespace cochar {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside an operation's mathematical domain
/// (zero denominator, invalid partition, asymmetric input, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The caller violated an interface contract (wrong arity, mismatched
/// variable lists, malformed input strings).
class UsageError : public Error {
public:
    using Error::Error;
};

/// A supplied or required denominator factorization does not hold.
class FactorizationError : public Error {
public:
    using Error::Error;
};

/// A coefficient beyond the truncation degree of a series was requested.
/// Never reported as a silent zero.
class OutOfTruncationError : public Error {
public:
    using Error::Error;
};

/// A rational function cannot be expanded at the origin.
class NotExpandableError : public Error {
public:
    using Error::Error;
};

/// An identity that must hold for well-formed inputs failed; indicates a
/// malformed multiplicity series or a transcription bug in fixed constants.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// The input satisfies basic validity but falls outside the range where a
/// closed formula applies.
class OutOfScopeError : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace cochar
