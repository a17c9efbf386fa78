#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rdm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// algebra-core
class ClosureTooLarge : public Error {
public:
    using Error::Error;
};
class NotAPermutation : public Error {
public:
    using Error::Error;
};
class NotAHomomorphism : public Error {
public:
    using Error::Error;
};
class DoesNotGenerate : public Error {
public:
    using Error::Error;
};

// intlinalg
class NotSquare : public Error {
public:
    using Error::Error;
};
class BadIndex : public Error {
public:
    using Error::Error;
};
class EigenvalueOnBoundary : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent user input.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Input is syntactically not a problem document.
class SchemaError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Some R(phi^n) is infinite: det(I - M^n) = 0.
class InfiniteReidemeister : public ValidationError {
public:
    InfiniteReidemeister(const std::string& what, std::uint64_t iterate)
        : ValidationError(what), iterate_(iterate) {}
    /// The offending iterate n (1 for the map itself).
    std::uint64_t iterate() const noexcept { return iterate_; }

private:
    std::uint64_t iterate_;
};

// zeta
class ZeroDeterminant : public Error {
public:
    using Error::Error;
};
class PoleAtEvaluation : public Error {
public:
    using Error::Error;
};
class NonInvertible : public Error {
public:
    using Error::Error;
};

/// Two independent routes to the same quantity disagree.
class OracleDisagreement : public Error {
public:
    using Error::Error;
};

/// An exhaustive oracle would exceed its configured size budget.
class OracleTooLarge : public Error {
public:
    using Error::Error;
};

}  // namespace rdm
