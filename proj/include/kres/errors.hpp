#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kres {

/// Base of every recoverable error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal invariant broken (e.g. an exact division that was not exact).
/// Signals a bug, never bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class NotPrime : public Error {
public:
    using Error::Error;
};

class NotHomogeneous : public Error {
public:
    using Error::Error;
};

class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

class MissingAssignment : public Error {
public:
    using Error::Error;
};

class VerificationFailed : public Error {
public:
    using Error::Error;
};

class RdegUndefined : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class SizeLimitExceeded : public Error {
public:
    using Error::Error;
};

/// Base for failures of a mathematical hypothesis on the given instance
/// (as opposed to malformed input). The CLI maps these to exit code 3.
class HypothesisError : public Error {
public:
    using Error::Error;
};

class StabilizationFailure : public HypothesisError {
public:
    using HypothesisError::HypothesisError;
};

class HigherHomologyNonzero : public HypothesisError {
public:
    HigherHomologyNonzero(const std::string& what, std::vector<std::size_t> ranks)
        : HypothesisError(what), homology_ranks(std::move(ranks)) {}
    std::vector<std::size_t> homology_ranks;
};

class HypothesisNotCertified : public HypothesisError {
public:
    using HypothesisError::HypothesisError;
};

class HypothesisFailed : public HypothesisError {
public:
    using HypothesisError::HypothesisError;
};

class DegenerateLine : public HypothesisError {
public:
    using HypothesisError::HypothesisError;
};

}  // namespace kres
