#pragma once

#include <stdexcept>
#include <string>

namespace eisen {

// Every failure raised by the library carries the name of the module that
// detected it, so the CLI can surface "lattice: ..." style messages.
class Error : public std::runtime_error {
public:
    Error(std::string module, const std::string& what)
        : std::runtime_error(module + ": " + what), module_(std::move(module)) {}

    const std::string& module() const noexcept { return module_; }

private:
    std::string module_;
};

/// A caller broke a documented precondition (bad input, wrong shape, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The request is mathematically meaningful but outside what is implemented.
class UnsupportedCaseError : public Error {
public:
    using Error::Error;
};

/// A checked invariant failed; data or computation is inconsistent.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// Data needed for an evaluation (e.g. a Fourier coefficient) is not available.
class MissingCoefficientError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

}  // namespace eisen
