#pragma once

#include <stdexcept>
#include <string>

namespace rigidity {

/// Base class for every error raised by the library. `kind()` is a short
/// machine-readable tag used by the CLI error object.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error("invalid-argument", what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error("dimension-mismatch", what) {}
};

class SymmetryViolation : public Error {
public:
    explicit SymmetryViolation(const std::string& what) : Error("symmetry-violation", what) {}
};

class UnsupportedDimension : public Error {
public:
    explicit UnsupportedDimension(const std::string& what) : Error("unsupported-dimension", what) {}
};

class DegenerateDirection : public Error {
public:
    explicit DegenerateDirection(const std::string& what) : Error("degenerate-direction", what) {}
};

class NonMinimalSpec : public Error {
public:
    NonMinimalSpec(const std::string& what, double residual)
        : Error("non-minimal", what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// Numerical failures. The CLI maps these to exit code 3.
class NumericalError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public NumericalError {
public:
    ConvergenceError(const std::string& what, double residual)
        : NumericalError("convergence", what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

class CertificationIncomplete : public NumericalError {
public:
    explicit CertificationIncomplete(const std::string& what)
        : NumericalError("certification-incomplete", what) {}
};

class IntegrationBlowup : public NumericalError {
public:
    IntegrationBlowup(const std::string& what, double last_valid_z)
        : NumericalError("integration-blowup", what), last_valid_z_(last_valid_z) {}
    double last_valid_z() const noexcept { return last_valid_z_; }

private:
    double last_valid_z_;
};

}  // namespace rigidity
