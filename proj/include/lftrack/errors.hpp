#pragma once

#include <stdexcept>
#include <string>

namespace lftrack {

/// Malformed domain input (bad adjacency entry, negative intensity, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Config file violates the JSON schema; `pointer()` locates the offending field.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string pointer, const std::string& msg)
        : std::runtime_error(pointer + ": " + msg), pointer_(std::move(pointer)) {}
    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

/// A Lyapunov solve was requested for a matrix with a non-positive spectrum.
class NotPositiveStableError : public std::runtime_error {
public:
    explicit NotPositiveStableError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The switching-mode gain certificate does not exist (some H + H^T is not PD).
class CertificateUnavailableError : public std::runtime_error {
public:
    explicit CertificateUnavailableError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A simulated state left the finite range at time `time()`.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(double t, const std::string& msg) : std::runtime_error(msg), t_(t) {}
    double time() const noexcept { return t_; }

private:
    double t_;
};

} // namespace lftrack
