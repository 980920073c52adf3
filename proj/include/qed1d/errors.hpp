#pragma once

#include <stdexcept>
#include <string>

namespace qed1d {

/// Input outside the domain where the model or an operation is defined
/// (Z > 2c, negative momentum, spectral frequency, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An integral did not reach its tolerance within budget, or the integrand
/// produced a non-finite value. `what()` names the failing integral.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& integral, const std::string& detail)
        : std::runtime_error(integral + ": " + detail), integral_(integral) {}

    const std::string& integral() const noexcept { return integral_; }

private:
    std::string integral_;
};

/// Two evaluations that must agree analytically disagree numerically.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace qed1d
