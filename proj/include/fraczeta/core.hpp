#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace fraczeta {

using Complex = std::complex<double>;

// Error taxonomy. Everything deriving from InputError maps to CLI exit code 2,
// everything deriving from NumericalError to exit code 3.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept = 0;
};

struct InputError : Error {
    using Error::Error;
};

struct NumericalError : Error {
    using Error::Error;
};

struct DomainError : InputError {
    using InputError::InputError;
    const char* kind() const noexcept override { return "DomainError"; }
};

struct PoleError : InputError {
    using InputError::InputError;
    const char* kind() const noexcept override { return "PoleError"; }
};

struct SingularFactorError : InputError {
    using InputError::InputError;
    const char* kind() const noexcept override { return "SingularFactorError"; }
};

struct ConfigError : InputError {
    using InputError::InputError;
    const char* kind() const noexcept override { return "ConfigError"; }
};

struct LimitError : InputError {
    using InputError::InputError;
    const char* kind() const noexcept override { return "LimitError"; }
};

struct ConvergenceError : NumericalError {
    using NumericalError::NumericalError;
    const char* kind() const noexcept override { return "ConvergenceError"; }
};

struct OverflowError : NumericalError {
    using NumericalError::NumericalError;
    const char* kind() const noexcept override { return "OverflowError"; }
};

/// Stopping rule for the series engines.
struct ToleranceConfig {
    double abs_tol = 1e-12;
    std::int64_t max_terms = 100'000'000;

    /// Throws ConfigError unless 1e-15 <= abs_tol and 1 <= max_terms <= 1e8.
    void validate() const;
};

bool is_finite(Complex z);

/// exp(exponent * Log(base)) on the principal branch, arg in (-pi, pi].
/// Positive real bases go through the real log, so r^x for real x matches
/// std::pow(r, x) exactly.
Complex cpow_principal(Complex base, Complex exponent);

/// n^(-s) for a positive integer-like real base; the hot path for every
/// Dirichlet series in the toolkit.
Complex real_base_pow(double base, Complex exponent);

/// Principal log-gamma (Lanczos, g = 7, nine terms) with reflection for
/// Re(z) < 1/4. Throws PoleError at z = 0, -1, -2, ...
Complex log_gamma(Complex z);

using ComplexTerm = std::function<Complex(std::int64_t)>;
using RealTerm = std::function<double(std::int64_t)>;

struct AlternatingSum {
    Complex value;
    std::int64_t terms = 0;     // number of terms consumed by the final pass
    double error_estimate = 0;  // |S_n - S_prev| of the last two passes
};

/// Sum_{n>=1} (-1)^(n+1) term(n) by the Cohen / Rodriguez Villegas / Zagier
/// Chebyshev acceleration. The number of terms grows geometrically until two
/// consecutive passes agree to cfg.abs_tol (plus a rounding floor of a few
/// ulps of the weighted term mass). Divergent constant-like inputs yield
/// their Abel sum. Throws ConvergenceError when the cap is reached first.
AlternatingSum accelerate_alternating(const ComplexTerm& term, const ToleranceConfig& cfg = {});

Complex sum_alternating(const ComplexTerm& term, const ToleranceConfig& cfg = {});
Complex sum_alternating(const RealTerm& term, const ToleranceConfig& cfg = {});

/// Plain partial sum Sum_{n=1}^{count} (-1)^(n+1) term(n). Kept as the
/// verification oracle for the accelerated engine.
Complex sum_alternating_direct(const ComplexTerm& term, std::int64_t count);

/// Largest Chebyshev degree the accelerator will use; (3 + sqrt 8)^n must
/// stay representable.
inline constexpr std::int64_t kMaxAccelerationDegree = 380;

}  // namespace fraczeta
