#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fraczeta/core.hpp"

namespace fraczeta::primes {

struct PrimeSet {
    std::int64_t limit = 0;
    std::vector<std::int64_t> primes;  // every prime <= limit, ascending
};

inline constexpr std::int64_t kMaxSieveLimit = 100'000'000;

PrimeSet sieve(std::int64_t limit);

/// Gauge 1/delta = (vc / p)^(1/d) from the Mandelbrot relation (1/delta)^d p = vc.
double mandelbrot_gauge(double p, double vc, double d);

struct HausdorffResidual {
    double real;  // Re(S) - 1
    double imag;  // Im(S)
};

/// S = inv_delta (p^{2 i theta'} + p^{-2 i theta'}); returns (Re S - 1, Im S).
HausdorffResidual hausdorff_residual(std::int64_t p, double inv_delta, double theta_prime);

struct ThetaPrimeSolution {
    std::int64_t p;
    std::int64_t k;
    int sign;
    double theta_prime;  // (sign pi/3 + 2 pi k) / (2 ln p)
};

/// Closed-form roots of 2 cos(2 theta' ln p) = 1 for k = 0..branches-1, both
/// signs (the negative k = 0 root is dropped), ascending in theta'. Each root
/// is checked against hausdorff_residual at delta = 1.
std::vector<ThetaPrimeSolution> solve_theta_prime(std::int64_t p, std::int64_t branches);

enum class SignConvention { as_printed, both_minus };

struct VarpiConfig {
    std::int64_t prime_limit = 10'000;
    SignConvention sign_convention = SignConvention::as_printed;
};

/// Truncated product over `primes` of
///   as_printed: 1 - p^{-s+} + p^{-s-}
///   both_minus: 1 - p^{-s+} - p^{-s-}
/// with s+- = 1/2 +- i theta'. Throws OverflowError when a partial product
/// leaves [1e-300, 1e300] in modulus.
Complex varpi(double theta_prime, const PrimeSet& primes, const VarpiConfig& cfg = {});

/// varpi on the grid theta_lo + j step, j = 0..floor((hi - lo)/step).
std::vector<std::pair<double, Complex>> varpi_grid(double theta_lo, double theta_hi, double step,
                                                   const PrimeSet& primes, const VarpiConfig& cfg = {});

struct VarpiMinimum {
    double theta_prime;
    double modulus;
};

/// Strict interior local minima of |varpi| on the grid, ascending.
std::vector<VarpiMinimum> varpi_minima(const std::vector<std::pair<double, Complex>>& grid);

std::vector<VarpiMinimum> varpi_scan(double theta_lo, double theta_hi, double step, const PrimeSet& primes,
                                     const VarpiConfig& cfg = {});

namespace serial {
Complex varpi(double theta_prime, const PrimeSet& primes, const VarpiConfig& cfg = {});
std::vector<std::pair<double, Complex>> varpi_grid(double theta_lo, double theta_hi, double step,
                                                   const PrimeSet& primes, const VarpiConfig& cfg = {});
}  // namespace serial

}  // namespace fraczeta::primes
