#include "fraczeta/primes.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>

#include "fraczeta/parallel.hpp"

namespace fraczeta::primes {

PrimeSet sieve(std::int64_t limit) {
    if (limit < 1) throw DomainError("sieve: limit must be >= 1");
    if (limit > kMaxSieveLimit) throw LimitError("sieve: limit must be <= 1e8");
    PrimeSet set;
    set.limit = limit;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        set.primes.push_back(i);
        for (std::int64_t m = i * i; m <= limit; m += i) composite[static_cast<std::size_t>(m)] = true;
    }
    return set;
}

double mandelbrot_gauge(double p, double vc, double d) {
    if (!(p > 0.0) || !(vc > 0.0)) throw DomainError("mandelbrot_gauge: p and vc must be > 0");
    if (!(d >= 1.0)) throw DomainError("mandelbrot_gauge: d must be ≥ 1");
    return std::pow(vc / p, 1.0 / d);
}

HausdorffResidual hausdorff_residual(std::int64_t p, double inv_delta, double theta_prime) {
    if (p < 2) throw DomainError("hausdorff_residual: p must be >= 2");
    const double base = static_cast<double>(p);
    const Complex up = real_base_pow(base, Complex(0.0, 2.0 * theta_prime));
    const Complex down = real_base_pow(base, Complex(0.0, -2.0 * theta_prime));
    const Complex s = inv_delta * (up + down);
    return {s.real() - 1.0, s.imag()};
}

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

}  // namespace

std::vector<ThetaPrimeSolution> solve_theta_prime(std::int64_t p, std::int64_t branches) {
    if (!is_prime(p)) throw DomainError("solve_theta_prime: p must be prime");
    if (branches < 1) throw DomainError("solve_theta_prime: branches must be >= 1");

    const double pi = std::numbers::pi;
    const double two_log_p = 2.0 * std::log(static_cast<double>(p));
    std::vector<ThetaPrimeSolution> out;
    for (std::int64_t k = 0; k < branches; ++k) {
        for (int sign : {+1, -1}) {
            if (k == 0 && sign < 0) continue;
            const double theta = (sign * pi / 3.0 + 2.0 * pi * static_cast<double>(k)) / two_log_p;
            const HausdorffResidual r = hausdorff_residual(p, 1.0, theta);
            if (!(std::abs(r.real) < 1e-12))
                throw ConvergenceError("solve_theta_prime: closed-form root misses the residual tolerance");
            out.push_back({p, k, sign, theta});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ThetaPrimeSolution& a, const ThetaPrimeSolution& b) { return a.theta_prime < b.theta_prime; });
    return out;
}

namespace {

Complex varpi_factor(std::int64_t prime, double theta_prime, SignConvention convention) {
    const double p = static_cast<double>(prime);
    const Complex plus = real_base_pow(p, Complex(-0.5, -theta_prime));   // p^{-s+}
    const Complex minus = real_base_pow(p, Complex(-0.5, theta_prime));   // p^{-s-}
    // Grouped so that equal powers cancel exactly at theta' = 0.
    if (convention == SignConvention::as_printed) return 1.0 + (minus - plus);
    return 1.0 - (plus + minus);
}

void check_modulus(Complex partial) {
    const double m = std::abs(partial);
    if (!(m <= 1e300 && m >= 1e-300)) throw OverflowError("varpi: partial product modulus left [1e-300, 1e300]");
}

void check_inputs(const PrimeSet& primes, const VarpiConfig& cfg) {
    if (cfg.prime_limit < 2) throw DomainError("varpi: prime_limit must be >= 2");
    if (primes.primes.empty()) throw DomainError("varpi: prime set is empty");
}

std::int64_t grid_points(double lo, double hi, double step) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("varpi grid: bounds must be finite");
    if (!(step > 0.0)) throw DomainError("varpi grid: step must be > 0");
    if (lo > hi) throw DomainError("varpi grid: theta_lo must not exceed theta_hi");
    return static_cast<std::int64_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

}  // namespace

Complex varpi(double theta_prime, const PrimeSet& primes, const VarpiConfig& cfg) {
    check_inputs(primes, cfg);
    const auto& ps = primes.primes;
    return parallel::chunked_product(
        static_cast<std::int64_t>(ps.size()),
        [&](std::int64_t i) { return varpi_factor(ps[static_cast<std::size_t>(i)], theta_prime, cfg.sign_convention); },
        check_modulus);
}

std::vector<std::pair<double, Complex>> varpi_grid(double theta_lo, double theta_hi, double step,
                                                   const PrimeSet& primes, const VarpiConfig& cfg) {
    check_inputs(primes, cfg);
    const std::int64_t count = grid_points(theta_lo, theta_hi, step);
    std::vector<std::pair<double, Complex>> out(static_cast<std::size_t>(count));
    std::vector<std::exception_ptr> errors(out.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t j = 0; j < count; ++j) {
        const auto i = static_cast<std::size_t>(j);
        const double theta = theta_lo + static_cast<double>(j) * step;
        try {
            out[i] = {theta, varpi(theta, primes, cfg)};
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::vector<VarpiMinimum> varpi_minima(const std::vector<std::pair<double, Complex>>& grid) {
    std::vector<VarpiMinimum> out;
    for (std::size_t j = 1; j + 1 < grid.size(); ++j) {
        const double m = std::abs(grid[j].second);
        if (m < std::abs(grid[j - 1].second) && m < std::abs(grid[j + 1].second)) out.push_back({grid[j].first, m});
    }
    return out;
}

std::vector<VarpiMinimum> varpi_scan(double theta_lo, double theta_hi, double step, const PrimeSet& primes,
                                     const VarpiConfig& cfg) {
    return varpi_minima(varpi_grid(theta_lo, theta_hi, step, primes, cfg));
}

namespace serial {

Complex varpi(double theta_prime, const PrimeSet& primes, const VarpiConfig& cfg) {
    check_inputs(primes, cfg);
    Complex product = 1.0;
    for (std::int64_t p : primes.primes) {
        product *= varpi_factor(p, theta_prime, cfg.sign_convention);
        check_modulus(product);
    }
    return product;
}

std::vector<std::pair<double, Complex>> varpi_grid(double theta_lo, double theta_hi, double step,
                                                   const PrimeSet& primes, const VarpiConfig& cfg) {
    const std::int64_t count = grid_points(theta_lo, theta_hi, step);
    std::vector<std::pair<double, Complex>> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t j = 0; j < count; ++j) {
        const double theta = theta_lo + static_cast<double>(j) * step;
        out.emplace_back(theta, serial::varpi(theta, primes, cfg));
    }
    return out;
}

}  // namespace serial

}  // namespace fraczeta::primes
