#include "fraczeta/core.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace fraczeta {

void ToleranceConfig::validate() const {
    if (!(abs_tol >= 1e-15) || !std::isfinite(abs_tol))
        throw ConfigError("abs_tol must be >= 1e-15");
    if (max_terms < 1 || max_terms > 100'000'000)
        throw ConfigError("max_terms must lie in [1, 1e8]");
}

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex real_base_pow(double base, Complex exponent) {
    if (exponent.imag() == 0.0) return {std::pow(base, exponent.real()), 0.0};
    const double lb = std::log(base);
    const double mag = std::pow(base, exponent.real());
    const double ang = exponent.imag() * lb;
    return {mag * std::cos(ang), mag * std::sin(ang)};
}

Complex cpow_principal(Complex base, Complex exponent) {
    if (base == Complex(0.0, 0.0)) {
        if (exponent.real() > 0.0) return {0.0, 0.0};
        throw DomainError("cpow_principal: zero base requires Re(exponent) > 0");
    }
    if (exponent == Complex(0.0, 0.0)) return {1.0, 0.0};
    if (exponent == Complex(1.0, 0.0)) return base;
    if (base.imag() == 0.0 && base.real() > 0.0) return real_base_pow(base.real(), exponent);

    Complex lg = std::log(base);
    // std::log honours the sign of a zero imaginary part; pin the cut to +pi.
    if (lg.imag() == -std::numbers::pi) lg.imag(std::numbers::pi);
    return std::exp(exponent * lg);
}

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

Complex log_gamma_lanczos(Complex z) {
    z -= 1.0;
    Complex x = kLanczosCoef[0];
    for (std::size_t i = 1; i < kLanczosCoef.size(); ++i) x += kLanczosCoef[i] / (z + static_cast<double>(i));
    const Complex t = z + kLanczosG + 0.5;
    const double half_log_two_pi = 0.91893853320467274178;
    return half_log_two_pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

Complex log_gamma(Complex z) {
    if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at non-positive integer");
    if (z.real() < 0.25) {
        const double pi = std::numbers::pi;
        return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma_lanczos(1.0 - z);
    }
    return log_gamma_lanczos(z);
}

namespace {

struct Pass {
    Complex value;
    double mass;  // Sum |c_k a_k| / d, the scale of accumulated rounding
};

// One Chebyshev pass of degree n over the cached terms a_k = term(k + 1).
Pass crvz_pass(const std::vector<Complex>& a, std::int64_t n) {
    double d = std::pow(3.0 + std::sqrt(8.0), static_cast<double>(n));
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0;
    double c = -d;
    Complex s = 0.0;
    double mass = 0.0;
    for (std::int64_t k = 0; k < n; ++k) {
        c = b - c;
        s += c * a[static_cast<std::size_t>(k)];
        mass += std::abs(c) * std::abs(a[static_cast<std::size_t>(k)]);
        const double kd = static_cast<double>(k);
        const double nd = static_cast<double>(n);
        b = (kd + nd) * (kd - nd) * b / ((kd + 0.5) * (kd + 1.0));
    }
    return {s / d, mass / d};
}

}  // namespace

AlternatingSum accelerate_alternating(const ComplexTerm& term, const ToleranceConfig& cfg) {
    cfg.validate();
    const std::int64_t cap = std::min<std::int64_t>(cfg.max_terms, kMaxAccelerationDegree);

    std::vector<Complex> a;
    auto extend = [&](std::int64_t n) {
        while (static_cast<std::int64_t>(a.size()) < n) {
            const Complex v = term(static_cast<std::int64_t>(a.size()) + 1);
            if (!is_finite(v)) throw DomainError("sum_alternating: term is not finite");
            a.push_back(v);
        }
    };

    std::int64_t n = std::min<std::int64_t>(8, cap);
    extend(n);
    Pass prev = crvz_pass(a, n);
    double estimate = std::numeric_limits<double>::infinity();

    while (n < cap) {
        const std::int64_t next = std::min<std::int64_t>(cap, n + (n + 1) / 2);
        extend(next);
        const Pass cur = crvz_pass(a, next);
        if (!is_finite(cur.value) || !std::isfinite(cur.mass))
            throw ConvergenceError("sum_alternating: accelerated partial sum overflowed");
        estimate = std::abs(cur.value - prev.value);
        const double floor = 32.0 * std::numeric_limits<double>::epsilon() * std::max(cur.mass, prev.mass);
        n = next;
        prev = cur;
        if (estimate <= std::max(cfg.abs_tol, floor)) return {cur.value, n, estimate};
    }
    throw ConvergenceError("sum_alternating: error estimate " + std::to_string(estimate) +
                           " exceeds abs_tol at " + std::to_string(n) + " terms");
}

Complex sum_alternating(const ComplexTerm& term, const ToleranceConfig& cfg) {
    return accelerate_alternating(term, cfg).value;
}

Complex sum_alternating(const RealTerm& term, const ToleranceConfig& cfg) {
    return accelerate_alternating([&](std::int64_t n) { return Complex(term(n), 0.0); }, cfg).value;
}

Complex sum_alternating_direct(const ComplexTerm& term, std::int64_t count) {
    Complex s = 0.0;
    for (std::int64_t n = 1; n <= count; ++n) {
        const Complex v = term(n);
        if (n % 2 == 1)
            s += v;
        else
            s -= v;
    }
    return s;
}

}  // namespace fraczeta
