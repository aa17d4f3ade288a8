#pragma once

// Independent reference computations for the test suites. Nothing in here
// calls into the library: each routine takes a different numerical route
// than the code it is used to check.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

/// zeta(s) by Euler-Maclaurin summation with N terms and 12 Bernoulli
/// corrections. Accurate to ~1e-13 for |Im s| <= 40 at N = 30.
inline cd zeta_euler_maclaurin(cd s, int N = 30) {
    static constexpr std::array<double, 12> b2k = {
        1.0 / 6,          -1.0 / 30,     1.0 / 42,          -1.0 / 30,       5.0 / 66,        -691.0 / 2730,
        7.0 / 6,          -3617.0 / 510, 43867.0 / 798,     -174611.0 / 330, 854513.0 / 138, -236364091.0 / 2730,
    };
    cd sum = 0.0;
    for (int n = 1; n < N; ++n) sum += std::pow(cd(n, 0), -s);
    const cd nN(N, 0);
    sum += std::pow(nN, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(nN, -s);
    cd rising = s;          // s (s+1) ... (s + 2k - 2)
    double factorial = 2.0; // (2k)!
    for (int k = 1; k <= 12; ++k) {
        sum += b2k[k - 1] / factorial * rising * std::pow(nN, -s - 2.0 * k + 1.0);
        rising *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
        factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    }
    return sum;
}

inline cd eta_euler_maclaurin(cd s) { return (1.0 - std::pow(cd(2, 0), 1.0 - s)) * zeta_euler_maclaurin(s); }

/// Minimiser of f on [a, b] by golden-section search.
inline double golden_section(const std::function<double(double)>& f, double a, double b, double tol = 1e-11) {
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

/// Critical-line zeros in [lo, hi]: dense |eta(1/2 + it)| scan at step 1e-3,
/// each local minimum below 0.05 polished by golden section.
inline std::vector<double> critical_zeros(double lo, double hi) {
    auto mod = [](double t) { return std::abs(eta_euler_maclaurin(cd(0.5, t))); };
    const double step = 1e-3;
    const int n = static_cast<int>((hi - lo) / step);
    std::vector<double> vals(n + 1);
    for (int i = 0; i <= n; ++i) vals[i] = mod(lo + i * step);
    std::vector<double> zeros;
    for (int i = 1; i < n; ++i)
        if (vals[i] < vals[i - 1] && vals[i] < vals[i + 1] && vals[i] < 0.05)
            zeros.push_back(golden_section(mod, lo + (i - 1) * step, lo + (i + 1) * step));
    return zeros;
}

struct Circle {
    cd center;
    double radius;
};

inline Circle circumcircle(cd a, cd b, cd c) {
    const double ax = a.real(), ay = a.imag(), bx = b.real(), by = b.imag(), cx = c.real(), cy = c.imag();
    const double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    const double a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
    const cd centre((a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d,
                    (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d);
    return {centre, std::abs(a - centre)};
}

/// Composite Simpson rule on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

/// Gamma(1/2) = 2 int_0^inf exp(-u^2) du.
inline double gamma_half_by_quadrature() {
    return 2.0 * simpson([](double u) { return std::exp(-u * u); }, 0.0, 12.0, 200000);
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

inline std::vector<std::int64_t> primes_by_trial_division(std::int64_t limit) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 2; n <= limit; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

/// (-1)^k binom(alpha, k) through Gamma function ratios.
inline double gl_weight_by_gamma(double alpha, int k) {
    const double binom = std::tgamma(alpha + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(alpha - k + 1.0));
    return (k % 2 ? -1.0 : 1.0) * binom;
}

/// Sum_{n>=1} (-1)^(n+1) x^n summed directly; its x -> 1- limit is the Abel sum.
inline double abel_alternating_ones(double x) {
    double s = 0.0, p = x;
    for (int n = 1; p > 1e-18; ++n, p *= x) s += (n % 2 ? p : -p);
    return s;
}

/// Tail-corrected sum of n^-s for real s > 1 (Euler-Maclaurin, two terms).
inline double zeta_tail_corrected(double partial, double s, double N) {
    return partial + std::pow(N, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(N, -s) + s / 12.0 * std::pow(N, -s - 1.0);
}

}  // namespace oracle
