#include "fraczeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>

#include "fraczeta/parallel.hpp"
#include "fraczeta/primes.hpp"
#include "fraczeta/transfer.hpp"

namespace fraczeta::zeta {

SPoint::SPoint(double sigma_, double theta_, int sign_) : sigma(sigma_), theta(theta_), sign(sign_) {
    if (!(sigma > 0.0 && sigma <= 1.0)) throw DomainError("sigma must lie in (0, 1]");
    if (!std::isfinite(theta)) throw DomainError("theta must be finite");
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
}

Complex ChartParams::s1() const {
    transfer::conjugate_exponent(d);
    return {1.0 / d, theta};
}

Complex ChartParams::s2() const { return {transfer::conjugate_order(d), theta}; }

int mobius(std::int64_t n) {
    if (n < 1) throw DomainError("mobius: n must be >= 1");
    if (n > 1'000'000'000'000LL) throw LimitError("mobius: n must be <= 1e12");
    int sign = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

std::vector<std::int8_t> mobius_table(std::int64_t limit) {
    if (limit < 1) throw DomainError("mobius_table: limit must be >= 1");
    if (limit > 100'000'000) throw LimitError("mobius_table: limit must be <= 1e8");
    const auto size = static_cast<std::size_t>(limit) + 1;
    std::vector<std::int8_t> mu(size, 0);
    std::vector<bool> composite(size, false);
    std::vector<std::int64_t> primes;
    mu[1] = 1;
    for (std::int64_t i = 2; i <= limit; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        if (!composite[ui]) {
            primes.push_back(i);
            mu[ui] = -1;
        }
        for (std::int64_t p : primes) {
            const std::int64_t m = i * p;
            if (m > limit) break;
            const auto um = static_cast<std::size_t>(m);
            composite[um] = true;
            if (i % p == 0) {
                mu[um] = 0;
                break;
            }
            mu[um] = static_cast<std::int8_t>(-mu[ui]);
        }
    }
    return mu;
}

AlternatingSum eta_sum(Complex s, const ToleranceConfig& cfg) {
    if (!(s.real() > 0.0)) throw DomainError("eta: Re(s) must be > 0");
    return accelerate_alternating([s](std::int64_t n) { return real_base_pow(static_cast<double>(n), -s); }, cfg);
}

Complex eta(Complex s, const ToleranceConfig& cfg) { return eta_sum(s, cfg).value; }

Complex zeta_from_eta(Complex s, const ToleranceConfig& cfg) {
    if (s == Complex(1.0, 0.0)) throw PoleError("zeta: pole at s = 1");
    const Complex factor = 1.0 - real_base_pow(2.0, 1.0 - s);
    if (std::abs(factor) <= 1e-8) throw SingularFactorError("zeta: |1 - 2^(1-s)| <= 1e-8");
    return eta(s, cfg) / factor;
}

namespace {

void require_absolute_region(Complex s, const char* what) {
    if (!(s.real() > 1.0)) throw DomainError(std::string(what) + ": Re(s) must be > 1");
}

void require_terms(std::int64_t terms) {
    if (terms < 1) throw DomainError("terms must be >= 1");
    if (terms > 100'000'000) throw LimitError("terms must be <= 1e8");
}

}  // namespace

Complex zeta_direct(Complex s, std::int64_t terms) {
    require_absolute_region(s, "zeta_direct");
    require_terms(terms);
    return parallel::chunked_sum(1, terms, [s](std::int64_t n) { return real_base_pow(static_cast<double>(n), -s); });
}

Complex mobius_inverse_zeta(Complex s, std::int64_t terms) {
    require_absolute_region(s, "mobius_inverse_zeta");
    require_terms(terms);
    const std::vector<std::int8_t> mu = mobius_table(terms);
    return parallel::chunked_sum(1, terms, [&](std::int64_t n) -> Complex {
        const int m = mu[static_cast<std::size_t>(n)];
        if (m == 0) return {0.0, 0.0};
        const Complex v = real_base_pow(static_cast<double>(n), -s);
        return m > 0 ? v : -v;
    });
}

namespace serial {

Complex zeta_direct(Complex s, std::int64_t terms) {
    require_absolute_region(s, "zeta_direct");
    require_terms(terms);
    Complex sum = 0.0;
    for (std::int64_t n = 1; n <= terms; ++n) sum += real_base_pow(static_cast<double>(n), -s);
    return sum;
}

Complex mobius_inverse_zeta(Complex s, std::int64_t terms) {
    require_absolute_region(s, "mobius_inverse_zeta");
    require_terms(terms);
    Complex sum = 0.0;
    for (std::int64_t n = 1; n <= terms; ++n) {
        const int m = mobius(n);
        if (m != 0) sum += static_cast<double>(m) * real_base_pow(static_cast<double>(n), -s);
    }
    return sum;
}

}  // namespace serial

Complex euler_product(Complex s, const primes::PrimeSet& primes) {
    require_absolute_region(s, "euler_product");
    if (primes.primes.empty()) throw DomainError("euler_product: prime set is empty");
    const auto& ps = primes.primes;
    return parallel::chunked_product(static_cast<std::int64_t>(ps.size()), [&](std::int64_t i) {
        const double p = static_cast<double>(ps[static_cast<std::size_t>(i)]);
        return 1.0 / (1.0 - real_base_pow(p, -s));
    });
}

Complex s_point(double sigma, double theta, int sign) { return SPoint(sigma, theta, sign).as_complex(); }

std::vector<ChartPartials> chart1_series(const ChartParams& params, std::int64_t terms) {
    if (terms < 1) throw DomainError("chart1: terms must be >= 1");
    if (terms > 10'000'000) throw LimitError("chart1: terms must be <= 1e7");
    const Complex s1 = params.s1();
    const Complex s2 = params.s2();
    std::vector<ChartPartials> out;
    out.reserve(static_cast<std::size_t>(terms));
    ChartPartials acc{};
    for (std::int64_t n = 1; n <= terms; ++n) {
        const double x = static_cast<double>(n);
        acc.inv_xi_h += real_base_pow(x, -s1);
        acc.lambda_h += real_base_pow(x, s1);
        acc.inv_xi_v += real_base_pow(x, -s2);
        acc.lambda_v += real_base_pow(x, s2);
        acc.terms = n;
        out.push_back(acc);
    }
    return out;
}

ChartPartials chart1_partials(const ChartParams& params, std::int64_t terms) {
    return chart1_series(params, terms).back();
}

double assertion_one_residual(double d, double theta, const ToleranceConfig& cfg) {
    const ChartParams params{d, theta};
    return std::abs(eta(params.s1(), cfg) - eta(params.s2(), cfg));
}

double siegel_theta(double t) {
    return log_gamma(Complex(0.25, 0.5 * t)).imag() - 0.5 * t * std::log(std::numbers::pi);
}

double hardy_rotation(double t, const ToleranceConfig& cfg) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("hardy_rotation: t must be >= 0");
    const Complex z = zeta_from_eta(Complex(0.5, t), cfg);
    const double th = siegel_theta(t);
    const Complex rotated = Complex(std::cos(th), std::sin(th)) * z;
    if (std::abs(rotated.imag()) >= 1e-6 * (1.0 + std::abs(rotated.real())))
        throw ConvergenceError("hardy_rotation: rotated zeta is not real at t = " + std::to_string(t));
    return rotated.real();
}

namespace {

constexpr double kBracketWidth = 1e-8;

template <typename F>
void run_indexed(std::int64_t count, bool parallel, F&& body) {
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            body(i);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::vector<ZeroBracket> scan_zeros(double t_lo, double t_hi, double grid_step, const ToleranceConfig& cfg,
                                    bool parallel) {
    if (!(t_lo >= 0.0) || !(t_lo < t_hi) || !std::isfinite(t_hi))
        throw DomainError("find_zeros: need 0 <= t_lo < t_hi");
    if (!(grid_step > 0.0 && grid_step <= 0.25)) throw DomainError("find_zeros: grid_step must lie in (0, 0.25]");
    cfg.validate();

    const auto j_lo = static_cast<std::int64_t>(std::ceil(t_lo / grid_step - 1e-9));
    const auto j_hi = static_cast<std::int64_t>(std::floor(t_hi / grid_step + 1e-9));
    if (j_hi <= j_lo) return {};

    const std::int64_t points = j_hi - j_lo + 1;
    std::vector<double> z(static_cast<std::size_t>(points));
    run_indexed(points, parallel, [&](std::int64_t i) {
        z[static_cast<std::size_t>(i)] = hardy_rotation(static_cast<double>(j_lo + i) * grid_step, cfg);
    });

    std::vector<std::int64_t> changes;
    for (std::int64_t i = 0; i + 1 < points; ++i)
        if (std::signbit(z[static_cast<std::size_t>(i)]) != std::signbit(z[static_cast<std::size_t>(i + 1)]))
            changes.push_back(i);

    std::vector<ZeroBracket> out(changes.size());
    run_indexed(static_cast<std::int64_t>(changes.size()), parallel, [&](std::int64_t c) {
        const std::int64_t i = changes[static_cast<std::size_t>(c)];
        const double lo = static_cast<double>(j_lo + i) * grid_step;
        const double hi = static_cast<double>(j_lo + i + 1) * grid_step;
        double a = lo, b = hi;
        const bool neg_a = std::signbit(z[static_cast<std::size_t>(i)]);
        while (b - a >= kBracketWidth) {
            const double m = 0.5 * (a + b);
            if (std::signbit(hardy_rotation(m, cfg)) == neg_a)
                a = m;
            else
                b = m;
        }
        const double t = 0.5 * (a + b);
        out[static_cast<std::size_t>(c)] = {lo, hi, t, std::abs(zeta_from_eta(Complex(0.5, t), cfg))};
    });
    std::sort(out.begin(), out.end(), [](const ZeroBracket& x, const ZeroBracket& y) { return x.t_refined < y.t_refined; });
    return out;
}

}  // namespace

std::vector<ZeroBracket> find_zeros(double t_lo, double t_hi, double grid_step, const ToleranceConfig& cfg) {
    return scan_zeros(t_lo, t_hi, grid_step, cfg, true);
}

namespace serial {

std::vector<ZeroBracket> find_zeros(double t_lo, double t_hi, double grid_step, const ToleranceConfig& cfg) {
    return scan_zeros(t_lo, t_hi, grid_step, cfg, false);
}

}  // namespace serial

}  // namespace fraczeta::zeta
