#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fraczeta/core.hpp"
#include "oracles.hpp"

using namespace fraczeta;

TEST_CASE("cpow_principal examples") {
    const Complex r = cpow_principal({0.0, 1.0}, {0.5, 0.0});
    CHECK(r.real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(r.imag() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));

    const Complex one = cpow_principal({1.0, 0.0}, {0.3, 7.0});
    CHECK(one.real() == 1.0);
    CHECK(one.imag() == 0.0);

    CHECK(std::abs(cpow_principal({2.0, 0.0}, {0.0, 14.1347})) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("cpow_principal branch and domain") {
    CHECK_THROWS_AS(cpow_principal({0.0, 0.0}, {0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(cpow_principal({0.0, 0.0}, {-1.0, 2.0}), DomainError);
    CHECK(cpow_principal({0.0, 0.0}, {0.5, 3.0}) == Complex(0.0, 0.0));

    // Negative real axis with a negative zero imaginary part still sits on +pi.
    const Complex a = cpow_principal({-1.0, -0.0}, {0.5, 0.0});
    CHECK(a.imag() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(a.real()) < 1e-15);
}

TEST_CASE("cpow_principal identities on random bases") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::uniform_real_distribution<double> pos(1e-3, 50.0);
    for (int i = 0; i < 200; ++i) {
        const Complex b(u(rng), u(rng));
        CHECK(cpow_principal(b, {1.0, 0.0}) == b);
        CHECK(cpow_principal(b, {0.0, 0.0}) == Complex(1.0, 0.0));

        const double r = pos(rng), x = u(rng);
        const double expected = std::pow(r, x);
        CHECK(std::abs(cpow_principal({r, 0.0}, {x, 0.0}).real() - expected) <= 1e-14 * expected);
    }
}

TEST_CASE("log_gamma examples") {
    CHECK(std::abs(log_gamma({1.0, 0.0})) < 1e-14);
    CHECK(log_gamma({5.0, 0.0}).real() == doctest::Approx(std::log(24.0)).epsilon(1e-13));

    // Gamma(1/2)^2 = pi via quadrature, not via a closed form.
    const double lg_half = std::log(oracle::gamma_half_by_quadrature());
    CHECK(lg_half == doctest::Approx(0.57236494292470008).epsilon(1e-12));
    CHECK(log_gamma({0.5, 0.0}).real() == doctest::Approx(lg_half).epsilon(1e-12));
}

TEST_CASE("log_gamma poles and reflection") {
    CHECK_THROWS_AS(log_gamma({0.0, 0.0}), PoleError);
    CHECK_THROWS_AS(log_gamma({-3.0, 0.0}), PoleError);
    // Gamma(-1/2) = -2 sqrt(pi): modulus via reflection.
    CHECK(log_gamma({-0.5, 0.0}).real() == doctest::Approx(std::log(2.0 * std::sqrt(std::numbers::pi))).epsilon(1e-12));
    // Gamma(0.1) = 9.51350769866873...
    CHECK(std::exp(log_gamma({0.1, 0.0}).real()) == doctest::Approx(9.5135076986687318).epsilon(1e-12));
}

TEST_CASE("log_gamma recurrence on random complex points") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> re(0.5, 10.0), im(-30.0, 30.0);
    for (int i = 0; i < 100; ++i) {
        const Complex z(re(rng), im(rng));
        const Complex ratio = std::exp(log_gamma(z + 1.0) - log_gamma(z));
        CHECK(std::abs(ratio - z) <= 1e-10 * std::abs(z));
    }
}

TEST_CASE("log_gamma is continuous along the Siegel-theta path") {
    // The imaginary part must not jump by 2 pi between close points.
    double prev = log_gamma({0.25, 0.0}).imag();
    for (double t = 0.05; t <= 60.0; t += 0.05) {
        const double cur = log_gamma({0.25, 0.5 * t}).imag();
        CHECK(std::abs(cur - prev) < 0.2);
        prev = cur;
    }
}

TEST_CASE("sum_alternating examples") {
    const double ln2 = sum_alternating(RealTerm([](std::int64_t n) { return 1.0 / static_cast<double>(n); })).real();
    // Oracle: direct partial sum with the alternating-series error bound.
    const std::int64_t N = 2'000'000;
    const Complex direct = sum_alternating_direct([](std::int64_t n) { return Complex(1.0 / static_cast<double>(n)); }, N);
    CHECK(std::abs(ln2 - direct.real()) <= 1.0 / static_cast<double>(N + 1));
    CHECK(ln2 == doctest::Approx(0.69314718055994531).epsilon(1e-13));

    const double pi2_12 =
        sum_alternating(RealTerm([](std::int64_t n) { return 1.0 / static_cast<double>(n * n); })).real();
    CHECK(pi2_12 == doctest::Approx(0.82246703342411321).epsilon(1e-13));

    const double abel = sum_alternating(RealTerm([](std::int64_t) { return 1.0; })).real();
    CHECK(oracle::abel_alternating_ones(1.0 - 1e-5) == doctest::Approx(0.5).epsilon(1e-5));
    CHECK(abel == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("sum_alternating stays inside the direct tail bound") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.1, 2.0);
    const std::int64_t N = 1'000'000;
    for (int i = 0; i < 20; ++i) {
        const double s = u(rng);
        auto term = [s](std::int64_t n) { return Complex(std::pow(static_cast<double>(n), -s)); };
        const Complex acc = sum_alternating(term);
        const Complex direct = sum_alternating_direct(term, N);
        CHECK(std::abs(acc - direct) < std::pow(static_cast<double>(N + 1), -s));
    }
}

TEST_CASE("sum_alternating convergence failures and config") {
    CHECK_THROWS_AS(sum_alternating(RealTerm([](std::int64_t) { return 1.0; }), ToleranceConfig{1e-16, 100}),
                    ConfigError);
    CHECK_THROWS_AS(sum_alternating(RealTerm([](std::int64_t) { return 1.0; }), ToleranceConfig{1e-12, 0}),
                    ConfigError);
    // A rapidly growing term sequence has no accelerated limit.
    CHECK_THROWS_AS(sum_alternating(RealTerm([](std::int64_t n) { return std::pow(3.0, static_cast<double>(n)); })),
                    ConvergenceError);
    // Too few terms allowed to establish convergence.
    CHECK_THROWS_AS(sum_alternating(RealTerm([](std::int64_t n) { return 1.0 / static_cast<double>(n); }),
                                    ToleranceConfig{1e-12, 4}),
                    ConvergenceError);
}

TEST_CASE("accelerate_alternating reports its work") {
    const auto r = accelerate_alternating([](std::int64_t n) { return Complex(1.0 / static_cast<double>(n)); });
    CHECK(r.terms >= 8);
    CHECK(r.terms <= kMaxAccelerationDegree);
    CHECK(r.error_estimate <= 1e-12);
}
