#include <doctest.h>

#include <cmath>
#include <cstring>

#include "fraczeta/fracdiff.hpp"
#include "fraczeta/parallel.hpp"
#include "fraczeta/primes.hpp"
#include "fraczeta/transfer.hpp"
#include "fraczeta/zeta.hpp"

using namespace fraczeta;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }
bool same_bits(Complex a, Complex b) { return same_bits(a.real(), b.real()) && same_bits(a.imag(), b.imag()); }

// Runs f with 1 and with 4 workers and returns both results.
template <class F>
auto with_workers(F f) {
    decltype(f()) one, four;
    {
        parallel::ScopedWorkers w(1);
        one = f();
    }
    {
        parallel::ScopedWorkers w(4);
        four = f();
    }
    return std::pair{one, four};
}

}  // namespace

TEST_CASE("ScopedWorkers restores the previous count") {
    const int before = parallel::workers();
    {
        parallel::ScopedWorkers w(3);
        CHECK(parallel::workers() == 3);
    }
    CHECK(parallel::workers() == before);
}

TEST_CASE("chunked_sum and chunked_product basics") {
    CHECK(parallel::chunked_sum(5, 4, [](std::int64_t) { return Complex(1, 0); }) == Complex(0, 0));
    CHECK(parallel::chunked_sum(1, 100'000, [](std::int64_t i) { return Complex(static_cast<double>(i), 0); }) ==
          Complex(5'000'050'000.0, 0));
    CHECK(parallel::chunked_product(0, [](std::int64_t) { return Complex(2, 0); }) == Complex(1, 0));
    CHECK(parallel::chunked_product(40'000, [](std::int64_t i) { return Complex(i % 2 ? 2.0 : 0.5, 0); }) == Complex(1, 0));
    CHECK_THROWS_AS(parallel::chunked_product(
                        50'000, [](std::int64_t) { return Complex(2, 0); },
                        [](Complex z) {
                            if (std::abs(z) > 1e300) throw OverflowError("too big");
                        }),
                    OverflowError);
}

TEST_CASE("zeta kernels: serial reference and worker invariance") {
    const Complex s(2.0, 3.0);
    const Complex par = zeta::zeta_direct(s, 300'000);
    CHECK(std::abs(par - zeta::serial::zeta_direct(s, 300'000)) < 1e-13);
    auto [a, b] = with_workers([&] { return zeta::zeta_direct(s, 300'000); });
    CHECK(same_bits(a, b));
    CHECK(same_bits(a, par));

    const Complex m = zeta::mobius_inverse_zeta(s, 200'000);
    CHECK(std::abs(m - zeta::serial::mobius_inverse_zeta(s, 200'000)) < 1e-13);
    auto [c, d] = with_workers([&] { return zeta::mobius_inverse_zeta(s, 200'000); });
    CHECK(same_bits(c, d));
}

TEST_CASE("find_zeros: serial reference and worker invariance") {
    const auto par = zeta::find_zeros(10.0, 30.0);
    const auto ser = zeta::serial::find_zeros(10.0, 30.0);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(same_bits(par[i].t_refined, ser[i].t_refined));
        CHECK(same_bits(par[i].residual, ser[i].residual));
    }
    auto [a, b] = with_workers([] { return zeta::find_zeros(10.0, 30.0); });
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(same_bits(a[i].t_lo, b[i].t_lo));
        CHECK(same_bits(a[i].t_refined, b[i].t_refined));
    }
}

TEST_CASE("varpi kernels: serial reference and worker invariance") {
    const auto ps = primes::sieve(100'000);
    for (auto conv : {primes::SignConvention::as_printed, primes::SignConvention::both_minus}) {
        const primes::VarpiConfig cfg{100'000, conv};
        const Complex par = primes::varpi(1.3, ps, cfg);
        const Complex ser = primes::serial::varpi(1.3, ps, cfg);
        CHECK(std::abs(par - ser) < 1e-11 * std::abs(ser));

        auto [a, b] = with_workers([&] { return primes::varpi_grid(0.1, 1.0, 0.01, ps, cfg); });
        REQUIRE(a.size() == b.size());
        const auto sg = primes::serial::varpi_grid(0.1, 1.0, 0.01, ps, cfg);
        REQUIRE(sg.size() == a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(same_bits(a[i].first, b[i].first));
            CHECK(same_bits(a[i].second, b[i].second));
            CHECK(a[i].first == sg[i].first);
            CHECK(std::abs(a[i].second - sg[i].second) < 1e-11 * std::abs(sg[i].second));
        }
    }
}

TEST_CASE("gl_differintegral: serial reference and worker invariance") {
    fracdiff::SampledSignal f{1e-3, std::vector<double>(5000)};
    for (std::size_t i = 0; i < f.values.size(); ++i) f.values[i] = std::sin(3.0 * f.time(i)) + f.time(i);
    const fracdiff::FracOrder a(0.6);
    const auto par = fracdiff::gl_differintegral(f, a);
    const auto ser = fracdiff::serial::gl_differintegral(f, a);
    for (std::size_t i = 0; i < f.values.size(); ++i)
        CHECK(std::abs(par.values[i] - ser.values[i]) <= 1e-11 * (1.0 + std::abs(ser.values[i])));
    auto [x, y] = with_workers([&] { return fracdiff::gl_differintegral(f, a); });
    CHECK(std::memcmp(x.values.data(), y.values.data(), x.values.size() * sizeof(double)) == 0);
}

TEST_CASE("sweep: serial reference and worker invariance") {
    const auto grid = transfer::frequency_grid(1e-3, 1e3, 500, true);
    const transfer::ColeColeParams p{2.0, 0.7, 2.6};
    const auto ser = transfer::serial::sweep(p, grid);
    auto [a, b] = with_workers([&] { return transfer::sweep(p, grid); });
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(same_bits(a[i], ser[i]));
        CHECK(same_bits(a[i], b[i]));
    }
}

TEST_CASE("frequency_response_batch matches one-at-a-time calls") {
    const std::vector<fracdiff::ResponseRequest> reqs = {{{1, 1, 1}, 1.0}, {{1, 1, 2}, 1.0}, {{1, 10, 4}, 1.0}};
    auto [a, b] = with_workers([&] { return fracdiff::frequency_response_batch(reqs, 12); });
    for (std::size_t i = 0; i < reqs.size(); ++i) {
        CHECK(same_bits(a[i], b[i]));
        CHECK(same_bits(a[i], fracdiff::frequency_response_empirical(reqs[i].params, reqs[i].v, 12)));
    }
    const std::vector<fracdiff::ResponseRequest> bad = {{{1, 1, 2}, 1.0}, {{1, 1, 2}, 0.001}};
    CHECK_THROWS_AS(fracdiff::frequency_response_batch(bad, 12), ConfigError);
}
