#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fraczeta/core.hpp"
#include "fraczeta/transfer.hpp"

namespace fraczeta::fracdiff {

using transfer::ColeColeParams;

/// Differintegration order, 0 < alpha <= 1.
struct FracOrder {
    double alpha;

    explicit FracOrder(double a);
};

/// Uniform samples at t = 0, h, 2h, ...
struct SampledSignal {
    double h = 0;
    std::vector<double> values;

    void validate() const;
    double time(std::size_t n) const { return static_cast<double>(n) * h; }
};

inline constexpr std::int64_t kMaxSamples = 100'000;

/// Grünwald-Letnikov weights w_k = (-1)^k binom(alpha, k).
std::vector<double> gl_weights(FracOrder alpha, std::int64_t count);

/// g_n = h^-alpha Sum_{k=0}^{n} w_k f_{n-k}, zero history before t = 0.
/// Rows are independent, so this runs OpenMP-parallel over n.
SampledSignal gl_differintegral(const SampledSignal& f, FracOrder alpha);

/// Implicit GL solution of (1/vc)^a D^a U = z0 I - U, a = 1/d, with U_0 = 0:
///   U_n = (z0 I_n - c Sum_{k=1}^{n} w_k U_{n-k}) / (1 + c),  c = (vc h)^-a.
/// Full memory; throws ConfigError past kMaxSamples samples.
SampledSignal solve_relaxation(const ColeColeParams& params, const SampledSignal& drive);

/// Least-squares fit U(t) ~ a sin(v t) + b cos(v t) over samples with
/// t >= t_from; returns a + i b, i.e. A e^{i phi} for A sin(v t + phi).
Complex fit_sinusoid(const SampledSignal& signal, double v, double t_from);

/// Empirical steady-state gain U / (z0 I) for I(t) = sin(v t): drives the
/// relaxation solver for `cycles` periods at step h and fits the last two.
Complex frequency_response_empirical(const ColeColeParams& params, double v, std::int64_t cycles, double h = 1e-3);

struct ResponseRequest {
    ColeColeParams params;
    double v = 1.0;
};

/// Independent requests solved in parallel; output order follows input.
std::vector<Complex> frequency_response_batch(std::span<const ResponseRequest> requests, std::int64_t cycles,
                                              double h = 1e-3);

namespace serial {
SampledSignal gl_differintegral(const SampledSignal& f, FracOrder alpha);
}

}  // namespace fraczeta::fracdiff
