#include "fraczeta/fracdiff.hpp"

#include <cmath>
#include <exception>
#include <numbers>

namespace fraczeta::fracdiff {

FracOrder::FracOrder(double a) : alpha(a) {
    if (!(a > 0.0 && a <= 1.0)) throw DomainError("fractional order must lie in (0, 1]");
}

void SampledSignal::validate() const {
    if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("sample step h must be > 0");
    if (values.empty()) throw DomainError("signal has no samples");
    for (double v : values)
        if (!std::isfinite(v)) throw DomainError("signal samples must be finite");
}

std::vector<double> gl_weights(FracOrder alpha, std::int64_t count) {
    if (count < 1) throw DomainError("weight count must be >= 1");
    std::vector<double> w(static_cast<std::size_t>(count));
    w[0] = 1.0;
    for (std::int64_t k = 1; k < count; ++k) {
        const auto i = static_cast<std::size_t>(k);
        w[i] = w[i - 1] * (1.0 - (alpha.alpha + 1.0) / static_cast<double>(k));
    }
    return w;
}

namespace {

// Sum_{k=from}^{n} w_k x_{n-k}, four interleaved accumulators with a fixed
// combine order.
double causal_dot(const std::vector<double>& w, const std::vector<double>& x, std::size_t from, std::size_t n) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t k = from;
    for (; k + 3 <= n; k += 4) {
        acc[0] += w[k] * x[n - k];
        acc[1] += w[k + 1] * x[n - k - 1];
        acc[2] += w[k + 2] * x[n - k - 2];
        acc[3] += w[k + 3] * x[n - k - 3];
    }
    for (; k <= n; ++k) acc[0] += w[k] * x[n - k];
    return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

void check_differintegral_input(const SampledSignal& f) {
    f.validate();
    if (f.values.size() < 2) throw DomainError("differintegral needs at least two samples");
}

}  // namespace

SampledSignal gl_differintegral(const SampledSignal& f, FracOrder alpha) {
    check_differintegral_input(f);
    const auto count = static_cast<std::int64_t>(f.values.size());
    const std::vector<double> w = gl_weights(alpha, count);
    const double scale = std::pow(f.h, -alpha.alpha);

    SampledSignal g{f.h, std::vector<double>(f.values.size())};
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t n = 0; n < count; ++n) {
        const auto i = static_cast<std::size_t>(n);
        g.values[i] = scale * causal_dot(w, f.values, 0, i);
    }
    return g;
}

namespace serial {

SampledSignal gl_differintegral(const SampledSignal& f, FracOrder alpha) {
    check_differintegral_input(f);
    const std::vector<double> w = gl_weights(alpha, static_cast<std::int64_t>(f.values.size()));
    const double scale = std::pow(f.h, -alpha.alpha);
    SampledSignal g{f.h, std::vector<double>(f.values.size())};
    for (std::size_t n = 0; n < f.values.size(); ++n) g.values[n] = scale * causal_dot(w, f.values, 0, n);
    return g;
}

}  // namespace serial

SampledSignal solve_relaxation(const ColeColeParams& params, const SampledSignal& drive) {
    params.validate();
    drive.validate();
    if (static_cast<std::int64_t>(drive.values.size()) > kMaxSamples)
        throw ConfigError("drive length exceeds 100000 samples");

    const FracOrder alpha(1.0 / params.d);
    const std::size_t count = drive.values.size();
    const std::vector<double> w = gl_weights(alpha, static_cast<std::int64_t>(count));
    const double c = std::pow(params.vc * drive.h, -alpha.alpha);

    SampledSignal u{drive.h, std::vector<double>(count, 0.0)};
    for (std::size_t n = 1; n < count; ++n) {
        const double memory = causal_dot(w, u.values, 1, n);
        u.values[n] = (params.z0 * drive.values[n] - c * memory) / (1.0 + c);
    }
    return u;
}

Complex fit_sinusoid(const SampledSignal& signal, double v, double t_from) {
    signal.validate();
    double ss = 0, sc = 0, cc = 0, ys = 0, yc = 0;
    std::size_t used = 0;
    for (std::size_t n = 0; n < signal.values.size(); ++n) {
        const double t = signal.time(n);
        if (t < t_from) continue;
        const double s = std::sin(v * t);
        const double c = std::cos(v * t);
        const double y = signal.values[n];
        ss += s * s;
        sc += s * c;
        cc += c * c;
        ys += y * s;
        yc += y * c;
        ++used;
    }
    const double det = ss * cc - sc * sc;
    if (used < 3 || !(std::abs(det) > 0.0)) throw ConvergenceError("sinusoid fit is singular");
    const double a = (ys * cc - yc * sc) / det;
    const double b = (yc * ss - ys * sc) / det;
    return {a, b};
}

Complex frequency_response_empirical(const ColeColeParams& params, double v, std::int64_t cycles, double h) {
    params.validate();
    if (!(v > 0.0)) throw DomainError("drive frequency must be > 0");
    if (cycles < 10) throw ConfigError("frequency response needs at least 10 cycles");
    if (!(h > 0.0)) throw DomainError("sample step h must be > 0");

    const double period = 2.0 * std::numbers::pi / v;
    const double t_end = static_cast<double>(cycles) * period;
    const auto samples = static_cast<std::int64_t>(std::ceil(t_end / h)) + 1;
    if (samples > kMaxSamples) throw ConfigError("drive length exceeds 100000 samples");

    SampledSignal drive{h, std::vector<double>(static_cast<std::size_t>(samples))};
    for (std::size_t n = 0; n < drive.values.size(); ++n) drive.values[n] = std::sin(v * drive.time(n));

    const SampledSignal u = solve_relaxation(params, drive);
    const double t_last = u.time(u.values.size() - 1);
    return fit_sinusoid(u, v, t_last - 2.0 * period) / params.z0;
}

std::vector<Complex> frequency_response_batch(std::span<const ResponseRequest> requests, std::int64_t cycles,
                                              double h) {
    std::vector<Complex> out(requests.size());
    std::vector<std::exception_ptr> errors(requests.size());
    const auto count = static_cast<std::int64_t>(requests.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            out[k] = frequency_response_empirical(requests[k].params, requests[k].v, cycles, h);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace fraczeta::fracdiff
