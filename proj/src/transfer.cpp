#include "fraczeta/transfer.hpp"

#include <cmath>
#include <numbers>

namespace fraczeta::transfer {

void ColeColeParams::validate() const {
    if (!(z0 > 0.0) || !std::isfinite(z0)) throw DomainError("z0 must be > 0");
    if (!(vc > 0.0) || !std::isfinite(vc)) throw DomainError("vc must be > 0");
    if (!(d >= 1.0) || !std::isfinite(d)) throw DomainError("d must be ≥ 1");
}

Complex evaluate(const ColeColeParams& params, double v) {
    params.validate();
    if (!(v >= 0.0)) throw DomainError("frequency must be >= 0");
    if (v == 0.0) return {params.z0, 0.0};
    const Complex fractional = cpow_principal(Complex(0.0, v / params.vc), Complex(1.0 / params.d, 0.0));
    return params.z0 / (1.0 + fractional);
}

double phase_pinning(double d) {
    if (!(d >= 1.0)) throw DomainError("d must be ≥ 1");
    return 0.5 * std::numbers::pi * (1.0 - 1.0 / d);
}

ArcGeometry arc_geometry(const ColeColeParams& params) {
    params.validate();
    const double half_angle = 0.5 * std::numbers::pi / params.d;  // pi / (2d)
    const double half_chord = 0.5 * params.z0;
    // The locus runs below the real axis, so the centre of the (minor) arc sits
    // above it. At d = 1, cos(pi/2) is ~6e-17 rather than 0; the Debye circle
    // is centred on the axis.
    const double cot = params.d == 1.0 ? 0.0 : std::cos(half_angle) / std::sin(half_angle);
    ArcGeometry g;
    g.center = Complex(half_chord, half_chord * cot);
    g.radius = half_chord / std::sin(half_angle);
    g.chord = params.z0;
    g.depression_angle = phase_pinning(params.d);
    return g;
}

double hyperbolic_distance(double v, double vc, double d) {
    if (!(v > 0.0)) throw DomainError("v must be > 0");
    if (!(vc > 0.0)) throw DomainError("vc must be > 0");
    if (!(d >= 1.0)) throw DomainError("d must be ≥ 1");
    return std::pow(v / vc, 1.0 / d);
}

double conjugate_exponent(double d) {
    if (!(d > 1.0) || !std::isfinite(d)) throw DomainError("conjugate exponent requires d > 1");
    return d / (d - 1.0);
}

double conjugate_order(double d) {
    conjugate_exponent(d);
    return 1.0 - 1.0 / d;
}

DistanceQuad distance_classes(std::int64_t n, double d) {
    if (n < 1) throw DomainError("n must be >= 1");
    const double inv_big_d = conjugate_order(d);
    const double x = static_cast<double>(n);
    DistanceQuad q;
    q.left_h = std::pow(x, 1.0 / d);
    q.right_h = std::pow(x, -1.0 / d);
    q.right_v = std::pow(x, inv_big_d);
    q.left_v = std::pow(x, -inv_big_d);
    return q;
}

std::vector<double> frequency_grid(double vmin, double vmax, std::int64_t points, bool log_spacing) {
    if (!(vmin < vmax)) throw DomainError("vmin must be < vmax");
    if (points < 2) throw DomainError("points must be >= 2");
    if (!(vmin >= 0.0)) throw DomainError("vmin must be >= 0");
    if (log_spacing && !(vmin > 0.0)) throw DomainError("log spacing requires vmin > 0");

    std::vector<double> grid(static_cast<std::size_t>(points));
    const double last = static_cast<double>(points - 1);
    for (std::int64_t i = 0; i < points; ++i) {
        const double u = static_cast<double>(i) / last;
        grid[static_cast<std::size_t>(i)] =
            log_spacing ? std::exp(std::log(vmin) + u * (std::log(vmax) - std::log(vmin))) : vmin + u * (vmax - vmin);
    }
    grid.front() = vmin;
    grid.back() = vmax;
    return grid;
}

std::vector<Complex> sweep(const ColeColeParams& params, std::span<const double> frequencies) {
    params.validate();
    for (double v : frequencies)
        if (!(v >= 0.0)) throw DomainError("frequency must be >= 0");
    std::vector<Complex> out(frequencies.size());
    const auto count = static_cast<std::int64_t>(frequencies.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = evaluate(params, frequencies[static_cast<std::size_t>(i)]);
    return out;
}

namespace serial {

std::vector<Complex> sweep(const ColeColeParams& params, std::span<const double> frequencies) {
    std::vector<Complex> out;
    out.reserve(frequencies.size());
    for (double v : frequencies) out.push_back(evaluate(params, v));
    return out;
}

}  // namespace serial

}  // namespace fraczeta::transfer
