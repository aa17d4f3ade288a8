#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fraczeta/core.hpp"

namespace fraczeta::transfer {

/// Z(v) = z0 / (1 + (i v / vc)^(1/d)).
struct ColeColeParams {
    double z0 = 1.0;
    double vc = 1.0;
    double d = 2.0;

    /// Throws DomainError unless z0 > 0, vc > 0 and d >= 1.
    void validate() const;
};

/// Circle carrying the Cole-Cole locus. Both endpoints (0 and z0) lie on it.
struct ArcGeometry {
    Complex center;
    double radius = 0;
    double chord = 0;
    double depression_angle = 0;  // radians
};

/// The four hyperbolic distance classes for one natural number n.
struct DistanceQuad {
    double left_h = 0;   // n^(1/d)
    double right_h = 0;  // n^(-1/d)
    double right_v = 0;  // n^(1/D)
    double left_v = 0;   // n^(-1/D)
};

Complex evaluate(const ColeColeParams& params, double v);

/// Depression angle (pi/2)(1 - 1/d) of the arc centre.
double phase_pinning(double d);

ArcGeometry arc_geometry(const ColeColeParams& params);

/// (v / vc)^(1/d).
double hyperbolic_distance(double v, double vc, double d);

/// D = d / (d - 1), i.e. 1/D = 1 - 1/d.
double conjugate_exponent(double d);

/// 1 - 1/d, computed so that it is bitwise equal to 1/d at d = 2.
double conjugate_order(double d);

DistanceQuad distance_classes(std::int64_t n, double d);

/// Frequencies vmin..vmax (inclusive), linear or logarithmic spacing.
std::vector<double> frequency_grid(double vmin, double vmax, std::int64_t points, bool log_spacing);

/// evaluate() over a frequency list, OpenMP-parallel, results in input order.
std::vector<Complex> sweep(const ColeColeParams& params, std::span<const double> frequencies);

namespace serial {
std::vector<Complex> sweep(const ColeColeParams& params, std::span<const double> frequencies);
}

}  // namespace fraczeta::transfer
