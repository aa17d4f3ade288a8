#pragma once

#include <cstdint>
#include <vector>

#include "fraczeta/core.hpp"

namespace fraczeta::primes {
struct PrimeSet;
}

namespace fraczeta::zeta {

/// s = sigma [1 + sign (1/sigma) i theta] = sigma + sign i theta.
struct SPoint {
    double sigma;
    double theta;
    int sign;

    SPoint(double sigma, double theta, int sign);
    Complex as_complex() const { return {sigma, sign * theta}; }
};

/// s1 = 1/d + i theta, s2 = 1/D + i theta with 1/D = 1 - 1/d.
struct ChartParams {
    double d;
    double theta;

    Complex s1() const;
    Complex s2() const;
};

/// The four Chart 1 partial sums at N terms.
struct ChartPartials {
    Complex inv_xi_h;  // Sum n^-s1
    Complex lambda_h;  // Sum n^+s1
    Complex inv_xi_v;  // Sum n^-s2
    Complex lambda_v;  // Sum n^+s2
    std::int64_t terms = 0;
};

struct ZeroBracket {
    double t_lo;
    double t_hi;
    double t_refined;
    double residual;  // |zeta(1/2 + i t_refined)|
};

int mobius(std::int64_t n);

/// mu(1..limit) by a linear sieve; index 0 is unused.
std::vector<std::int8_t> mobius_table(std::int64_t limit);

AlternatingSum eta_sum(Complex s, const ToleranceConfig& cfg = {});
Complex eta(Complex s, const ToleranceConfig& cfg = {});

/// zeta(s) = eta(s) / (1 - 2^(1-s)).
Complex zeta_from_eta(Complex s, const ToleranceConfig& cfg = {});

Complex zeta_direct(Complex s, std::int64_t terms);
Complex mobius_inverse_zeta(Complex s, std::int64_t terms);
Complex euler_product(Complex s, const primes::PrimeSet& primes);

Complex s_point(double sigma, double theta, int sign);

ChartPartials chart1_partials(const ChartParams& params, std::int64_t terms);

/// Partials for every N = 1..terms, in order.
std::vector<ChartPartials> chart1_series(const ChartParams& params, std::int64_t terms);

double assertion_one_residual(double d, double theta, const ToleranceConfig& cfg = {});

/// Riemann-Siegel theta: Im log Gamma(1/4 + i t/2) - (t/2) log pi.
double siegel_theta(double t);

/// Z(t) = Re[e^{i theta(t)} zeta(1/2 + i t)], checked to be real.
double hardy_rotation(double t, const ToleranceConfig& cfg = {});

/// Sign changes of Z(t) on the absolute grid {j * grid_step}, bisected to a
/// bracket narrower than 1e-8. Grid points are multiples of grid_step so a
/// scan split into sub-ranges touches exactly the same abscissae.
std::vector<ZeroBracket> find_zeros(double t_lo, double t_hi, double grid_step = 0.05, const ToleranceConfig& cfg = {});

namespace serial {
Complex zeta_direct(Complex s, std::int64_t terms);
Complex mobius_inverse_zeta(Complex s, std::int64_t terms);
std::vector<ZeroBracket> find_zeros(double t_lo, double t_hi, double grid_step = 0.05, const ToleranceConfig& cfg = {});
}  // namespace serial

}  // namespace fraczeta::zeta
