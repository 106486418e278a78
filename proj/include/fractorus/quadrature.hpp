// fractorus — adaptive quadrature (Gauss–Kronrod 7/15) and Gauss–Legendre
// node generation.
//
// Conventions:
//  * gk_adaptive integrates a scalar callable over a finite interval with a
//    global error target |I - I*| <= max(abs_tol, rel_tol * |I*|), subdividing
//    the worst interval first.
//  * gk_adaptive_vec is the same driver for callables returning a fixed-size
//    vector of values (used to integrate whole grid fields over time in one
//    pass, sharing the subdivision and controlling the sup-norm error).
//  * Semi-infinite integrals in this library are always taken through an
//    explicit log substitution by the caller (t = e^v), which turns power-law
//    behaviour at 0/∞ into plain exponential decay in v; callers supply
//    generous windows derived analytically from their integrands.
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "fractorus/errors.hpp"

namespace fractorus {

struct QuadTol {
    double rel = 1e-10;
    double abs = 1e-13;
};

struct QuadResult {
    double value = 0.0;
    double est_error = 0.0;   // accumulated Kronrod error estimate
    int evaluations = 0;      // integrand evaluations performed
    bool converged = false;
};

// Adaptive G7/K15 on [a, b].  `split_points` (strictly inside (a,b)) seed the
// initial partition — useful when the integrand has a known feature (e.g. the
// t=1 split of the Poisson-kernel time integral).
QuadResult gk_adaptive(const std::function<double(double)>& f, double a, double b,
                       QuadTol tol = {}, int max_intervals = 4000,
                       const std::vector<double>& split_points = {});

struct QuadResultVec {
    std::vector<double> value;
    double est_error = 0.0;   // sup-norm error estimate across components
    int evaluations = 0;
    bool converged = false;
};

// Vector-valued variant; error control is on the sup norm across components.
// `f(x, out)` must fill `out` (size `dim`).
QuadResultVec gk_adaptive_vec(const std::function<void(double, std::vector<double>&)>& f,
                              std::size_t dim, double a, double b, QuadTol tol = {},
                              int max_intervals = 2000,
                              const std::vector<double>& split_points = {});

// Gauss–Legendre nodes/weights on [-1, 1], generated by Newton iteration on
// the Legendre recurrence (deterministic, ~1e-15 accurate for p <= 64).
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLegendre& gauss_legendre(int p);  // cached per degree

// Convenience: fixed GL-p approximation of ∫_a^b f.
double gl_fixed(const std::function<double(double)>& f, double a, double b, int p);

} // namespace fractorus
