#pragma once

#include <functional>

namespace croftonlab {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = true;
};

// Trapezoid rule on [0, 2pi) with node doubling until successive estimates
// differ by less than tol (spectrally accurate on smooth periodic integrands).
// Node cap 2^20; hitting it clears the converged flag.
QuadResult integrate_periodic(const std::function<double(double)>& f, double tol);

// Adaptive Simpson bisection with embedded error estimate on [a, b].
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double tol);

// Central differences, 3- or 5-point stencil.
double central_diff(const std::function<double(double)>& f, double t, double h, int order = 5);

// Root of a continuous monotone function on a bracketing interval
// (Brent-style: inverse quadratic / secant with bisection fallback).
double find_root_monotone(const std::function<double(double)>& f, double lo, double hi,
                          double tol);

} // namespace croftonlab
