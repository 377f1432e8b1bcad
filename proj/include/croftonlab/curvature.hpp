#pragma once

#include "croftonlab/error.hpp"

namespace croftonlab {

// Gaussian curvature of the ambient plane. k > 0 selects the sphere,
// k = 0 the Euclidean plane, k < 0 the hyperbolic plane.
struct Curvature {
    double k = 0.0;
};

// Right geodesic triangle with the right angle opposite the hypotenuse.
// Legs are signed; angle_alpha is opposite leg_a, angle_beta opposite leg_b.
struct RightTriangle {
    double leg_a = 0.0;
    double leg_b = 0.0;
    double hyp_c = 0.0;
    double angle_alpha = 0.0;
    double angle_beta = 0.0;
};

// ell(r) = L(r)/2pi: sin(sqrt(k) r)/sqrt(k), r, or sinh(sqrt(-k) r)/sqrt(-k).
// Odd in r; continuous in k at 0.
double ell(Curvature k, double r);

// a(r) = A(r)/2pi, the disk area over 2pi. Even in r, >= 0 in all regimes.
double area_ratio(Curvature k, double r);

// Geodesic curvature of the circle of radius r. Odd in r; pole at r = 0.
double circle_curvature(Curvature k, double r);

// ell(r)*c(r) = 1 - k*a(r): cos(sqrt(k) r) / 1 / cosh(sqrt(-k) r).
// Shows up as the "cosine" of unified trigonometry. Even in r.
double lc_product(Curvature k, double r);

// Inverse of ell on the principal branch (|r| <= pi/(2 sqrt k) for k > 0).
double ell_inv(Curvature k, double value);

// Distance from the chart origin represented by chart radius t:
// arctanh(t)/sqrt(-k) (Klein), t, arctan(t)/sqrt(k) (gnomonic).
double distance_from_chart_radius(Curvature k, double t);
double chart_radius_from_distance(Curvature k, double rho);

// Solve ell(c)c(c) = ell(a)c(a) ell(b)c(b) for the hypotenuse.
double hypotenuse(Curvature k, double a, double b);

// All six elements from the hypotenuse and the angle opposite leg_a.
// Degenerate alpha in {0, pi/2} collapses one leg to zero.
RightTriangle solve_right_triangle(Curvature k, double hyp_c, double angle_alpha);

// Angle of parallelism for length a (k < 0 only): tan beta = 1/(sqrt(-k) ell(a)).
double angle_of_parallelism(Curvature k, double a);

} // namespace croftonlab
