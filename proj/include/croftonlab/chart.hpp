#pragma once

#include "croftonlab/curvature.hpp"
#include "croftonlab/vec2.hpp"

namespace croftonlab {

// Point in the projective chart: Klein disk (k < 0), plane (k = 0),
// gnomonic chart (k > 0). Geodesics are straight chart lines in all three.
using ChartPoint = Vec2;

// Point of the ideal boundary circle (k < 0 only), R = (cos phi, sin phi).
struct IdealPoint {
    double phi = 0.0;
    ChartPoint position() const { return from_angle(phi); }
};

// Oriented chart line {a x + b y + c = 0}, normalized so a^2 + b^2 = 1.
// The positive side is the one the normal (a, b) points into; flipping
// `orientation` reverses it without renaming coefficients.
struct ChartLine {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    int orientation = 1;
};

ChartLine make_line(double a, double b, double c, int orientation = 1);
ChartLine line_through(ChartPoint p, Vec2 direction, int orientation = 1);
// line through p with outward normal n (positive side = n side)
ChartLine line_point_normal(ChartPoint p, Vec2 n, int orientation = 1);

inline double line_eval(const ChartLine& l, ChartPoint p) {
    return l.a * p.x + l.b * p.y + l.c;
}

// --- chart metric -----------------------------------------------------------

// Metric inner product of chart vectors u, v at base point p (true lengths,
// including the 1/|k| scale).
double metric_dot(Curvature k, ChartPoint p, Vec2 u, Vec2 v);
double metric_norm(Curvature k, ChartPoint p, Vec2 u);

// Signed intrinsic angle from chart direction u to chart direction v at p.
double metric_angle(Curvature k, ChartPoint p, Vec2 u, Vec2 v);

// Geodesic distance between chart points.
double chart_distance(Curvature k, ChartPoint p, ChartPoint q);

// Geodesic curvature at parameter value of a chart curve given by position,
// velocity and acceleration (positive for counterclockwise convex curves).
double chart_geodesic_curvature(Curvature k, ChartPoint p, Vec2 vel, Vec2 acc);

// --- hyperbolic model maps (k < 0 charts share the unit disk) ---------------

ChartPoint klein_to_poincare(ChartPoint p);
ChartPoint poincare_to_klein(ChartPoint p);

// Distance in the Klein disk for curvature k < 0 (default k = -1).
double hyperbolic_distance_klein(ChartPoint p, ChartPoint q, Curvature k = {-1.0});

// Signed inversive product of two oriented geodesics of the Klein disk:
// +-cos(angle) if they meet, +-cosh(distance) if they don't; the sign flips
// with either orientation.
double inversive_product(const ChartLine& l1, const ChartLine& l2);

// Signed intrinsic foot distance r from the chart origin and the central
// angle omega of the foot direction. r > 0 when the normal (a, b) points
// away from the origin; a line through the origin gives r = 0 and omega
// along the normal.
struct LineSupportData {
    double r = 0.0;
    double omega = 0.0;
};
LineSupportData line_support_data(Curvature k, const ChartLine& l);

} // namespace croftonlab
