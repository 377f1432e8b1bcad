#pragma once

#include <utility>
#include <vector>

#include "croftonlab/chart.hpp"

namespace croftonlab {

// Truncated trigonometric polynomial, coefficients [a0, a1, b1, a2, b2, ...]:
// f(t) = a0 + sum_m (a_m cos(m t) + b_m sin(m t)).
struct TrigPoly {
    std::vector<double> coeffs{0.0};
    double eval(double t) const;
    double d1(double t) const;
    double d2(double t) const;
};

struct ValidateOptions {
    bool require_convex = true;   // drop for arbitrary C^2 closed curves
    bool allow_degenerate = false; // points and segments (Hilbert / projective use)
};

// Convex body in a chart: counterclockwise polygon or smooth closed curve.
struct ConvexBody {
    enum class Kind { polygon, smooth };

    Kind kind = Kind::polygon;
    std::vector<ChartPoint> vertices; // polygon (1 or 2 entries when degenerate)
    TrigPoly x, y;                    // smooth

    // set by validate()
    bool validated = false;
    bool convex = false;
    bool degenerate = false;
    Curvature valid_k{0.0};
    double max_chart_radius = 0.0;
    ChartPoint interior_point{};
    std::vector<double> gauss_cache;  // unwrapped normal angles on the param grid (smooth)
    std::vector<ChartPoint> grid_points;
    std::vector<Vec2> grid_velocities;
    std::vector<double> edge_normals; // outward normal angle per edge (polygon)

    static ConvexBody polygon(std::vector<ChartPoint> vertices);
    static ConvexBody smooth(TrigPoly x, TrigPoly y);
    static ConvexBody circle(ChartPoint center, double chart_radius);
    static ConvexBody point(ChartPoint p);
    static ConvexBody segment(ChartPoint p, ChartPoint q);

    // smooth curve evaluation (any t); polygon: t in [0, n), edge floor(t)
    ChartPoint point_at(double t) const;
    Vec2 velocity_at(double t) const;
    Vec2 acceleration_at(double t) const;
    double period() const;
    std::size_t edge_count() const { return vertices.size(); }

    void require_validated(Curvature k) const;
};

ConvexBody validate(ConvexBody body, Curvature k, ValidateOptions opts = {});

// Intrinsic frame of the boundary at parameter t, polar coordinates taken
// about `origin` (geodesic polar chart; origin must not lie on the curve).
struct BoundaryFrame {
    double t = 0.0;
    ChartPoint point{};
    double rho = 0.0;    // distance to origin
    double theta = 0.0;  // intrinsic polar angle
    double alpha = 0.0;  // radial direction -> outward normal
    double speed = 0.0;  // ds/dt
    double kappa_g = 0.0;
    double dtheta_dt = 0.0;
    double s = 0.0;      // accumulated arclength when requested, else NaN
};

BoundaryFrame boundary_frame(const ConvexBody& body, Curvature k, double t,
                             ChartPoint origin = {0.0, 0.0});

// Full right-triangle bundle of the support line at a boundary point.
struct SupportFrame : BoundaryFrame {
    double r = 0.0;     // signed distance from origin to the support line
    double x = 0.0;     // signed third side, sign of (omega - theta)
    double beta = 0.0;  // pi/2 - alpha
    double omega = 0.0; // central angle of the foot of the perpendicular
    double phi = 0.0;       // k < 0: ideal endpoint seen as right support line
    double phi_tilde = 0.0; // k < 0: the other ideal endpoint
    double domega_dt = 0.0; // chart Gauss-angle rate (NaN at polygon contacts)
    ChartLine line{};
};

SupportFrame support_frame_at(const ConvexBody& body, Curvature k, double t);

struct SupportLineResult {
    ChartLine line{};
    ChartPoint contact{};
    SupportFrame frame{};
    bool edge_contact = false; // polygon support line meeting an edge segment
};

// The support line whose foot-of-perpendicular direction is omega, with the
// body on the origin side (r signed when the origin lies outside).
SupportLineResult support_line_at_omega(const ConvexBody& body, Curvature k, double omega);

// Extreme counterclockwise ray angles from viewpoint R (exterior to the body),
// measured from reference direction ref_dir; psi1 <= psi2.
struct ExtremeRays {
    double psi1 = 0.0;
    double psi2 = 0.0;
    ChartPoint contact1{};
    ChartPoint contact2{};
};

ExtremeRays extreme_ray_angles(const ConvexBody& body, ChartPoint R, Vec2 ref_dir);

// The two support lines of a Klein-chart body through the ideal point
// R = (cos phi, sin phi); psi angles are taken counterclockwise from the
// circle tangent at R, w = cot psi1 - cot psi2 and h = cot psi1 are the
// Euclidean projection lengths on the phi-normal.
struct IdealSupportResult {
    ChartLine right{};
    ChartLine left{};
    ChartPoint right_contact{};
    ChartPoint left_contact{};
    double psi1 = 0.0;
    double psi2 = 0.0;
    double w = 0.0;
    double h = 0.0;
};

IdealSupportResult support_lines_from_ideal(const ConvexBody& body, Curvature k, double phi);

// Direct arclength of the boundary: quadrature of intrinsic speed for smooth
// bodies, sum of geodesic side lengths for polygons.
double arclength_perimeter(const ConvexBody& body, Curvature k, double tol = 1e-12);

// Parameters of the two intersections of the line {P + tau * dir} with the
// boundary, sorted by tau. P must be interior.
std::pair<double, double> line_body_intersections(const ConvexBody& body, ChartPoint P,
                                                  Vec2 dir);

bool point_strictly_inside(const ConvexBody& body, ChartPoint p, double margin = 1e-12);

} // namespace croftonlab
