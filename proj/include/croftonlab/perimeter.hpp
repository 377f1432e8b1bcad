#pragma once

#include <map>
#include <string>

#include "croftonlab/body.hpp"

namespace croftonlab {

struct PerimeterReport {
    std::string method;
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    std::map<std::string, double> diagnostics;
};

// Minkowski formula about an arbitrary origin:
//   P = int ell(rho)^2 kappa_g dtheta + k int a(rho) ds.
// Valid for any closed C^2 curve (convexity not required); the curve must
// stay away from the origin (and its antipode on the sphere).
PerimeterReport minkowski_perimeter(Curvature k, const ConvexBody& body, ChartPoint origin,
                                    double tol);

// Piecewise version for geodesic polygons: vertex jumps ell(rho_i) d(sin a_i)
// plus the curvature-weighted area term along the sides.
PerimeterReport minkowski_perimeter_polygon(Curvature k, const ConvexBody& polygon,
                                            ChartPoint origin, double tol);

// Unified Cauchy formula P = int ell(r) domega over support-line foot angles.
PerimeterReport cauchy_perimeter_unified(Curvature k, const ConvexBody& body, double tol);

// Projective Cauchy formulas in the Klein chart (k < 0 only):
//   P = 1/2 int w dphi  and  P = int h dphi.
PerimeterReport projective_cauchy_w(Curvature k, const ConvexBody& body, double tol);
PerimeterReport projective_cauchy_h(Curvature k, const ConvexBody& body, double tol);

// Boundary curvature from the support angle rate (Theorem-style identity):
// kappa_g = (lc(r)/lc(x)) domega/ds; both algebraic forms exposed for tests.
double kappa_from_omega(Curvature k, const SupportFrame& frame, double domega_ds);
std::pair<double, double> kappa_from_omega_forms(Curvature k, const SupportFrame& frame,
                                                 double domega_ds);

// dr/domega = -ell(r) c(r) / c(x); the x = 0 limit is 0.
double dr_domega(Curvature k, const SupportFrame& frame);

// Polar Cauchy form P = int ell(rho)^2 (domega/ds) dtheta, requiring the
// origin in the interior; integrand also evaluated through kappa_g for a
// pointwise cross-check (diagnostic "pointwise_gap").
PerimeterReport cauchy_polar(Curvature k, const ConvexBody& body, double tol);

// Measure ratios along the boundary (phi entries NaN unless k < 0).
struct MeasureRatios {
    double dtheta_ds = 0.0;
    double domega_ds = 0.0;
    double domega_dtheta = 0.0;
    double dphi_domega = 0.0;
    double dphi_dtheta = 0.0;
    double dphitilde_domega = 0.0;
};
MeasureRatios measure_ratios(Curvature k, const ConvexBody& body, double t);

// Independent Poincare-frame evaluation of dphi/dtheta (k < 0).
double dphi_dtheta_poincare(Curvature k, const SupportFrame& frame);

// Contributions of a single geodesic arc (chart segment A->B) to the Cauchy
// and Minkowski integrands: int ell(r) domega and k int a(rho) ds.
struct ArcContributions {
    double cauchy_part = 0.0;
    double minkowski_area_part = 0.0;
};
ArcContributions geodesic_arc_contributions(Curvature k, ChartPoint A, ChartPoint B,
                                            double tol);

} // namespace croftonlab
