#include "croftonlab/perimeter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "croftonlab/quadrature.hpp"

namespace croftonlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPoleMargin = 1e-9;

void check_away_from_pole(Curvature k, const ConvexBody& body, ChartPoint origin) {
    auto check = [&](ChartPoint p) {
        const double rho = chart_distance(k, origin, p);
        if (rho < kPoleMargin)
            fail(ErrorCode::near_pole, "curve passes through the polar origin");
        if (k.k > 0 && rho > kPi / std::sqrt(k.k) - kPoleMargin)
            fail(ErrorCode::near_pole, "curve passes through the antipode of the origin");
    };
    if (body.kind == ConvexBody::Kind::polygon) {
        const std::size_t n = body.vertices.size();
        for (std::size_t i = 0; i < n; ++i) {
            check(body.vertices[i]);
            // nearest point of the chart segment to the origin
            const Vec2 e = body.vertices[(i + 1) % n] - body.vertices[i];
            const double tau = std::clamp(dot(origin - body.vertices[i], e) / norm2(e), 0.0, 1.0);
            check(body.vertices[i] + tau * e);
        }
    } else {
        for (const auto& p : body.grid_points) check(p);
    }
}

} // namespace

PerimeterReport minkowski_perimeter(Curvature k, const ConvexBody& body, ChartPoint origin,
                                    double tol) {
    body.require_validated(k);
    if (body.kind != ConvexBody::Kind::smooth)
        fail(ErrorCode::bad_input, "minkowski_perimeter expects a smooth curve");
    check_away_from_pole(k, body, origin);

    auto integrand = [&](double t) {
        const BoundaryFrame f = boundary_frame(body, k, t, origin);
        const double lr = ell(k, f.rho);
        return lr * lr * f.kappa_g * f.dtheta_dt + k.k * area_ratio(k, f.rho) * f.speed;
    };
    const QuadResult q = integrate_periodic(integrand, tol);
    PerimeterReport rep;
    rep.method = "minkowski";
    rep.value = q.value;
    rep.error_estimate = q.error_estimate;
    rep.evaluations = q.evaluations;
    if (!q.converged) fail(ErrorCode::nonconverged, "minkowski_perimeter did not converge");
    return rep;
}

PerimeterReport minkowski_perimeter_polygon(Curvature k, const ConvexBody& polygon,
                                            ChartPoint origin, double tol) {
    polygon.require_validated(k);
    if (polygon.kind != ConvexBody::Kind::polygon || polygon.degenerate)
        fail(ErrorCode::bad_input, "minkowski_perimeter_polygon expects a polygon");
    check_away_from_pole(k, polygon, origin);

    const auto& vs = polygon.vertices;
    const std::size_t n = vs.size();
    PerimeterReport rep;
    rep.method = "minkowski-polygon";

    // vertex jumps ell(rho_i) * (sin a_i^+ - sin a_i^-), sin a = -<u, T>
    double vertex_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const ChartPoint v = vs[i];
        const Vec2 t_in = v - vs[(i + n - 1) % n];
        const Vec2 t_out = vs[(i + 1) % n] - v;
        const Vec2 u = v - origin;
        const double un = metric_norm(k, v, u);
        const double sin_in = -metric_dot(k, v, u, t_in) / (un * metric_norm(k, v, t_in));
        const double sin_out = -metric_dot(k, v, u, t_out) / (un * metric_norm(k, v, t_out));
        vertex_sum += ell(k, chart_distance(k, origin, v)) * (sin_out - sin_in);
    }

    double side_sum = 0.0;
    long evals = 0;
    if (k.k != 0.0) {
        for (std::size_t i = 0; i < n; ++i) {
            const ChartPoint v0 = vs[i];
            const Vec2 e = vs[(i + 1) % n] - v0;
            auto f = [&](double tau) {
                const ChartPoint p = v0 + tau * e;
                return area_ratio(k, chart_distance(k, origin, p)) * metric_norm(k, p, e);
            };
            const QuadResult q = integrate_adaptive(f, 0.0, 1.0, tol / double(n));
            side_sum += q.value;
            evals += q.evaluations;
            rep.error_estimate += q.error_estimate;
        }
    }
    rep.value = vertex_sum + k.k * side_sum;
    rep.evaluations = evals;
    return rep;
}

PerimeterReport cauchy_perimeter_unified(Curvature k, const ConvexBody& body, double tol) {
    body.require_validated(k);
    if (!body.convex) fail(ErrorCode::non_convex, "Cauchy formula needs a convex body");

    PerimeterReport rep;
    rep.method = "cauchy-omega";
    if (body.kind == ConvexBody::Kind::smooth) {
        auto direct = [&](double omega) {
            return ell(k, support_line_at_omega(body, k, omega).frame.r);
        };
        const QuadResult q = integrate_periodic(direct, tol);
        if (!q.converged) fail(ErrorCode::nonconverged, "cauchy_perimeter_unified did not converge");
        rep.value = q.value;
        rep.error_estimate = q.error_estimate;
        rep.evaluations = q.evaluations;

        // independent boundary-parameter route with the analytic Jacobian
        auto by_param = [&](double t) {
            const SupportFrame f = support_frame_at(body, k, t);
            return ell(k, f.r) * f.domega_dt;
        };
        const QuadResult q2 = integrate_periodic(by_param, tol);
        rep.diagnostics["t_route"] = q2.value;
        rep.diagnostics["route_gap"] = std::abs(q.value - q2.value);
        return rep;
    }

    // polygon: each vertex contributes over its normal fan with fixed contact
    const auto& vs = body.vertices;
    const auto& normals = body.edge_normals;
    const std::size_t n = vs.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double start = normals[(i + n - 1) % n];
        const double width = wrap_2pi(normals[i] - start);
        if (width <= 0.0) continue;
        const ChartPoint v = vs[i];
        auto f = [&](double off) {
            const Vec2 u = from_angle(start + off);
            const double foot = dot(u, v);
            const double rr = foot >= 0 ? distance_from_chart_radius(k, foot)
                                        : -distance_from_chart_radius(k, -foot);
            return ell(k, rr);
        };
        const QuadResult q = integrate_adaptive(f, 0.0, width, tol / double(n));
        total += q.value;
        rep.evaluations += q.evaluations;
        rep.error_estimate += q.error_estimate;
    }
    rep.value = total;
    return rep;
}

namespace {

PerimeterReport projective_impl(Curvature k, const ConvexBody& body, double tol, bool one_sided) {
    body.require_validated(k);
    if (k.k >= 0) fail(ErrorCode::domain, "projective Cauchy formulas require k < 0");
    const double scale = 1.0 / std::sqrt(-k.k);

    PerimeterReport rep;
    rep.method = one_sided ? "projective-h" : "projective-w";
    double max_gap = 0.0;
    auto integrand = [&](double phi) {
        const IdealSupportResult s = support_lines_from_ideal(body, k, phi);
        if (one_sided) {
            // cross-check the extrinsic cot(psi1) against the intrinsic ell(r)
            const double intrinsic = ell(k, line_support_data(k, s.right).r);
            max_gap = std::max(max_gap, std::abs(s.h * scale - intrinsic));
            return s.h * scale;
        }
        return 0.5 * s.w * scale;
    };
    const QuadResult q = integrate_periodic(integrand, tol);
    if (!q.converged) fail(ErrorCode::nonconverged, rep.method + " did not converge");
    rep.value = q.value;
    rep.error_estimate = q.error_estimate;
    rep.evaluations = q.evaluations;
    if (one_sided) rep.diagnostics["extrinsic_intrinsic_gap"] = max_gap;
    return rep;
}

} // namespace

PerimeterReport projective_cauchy_w(Curvature k, const ConvexBody& body, double tol) {
    return projective_impl(k, body, tol, false);
}

PerimeterReport projective_cauchy_h(Curvature k, const ConvexBody& body, double tol) {
    return projective_impl(k, body, tol, true);
}

std::pair<double, double> kappa_from_omega_forms(Curvature k, const SupportFrame& frame,
                                                 double domega_ds) {
    const double f1 = lc_product(k, frame.r) / lc_product(k, frame.x) * domega_ds;
    const double f2 = (1.0 - k.k * area_ratio(k, frame.r)) /
                      (1.0 - k.k * area_ratio(k, frame.x)) * domega_ds;
    return {f1, f2};
}

double kappa_from_omega(Curvature k, const SupportFrame& frame, double domega_ds) {
    return kappa_from_omega_forms(k, frame, domega_ds).first;
}

double dr_domega(Curvature k, const SupportFrame& frame) {
    return -lc_product(k, frame.r) * ell(k, frame.x) / lc_product(k, frame.x);
}

PerimeterReport cauchy_polar(Curvature k, const ConvexBody& body, double tol) {
    body.require_validated(k);
    if (body.kind != ConvexBody::Kind::smooth)
        fail(ErrorCode::bad_input, "cauchy_polar expects a smooth body");
    if (!body.convex) fail(ErrorCode::non_convex, "cauchy_polar needs a convex body");
    if (!point_strictly_inside(body, {0.0, 0.0}, 1e-9))
        fail(ErrorCode::domain, "cauchy_polar: origin must be interior");

    double max_gap = 0.0;
    auto integrand = [&](double t) {
        const SupportFrame f = support_frame_at(body, k, t);
        const double l2 = ell(k, f.rho) * ell(k, f.rho);
        const double form1 = l2 * (f.domega_dt / f.speed) * f.dtheta_dt;
        const double form2 = f.kappa_g * l2 * lc_product(k, f.x) / lc_product(k, f.r) *
                             f.dtheta_dt;
        max_gap = std::max(max_gap, std::abs(form1 - form2));
        return form1;
    };
    const QuadResult q = integrate_periodic(integrand, tol);
    if (!q.converged) fail(ErrorCode::nonconverged, "cauchy_polar did not converge");
    PerimeterReport rep;
    rep.method = "cauchy-polar";
    rep.value = q.value;
    rep.error_estimate = q.error_estimate;
    rep.evaluations = q.evaluations;
    rep.diagnostics["pointwise_gap"] = max_gap;
    return rep;
}

MeasureRatios measure_ratios(Curvature k, const ConvexBody& body, double t) {
    const SupportFrame f = support_frame_at(body, k, t);
    MeasureRatios m;
    const double lrho = ell(k, f.rho);
    m.dtheta_ds = ell(k, f.r) / (lrho * lrho);
    m.domega_ds = f.kappa_g * lc_product(k, f.x) / lc_product(k, f.r);
    m.domega_dtheta = m.domega_ds / m.dtheta_ds;
    if (k.k < 0) {
        const double sq = std::sqrt(-k.k);
        const double ratio = sq * ell(k, f.x) / lc_product(k, f.x); // sqrt(-k)/c(x)
        m.dphi_domega = 1.0 - ratio;
        m.dphitilde_domega = 1.0 + ratio;
        m.dphi_dtheta = m.dphi_domega * m.domega_dtheta;
    } else {
        m.dphi_domega = kNaN;
        m.dphi_dtheta = kNaN;
        m.dphitilde_domega = kNaN;
    }
    return m;
}

double dphi_dtheta_poincare(Curvature k, const SupportFrame& frame) {
    if (k.k >= 0) fail(ErrorCode::domain, "dphi_dtheta_poincare: requires k < 0");
    const double sq = std::sqrt(-k.k);
    const double rho = sq * frame.rho, r = sq * frame.r;
    const double kappa = frame.kappa_g / sq;
    const double sa = std::sin(frame.alpha);
    const double chr = std::cosh(r);
    return kappa * (std::cosh(rho) - sa * std::sinh(rho)) / (chr * chr) *
           (std::sinh(rho) * std::sinh(rho)) / std::sinh(r);
}

ArcContributions geodesic_arc_contributions(Curvature k, ChartPoint A, ChartPoint B,
                                            double tol) {
    ArcContributions out;
    const Vec2 e = B - A;
    // Cauchy part: ell(r) domega with omega constant along a chart segment;
    // computed through the parameterization to keep the evaluation honest
    auto domega = [&](double tau) {
        const Vec2 vel = e;
        const Vec2 acc{0.0, 0.0};
        (void)tau;
        return cross(vel, acc) / norm2(vel);
    };
    auto cauchy = [&](double tau) {
        const ChartPoint p = A + tau * e;
        const ChartLine line = line_through(p, e);
        return ell(k, line_support_data(k, line).r) * domega(tau);
    };
    out.cauchy_part = integrate_adaptive(cauchy, 0.0, 1.0, tol).value;
    auto area = [&](double tau) {
        const ChartPoint p = A + tau * e;
        return area_ratio(k, chart_distance(k, {0, 0}, p)) * metric_norm(k, p, e);
    };
    out.minkowski_area_part = k.k * integrate_adaptive(area, 0.0, 1.0, tol).value;
    return out;
}

} // namespace croftonlab
