#include "croftonlab/chart.hpp"

#include <cmath>

namespace croftonlab {

ChartLine make_line(double a, double b, double c, int orientation) {
    const double n = std::hypot(a, b);
    if (n == 0.0) fail(ErrorCode::domain, "make_line: degenerate normal");
    return {a / n, b / n, c / n, orientation >= 0 ? 1 : -1};
}

ChartLine line_through(ChartPoint p, Vec2 dir, int orientation) {
    const Vec2 n{dir.y, -dir.x}; // clockwise normal of the direction
    return line_point_normal(p, n, orientation);
}

ChartLine line_point_normal(ChartPoint p, Vec2 n, int orientation) {
    return make_line(n.x, n.y, -dot(n, p), orientation);
}

namespace {

// shared quadratic form pieces: D = 1 + e |p|^2 with e = sign(k)
inline double chart_e(Curvature k) { return k.k > 0 ? 1.0 : (k.k < 0 ? -1.0 : 0.0); }

inline double chart_D(Curvature k, ChartPoint p) { return 1.0 + chart_e(k) * norm2(p); }

} // namespace

double metric_dot(Curvature k, ChartPoint p, Vec2 u, Vec2 v) {
    const double e = chart_e(k);
    const double D = chart_D(k, p);
    const double q = (D * dot(u, v) - e * dot(p, u) * dot(p, v)) / (D * D);
    return k.k == 0.0 ? q : q / std::abs(k.k);
}

double metric_norm(Curvature k, ChartPoint p, Vec2 u) {
    return std::sqrt(metric_dot(k, p, u, u));
}

double metric_angle(Curvature k, ChartPoint p, Vec2 u, Vec2 v) {
    const double e = chart_e(k);
    const double D = chart_D(k, p);
    const double co = D * dot(u, v) - e * dot(p, u) * dot(p, v);
    const double si = std::sqrt(D) * cross(u, v);
    return std::atan2(si, co);
}

double chart_distance(Curvature k, ChartPoint p, ChartPoint q) {
    if (k.k == 0.0) return norm(p - q);
    if (k.k > 0) {
        // lift to the unit sphere, angle via atan2 for stability:
        // u = (p,1)/np, v = (q,1)/nq, u x v = ((p.y-q.y), (q.x-p.x), cross(p,q))/(np nq)
        const double np = std::sqrt(1.0 + norm2(p));
        const double nq = std::sqrt(1.0 + norm2(q));
        const double co = (1.0 + dot(p, q)) / (np * nq);
        const double sx = (p.y - q.y) / (np * nq);
        const double sy = (q.x - p.x) / (np * nq);
        const double sz = cross(p, q) / (np * nq);
        const double si = std::sqrt(sx * sx + sy * sy + sz * sz);
        return std::atan2(si, co) / std::sqrt(k.k);
    }
    const ChartPoint a = klein_to_poincare(p);
    const ChartPoint b = klein_to_poincare(q);
    const double num = norm(a - b);
    const double den = std::sqrt((1.0 - norm2(a)) * (1.0 - norm2(b)));
    return 2.0 * std::asinh(num / den) / std::sqrt(-k.k);
}

double chart_geodesic_curvature(Curvature k, ChartPoint p, Vec2 vel, Vec2 acc) {
    const double cr = cross(vel, acc);
    if (k.k == 0.0) {
        const double v = norm(vel);
        return cr / (v * v * v);
    }
    // determinant formula on the lift (unit sphere / hyperboloid):
    // det(X, X', X'') = cross(vel, acc) / D^(3/2), |X'|^3 from the chart form
    const double e = chart_e(k);
    const double D = chart_D(k, p);
    const double q = D * norm2(vel) - e * dot(p, vel) * dot(p, vel);
    return std::sqrt(std::abs(k.k)) * cr * D * std::sqrt(D) / (q * std::sqrt(q));
}

ChartPoint klein_to_poincare(ChartPoint p) {
    const double r2 = norm2(p);
    if (r2 >= 1.0) fail(ErrorCode::outside_chart, "klein_to_poincare: point outside disk");
    return p / (1.0 + std::sqrt(1.0 - r2));
}

ChartPoint poincare_to_klein(ChartPoint p) {
    const double r2 = norm2(p);
    if (r2 >= 1.0) fail(ErrorCode::outside_chart, "poincare_to_klein: point outside disk");
    return 2.0 / (1.0 + r2) * p;
}

double hyperbolic_distance_klein(ChartPoint p, ChartPoint q, Curvature k) {
    if (k.k >= 0.0) fail(ErrorCode::domain, "hyperbolic_distance_klein: requires k < 0");
    if (norm2(p) >= 1.0 || norm2(q) >= 1.0)
        fail(ErrorCode::outside_chart, "hyperbolic_distance_klein: point outside disk");
    return chart_distance(k, p, q);
}

double inversive_product(const ChartLine& l1, const ChartLine& l2) {
    // A chord {ax+by+c=0} is the polar of the spacelike vector (a,b,c) in the
    // hyperboloid model; the inversive product is the normalized Minkowski
    // pairing of the two poles.
    const double n1 = 1.0 - l1.c * l1.c;
    const double n2 = 1.0 - l2.c * l2.c;
    if (n1 <= 0.0 || n2 <= 0.0)
        fail(ErrorCode::domain, "inversive_product: line misses the open disk");
    const double m = l1.a * l2.a + l1.b * l2.b - l1.c * l2.c;
    return l1.orientation * l2.orientation * m / std::sqrt(n1 * n2);
}

LineSupportData line_support_data(Curvature k, const ChartLine& l) {
    const double o = static_cast<double>(l.orientation);
    const double a = o * l.a, b = o * l.b, c = o * l.c;
    if (k.k < 0 && std::abs(c) >= 1.0)
        fail(ErrorCode::outside_chart, "line_support_data: chord misses the Klein disk");
    LineSupportData out;
    out.omega = std::atan2(b, a);
    const double foot = -c; // signed chart distance along the normal
    out.r = foot >= 0 ? distance_from_chart_radius(k, foot)
                      : -distance_from_chart_radius(k, -foot);
    return out;
}

} // namespace croftonlab
