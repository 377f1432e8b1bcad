#include "croftonlab/body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "croftonlab/quadrature.hpp"

namespace croftonlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr std::size_t kGridSize = 1024;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double gauss_angle(Vec2 vel) { return std::atan2(-vel.x, vel.y); } // outward normal angle

} // namespace

double TrigPoly::eval(double t) const {
    double v = coeffs.empty() ? 0.0 : coeffs[0];
    for (std::size_t m = 1; 2 * m - 1 < coeffs.size(); ++m) {
        const double c = std::cos(m * t), s = std::sin(m * t);
        v += coeffs[2 * m - 1] * c;
        if (2 * m < coeffs.size()) v += coeffs[2 * m] * s;
    }
    return v;
}

double TrigPoly::d1(double t) const {
    double v = 0.0;
    for (std::size_t m = 1; 2 * m - 1 < coeffs.size(); ++m) {
        const double c = std::cos(m * t), s = std::sin(m * t);
        v += coeffs[2 * m - 1] * (-double(m) * s);
        if (2 * m < coeffs.size()) v += coeffs[2 * m] * (double(m) * c);
    }
    return v;
}

double TrigPoly::d2(double t) const {
    double v = 0.0;
    for (std::size_t m = 1; 2 * m - 1 < coeffs.size(); ++m) {
        const double m2 = double(m) * double(m);
        const double c = std::cos(m * t), s = std::sin(m * t);
        v += coeffs[2 * m - 1] * (-m2 * c);
        if (2 * m < coeffs.size()) v += coeffs[2 * m] * (-m2 * s);
    }
    return v;
}

ConvexBody ConvexBody::polygon(std::vector<ChartPoint> vertices) {
    ConvexBody b;
    b.kind = Kind::polygon;
    b.vertices = std::move(vertices);
    return b;
}

ConvexBody ConvexBody::smooth(TrigPoly x, TrigPoly y) {
    ConvexBody b;
    b.kind = Kind::smooth;
    b.x = std::move(x);
    b.y = std::move(y);
    return b;
}

ConvexBody ConvexBody::circle(ChartPoint center, double chart_radius) {
    TrigPoly px, py;
    px.coeffs = {center.x, chart_radius, 0.0};
    py.coeffs = {center.y, 0.0, chart_radius};
    return smooth(std::move(px), std::move(py));
}

ConvexBody ConvexBody::point(ChartPoint p) { return polygon({p}); }

ConvexBody ConvexBody::segment(ChartPoint p, ChartPoint q) { return polygon({p, q}); }

double ConvexBody::period() const {
    return kind == Kind::smooth ? kTwoPi : double(vertices.size());
}

ChartPoint ConvexBody::point_at(double t) const {
    if (kind == Kind::smooth) return {x.eval(t), y.eval(t)};
    const double n = double(vertices.size());
    double tt = std::fmod(t, n);
    if (tt < 0) tt += n;
    const std::size_t i = std::min(vertices.size() - 1, std::size_t(tt));
    const double tau = tt - double(i);
    const ChartPoint v0 = vertices[i];
    const ChartPoint v1 = vertices[(i + 1) % vertices.size()];
    return v0 + tau * (v1 - v0);
}

Vec2 ConvexBody::velocity_at(double t) const {
    if (kind == Kind::smooth) return {x.d1(t), y.d1(t)};
    const double n = double(vertices.size());
    double tt = std::fmod(t, n);
    if (tt < 0) tt += n;
    const std::size_t i = std::min(vertices.size() - 1, std::size_t(tt));
    if (tt - double(i) == 0.0)
        fail(ErrorCode::vertex, "velocity requested exactly at a polygon vertex");
    return vertices[(i + 1) % vertices.size()] - vertices[i];
}

Vec2 ConvexBody::acceleration_at(double t) const {
    if (kind == Kind::smooth) return {x.d2(t), y.d2(t)};
    return {0.0, 0.0};
}

void ConvexBody::require_validated(Curvature k) const {
    if (!validated) fail(ErrorCode::bad_input, "body was not validated");
    if (valid_k.k != k.k) fail(ErrorCode::bad_input, "body validated for a different curvature");
}

namespace {

void validate_polygon(ConvexBody& b, Curvature k, const ValidateOptions& opts) {
    const std::size_t n = b.vertices.size();
    if (n < 3) {
        if (!opts.allow_degenerate || n == 0)
            fail(ErrorCode::bad_input, "polygon needs at least 3 vertices");
        b.degenerate = true;
    }
    if (k.k < 0) {
        for (const auto& v : b.vertices)
            if (norm2(v) >= 1.0 - 1e-12)
                fail(ErrorCode::outside_chart, "vertex outside the Klein disk");
    }
    Vec2 sum{0, 0};
    double maxr = 0.0;
    for (const auto& v : b.vertices) {
        sum = sum + v;
        maxr = std::max(maxr, norm(v));
    }
    b.interior_point = sum / double(n);
    b.max_chart_radius = maxr;

    if (!b.degenerate) {
        int pos = 0, neg = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 e0 = b.vertices[(i + 1) % n] - b.vertices[i];
            const Vec2 e1 = b.vertices[(i + 2) % n] - b.vertices[(i + 1) % n];
            const double c = cross(e0, e1);
            if (c > 0) ++pos;
            else if (c < 0) ++neg;
        }
        if (pos + neg < int(n) || (pos > 0 && neg > 0))
            fail(ErrorCode::non_convex, "polygon is not strictly convex");
        if (neg == int(n)) fail(ErrorCode::not_ccw, "polygon is clockwise");
        b.convex = true;
    }

    b.edge_normals.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e = b.vertices[(i + 1) % n] - b.vertices[i];
        b.edge_normals[i] = gauss_angle(e);
    }
}

void validate_smooth(ConvexBody& b, Curvature k, const ValidateOptions& opts) {
    const std::size_t N = kGridSize;
    b.grid_points.resize(N);
    b.grid_velocities.resize(N);
    b.gauss_cache.assign(N + 1, 0.0);

    double max_speed = 0.0, min_speed = std::numeric_limits<double>::infinity();
    double maxr = 0.0;
    Vec2 sum{0, 0};
    bool convex = true;
    for (std::size_t i = 0; i < N; ++i) {
        const double t = kTwoPi * double(i) / double(N);
        const ChartPoint p = b.point_at(t);
        const Vec2 v = b.velocity_at(t);
        const Vec2 a = b.acceleration_at(t);
        b.grid_points[i] = p;
        b.grid_velocities[i] = v;
        sum = sum + p;
        maxr = std::max(maxr, norm(p));
        const double sp = norm(v);
        max_speed = std::max(max_speed, sp);
        min_speed = std::min(min_speed, sp);
        if (cross(v, a) <= 0.0) convex = false;
    }
    if (min_speed <= 1e-12 * (max_speed + 1.0))
        fail(ErrorCode::irregular_curve, "curve is not regular on the sample grid");
    if (opts.require_convex && !convex)
        fail(ErrorCode::non_convex, "curve has nonpositive chart curvature");
    if (k.k < 0 && maxr >= 1.0 - 1e-12)
        fail(ErrorCode::outside_chart, "curve leaves the Klein disk");

    // orientation: tangent winding must be +1
    double winding = 0.0;
    double prev = angle_of(b.grid_velocities[0]);
    for (std::size_t i = 1; i <= N; ++i) {
        const double cur = angle_of(b.grid_velocities[i % N]);
        winding += wrap_pi(cur - prev);
        prev = cur;
    }
    if (winding < kPi) fail(ErrorCode::not_ccw, "curve is clockwise");

    b.convex = convex;
    b.interior_point = sum / double(N);
    b.max_chart_radius = maxr;

    // unwrapped outward-normal angles for support-line bracketing
    if (convex) {
        double w = gauss_angle(b.grid_velocities[0]);
        b.gauss_cache[0] = w;
        double prev_angle = w;
        for (std::size_t i = 1; i <= N; ++i) {
            const double cur = gauss_angle(b.grid_velocities[i % N]);
            const double inc = wrap_pi(cur - prev_angle);
            if (inc <= 0.0 && i < N) fail(ErrorCode::non_convex, "normal angle not monotone");
            w += inc;
            b.gauss_cache[i] = w;
            prev_angle = cur;
        }
    }
}

} // namespace

ConvexBody validate(ConvexBody body, Curvature k, ValidateOptions opts) {
    if (body.kind == ConvexBody::Kind::polygon) validate_polygon(body, k, opts);
    else validate_smooth(body, k, opts);
    body.validated = true;
    body.valid_k = k;
    return body;
}

BoundaryFrame boundary_frame(const ConvexBody& body, Curvature k, double t, ChartPoint origin) {
    body.require_validated(k);
    BoundaryFrame f;
    f.t = t;
    f.point = body.point_at(t);
    const Vec2 vel = body.velocity_at(t);
    const Vec2 acc = body.acceleration_at(t);

    f.rho = chart_distance(k, origin, f.point);
    f.speed = metric_norm(k, f.point, vel);
    f.kappa_g = body.kind == ConvexBody::Kind::polygon
                    ? 0.0
                    : chart_geodesic_curvature(k, f.point, vel, acc);

    // geodesic polar angle about the origin: straighten with the metric root
    // at the origin so chart directions compare with true angles
    Vec2 q = f.point - origin;
    Vec2 qv = vel;
    const double e = k.k > 0 ? 1.0 : (k.k < 0 ? -1.0 : 0.0);
    const double o2 = norm2(origin);
    if (e != 0.0 && o2 > 0.0) {
        const double D = 1.0 + e * o2;
        const double rootD = std::sqrt(D);
        const Vec2 ohat = origin / std::sqrt(o2);
        auto L = [&](Vec2 v) { return rootD * v + (1.0 - rootD) * dot(ohat, v) * ohat; };
        q = L(q);
        qv = L(qv);
    }
    f.theta = angle_of(q);
    f.dtheta_dt = cross(q, qv) / norm2(q);

    // alpha = angle(radial -> outward normal) = angle(radial -> tangent) - pi/2,
    // measured with the metric at the boundary point
    const Vec2 radial = f.point - origin;
    f.alpha = wrap_pi(metric_angle(k, f.point, radial, vel) - kPi / 2.0);
    f.s = kNaN;
    return f;
}

namespace {

// support quantities shared by the smooth and polygon paths
void fill_support_extras(SupportFrame& f, Curvature k, const ChartLine& line) {
    const LineSupportData sd = line_support_data(k, line);
    f.line = line;
    f.omega = sd.omega;
    f.r = sd.r;
    const double d = wrap_pi(f.omega - f.theta);
    f.x = ell_inv(k, ell(k, f.rho) * std::sin(d));
    f.beta = wrap_pi(kPi / 2.0 - f.alpha);
    if (k.k < 0) {
        // ideal endpoints of the support chord; the right one carries phi
        const Vec2 n{line.a, line.b};
        const Vec2 foot = -line.c * n;
        const Vec2 dir{-line.b, line.a};
        const double h = std::sqrt(std::max(0.0, 1.0 - line.c * line.c));
        f.phi = angle_of(foot - h * dir);
        f.phi_tilde = angle_of(foot + h * dir);
    } else {
        f.phi = kNaN;
        f.phi_tilde = kNaN;
    }
}

SupportFrame frame_from_contact_line(const ConvexBody& body, Curvature k, ChartPoint contact,
                                     const ChartLine& line, double t) {
    SupportFrame f;
    f.t = t;
    f.point = contact;
    f.rho = chart_distance(k, {0, 0}, contact);
    f.theta = angle_of(contact);
    f.speed = kNaN;
    f.kappa_g = kNaN;
    f.dtheta_dt = kNaN;
    f.domega_dt = kNaN;
    f.s = kNaN;
    const LineSupportData sd = line_support_data(k, line);
    const double d = wrap_pi(sd.omega - f.theta);
    // alpha from the triangle bundle: cos = ell(r)/ell(rho), sin = lc(r) sin(omega-theta)
    f.alpha = std::atan2(lc_product(k, sd.r) * std::sin(d),
                         ell(k, sd.r) / std::max(ell(k, f.rho), 1e-300));
    fill_support_extras(f, k, line);
    (void)body;
    return f;
}

} // namespace

SupportFrame support_frame_at(const ConvexBody& body, Curvature k, double t) {
    if (body.kind != ConvexBody::Kind::smooth)
        fail(ErrorCode::bad_input, "support_frame_at expects a smooth body");
    if (!body.convex) fail(ErrorCode::non_convex, "support frame requires a convex body");
    SupportFrame f;
    static_cast<BoundaryFrame&>(f) = boundary_frame(body, k, t);
    const Vec2 vel = body.velocity_at(t);
    const Vec2 acc = body.acceleration_at(t);
    const Vec2 n_out{vel.y, -vel.x};
    const ChartLine line = line_point_normal(f.point, n_out);
    fill_support_extras(f, k, line);
    f.domega_dt = cross(vel, acc) / norm2(vel);
    return f;
}

namespace {

double gauss_at(const ConvexBody& body, double t) { return gauss_angle(body.velocity_at(t)); }

} // namespace

SupportLineResult support_line_at_omega(const ConvexBody& body, Curvature k, double omega) {
    body.require_validated(k);
    if (!body.convex && !body.degenerate)
        fail(ErrorCode::non_convex, "support lines require a convex body");

    SupportLineResult out;
    if (body.kind == ConvexBody::Kind::smooth) {
        const auto& W = body.gauss_cache;
        const std::size_t N = W.size() - 1;
        const double target = W[0] + wrap_2pi(omega - W[0]);
        const auto it = std::upper_bound(W.begin(), W.end(), target);
        std::size_t i = it == W.begin() ? 0 : std::size_t(it - W.begin()) - 1;
        if (i >= N) i = N - 1;
        const double t0 = kTwoPi * double(i) / double(N);
        const double t1 = kTwoPi * double(i + 1) / double(N);
        const double base = gauss_at(body, t0);
        auto g = [&](double t) { return W[i] + wrap_pi(gauss_at(body, t) - base) - target; };
        double root;
        const double g0 = g(t0), g1 = g(t1);
        if (g0 >= 0.0) root = t0;
        else if (g1 <= 0.0) root = t1;
        else root = find_root_monotone(g, t0, t1, 1e-14);
        out.frame = support_frame_at(body, k, root);
        out.line = out.frame.line;
        out.contact = out.frame.point;
        return out;
    }

    // polygon: edge normals split the circle into vertex fans
    const std::size_t n = body.vertices.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (std::abs(wrap_pi(omega - body.edge_normals[j])) < 1e-12) {
            const ChartPoint v0 = body.vertices[j];
            const ChartPoint v1 = body.vertices[(j + 1) % n];
            out.edge_contact = true;
            out.contact = 0.5 * (v0 + v1);
            out.line = line_through(v0, v1 - v0);
            if (line_eval(out.line, body.interior_point) > 0)
                out.line = make_line(-out.line.a, -out.line.b, -out.line.c);
            out.frame = frame_from_contact_line(body, k, out.contact, out.line, double(j));
            return out;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double prev = body.edge_normals[(i + n - 1) % n];
        const double width = wrap_2pi(body.edge_normals[i] - prev);
        const double off = wrap_2pi(omega - prev);
        if (off <= width || n == 1) {
            out.contact = body.vertices[i];
            out.line = line_point_normal(out.contact, from_angle(omega));
            out.frame = frame_from_contact_line(body, k, out.contact, out.line, double(i));
            return out;
        }
    }
    fail(ErrorCode::bad_input, "support_line_at_omega: empty normal fan");
}

ExtremeRays extreme_ray_angles(const ConvexBody& body, ChartPoint R, Vec2 ref_dir) {
    if (!body.validated) fail(ErrorCode::bad_input, "body was not validated");
    const double ref = angle_of(ref_dir);
    ExtremeRays out;
    if (body.kind == ConvexBody::Kind::polygon) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (const auto& v : body.vertices) {
            const double psi = wrap_2pi(angle_of(v - R) - ref);
            if (psi < lo) { lo = psi; out.contact1 = v; }
            if (psi > hi) { hi = psi; out.contact2 = v; }
        }
        out.psi1 = lo;
        out.psi2 = hi;
        return out;
    }
    // smooth: tangency roots of cross(gamma - R, gamma')
    const std::size_t N = body.grid_points.size();
    auto zeta = [&](double t) {
        return cross(body.point_at(t) - R, body.velocity_at(t));
    };
    std::vector<double> roots;
    double prev_val = cross(body.grid_points[0] - R, body.grid_velocities[0]);
    for (std::size_t i = 1; i <= N && roots.size() < 2; ++i) {
        const double t0 = kTwoPi * double(i - 1) / double(N);
        const double t1 = kTwoPi * double(i) / double(N);
        const std::size_t j = i % N;
        const double cur_val = cross(body.grid_points[j] - R, body.grid_velocities[j]);
        if ((prev_val <= 0.0) != (cur_val <= 0.0))
            roots.push_back(find_root_monotone(zeta, t0, t1, 1e-14));
        prev_val = cur_val;
    }
    if (roots.size() != 2)
        fail(ErrorCode::domain, "extreme_ray_angles: viewpoint not exterior to the body");
    const ChartPoint c0 = body.point_at(roots[0]);
    const ChartPoint c1 = body.point_at(roots[1]);
    const double a0 = wrap_2pi(angle_of(c0 - R) - ref);
    const double a1 = wrap_2pi(angle_of(c1 - R) - ref);
    if (a0 <= a1) {
        out.psi1 = a0; out.contact1 = c0;
        out.psi2 = a1; out.contact2 = c1;
    } else {
        out.psi1 = a1; out.contact1 = c1;
        out.psi2 = a0; out.contact2 = c0;
    }
    return out;
}

IdealSupportResult support_lines_from_ideal(const ConvexBody& body, Curvature k, double phi) {
    body.require_validated(k);
    if (k.k >= 0) fail(ErrorCode::domain, "support_lines_from_ideal: requires k < 0");
    if (body.max_chart_radius >= 1.0 - 1e-9)
        fail(ErrorCode::domain, "support_lines_from_ideal: body touches the ideal boundary");

    const ChartPoint R = from_angle(phi);
    const Vec2 dT = perp(R); // tangent of the ideal circle at R
    const ExtremeRays er = extreme_ray_angles(body, R, dT);

    IdealSupportResult out;
    out.psi1 = er.psi1;
    out.psi2 = er.psi2;
    out.right_contact = er.contact1;
    out.left_contact = er.contact2;

    auto tangent_line = [&](ChartPoint contact) {
        Vec2 dir = contact - R;
        if (norm2(dir) == 0.0) dir = dT;
        ChartLine l = line_through(R, dir);
        const double side = line_eval(l, body.interior_point);
        if (side > 1e-15) l = make_line(-l.a, -l.b, -l.c);
        return l;
    };
    out.right = tangent_line(er.contact1);
    out.left = tangent_line(er.contact2);

    const double cot1 = std::cos(er.psi1) / std::sin(er.psi1);
    const double cot2 = std::cos(er.psi2) / std::sin(er.psi2);
    out.h = cot1;
    out.w = cot1 - cot2;
    return out;
}

double arclength_perimeter(const ConvexBody& body, Curvature k, double tol) {
    body.require_validated(k);
    if (body.kind == ConvexBody::Kind::polygon) {
        const std::size_t n = body.vertices.size();
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            total += chart_distance(k, body.vertices[i], body.vertices[(i + 1) % n]);
        return total;
    }
    auto speed = [&](double t) { return metric_norm(k, body.point_at(t), body.velocity_at(t)); };
    return integrate_periodic(speed, tol).value;
}

std::pair<double, double> line_body_intersections(const ConvexBody& body, ChartPoint P,
                                                  Vec2 dir) {
    if (!body.validated) fail(ErrorCode::bad_input, "body was not validated");
    const double dn = norm(dir);
    if (dn == 0.0) fail(ErrorCode::domain, "line_body_intersections: zero direction");
    const Vec2 d = dir / dn;

    std::vector<double> taus;
    if (body.kind == ConvexBody::Kind::polygon) {
        const std::size_t n = body.vertices.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 v = body.vertices[i];
            const Vec2 e = body.vertices[(i + 1) % n] - v;
            const double den = cross(d, e);
            if (std::abs(den) < 1e-300) continue;
            const Vec2 w = v - P;
            const double s = cross(w, d) / den;
            if (s < -1e-12 || s > 1.0 + 1e-12) continue;
            taus.push_back(cross(w, e) / den);
        }
    } else {
        auto g = [&](double t) { return cross(d, body.point_at(t) - P); };
        const std::size_t N = body.grid_points.size();
        double prev = cross(d, body.grid_points[0] - P);
        for (std::size_t i = 1; i <= N; ++i) {
            const double t0 = kTwoPi * double(i - 1) / double(N);
            const double t1 = kTwoPi * double(i) / double(N);
            const double cur = cross(d, body.grid_points[i % N] - P);
            if ((prev <= 0.0) != (cur <= 0.0)) {
                double t = find_root_monotone(g, t0, t1, 1e-13);
                // one Newton polish; the cross-ratio is sensitive to endpoints
                for (int it = 0; it < 2; ++it) {
                    const double gp = cross(d, body.velocity_at(t));
                    if (gp != 0.0) t -= g(t) / gp;
                }
                taus.push_back(dot(body.point_at(t) - P, d));
            }
            prev = cur;
        }
    }
    std::sort(taus.begin(), taus.end());
    taus.erase(std::unique(taus.begin(), taus.end(),
                           [](double u, double v) { return std::abs(u - v) < 1e-9; }),
               taus.end());
    if (taus.size() != 2)
        fail(ErrorCode::domain, "line does not cross the boundary in two points");
    return {taus[0], taus[1]};
}

bool point_strictly_inside(const ConvexBody& body, ChartPoint p, double margin) {
    if (!body.validated) fail(ErrorCode::bad_input, "body was not validated");
    if (body.kind == ConvexBody::Kind::polygon) {
        const std::size_t n = body.vertices.size();
        if (n < 3) return false;
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 v = body.vertices[i];
            const Vec2 e = body.vertices[(i + 1) % n] - v;
            if (cross(e, p - v) <= margin * norm(e)) return false;
        }
        return true;
    }
    const std::size_t N = body.grid_points.size();
    for (std::size_t i = 0; i < N; ++i) {
        const Vec2 vel = body.grid_velocities[i];
        if (cross(vel, p - body.grid_points[i]) <= margin * norm(vel)) return false;
    }
    return true;
}

} // namespace croftonlab
