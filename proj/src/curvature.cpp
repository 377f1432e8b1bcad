#include "croftonlab/curvature.hpp"

#include <algorithm>
#include <cmath>

namespace croftonlab {

namespace {

constexpr double kSeriesThreshold = 1e-8; // switch to series when |k r^2| below this
constexpr double kPi = 3.14159265358979323846;

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

} // namespace

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::bad_input: return "BAD_INPUT";
        case ErrorCode::domain: return "DOMAIN";
        case ErrorCode::non_convex: return "NON_CONVEX";
        case ErrorCode::not_ccw: return "NOT_CCW";
        case ErrorCode::outside_chart: return "OUTSIDE_CHART";
        case ErrorCode::irregular_curve: return "IRREGULAR_CURVE";
        case ErrorCode::near_pole: return "NEAR_POLE";
        case ErrorCode::vertex: return "VERTEX";
        case ErrorCode::nonconverged: return "NONCONVERGED";
    }
    return "UNKNOWN";
}

double ell(Curvature k, double r) {
    const double u = k.k * r * r;
    if (std::abs(u) < kSeriesThreshold) {
        // r * sum (-u)^n / (2n+1)!
        return r * (1.0 - u / 6.0 * (1.0 - u / 20.0 * (1.0 - u / 42.0)));
    }
    if (k.k > 0) {
        const double s = std::sqrt(k.k);
        return std::sin(s * r) / s;
    }
    const double s = std::sqrt(-k.k);
    return std::sinh(s * r) / s;
}

double area_ratio(Curvature k, double r) {
    r = std::abs(r);
    const double u = k.k * r * r;
    if (std::abs(u) < kSeriesThreshold) {
        // r^2 * sum (-1)^(n+1) u^(n-1) / (2n)!
        return r * r * (0.5 - u / 24.0 * (1.0 - u / 30.0 * (1.0 - u / 56.0)));
    }
    if (k.k > 0) {
        const double h = 0.5 * std::sqrt(k.k) * r;
        const double s = std::sin(h);
        return 2.0 * s * s / k.k; // (1 - cos)/k without cancellation
    }
    const double h = 0.5 * std::sqrt(-k.k) * r;
    const double s = std::sinh(h);
    return 2.0 * s * s / (-k.k);
}

double lc_product(Curvature k, double r) {
    const double u = k.k * r * r;
    if (std::abs(u) < kSeriesThreshold) {
        return 1.0 - u / 2.0 * (1.0 - u / 12.0 * (1.0 - u / 30.0));
    }
    if (k.k > 0) return std::cos(std::sqrt(k.k) * r);
    return std::cosh(std::sqrt(-k.k) * r);
}

double circle_curvature(Curvature k, double r) {
    if (r == 0.0) fail(ErrorCode::domain, "circle_curvature: pole at r = 0");
    const double u = k.k * r * r;
    if (std::abs(u) < kSeriesThreshold) {
        // (1/r) * (x cot x) series in u = x^2
        return (1.0 - u / 3.0 - u * u / 45.0) / r;
    }
    const double l = ell(k, r);
    if (l == 0.0) fail(ErrorCode::domain, "circle_curvature: pole (r multiple of pi/sqrt(k))");
    return lc_product(k, r) / l;
}

double ell_inv(Curvature k, double value) {
    const double u = k.k * value * value;
    if (k.k > 0 && std::abs(u) >= kSeriesThreshold) {
        const double s = std::sqrt(k.k);
        return std::asin(clamp_unit(value * s)) / s;
    }
    if (k.k < 0 && std::abs(u) >= kSeriesThreshold) {
        const double s = std::sqrt(-k.k);
        return std::asinh(value * s) / s;
    }
    if (u == 0.0) return value;
    // invert the three-term series: r = v (1 + w/6 (1 + 17 w/... )) with w = k v^2
    return value * (1.0 + u / 6.0 + 3.0 * u * u / 40.0);
}

double distance_from_chart_radius(Curvature k, double t) {
    if (k.k > 0) return std::atan(t) / std::sqrt(k.k);
    if (k.k < 0) {
        if (std::abs(t) >= 1.0) fail(ErrorCode::outside_chart, "chart radius outside Klein disk");
        return std::atanh(t) / std::sqrt(-k.k);
    }
    return t;
}

double chart_radius_from_distance(Curvature k, double rho) {
    if (k.k > 0) return std::tan(std::sqrt(k.k) * rho);
    if (k.k < 0) return std::tanh(std::sqrt(-k.k) * rho);
    return rho;
}

double hypotenuse(Curvature k, double a, double b) {
    if (a < 0 || b < 0) fail(ErrorCode::domain, "hypotenuse: legs must be nonnegative");
    if (k.k > 0) {
        const double lim = kPi / (2.0 * std::sqrt(k.k));
        if (a >= lim || b >= lim)
            fail(ErrorCode::domain, "hypotenuse: spherical legs must be < pi/(2 sqrt k)");
    }
    const double u = k.k * (a * a + b * b);
    if (std::abs(u) < kSeriesThreshold) {
        const double c2 = a * a + b * b - k.k * a * a * b * b / 3.0;
        return std::sqrt(c2);
    }
    if (k.k > 0) {
        const double s = std::sqrt(k.k);
        return std::acos(clamp_unit(std::cos(s * a) * std::cos(s * b))) / s;
    }
    const double s = std::sqrt(-k.k);
    return std::acosh(std::cosh(s * a) * std::cosh(s * b)) / s;
}

namespace {

// tangent analogue ell(r)/lc(r) = 1/c(r) and its inverse
double tan_like(Curvature k, double r) { return ell(k, r) / lc_product(k, r); }

double tan_like_inv(Curvature k, double v) {
    if (k.k > 0) {
        const double s = std::sqrt(k.k);
        return std::atan(v * s) / s;
    }
    if (k.k < 0) {
        const double s = std::sqrt(-k.k);
        return std::atanh(v * s) / s;
    }
    return v;
}

} // namespace

RightTriangle solve_right_triangle(Curvature k, double hyp_c, double angle_alpha) {
    if (angle_alpha < 0 || angle_alpha > kPi / 2.0 + 1e-15)
        fail(ErrorCode::domain, "solve_right_triangle: alpha outside [0, pi/2]");
    if (hyp_c < 0) fail(ErrorCode::domain, "solve_right_triangle: negative hypotenuse");
    if (k.k > 0 && hyp_c >= kPi / (2.0 * std::sqrt(k.k)))
        fail(ErrorCode::domain, "solve_right_triangle: hypotenuse too long for sphere");

    RightTriangle t;
    t.hyp_c = hyp_c;
    t.angle_alpha = angle_alpha;

    const double sa = std::sin(angle_alpha);
    const double ca = std::cos(angle_alpha);

    // law of sines gives the leg opposite alpha, the tangent relation the other
    t.leg_a = ell_inv(k, ell(k, hyp_c) * sa);
    t.leg_b = tan_like_inv(k, tan_like(k, hyp_c) * ca);
    if (k.k < 0 && !(tan_like(k, hyp_c) * ca < 1.0 / std::sqrt(-k.k) * 0.999999)) {
        // tanh saturates for long hypotenuses; fall back to the Pythagorean form
        const double s = std::sqrt(-k.k);
        t.leg_b = std::acosh(std::cosh(s * hyp_c) / std::cosh(s * t.leg_a)) / s;
    }

    // sin beta = cos(alpha)/lc(a), cos beta = lc(c) sin(alpha)/lc(a)
    t.angle_beta = std::atan2(ca, lc_product(k, hyp_c) * sa);
    return t;
}

double angle_of_parallelism(Curvature k, double a) {
    if (k.k >= 0) fail(ErrorCode::domain, "angle_of_parallelism: requires k < 0");
    if (a < 0) fail(ErrorCode::domain, "angle_of_parallelism: negative length");
    return std::atan2(1.0, std::sqrt(-k.k) * ell(k, a));
}

} // namespace croftonlab
