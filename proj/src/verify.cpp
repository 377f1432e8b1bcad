#include "croftonlab/verify.hpp"

#include <algorithm>
#include <cmath>

#include "croftonlab/hilbert.hpp"
#include "croftonlab/perimeter.hpp"
#include "croftonlab/quadrature.hpp"
#include "croftonlab/rng.hpp"

namespace croftonlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
const Curvature kHyp{-1.0};
const Curvature kFlat{0.0};
const Curvature kSphere{1.0};

struct Checker {
    std::vector<CheckResult> results;

    void add(const std::string& name, double dev, double threshold) {
        results.push_back({name, dev, threshold, dev <= threshold});
    }
    void add_flag(const std::string& name, double dev, double threshold, bool pass) {
        results.push_back({name, dev, threshold, pass});
    }
};

double fd5(const std::function<double(double)>& f, double t, double h) {
    return central_diff(f, t, h, 5);
}

ChartPoint random_disk_point(SeededRng& rng, double max_r) {
    const double r = std::sqrt(rng.uniform()) * max_r;
    const double a = rng.uniform(0.0, kTwoPi);
    return {r * std::cos(a), r * std::sin(a)};
}

// ---------------------------------------------------------------- core suite

void check_unified_trig(Checker& out) {
    double lc_dev = 0.0, dell_dev = 0.0, dc_dev = 0.0;
    for (double kk : {-1.0, -0.37, 0.0, 0.52, 1.0}) {
        const Curvature k{kk};
        for (double r : {0.15, 0.4, 0.8, 1.3, -0.6}) {
            lc_dev = std::max(lc_dev, std::abs(ell(k, r) * circle_curvature(k, r) -
                                               (1.0 - kk * area_ratio(k, r))));
            const double h = 1e-4;
            dell_dev = std::max(
                dell_dev, std::abs(fd5([&](double s) { return ell(k, s); }, r, h) -
                                   lc_product(k, r)));
            const double lr = ell(k, r);
            dc_dev = std::max(
                dc_dev, std::abs(fd5([&](double s) { return circle_curvature(k, s); }, r, h) +
                                 1.0 / (lr * lr)));
        }
    }
    out.add("core/lc-identity", lc_dev, 1e-12);
    out.add("core/ell-derivative", dell_dev, 1e-8);
    out.add("core/circle-curvature-derivative", dc_dev, 1e-8);

    double series_dev = 0.0;
    for (double r : {0.3, 1.0, 2.5}) {
        for (double kk : {1e-12, -1e-12}) {
            const Curvature k{kk};
            series_dev = std::max(series_dev, std::abs(ell(k, r) - r));
            series_dev = std::max(series_dev, std::abs(area_ratio(k, r) - r * r / 2));
            series_dev = std::max(series_dev, std::abs(circle_curvature(k, r) - 1.0 / r));
        }
    }
    out.add("core/series-continuity", series_dev, 1e-9);
}

void check_right_triangles(Checker& out, SeededRng& rng) {
    double dev = 0.0;
    for (double kk : {-1.0, 0.0, 1.0}) {
        const Curvature k{kk};
        for (int i = 0; i < 20; ++i) {
            const double c = rng.uniform(0.1, 1.4);
            const double alpha = rng.uniform(0.05, kPi / 2 - 0.05);
            const RightTriangle t = solve_right_triangle(k, c, alpha);
            const double la = ell(k, t.leg_a), lb = ell(k, t.leg_b), lc = ell(k, t.hyp_c);
            dev = std::max(dev, std::abs(la / std::sin(t.angle_alpha) - lc));
            dev = std::max(dev, std::abs(lb / std::sin(t.angle_beta) - lc));
            dev = std::max(dev, std::abs(lc_product(k, t.hyp_c) -
                                         lc_product(k, t.leg_a) * lc_product(k, t.leg_b)));
            dev = std::max(dev, std::abs(std::sin(t.angle_beta) - lb / lc));
            dev = std::max(dev, std::abs(std::cos(t.angle_beta) -
                                         circle_curvature(k, t.hyp_c) /
                                             circle_curvature(k, t.leg_a)));
            dev = std::max(dev, std::abs(std::tan(t.angle_beta) -
                                         1.0 / (la * circle_curvature(k, t.leg_b))));
            dev = std::max(dev, std::abs(std::cos(t.angle_beta) -
                                         lb * circle_curvature(k, t.leg_b) *
                                             std::sin(t.angle_alpha)));
        }
    }
    out.add("core/right-triangle-identities", dev, 1e-12);

    double par_dev = 0.0;
    for (double a_target : {0.5, 1.0, 2.0}) {
        const double alpha = std::asin(ell(kHyp, a_target) / ell(kHyp, 30.0));
        const RightTriangle t = solve_right_triangle(kHyp, 30.0, alpha);
        par_dev = std::max(par_dev,
                           std::abs(t.angle_beta - angle_of_parallelism(kHyp, t.leg_a)));
    }
    out.add("core/parallelism-limit", par_dev, 1e-9);
}

void check_quadrature(Checker& out) {
    auto sin2 = [](double t) { const double s = std::sin(t); return s * s; };
    auto expcos = [](double t) { return std::exp(std::cos(t)); };
    double ref = 0.0;
    const long n = 1 << 20;
    for (long i = 0; i < n; ++i) ref += expcos(kTwoPi * i / n);
    ref *= kTwoPi / n;
    double dev = std::abs(integrate_periodic(sin2, 1e-12).value - kPi);
    dev = std::max(dev, std::abs(integrate_periodic([](double) { return 1.7; }, 1e-12).value -
                                 1.7 * kTwoPi));
    dev = std::max(dev, std::abs(integrate_periodic(expcos, 1e-12).value - ref));
    out.add("core/periodic-quadrature-reference", dev, 1e-10);

    dev = std::abs(integrate_adaptive([](double x) { return x * x; }, 0, 1, 1e-12).value -
                   1.0 / 3.0);
    dev = std::max(dev, std::abs(integrate_adaptive([](double x) { return std::tan(x); }, 0,
                                                    kPi / 4, 1e-12)
                                     .value -
                                 0.5 * std::log(2.0)));
    const double beta = 3 * kPi / 4, gamma = kPi / 4;
    dev = std::max(dev, std::abs(integrate_adaptive(
                                     [&](double t) {
                                         return std::cos(beta - t) / std::sin(beta - t);
                                     },
                                     0, gamma, 1e-12)
                                     .value +
                                 0.5 * std::log(2.0)));
    out.add("core/adaptive-quadrature-reference", dev, 1e-11);

    dev = std::abs(central_diff([](double x) { return std::sin(x); }, 0.0, 1e-3, 5) - 1.0);
    dev = std::max(dev, std::abs(central_diff([](double x) { return x * x; }, 3.0, 0.1, 3) - 6.0));
    dev = std::max(dev, std::abs(central_diff([](double x) { return std::exp(x); }, 1.0, 1e-3, 5) -
                                 std::exp(1.0)));
    out.add("core/central-difference-reference", dev, 1e-9);

    dev = std::abs(find_root_monotone([](double x) { return std::tanh(x) - 0.5; }, 0, 2, 1e-14) -
                   std::atanh(0.5));
    dev = std::max(dev, std::abs(find_root_monotone([](double x) { return std::cos(x); }, 0, kPi,
                                                    1e-14) -
                                 kPi / 2));
    out.add("core/root-finding-reference", dev, 1e-12);

    const QuadResult a = integrate_periodic(expcos, 1e-10);
    const QuadResult b = integrate_periodic(expcos, 1e-10);
    out.add_flag("core/quadrature-determinism", std::abs(a.value - b.value), 0.0,
                 a.value == b.value && a.evaluations == b.evaluations);
}

void check_chart(Checker& out, SeededRng& rng) {
    double rt = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const ChartPoint p = random_disk_point(rng, 0.999);
        rt = std::max(rt, norm(poincare_to_klein(klein_to_poincare(p)) - p));
    }
    out.add("core/klein-poincare-roundtrip", rt, 1e-14);

    double rot_dev = 0.0, tri_dev = 0.0;
    for (int i = 0; i < 3000; ++i) {
        const ChartPoint p = random_disk_point(rng, 0.95);
        const ChartPoint q = random_disk_point(rng, 0.95);
        const ChartPoint w = random_disk_point(rng, 0.95);
        const double rot = rng.uniform(0.0, kTwoPi);
        auto R = [&](ChartPoint v) {
            return ChartPoint{v.x * std::cos(rot) - v.y * std::sin(rot),
                              v.x * std::sin(rot) + v.y * std::cos(rot)};
        };
        rot_dev = std::max(rot_dev, std::abs(hyperbolic_distance_klein(R(p), R(q)) -
                                             hyperbolic_distance_klein(p, q)));
        tri_dev = std::max(tri_dev, hyperbolic_distance_klein(p, w) -
                                        hyperbolic_distance_klein(p, q) -
                                        hyperbolic_distance_klein(q, w));
    }
    out.add("core/klein-distance-rotation-invariance", rot_dev, 1e-10);
    out.add("core/klein-triangle-inequality", tri_dev, 1e-12);

    double inv_dev = 0.0;
    const ChartLine xaxis = make_line(0, 1, 0);
    inv_dev = std::max(inv_dev, std::abs(inversive_product(xaxis, make_line(1, 0, 0))));
    inv_dev = std::max(inv_dev, std::abs(inversive_product(xaxis, xaxis) - 1.0));
    const ChartLine l2 = make_line(1, 0, -std::tanh(1.0));
    inv_dev = std::max(inv_dev, std::abs(std::abs(inversive_product(make_line(1, 0, 0), l2)) -
                                         std::cosh(1.0)));
    inv_dev = std::max(inv_dev, std::abs(std::abs(inversive_product(xaxis, make_line(1, -1, 0))) -
                                         std::cos(kPi / 4)));
    out.add("core/inversive-product-contracts", inv_dev, 1e-12);

    double inv_rot = 0.0, inv_flip = 0.0;
    for (int i = 0; i < 500; ++i) {
        const double a1 = rng.uniform(0.0, kTwoPi), c1 = rng.uniform(-0.8, 0.8);
        const double a2 = rng.uniform(0.0, kTwoPi), c2 = rng.uniform(-0.8, 0.8);
        const ChartLine m1 = make_line(std::cos(a1), std::sin(a1), c1);
        ChartLine m2 = make_line(std::cos(a2), std::sin(a2), c2);
        const double rot = rng.uniform(0.0, kTwoPi);
        const ChartLine r1 = make_line(std::cos(a1 + rot), std::sin(a1 + rot), c1);
        const ChartLine r2 = make_line(std::cos(a2 + rot), std::sin(a2 + rot), c2);
        inv_rot = std::max(inv_rot,
                           std::abs(inversive_product(m1, m2) - inversive_product(r1, r2)));
        const double plain = inversive_product(m1, m2);
        m2.orientation = -1;
        inv_flip = std::max(inv_flip, std::abs(inversive_product(m1, m2) + plain));
    }
    out.add("core/inversive-rotation-invariance", inv_rot, 1e-10);
    out.add("core/inversive-flip-antisymmetry", inv_flip, 1e-15);

    double sup_dev = 0.0;
    {
        const auto klein = line_support_data(kHyp, make_line(1, 0, -0.5));
        sup_dev = std::max(sup_dev, std::abs(klein.r - std::atanh(0.5)));
        sup_dev = std::max(sup_dev, std::abs(klein.omega));
        const auto flat = line_support_data(kFlat, make_line(1, 0, -2.0));
        sup_dev = std::max(sup_dev, std::abs(flat.r - 2.0));
        const auto gnom = line_support_data(kSphere, make_line(1, 0, -1.0));
        sup_dev = std::max(sup_dev, std::abs(gnom.r - kPi / 4));
    }
    out.add("core/line-support-examples", sup_dev, 1e-14);
}

void check_body_surface(Checker& out, SeededRng& rng) {
    // validation error codes
    bool codes_ok = true;
    try {
        (void)validate(ConvexBody::polygon({{0, 0}, {2, 0}, {1, 0.2}, {2, 2}, {0, 2}}), kFlat);
        codes_ok = false;
    } catch (const Error& e) {
        codes_ok = codes_ok && e.code() == ErrorCode::non_convex;
    }
    try {
        (void)validate(ConvexBody::circle({0, 0}, 1.1), kHyp);
        codes_ok = false;
    } catch (const Error& e) {
        codes_ok = codes_ok && e.code() == ErrorCode::outside_chart;
    }
    try {
        (void)validate(ConvexBody::polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), kFlat);
        codes_ok = false;
    } catch (const Error& e) {
        codes_ok = codes_ok && e.code() == ErrorCode::not_ccw;
    }
    out.add_flag("core/validation-error-codes", codes_ok ? 0.0 : 1.0, 0.0, codes_ok);

    // frame circle cases
    double dev = 0.0;
    {
        ConvexBody c = validate(ConvexBody::circle({0, 0}, 2.0), kFlat);
        const BoundaryFrame f = boundary_frame(c, kFlat, 0.9);
        dev = std::max(dev, std::abs(f.rho - 2.0));
        dev = std::max(dev, std::abs(f.alpha));
        dev = std::max(dev, std::abs(f.kappa_g - 0.5));
        ConvexBody ch = validate(ConvexBody::circle({0, 0}, std::tanh(1.0)), kHyp);
        const BoundaryFrame fh = boundary_frame(ch, kHyp, 2.2);
        dev = std::max(dev, std::abs(fh.rho - 1.0));
        dev = std::max(dev, std::abs(fh.kappa_g - 1.0 / std::tanh(1.0)));
        ConvexBody off = validate(ConvexBody::circle({3, 0}, 1.0), kFlat);
        const BoundaryFrame fo = boundary_frame(off, kFlat, kPi);
        dev = std::max(dev, std::abs(fo.rho - 2.0));
        dev = std::max(dev, std::abs(std::abs(fo.alpha) - kPi));
    }
    out.add("core/frame-circle-cases", dev, 1e-10);

    // differential identities and the curvature oracle
    double diff_dev = 0.0, kappa_dev = 0.0;
    for (double kk : {-1.0, 0.0, 1.0}) {
        const Curvature k{kk};
        ConvexBody b = random_smooth_body(rng, k, true);
        for (int i = 0; i < 16; ++i) {
            const double t = kTwoPi * (i + 0.37) / 16;
            const BoundaryFrame f = boundary_frame(b, k, t);
            const double drho = fd5([&](double tt) { return boundary_frame(b, k, tt).rho; }, t,
                                    1e-5) /
                                f.speed;
            diff_dev = std::max(diff_dev, std::abs(drho + std::sin(f.alpha)));
            diff_dev = std::max(diff_dev, std::abs(f.dtheta_dt / f.speed -
                                                   std::cos(f.alpha) / ell(k, f.rho)));
            const double dal = fd5([&](double tt) { return boundary_frame(b, k, tt).alpha; }, t,
                                   1e-5) /
                               f.speed;
            kappa_dev = std::max(kappa_dev, std::abs(circle_curvature(k, f.rho) *
                                                         std::cos(f.alpha) +
                                                     dal - f.kappa_g));
        }
    }
    out.add("core/frame-differential-identities", diff_dev, 1e-8);
    out.add("core/frame-curvature-oracle", kappa_dev, 1e-6);

    // support round trip, triangle bundle, monotonicity
    double rt_dev = 0.0, bundle_dev = 0.0;
    bool monotone = true;
    for (double kk : {-1.0, 0.0, 1.0}) {
        const Curvature k{kk};
        ConvexBody b = random_smooth_body(rng, k, kk >= 0);
        double prev_t = support_line_at_omega(b, k, 0.0).frame.t;
        double total_dt = 0.0;
        const int n = 512;
        for (int i = 1; i <= n; ++i) {
            const double om = kTwoPi * i / n;
            const SupportLineResult s = support_line_at_omega(b, k, om);
            const LineSupportData sd = line_support_data(k, s.line);
            rt_dev = std::max(rt_dev, std::abs(sd.r - s.frame.r));
            rt_dev = std::max(rt_dev, std::abs(wrap_pi(sd.omega - s.frame.omega)));
            rt_dev = std::max(rt_dev, std::abs(wrap_pi(s.frame.omega - om)));
            const SupportFrame& f = s.frame;
            const double d = wrap_pi(f.omega - f.theta);
            bundle_dev = std::max(bundle_dev,
                                  std::abs(ell(k, f.r) - ell(k, f.rho) * std::cos(f.alpha)));
            bundle_dev = std::max(bundle_dev,
                                  std::abs(std::cos(d) * lc_product(k, f.r) * ell(k, f.rho) -
                                           lc_product(k, f.rho) * ell(k, f.r)));
            bundle_dev = std::max(bundle_dev,
                                  std::abs(std::cos(f.beta) * lc_product(k, f.x) * ell(k, f.rho) -
                                           lc_product(k, f.rho) * ell(k, f.x)));
            bundle_dev = std::max(bundle_dev,
                                  std::abs(std::sin(d) * ell(k, f.rho) - ell(k, f.x)));
            double dt = s.frame.t - prev_t;
            if (dt < -1e-12) {
                if (dt < -kPi) dt += kTwoPi; // wrap across the period seam
                else monotone = false;
            }
            total_dt += dt < 0 ? dt + kTwoPi : dt;
            prev_t = s.frame.t;
        }
        if (std::abs(total_dt - kTwoPi) > 1e-8) monotone = false;
    }
    out.add("core/support-line-roundtrip", rt_dev, 1e-10);
    out.add("core/support-triangle-bundle", bundle_dev, 1e-10);
    out.add_flag("core/support-contact-monotone", monotone ? 0.0 : 1.0, 0.0, monotone);

    // ideal support: w recomputation and the inversive identity
    double w_dev = 0.0, ip_dev = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
        ConvexBody b = random_smooth_body(rng, kHyp, rep % 2 == 0);
        for (int i = 0; i < 64; ++i) {
            const double phi = kTwoPi * (i + 0.31) / 64;
            const IdealSupportResult s = support_lines_from_ideal(b, kHyp, phi);
            const double re =
                std::cos(s.psi1) / std::sin(s.psi1) - std::cos(s.psi2) / std::sin(s.psi2);
            w_dev = std::max(w_dev, std::abs(s.w - re));
            const ChartLine normal = make_line(std::cos(phi), std::sin(phi), 0.0);
            ip_dev = std::max(ip_dev, std::abs(inversive_product(normal, s.right) - s.h));
        }
    }
    out.add("core/ideal-support-w-consistency", w_dev, 1e-12);
    out.add("core/inversive-support-identity", ip_dev, 1e-9);

    double arc_dev = std::abs(
        arclength_perimeter(validate(ConvexBody::circle({0, 0}, 1.0), kFlat), kFlat) - kTwoPi);
    arc_dev = std::max(arc_dev, std::abs(arclength_perimeter(
                                             validate(ConvexBody::circle({0, 0}, std::tanh(1.0)),
                                                      kHyp),
                                             kHyp) -
                                         kTwoPi * std::sinh(1.0)));
    arc_dev = std::max(
        arc_dev,
        std::abs(arclength_perimeter(
                     validate(ConvexBody::polygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}}), kFlat),
                     kFlat) -
                 8.0));
    out.add("core/arclength-examples", arc_dev, 1e-12);
}

void core_suite(Checker& out, std::uint64_t seed) {
    SeededRng rng(seed ^ 0xC0DEull);
    check_unified_trig(out);
    check_right_triangles(out, rng);
    check_quadrature(out);
    check_chart(out, rng);
    check_body_surface(out, rng);
}

// ------------------------------------------------------------- hilbert suite

void hilbert_suite(Checker& out, std::uint64_t seed) {
    SeededRng rng(seed ^ 0x411B37ull);

    HilbertDomain disk = make_hilbert_domain(validate(ConvexBody::circle({0, 0}, 1.0), kFlat));
    HilbertDomain square = make_hilbert_domain(
        validate(ConvexBody::polygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}}), kFlat));

    double chord_dev = std::abs(hilbert_distance(disk, {0, 0}, {0.5, 0}) - 0.5 * std::log(3.0));
    chord_dev = std::max(chord_dev, std::abs(hilbert_distance(square, {0, 0}, {0.5, 0}) -
                                             0.5 * std::log(3.0)));
    out.add("hilbert/reference-chords", chord_dev, 1e-13);

    bool symmetric = true;
    double tri_dev = 0.0;
    for (int rep = 0; rep < 4; ++rep) {
        HilbertDomain D = rep % 2 == 0
                              ? make_hilbert_domain(random_convex_polygon(
                                    rng, kFlat, 3 + int(rng.uniform() * 9), 1.0))
                              : make_hilbert_domain(random_smooth_body(rng, kFlat, false));
        for (int i = 0; i < 600; ++i) {
            const ChartPoint p = random_interior_point(rng, D.boundary, 1e-6);
            const ChartPoint q = random_interior_point(rng, D.boundary, 1e-6);
            const ChartPoint w = random_interior_point(rng, D.boundary, 1e-6);
            const double pq = hilbert_distance(D, p, q);
            if (pq != hilbert_distance(D, q, p)) symmetric = false;
            tri_dev = std::max(tri_dev, hilbert_distance(D, p, w) - pq -
                                            hilbert_distance(D, q, w));
        }
    }
    out.add_flag("hilbert/metric-symmetry", symmetric ? 0.0 : 1.0, 0.0, symmetric);
    out.add("hilbert/triangle-inequality", tri_dev, 1e-12);

    double lemma_dev = 0.0, sided_dev = 0.0;
    for (int rep = 0; rep < 40; ++rep) {
        HilbertDomain D = make_hilbert_domain(
            random_convex_polygon(rng, kFlat, 3 + int(rng.uniform() * 10.0), 1.0));
        for (int i = 0; i < 10; ++i) {
            const ChartPoint p = random_interior_point(rng, D.boundary, 1e-5);
            const ChartPoint q = random_interior_point(rng, D.boundary, 1e-5);
            const double h = hilbert_distance(D, p, q);
            const DiscreteCauchyDetail det = discrete_cauchy_detail(D, p, q);
            lemma_dev = std::max(lemma_dev, std::abs(det.total - h));
            double plus = 0.0, minus = 0.0;
            for (std::size_t v = 0; v < det.per_vertex.size(); ++v) {
                if (det.side[v] > 0) plus += det.per_vertex[v];
                if (det.side[v] < 0) minus += det.per_vertex[v];
            }
            sided_dev = std::max(sided_dev, std::abs(plus - h));
            sided_dev = std::max(sided_dev, std::abs(minus - h));
        }
    }
    out.add("hilbert/discrete-cauchy-lemma", lemma_dev, 1e-12);
    out.add("hilbert/discrete-cauchy-one-sided", sided_dev, 1e-12);

    {
        const DiscreteCauchyDetail det =
            discrete_cauchy_detail(square, {-0.3, -0.3}, {0.4, 0.4});
        double skip_dev = 0.0;
        int zeros = 0;
        for (std::size_t v = 0; v < det.per_vertex.size(); ++v)
            if (det.side[v] == 0) {
                ++zeros;
                skip_dev = std::max(skip_dev, det.per_vertex[v]);
            }
        out.add_flag("hilbert/skipped-vertex-rule", skip_dev, 1e-15, zeros == 2 && skip_dev <= 1e-15);
    }

    {
        double aa_dev =
            std::abs(angle_arc_integral(kPi / 2, 3 * kPi / 4, kPi / 4) - std::log(2.0));
        const double a = 1.9, b = 2.9, g = 0.9;
        const double quad = integrate_adaptive(
                                [&](double t) {
                                    return std::cos(a - t) / std::sin(a - t) -
                                           std::cos(b - t) / std::sin(b - t);
                                },
                                0.0, g, 1e-12)
                                .value;
        aa_dev = std::max(aa_dev, std::abs(angle_arc_integral(a, b, g) - quad));
        out.add("hilbert/angle-arc-closed-form", aa_dev, 1e-10);
    }

    {
        // direct phi quadrature of the two-gon integrand in a polygon domain
        const ChartPoint P{-0.25, 0.15}, Q{0.4, -0.2};
        ConvexBody seg = validate(ConvexBody::segment(P, Q), kFlat,
                                  {.require_convex = true, .allow_degenerate = true});
        double total = 0.0;
        const auto& normals = square.boundary.edge_normals;
        for (std::size_t i = 0; i < normals.size(); ++i) {
            const double start = normals[(i + normals.size() - 1) % normals.size()];
            const double width = wrap_2pi(normals[i] - start);
            total += integrate_adaptive(
                         [&](double off) {
                             double phi = start + off;
                             PsiAngles pa = psi_angles(square, seg, phi);
                             if (pa.nonunique_r) pa = psi_angles(square, seg, phi + 1e-12);
                             return std::cos(pa.psi1) / std::sin(pa.psi1) -
                                    std::cos(pa.psi2) / std::sin(pa.psi2);
                         },
                         1e-9, width - 1e-9, 1e-10)
                         .value;
        }
        out.add("hilbert/psi-quadrature-vs-closed-form",
                std::abs(0.5 * total - 2 * hilbert_distance(square, P, Q)), 1e-8);
    }

    {
        ConvexBody half = validate(ConvexBody::circle({0, 0}, 0.5), kFlat);
        double psi_dev = 0.0;
        for (double phi : {0.0, 0.9, 4.4}) {
            const PsiAngles pa = psi_angles(disk, half, phi);
            psi_dev = std::max(psi_dev, std::abs(pa.psi1 - kPi / 3));
            psi_dev = std::max(psi_dev, std::abs(pa.psi2 - 2 * kPi / 3));
        }
        ConvexBody pt = validate(ConvexBody::point({0, 0}), kFlat,
                                 {.require_convex = true, .allow_degenerate = true});
        const PsiAngles pp = psi_angles(disk, pt, 1.2);
        psi_dev = std::max(psi_dev, std::abs(pp.psi1 - kPi / 2));
        psi_dev = std::max(psi_dev, std::abs(pp.psi2 - kPi / 2));
        out.add("hilbert/psi-angle-examples", psi_dev, 1e-10);
    }

    {
        double dev = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const ChartPoint p = random_disk_point(rng, 0.95);
            const ChartPoint q = random_disk_point(rng, 0.95);
            dev = std::max(dev, std::abs(hilbert_distance(disk, p, q) -
                                         hyperbolic_distance_klein(p, q)));
        }
        out.add("hilbert/unit-disk-klein-specialization", dev, 1e-12);
    }

    {
        HilbertDomain D = make_hilbert_domain(random_convex_polygon(rng, kFlat, 7, 1.0));
        auto map = [](ChartPoint p) {
            return ChartPoint{1.2 * p.x + 0.3 * p.y + 0.05, -0.1 * p.x + 0.8 * p.y - 0.1};
        };
        std::vector<ChartPoint> mapped;
        for (const auto& v : D.boundary.vertices) mapped.push_back(map(v));
        HilbertDomain DM = make_hilbert_domain(validate(ConvexBody::polygon(mapped), kFlat));
        double dev = 0.0;
        for (int i = 0; i < 300; ++i) {
            const ChartPoint p = random_interior_point(rng, D.boundary, 1e-5);
            const ChartPoint q = random_interior_point(rng, D.boundary, 1e-5);
            dev = std::max(dev, std::abs(hilbert_distance(D, p, q) -
                                         hilbert_distance(DM, map(p), map(q))));
        }
        out.add("hilbert/projective-invariance", dev, 1e-9);
    }

    {
        double dev = std::abs(crofton_density(disk, 0.37, kPi / 2) - 0.5);
        dev = std::max(dev, std::abs(crofton_density(disk, 2.0, kPi / 4) - 1.0));
        HilbertDomain half = make_hilbert_domain(validate(ConvexBody::circle({0, 0}, 0.5), kFlat));
        dev = std::max(dev, std::abs(crofton_density(half, 0.1, kPi / 2) - 1.0));
        out.add("hilbert/crofton-density-examples", dev, 1e-12);
    }

    {
        const McResult mc = crofton_length_mc(disk, {{0, 0}, {0.5, 0}}, 200000, seed + 3);
        const double sigmas = std::abs(mc.estimate - 0.5 * std::log(3.0)) / mc.std_error;
        out.add("hilbert/crofton-mc-segment-sigmas", sigmas, 3.0);

        const McResult once = crofton_length_mc(disk, {{0, 0}, {0.5, 0}}, 50000, seed + 4);
        const McResult twice =
            crofton_length_mc(disk, {{0, 0}, {0.5, 0}, {0, 0}}, 50000, seed + 4);
        out.add("hilbert/crofton-mc-exact-doubling",
                std::abs(twice.estimate - 2 * once.estimate), 1e-14);

        const ChartPoint P{-0.2, 0.3}, Q{0.4, -0.1};
        const McResult ab = crofton_oriented_distance_mc(disk, P, Q, 200000, seed + 5);
        const McResult ba = crofton_oriented_distance_mc(disk, Q, P, 200000, seed + 6);
        out.add("hilbert/oriented-distance-symmetry-sigmas",
                std::abs(ab.estimate - ba.estimate) / std::hypot(ab.std_error, ba.std_error),
                3.0);
    }

    {
        ConvexBody K = validate(ConvexBody::circle({0, 0}, std::tanh(1.0)), kFlat);
        double dev = std::abs(cauchy_perimeter_hilbert(disk, K, 1e-10) -
                              kTwoPi * std::sinh(1.0));
        const ChartPoint P{-0.2, 0.1}, Q{0.5, 0.3};
        ConvexBody seg = validate(ConvexBody::segment(P, Q), kFlat,
                                  {.require_convex = true, .allow_degenerate = true});
        dev = std::max(dev, std::abs(cauchy_perimeter_hilbert(disk, seg, 1e-10) -
                                     2 * hilbert_distance(disk, P, Q)));
        ConvexBody pt = validate(ConvexBody::point({0.3, -0.1}), kFlat,
                                 {.require_convex = true, .allow_degenerate = true});
        dev = std::max(dev, std::abs(cauchy_perimeter_hilbert(disk, pt, 1e-10)));
        out.add("hilbert/cauchy-perimeter-examples", dev, 1e-9);

        bool monotone = true;
        double prev = hilbert_perimeter_oracle(disk, K, 16);
        for (int n = 32; n <= 1024; n *= 2) {
            const double cur = hilbert_perimeter_oracle(disk, K, n);
            if (cur < prev - 1e-12) monotone = false;
            prev = cur;
        }
        out.add_flag("hilbert/oracle-monotone-refinement", monotone ? 0.0 : 1.0, 0.0, monotone);
        out.add("hilbert/oracle-converges",
                std::abs(hilbert_perimeter_oracle(disk, K, 4096) - kTwoPi * std::sinh(1.0)),
                1e-5);
    }
}

// ----------------------------------------------------------- perimeter suite

std::vector<double> all_method_values(Curvature k, const ConvexBody& b, double tol) {
    std::vector<double> vals;
    vals.push_back(arclength_perimeter(b, k, tol));
    vals.push_back(minkowski_perimeter(k, b, {0, 0}, tol).value);
    vals.push_back(cauchy_perimeter_unified(k, b, tol).value);
    vals.push_back(cauchy_polar(k, b, tol).value);
    if (k.k < 0) {
        vals.push_back(projective_cauchy_w(k, b, tol).value);
        vals.push_back(projective_cauchy_h(k, b, tol).value);
    }
    return vals;
}

double relative_spread(const std::vector<double>& vals) {
    const auto [lo, hi] = std::minmax_element(vals.begin(), vals.end());
    double mean = 0.0;
    for (double v : vals) mean += v;
    mean /= double(vals.size());
    return (*hi - *lo) / std::abs(mean);
}

void perimeter_suite(Checker& out, std::uint64_t seed, int bodies_per_regime) {
    SeededRng rng(seed ^ 0x9E21ull);

    double agree = 0.0;
    for (double kk : {-1.0, 0.0, 1.0}) {
        const Curvature k{kk};
        for (int i = 0; i < bodies_per_regime; ++i) {
            ConvexBody b = random_smooth_body(rng, k, true);
            agree = std::max(agree, relative_spread(all_method_values(k, b, 1e-9)));
        }
    }
    out.add("perimeter/method-agreement", agree, 1e-6);

    double origin_dev = 0.0;
    for (double kk : {-1.0, 0.0, 1.0}) {
        const Curvature k{kk};
        ConvexBody b = random_smooth_body(rng, k, true);
        const double ref = arclength_perimeter(b, k);
        double lo = 1e300, hi = -1e300;
        for (int i = 0; i < 10; ++i) {
            const ChartPoint origin = random_disk_point(rng, 0.6);
            const double v = minkowski_perimeter(k, b, origin, 1e-9).value;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        origin_dev = std::max(origin_dev, (hi - lo) / ref);
        origin_dev = std::max(origin_dev, std::abs(hi - ref) / ref);
    }
    out.add("perimeter/origin-independence", origin_dev, 1e-6);

    {
        TrigPoly x, y;
        x.coeffs = {0.35, 1.0, 0.0, 0.35, 0.0};
        y.coeffs = {0.0, 0.0, 1.0, 0.0, 0.35};
        ConvexBody lim = validate(ConvexBody::smooth(x, y), kFlat, {.require_convex = false});
        const double oracle = arclength_perimeter(lim, kFlat);
        double dev = std::abs(minkowski_perimeter(kFlat, lim, {0, 0}, 1e-9).value - oracle);
        dev = std::max(dev,
                       std::abs(minkowski_perimeter(kFlat, lim, {0.2, 0.3}, 1e-9).value - oracle));
        out.add("perimeter/nonconvex-minkowski", dev / oracle, 1e-6);
    }

    {
        const ArcContributions arc =
            geodesic_arc_contributions(kHyp, {-0.3, -0.4}, {0.3, -0.4}, 1e-12);
        out.add_flag("perimeter/local-inequivalence-witness", std::abs(arc.cauchy_part), 1e-10,
                     std::abs(arc.cauchy_part) < 1e-10 &&
                         std::abs(arc.minkowski_area_part) > 1e-3);
    }

    {
        double mid_dev = 0.0, par_dev = 0.0;
        for (int rep = 0; rep < 4; ++rep) {
            ConvexBody b = random_smooth_body(rng, kHyp, rep % 2 == 0);
            for (int i = 0; i < 64; ++i) {
                const SupportFrame f = support_frame_at(b, kHyp, kTwoPi * (i + 0.11) / 64);
                mid_dev = std::max(mid_dev, std::abs(wrap_pi(f.phi - f.omega) +
                                                     wrap_pi(f.phi_tilde - f.omega)));
                const double gap = wrap_pi(f.omega - f.phi);
                par_dev = std::max(par_dev, std::abs(std::cos(gap) / std::sin(gap) -
                                                     ell(kHyp, f.r)));
            }
        }
        out.add("perimeter/phi-phitilde-midpoint", mid_dev, 1e-10);
        out.add("perimeter/omega-phi-parallelism", par_dev, 1e-10);
    }

    {
        ConvexBody b = random_smooth_body(rng, kHyp, false);
        const double w = projective_cauchy_w(kHyp, b, 1e-9).value;
        const double h = projective_cauchy_h(kHyp, b, 1e-9).value;
        out.add("perimeter/one-sided-vs-two-sided", std::abs(w - h), 1e-7);
    }

    {
        double dev = 0.0;
        for (double rho0 : {0.25, 0.5, 1.0, 2.0}) {
            ConvexBody c = validate(ConvexBody::circle({0, 0}, std::tanh(rho0)), kHyp);
            const double expect = kTwoPi * std::sinh(rho0);
            for (double v : all_method_values(kHyp, c, 1e-9))
                dev = std::max(dev, std::abs(v - expect) / expect);
        }
        out.add("perimeter/hyperbolic-circle-benchmark", dev, 1e-6);
    }
    {
        double dev = 0.0;
        for (double rho0 : {0.3, kPi / 6, 1.0}) {
            ConvexBody c = validate(ConvexBody::circle({0, 0}, std::tan(rho0)), kSphere);
            const double expect = kTwoPi * std::sin(rho0);
            for (double v : all_method_values(kSphere, c, 1e-9))
                dev = std::max(dev, std::abs(v - expect) / expect);
        }
        out.add("perimeter/spherical-circle-benchmark", dev, 1e-6);
    }

    {
        double gap = 0.0;
        for (double kk : {-1.0, 0.0, 1.0}) {
            const Curvature k{kk};
            ConvexBody b = random_smooth_body(rng, k, true);
            gap = std::max(gap, cauchy_polar(k, b, 1e-9).diagnostics.at("pointwise_gap"));
        }
        out.add("perimeter/cauchy-polar-integrand-forms", gap, 1e-10);
    }

    {
        double kdev = 0.0, form_dev = 0.0, rdev = 0.0;
        for (double kk : {-1.0, 1.0}) {
            const Curvature k{kk};
            ConvexBody b = random_smooth_body(rng, k, true);
            for (int i = 0; i < 32; ++i) {
                const double t = kTwoPi * (i + 0.13) / 32;
                const SupportFrame f = support_frame_at(b, k, t);
                const double h = 1e-4 * kTwoPi;
                auto omega_of = [&](double tt) { return support_frame_at(b, k, tt).omega; };
                const double om0 = omega_of(t);
                auto unwrapped = [&](double tt) { return om0 + wrap_pi(omega_of(tt) - om0); };
                const double domega_dt = fd5(unwrapped, t, h);
                const auto [f1, f2] = kappa_from_omega_forms(k, f, domega_dt / f.speed);
                kdev = std::max(kdev, std::abs(f1 - f.kappa_g));
                form_dev = std::max(form_dev, std::abs(f1 - f2));
                const double dr_dt = fd5([&](double tt) { return support_frame_at(b, k, tt).r; },
                                         t, h);
                rdev = std::max(rdev, std::abs(dr_dt / domega_dt - dr_domega(k, f)));
            }
        }
        out.add("perimeter/kappa-from-omega-oracle", kdev, 1e-6);
        out.add("perimeter/kappa-algebraic-forms", form_dev, 1e-12);
        out.add("perimeter/dr-domega-oracle", rdev, 1e-6);
    }

    {
        ConvexBody far = validate(ConvexBody::circle({5, 0}, 1.0), kFlat);
        double dev = std::abs(cauchy_perimeter_unified(kFlat, far, 1e-9).value - kTwoPi);
        ConvexBody off = validate(ConvexBody::circle({0.55, 0}, 0.18), kHyp);
        const double oracle = arclength_perimeter(off, kHyp);
        dev = std::max(dev, std::abs(projective_cauchy_h(kHyp, off, 1e-9).value - oracle));
        out.add("perimeter/signed-support-distances", dev, 1e-8);
    }
}

// ------------------------------------------------------------ measures suite

void measures_suite(Checker& out, std::uint64_t seed) {
    SeededRng rng(seed ^ 0x6E5Aull);

    {
        ConvexBody c = validate(ConvexBody::circle({0, 0}, std::tanh(1.0)), kHyp);
        const MeasureRatios m = measure_ratios(kHyp, c, 1.1);
        double dev = std::abs(m.domega_dtheta - 1.0);
        dev = std::max(dev, std::abs(m.dphi_domega - 1.0));
        out.add("measures/circle-unit-ratios", dev, 1e-12);
    }

    double oracle_dev = 0.0, chain_dev = 0.0, sum_dev = 0.0, poincare_dev = 0.0;
    for (double kk : {-1.0, 0.0, 1.0}) {
        const Curvature k{kk};
        for (int rep = 0; rep < 3; ++rep) {
            ConvexBody b = random_smooth_body(rng, k, true);
            for (int i = 0; i < 16; ++i) {
                const double t = kTwoPi * (i + 0.41) / 16;
                const MeasureRatios m = measure_ratios(k, b, t);
                const SupportFrame f = support_frame_at(b, k, t);
                const double h = 1e-4;
                auto unwrapped = [&](auto getter) {
                    const double base = getter(f);
                    return [&, base, getter](double tt) {
                        return base + wrap_pi(getter(support_frame_at(b, k, tt)) - base);
                    };
                };
                const double dth =
                    fd5(unwrapped([](const SupportFrame& g) { return g.theta; }), t, h);
                const double dom =
                    fd5(unwrapped([](const SupportFrame& g) { return g.omega; }), t, h);
                oracle_dev = std::max(oracle_dev, std::abs(m.dtheta_ds - dth / f.speed));
                oracle_dev = std::max(oracle_dev, std::abs(m.domega_ds - dom / f.speed));
                oracle_dev = std::max(oracle_dev, std::abs(m.domega_dtheta - dom / dth));
                if (kk < 0) {
                    const double dphi =
                        fd5(unwrapped([](const SupportFrame& g) { return g.phi; }), t, h);
                    const double dpht =
                        fd5(unwrapped([](const SupportFrame& g) { return g.phi_tilde; }), t, h);
                    oracle_dev = std::max(oracle_dev, std::abs(m.dphi_domega - dphi / dom));
                    oracle_dev = std::max(oracle_dev,
                                          std::abs(m.dphitilde_domega - dpht / dom));
                    oracle_dev = std::max(oracle_dev, std::abs(m.dphi_dtheta - dphi / dth));
                    chain_dev = std::max(chain_dev, std::abs(m.dphi_dtheta -
                                                             m.dphi_domega * m.domega_dtheta));
                    sum_dev = std::max(sum_dev,
                                       std::abs(m.dphi_domega + m.dphitilde_domega - 2.0));
                    poincare_dev = std::max(poincare_dev, std::abs(m.dphi_dtheta -
                                                                   dphi_dtheta_poincare(k, f)));
                }
            }
        }
    }
    out.add("measures/central-difference-oracles", oracle_dev, 1e-5);
    out.add("measures/chain-rule-consistency", chain_dev, 1e-12);
    out.add("measures/phi-ratio-sum", sum_dev, 1e-12);
    out.add("measures/poincare-frame-cross-check", poincare_dev, 1e-10);
}

} // namespace

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed) {
    Checker out;
    if (suite == "core") {
        core_suite(out, seed);
    } else if (suite == "hilbert") {
        hilbert_suite(out, seed);
    } else if (suite == "perimeter") {
        perimeter_suite(out, seed, 6);
    } else if (suite == "measures") {
        measures_suite(out, seed);
    } else if (suite == "all") {
        core_suite(out, seed);
        hilbert_suite(out, seed);
        perimeter_suite(out, seed, 6);
        measures_suite(out, seed);
    } else if (suite == "selftest-fail") {
        out.add("selftest/forced-failure", 1.0, 1e-12);
    } else {
        fail(ErrorCode::bad_input, "unknown verify suite: " + suite);
    }
    return out.results;
}

} // namespace croftonlab
