#include <doctest.h>

#include <cmath>

#include "croftonlab/perimeter.hpp"
#include "croftonlab/quadrature.hpp"
#include "croftonlab/rng.hpp"

using namespace croftonlab;

namespace {
constexpr double kPi = 3.14159265358979323846;
const Curvature kHyp{-1.0};
const Curvature kFlat{0.0};
const Curvature kSphere{1.0};

ConvexBody dimpled_limacon() {
    // r(t) = 1 + 0.7 cos t: simple, C^2, not convex
    TrigPoly x, y;
    x.coeffs = {0.35, 1.0, 0.0, 0.35, 0.0};
    y.coeffs = {0.0, 0.0, 1.0, 0.0, 0.35};
    return ConvexBody::smooth(x, y);
}

} // namespace

TEST_CASE("minkowski_perimeter on circles") {
    SUBCASE("origin outside the body") {
        ConvexBody c = validate(ConvexBody::circle({3, 0}, 2.0), kFlat);
        CHECK(minkowski_perimeter(kFlat, c, {0, 0}, 1e-10).value ==
              doctest::Approx(4 * kPi).epsilon(1e-10));
    }
    SUBCASE("hyperbolic circle, hand-checked integrand split") {
        ConvexBody c = validate(ConvexBody::circle({0, 0}, std::tanh(1.0)), kHyp);
        const double expect = 2 * kPi * std::sinh(1.0);
        CHECK(minkowski_perimeter(kHyp, c, {0, 0}, 1e-10).value ==
              doctest::Approx(expect).epsilon(1e-10));
        // sinh^2(1) coth(1) 2pi - (cosh(1)-1) 2pi sinh(1) = 2pi sinh(1)
        const double part1 = std::sinh(1.0) * std::sinh(1.0) / std::tanh(1.0) * 2 * kPi;
        const double part2 = (std::cosh(1.0) - 1.0) * 2 * kPi * std::sinh(1.0);
        CHECK(part1 - part2 == doctest::Approx(expect).epsilon(1e-12));
    }
    SUBCASE("spherical circle of intrinsic radius pi/6") {
        ConvexBody c = validate(ConvexBody::circle({0, 0}, std::tan(kPi / 6)), kSphere);
        CHECK(minkowski_perimeter(kSphere, c, {0, 0}, 1e-10).value ==
              doctest::Approx(kPi).epsilon(1e-10));
    }
    SUBCASE("near-pole rejection") {
        ConvexBody c = validate(ConvexBody::circle({0.5, 0}, 0.5), kFlat);
        CHECK_THROWS_AS(minkowski_perimeter(kFlat, c, {0, 0}, 1e-8), Error);
    }
}

TEST_CASE("minkowski_perimeter is origin independent") {
    SeededRng rng(7);
    for (double kk : {-1.0, 0.0, 1.0}) {
        const Curvature k{kk};
        ConvexBody b = random_smooth_body(rng, k, true);
        const double ref = arclength_perimeter(b, k);
        double lo = 1e300, hi = -1e300;
        for (int i = 0; i < 10; ++i) {
            const double r = 0.3 + 0.4 * rng.uniform();
            const double a = rng.uniform(0.0, 2 * kPi);
            const ChartPoint origin{r * std::cos(a), r * std::sin(a)};
            const double v = minkowski_perimeter(k, b, origin, 1e-9).value;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        CHECK((hi - lo) / ref < 1e-6);
        CHECK(std::abs(hi - ref) / ref < 1e-6);
    }
}

TEST_CASE("minkowski_perimeter handles non-convex C^2 curves") {
    ConvexBody lim = validate(dimpled_limacon(), kFlat, {.require_convex = false});
    CHECK(!lim.convex);
    const double oracle = arclength_perimeter(lim, kFlat);
    CHECK(std::abs(minkowski_perimeter(kFlat, lim, {0, 0}, 1e-9).value - oracle) / oracle < 1e-6);
    // also off the symmetric origin
    CHECK(std::abs(minkowski_perimeter(kFlat, lim, {0.2, 0.3}, 1e-9).value - oracle) / oracle <
          1e-6);
}

TEST_CASE("minkowski_perimeter_polygon") {
    SUBCASE("euclidean square: vertex terms carry everything") {
        ConvexBody sq = validate(ConvexBody::polygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}}), kFlat);
        CHECK(minkowski_perimeter_polygon(kFlat, sq, {0, 0}, 1e-10).value ==
              doctest::Approx(8.0).epsilon(1e-13));
        CHECK(minkowski_perimeter_polygon(kFlat, sq, {0.4, -0.3}, 1e-10).value ==
              doctest::Approx(8.0).epsilon(1e-13));
    }
    SUBCASE("hyperbolic triangle vs geodesic side lengths") {
        ConvexBody tri = validate(ConvexBody::polygon({{0.3, 0}, {0, 0.4}, {-0.2, -0.2}}), kHyp);
        const double sides = hyperbolic_distance_klein({0.3, 0}, {0, 0.4}) +
                             hyperbolic_distance_klein({0, 0.4}, {-0.2, -0.2}) +
                             hyperbolic_distance_klein({-0.2, -0.2}, {0.3, 0});
        CHECK(std::abs(minkowski_perimeter_polygon(kHyp, tri, {0.05, 0.1}, 1e-10).value - sides) <
              1e-8);
    }
    SUBCASE("gnomonic square vs spherical side lengths") {
        ConvexBody sq = validate(
            ConvexBody::polygon({{0.2, -0.2}, {0.2, 0.2}, {-0.2, 0.2}, {-0.2, -0.2}}), kSphere);
        double sides = 0.0;
        for (int i = 0; i < 4; ++i)
            sides += chart_distance(kSphere, sq.vertices[std::size_t(i)],
                                    sq.vertices[std::size_t((i + 1) % 4)]);
        CHECK(std::abs(minkowski_perimeter_polygon(kSphere, sq, {0.03, -0.02}, 1e-10).value -
                       sides) < 1e-8);
    }
}

TEST_CASE("cauchy_perimeter_unified") {
    SUBCASE("unit circle") {
        ConvexBody c = validate(ConvexBody::circle({0, 0}, 1.0), kFlat);
        const PerimeterReport r = cauchy_perimeter_unified(kFlat, c, 1e-10);
        CHECK(r.value == doctest::Approx(2 * kPi).epsilon(1e-10));
        CHECK(r.diagnostics.at("route_gap") < 1e-9);
    }
    SUBCASE("hyperbolic circle") {
        ConvexBody c = validate(ConvexBody::circle({0, 0}, std::tanh(1.0)), kHyp);
        CHECK(cauchy_perimeter_unified(kHyp, c, 1e-10).value ==
              doctest::Approx(2 * kPi * std::sinh(1.0)).epsilon(1e-10));
    }
    SUBCASE("signed support distance: far off-center circle") {
        ConvexBody c = validate(ConvexBody::circle({5, 0}, 1.0), kFlat);
        // r(omega) = 5 cos(omega) + 1 dips negative; the integral is still 2 pi
        const SupportLineResult back = support_line_at_omega(c, kFlat, kPi);
        CHECK(back.frame.r == doctest::Approx(-4.0).epsilon(1e-12));
        CHECK(cauchy_perimeter_unified(kFlat, c, 1e-10).value ==
              doctest::Approx(2 * kPi).epsilon(1e-10));
    }
    SUBCASE("polygon fans: euclidean square and hyperbolic triangle") {
        ConvexBody sq = validate(ConvexBody::polygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}}), kFlat);
        CHECK(cauchy_perimeter_unified(kFlat, sq, 1e-10).value ==
              doctest::Approx(8.0).epsilon(1e-10));
        ConvexBody tri = validate(ConvexBody::polygon({{0.3, 0}, {0, 0.4}, {-0.2, -0.2}}), kHyp);
        CHECK(cauchy_perimeter_unified(kHyp, tri, 1e-10).value ==
              doctest::Approx(arclength_perimeter(tri, kHyp)).epsilon(1e-8));
    }
}

TEST_CASE("projective Cauchy formulas") {
    SUBCASE("hyperbolic circle") {
        ConvexBody c = validate(ConvexBody::circle({0, 0}, std::tanh(1.0)), kHyp);
        const double expect = 2 * kPi * std::sinh(1.0);
        CHECK(projective_cauchy_w(kHyp, c, 1e-10).value == doctest::Approx(expect).epsilon(1e-9));
        const PerimeterReport h = projective_cauchy_h(kHyp, c, 1e-10);
        CHECK(h.value == doctest::Approx(expect).epsilon(1e-9));
        CHECK(h.diagnostics.at("extrinsic_intrinsic_gap") < 1e-10);
    }
    SUBCASE("degenerate bodies") {
        ConvexBody pt = validate(ConvexBody::point({0.2, 0.1}), kHyp,
                                 {.require_convex = true, .allow_degenerate = true});
        CHECK(std::abs(projective_cauchy_w(kHyp, pt, 1e-9).value) < 1e-10);
        CHECK(std::abs(projective_cauchy_h(kHyp, pt, 1e-9).value) < 1e-10);
        const double a = 0.45;
        ConvexBody seg = validate(ConvexBody::segment({0, -a}, {0, a}), kHyp,
                                  {.require_convex = true, .allow_degenerate = true});
        CHECK(projective_cauchy_w(kHyp, seg, 1e-10).value ==
              doctest::Approx(2 * hyperbolic_distance_klein({0, -a}, {0, a})).epsilon(1e-8));
    }
    SUBCASE("body not containing the origin: h changes sign, totals agree") {
        ConvexBody c = validate(ConvexBody::circle({0.55, 0}, 0.18), kHyp);
        const double oracle = arclength_perimeter(c, kHyp);
        double hmin = 1e300, hmax = -1e300;
        for (int i = 0; i < 64; ++i) {
            const double h = support_lines_from_ideal(c, kHyp, 2 * kPi * i / 64).h;
            hmin = std::min(hmin, h);
            hmax = std::max(hmax, h);
        }
        CHECK(hmin < 0.0);
        CHECK(hmax > 0.0);
        CHECK(std::abs(projective_cauchy_h(kHyp, c, 1e-10).value - oracle) / oracle < 1e-8);
        CHECK(std::abs(projective_cauchy_w(kHyp, c, 1e-10).value - oracle) / oracle < 1e-8);
    }
    SUBCASE("one-sided equals the symmetric version") {
        SeededRng rng(19);
        ConvexBody b = random_smooth_body(rng, kHyp, false);
        const double w = projective_cauchy_w(kHyp, b, 1e-9).value;
        const double h = projective_cauchy_h(kHyp, b, 1e-9).value;
        CHECK(std::abs(w - h) < 1e-7);
    }
    SUBCASE("general k < 0 scaling") {
        const Curvature k4{-4.0};
        ConvexBody c = validate(ConvexBody::circle({0, 0}, std::tanh(1.0)), k4);
        // intrinsic radius atanh(tanh 1)/2 = 0.5, so P = 2 pi sinh(2 * 0.5)/2
        CHECK(projective_cauchy_h(k4, c, 1e-10).value ==
              doctest::Approx(2 * kPi * std::sinh(1.0) / 2.0).epsilon(1e-9));
    }
}

TEST_CASE("kappa_from_omega and dr_domega") {
    SUBCASE("circle about the origin") {
        ConvexBody c = validate(ConvexBody::circle({0, 0}, std::tanh(1.0)), kHyp);
        const SupportFrame f = support_frame_at(c, kHyp, 0.4);
        const double domega_ds = 1.0 / ell(kHyp, 1.0);
        const auto [f1, f2] = kappa_from_omega_forms(kHyp, f, domega_ds);
        CHECK(f1 == doctest::Approx(circle_curvature(kHyp, 1.0)).epsilon(1e-12));
        CHECK(std::abs(f1 - f2) < 1e-12);
        CHECK(dr_domega(kHyp, f) == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("geodesic side gives zero curvature") {
        ConvexBody tri = validate(ConvexBody::polygon({{0.3, 0}, {0, 0.4}, {-0.2, -0.2}}), kHyp);
        const SupportLineResult s = support_line_at_omega(tri, kHyp, 0.2);
        CHECK(kappa_from_omega(kHyp, s.frame, 0.0) == 0.0);
    }
    SUBCASE("euclidean dr/domega = -x") {
        SeededRng rng(29);
        ConvexBody b = random_smooth_body(rng, kFlat, true);
        for (double t : {0.5, 1.7, 3.9}) {
            const SupportFrame f = support_frame_at(b, kFlat, t);
            CHECK(dr_domega(kFlat, f) == doctest::Approx(-f.x).epsilon(1e-12));
        }
    }
    SUBCASE("finite-difference oracles on random curved bodies") {
        SeededRng rng(37);
        for (double kk : {-1.0, 1.0}) {
            const Curvature k{kk};
            ConvexBody b = random_smooth_body(rng, k, true);
            double worst_kappa = 0.0, worst_dr = 0.0;
            for (int i = 0; i < 64; ++i) {
                const double t = 2 * kPi * (i + 0.13) / 64;
                const SupportFrame f = support_frame_at(b, k, t);
                const double h = 1e-4 * 2 * kPi;
                auto omega_of = [&](double tt) { return support_frame_at(b, k, tt).omega; };
                auto r_of = [&](double tt) { return support_frame_at(b, k, tt).r; };
                // unwrap omega around t
                const double om0 = omega_of(t);
                auto om_unwrapped = [&](double tt) {
                    return om0 + wrap_pi(omega_of(tt) - om0);
                };
                const double domega_dt = central_diff(om_unwrapped, t, h, 5);
                const double domega_ds = domega_dt / f.speed;
                worst_kappa = std::max(worst_kappa,
                                       std::abs(kappa_from_omega(k, f, domega_ds) - f.kappa_g));
                const double dr_dt = central_diff(r_of, t, h, 5);
                worst_dr = std::max(worst_dr, std::abs(dr_dt / domega_dt - dr_domega(k, f)));
            }
            CHECK(worst_kappa < 1e-6);
            CHECK(worst_dr < 1e-6);
        }
    }
}

TEST_CASE("cauchy_polar") {
    SUBCASE("euclidean circle") {
        ConvexBody c = validate(ConvexBody::circle({0, 0}, 2.0), kFlat);
        CHECK(cauchy_polar(kFlat, c, 1e-10).value == doctest::Approx(4 * kPi).epsilon(1e-10));
    }
    SUBCASE("hyperbolic circle with the hand-evaluated integrand") {
        ConvexBody c = validate(ConvexBody::circle({0, 0}, std::tanh(1.0)), kHyp);
        const PerimeterReport r = cauchy_polar(kHyp, c, 1e-10);
        CHECK(r.value == doctest::Approx(2 * kPi * std::sinh(1.0)).epsilon(1e-10));
        CHECK(r.diagnostics.at("pointwise_gap") < 1e-10);
        // integrand: sinh^2(1) coth(1) * cosh(0)/cosh(1) each dtheta
        const double integrand = std::sinh(1.0) * std::sinh(1.0) / std::tanh(1.0) / std::cosh(1.0);
        CHECK(integrand == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
    }
    SUBCASE("euclidean ellipse: polar Cauchy equals polar Minkowski pointwise") {
        TrigPoly x, y;
        x.coeffs = {0.0, 1.3, 0.0};
        y.coeffs = {0.0, 0.0, 0.8};
        ConvexBody e = validate(ConvexBody::smooth(x, y), kFlat);
        double worst = 0.0;
        for (int i = 0; i < 64; ++i) {
            const double t = 2 * kPi * (i + 0.5) / 64;
            const SupportFrame f = support_frame_at(e, kFlat, t);
            const double polar_cauchy = f.rho * f.rho * (f.domega_dt / f.speed) * f.dtheta_dt;
            const double polar_minkowski = f.rho * f.rho * f.kappa_g * f.dtheta_dt;
            worst = std::max(worst, std::abs(polar_cauchy - polar_minkowski));
        }
        CHECK(worst < 1e-10);
        CHECK(cauchy_polar(kFlat, e, 1e-10).value ==
              doctest::Approx(arclength_perimeter(e, kFlat)).epsilon(1e-9));
    }
    SUBCASE("origin must be interior") {
        ConvexBody c = validate(ConvexBody::circle({3, 0}, 1.0), kFlat);
        CHECK_THROWS_AS(cauchy_polar(kFlat, c, 1e-8), Error);
    }
}

TEST_CASE("measure_ratios") {
    SUBCASE("circle at the origin") {
        ConvexBody c = validate(ConvexBody::circle({0, 0}, std::tanh(1.0)), kHyp);
        const MeasureRatios m = measure_ratios(kHyp, c, 1.1);
        CHECK(m.domega_dtheta == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(m.dphi_domega == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(m.dphitilde_domega == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("algebraic identities and the Poincare cross-check") {
        SeededRng rng(53);
        ConvexBody b = random_smooth_body(rng, kHyp, true);
        double chain = 0.0, tilde = 0.0, poincare = 0.0;
        for (int i = 0; i < 64; ++i) {
            const double t = 2 * kPi * (i + 0.29) / 64;
            const MeasureRatios m = measure_ratios(kHyp, b, t);
            chain = std::max(chain, std::abs(m.dphi_dtheta - m.dphi_domega * m.domega_dtheta));
            tilde = std::max(tilde, std::abs(m.dphi_domega + m.dphitilde_domega - 2.0));
            const SupportFrame f = support_frame_at(b, kHyp, t);
            poincare = std::max(poincare, std::abs(m.dphi_dtheta - dphi_dtheta_poincare(kHyp, f)));
        }
        CHECK(chain < 1e-12);
        CHECK(tilde < 1e-12);
        CHECK(poincare < 1e-10);
    }
    SUBCASE("finite-difference oracles across regimes") {
        SeededRng rng(61);
        for (double kk : {-1.0, 0.0, 1.0}) {
            const Curvature k{kk};
            ConvexBody b = random_smooth_body(rng, k, true);
            double worst = 0.0;
            for (int i = 0; i < 16; ++i) {
                const double t = 2 * kPi * (i + 0.41) / 16;
                const MeasureRatios m = measure_ratios(k, b, t);
                const SupportFrame f = support_frame_at(b, k, t);
                const double h = 1e-4;
                auto frame_of = [&](double tt) { return support_frame_at(b, k, tt); };
                auto unwrapped = [&](auto getter) {
                    const double base = getter(f);
                    return [&, base, getter](double tt) {
                        return base + wrap_pi(getter(frame_of(tt)) - base);
                    };
                };
                const double dth =
                    central_diff(unwrapped([](const SupportFrame& g) { return g.theta; }), t, h, 5);
                const double dom =
                    central_diff(unwrapped([](const SupportFrame& g) { return g.omega; }), t, h, 5);
                worst = std::max(worst, std::abs(m.dtheta_ds - dth / f.speed));
                worst = std::max(worst, std::abs(m.domega_ds - dom / f.speed));
                worst = std::max(worst, std::abs(m.domega_dtheta - dom / dth));
                if (kk < 0) {
                    const double dphi = central_diff(
                        unwrapped([](const SupportFrame& g) { return g.phi; }), t, h, 5);
                    const double dpht = central_diff(
                        unwrapped([](const SupportFrame& g) { return g.phi_tilde; }), t, h, 5);
                    worst = std::max(worst, std::abs(m.dphi_domega - dphi / dom));
                    worst = std::max(worst, std::abs(m.dphitilde_domega - dpht / dom));
                    worst = std::max(worst, std::abs(m.dphi_dtheta - dphi / dth));
                }
            }
            CHECK(worst < 1e-5);
        }
    }
}

TEST_CASE("phi and phi-tilde straddle omega symmetrically") {
    SeededRng rng(71);
    ConvexBody b = random_smooth_body(rng, kHyp, false);
    double worst_mid = 0.0, worst_par = 0.0;
    for (int i = 0; i < 128; ++i) {
        const double t = 2 * kPi * (i + 0.11) / 128;
        const SupportFrame f = support_frame_at(b, kHyp, t);
        worst_mid = std::max(worst_mid,
                             std::abs(wrap_pi(f.phi - f.omega) + wrap_pi(f.phi_tilde - f.omega)));
        // omega - phi is the angle of parallelism of r: cot(omega-phi) = ell(r)
        const double gap = wrap_pi(f.omega - f.phi);
        worst_par = std::max(worst_par,
                             std::abs(std::cos(gap) / std::sin(gap) - ell(kHyp, f.r)));
    }
    CHECK(worst_mid < 1e-10);
    CHECK(worst_par < 1e-10);
}

TEST_CASE("geodesic arc witness: Cauchy integrand dies, Minkowski term does not") {
    const ChartPoint A{-0.3, -0.4}, B{0.3, -0.4};
    const ArcContributions arc = geodesic_arc_contributions(kHyp, A, B, 1e-12);
    CHECK(std::abs(arc.cauchy_part) < 1e-10);
    CHECK(std::abs(arc.minkowski_area_part) > 1e-3);
}
