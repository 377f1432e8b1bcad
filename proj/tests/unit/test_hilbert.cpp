#include <doctest.h>

#include <cmath>

#include "croftonlab/hilbert.hpp"
#include "croftonlab/quadrature.hpp"
#include "croftonlab/rng.hpp"

using namespace croftonlab;

namespace {
constexpr double kPi = 3.14159265358979323846;
const Curvature kFlat{0.0};
const Curvature kHyp{-1.0};

HilbertDomain disk_domain() {
    return make_hilbert_domain(validate(ConvexBody::circle({0, 0}, 1.0), kFlat));
}

HilbertDomain square_domain() {
    return make_hilbert_domain(
        validate(ConvexBody::polygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}}), kFlat));
}

ConvexBody degenerate_segment(ChartPoint p, ChartPoint q) {
    return validate(ConvexBody::segment(p, q), kFlat,
                    {.require_convex = true, .allow_degenerate = true});
}

} // namespace

TEST_CASE("hilbert_distance on reference chords") {
    HilbertDomain disk = disk_domain();
    CHECK(hilbert_distance(disk, {0, 0}, {0.5, 0}) ==
          doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-13));
    CHECK(hilbert_distance(disk, {0.3, -0.2}, {0.3, -0.2}) == 0.0);

    HilbertDomain sq = square_domain();
    CHECK(hilbert_distance(sq, {0, 0}, {0.5, 0}) ==
          doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-13));

    CHECK_THROWS_AS(hilbert_distance(sq, {0, 0}, {1.5, 0}), Error);
    CHECK_THROWS_AS(hilbert_distance(sq, {1.0, 0}, {0, 0}), Error);
}

TEST_CASE("hilbert metric axioms on random domains") {
    SeededRng rng(17);
    for (int rep = 0; rep < 4; ++rep) {
        HilbertDomain D =
            rep % 2 == 0
                ? make_hilbert_domain(random_convex_polygon(rng, kFlat, 3 + int(rng.uniform() * 9), 1.0))
                : make_hilbert_domain(random_smooth_body(rng, kFlat, false));
        double tri_dev = 0.0;
        for (int i = 0; i < 300; ++i) {
            const ChartPoint p = random_interior_point(rng, D.boundary, 1e-6);
            const ChartPoint q = random_interior_point(rng, D.boundary, 1e-6);
            const ChartPoint w = random_interior_point(rng, D.boundary, 1e-6);
            const double pq = hilbert_distance(D, p, q);
            CHECK(pq == hilbert_distance(D, q, p)); // symmetric to the bit
            CHECK(pq >= 0.0);
            tri_dev = std::max(tri_dev,
                               hilbert_distance(D, p, w) - pq - hilbert_distance(D, q, w));
        }
        CHECK(tri_dev < 1e-12);
    }
}

TEST_CASE("vertex pseudometric") {
    // collinear with the vertex
    CHECK(vertex_pseudometric({1, 1}, make_line(1, 0, -1), make_line(0, 1, -1), {0, 0},
                              {0.5, 0.5}) == 0.0);
    // symmetry under swapping P and Q
    const ChartLine V = make_line(1, 0, -1), W = make_line(0, 1, -1);
    const double d1 = vertex_pseudometric({1, 1}, V, W, {0, 0}, {0.5, 0});
    const double d2 = vertex_pseudometric({1, 1}, V, W, {0.5, 0}, {0, 0});
    CHECK(d1 == doctest::Approx(d2).epsilon(1e-15));
    CHECK(d1 > 0.0);

    // duality oracle: cut the rays C->P, C->Q with a transversal segment AB
    // on the sides and compare with the point cross ratio
    const ChartPoint C{1, 1}, P{0, 0}, Q{0.5, 0};
    const ChartPoint A{1, -1};  // on side x = 1
    const ChartPoint B{-3, 1};  // on side y = 1
    const Vec2 ab = B - A;
    auto hit = [&](ChartPoint through) {
        // intersection of line C->through with line A + s(B - A)
        const Vec2 d = through - C;
        const double s = cross(C - A, d) / cross(ab, d);
        return A + s * ab;
    };
    const ChartPoint Pc = hit(P), Qc = hit(Q);
    const double aq = norm(Qc - A), ap = norm(Pc - A);
    const double bp = norm(Pc - B), bq = norm(Qc - B);
    const double oracle = 0.5 * std::abs(std::log((aq / ap) * (bp / bq)));
    CHECK(d1 == doctest::Approx(oracle).epsilon(1e-12));

    CHECK_THROWS_AS(vertex_pseudometric({1, 1}, V, W, {1, 0}, {0, 0.5}), Error);
}

TEST_CASE("discrete Cauchy lemma") {
    SeededRng rng(23);
    double worst = 0.0;
    for (int rep = 0; rep < 30; ++rep) {
        const int nv = 3 + int(rng.uniform() * 10.0);
        HilbertDomain D = make_hilbert_domain(random_convex_polygon(rng, kFlat, nv, 1.0));
        for (int i = 0; i < 10; ++i) {
            const ChartPoint p = random_interior_point(rng, D.boundary, 1e-5);
            const ChartPoint q = random_interior_point(rng, D.boundary, 1e-5);
            const double h = hilbert_distance(D, p, q);
            worst = std::max(worst, std::abs(discrete_cauchy_distance(D, p, q) - h));
            // the vertices on either side of the chord carry the distance alone
            const DiscreteCauchyDetail det = discrete_cauchy_detail(D, p, q);
            double plus = 0.0, minus = 0.0;
            for (std::size_t v = 0; v < det.per_vertex.size(); ++v) {
                if (det.side[v] > 0) plus += det.per_vertex[v];
                if (det.side[v] < 0) minus += det.per_vertex[v];
            }
            worst = std::max(worst, std::abs(plus - h));
            worst = std::max(worst, std::abs(minus - h));
        }
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("a vertex collinear with P and Q contributes nothing") {
    HilbertDomain sq = square_domain();
    // the diagonal through (1,1) and (-1,-1)
    const DiscreteCauchyDetail det = discrete_cauchy_detail(sq, {-0.3, -0.3}, {0.4, 0.4});
    int zeros = 0;
    for (double d : det.per_vertex)
        if (d == 0.0) ++zeros;
    CHECK(zeros == 2);
    CHECK(det.total == doctest::Approx(hilbert_distance(sq, {-0.3, -0.3}, {0.4, 0.4}))
                           .epsilon(1e-13));
}

TEST_CASE("angle_arc_integral") {
    CHECK(angle_arc_integral(kPi / 2, 3 * kPi / 4, kPi / 4) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(angle_arc_integral(1.0, 2.0, 0.0) == 0.0);
    CHECK(angle_arc_integral(1.3, 1.3, 0.7) == 0.0);
    CHECK_THROWS_AS(angle_arc_integral(0.5, 2.0, 1.0), Error);

    // adaptive quadrature oracle
    const double a = 1.9, b = 2.9, g = 0.9;
    auto f = [&](double t) {
        return std::cos(a - t) / std::sin(a - t) - std::cos(b - t) / std::sin(b - t);
    };
    CHECK(angle_arc_integral(a, b, g) ==
          doctest::Approx(integrate_adaptive(f, 0.0, g, 1e-12).value).epsilon(1e-10));
}

TEST_CASE("psi_angles") {
    HilbertDomain disk = disk_domain();
    SUBCASE("concentric disk of chart radius 0.5") {
        ConvexBody K = validate(ConvexBody::circle({0, 0}, 0.5), kFlat);
        for (double phi : {0.0, 0.9, 4.4}) {
            const PsiAngles pa = psi_angles(disk, K, phi);
            CHECK(pa.psi1 == doctest::Approx(kPi / 3).epsilon(1e-10));
            CHECK(pa.psi2 == doctest::Approx(2 * kPi / 3).epsilon(1e-10));
            CHECK(!pa.nonunique_r);
        }
    }
    SUBCASE("degenerate point at the center") {
        ConvexBody K = validate(ConvexBody::point({0, 0}), kFlat,
                                {.require_convex = true, .allow_degenerate = true});
        const PsiAngles pa = psi_angles(disk, K, 1.2);
        CHECK(pa.psi1 == doctest::Approx(kPi / 2).epsilon(1e-12));
        CHECK(pa.psi2 == doctest::Approx(kPi / 2).epsilon(1e-12));
    }
    SUBCASE("segment: psi1 = psi2 exactly at the chord endpoints") {
        ConvexBody K = degenerate_segment({-0.3, 0}, {0.4, 0});
        const PsiAngles at_end = psi_angles(disk, K, 0.0); // R = (1,0) on the x-axis chord
        CHECK(at_end.psi1 == doctest::Approx(at_end.psi2).epsilon(1e-12));
        const PsiAngles off = psi_angles(disk, K, 0.8);
        CHECK(off.psi1 < off.psi2);
    }
    SUBCASE("polygon domain edge normal flags NONUNIQUE_R") {
        HilbertDomain sq = square_domain();
        ConvexBody K = validate(ConvexBody::circle({0, 0}, 0.3), kFlat);
        const PsiAngles pa = psi_angles(sq, K, 0.0); // normal of the edge x = 1
        CHECK(pa.nonunique_r);
        CHECK(pa.r_point.x == doctest::Approx(1.0));
        CHECK(std::abs(pa.r_point.y) < 1e-14); // canonical edge midpoint
    }
}

TEST_CASE("cauchy_perimeter_hilbert") {
    HilbertDomain disk = disk_domain();
    SUBCASE("disk domain reproduces the hyperbolic circumference") {
        ConvexBody K = validate(ConvexBody::circle({0, 0}, std::tanh(1.0)), kFlat);
        CHECK(cauchy_perimeter_hilbert(disk, K, 1e-10) ==
              doctest::Approx(2 * kPi * std::sinh(1.0)).epsilon(1e-9));
    }
    SUBCASE("segment gives the two-gon perimeter, point gives zero") {
        const ChartPoint P{-0.2, 0.1}, Q{0.5, 0.3};
        ConvexBody seg = degenerate_segment(P, Q);
        CHECK(cauchy_perimeter_hilbert(disk, seg, 1e-10) ==
              doctest::Approx(2 * hilbert_distance(disk, P, Q)).epsilon(1e-9));
        ConvexBody pt = validate(ConvexBody::point({0.3, -0.1}), kFlat,
                                 {.require_convex = true, .allow_degenerate = true});
        CHECK(std::abs(cauchy_perimeter_hilbert(disk, pt, 1e-10)) < 1e-12);

        // polygon domain goes through the closed form
        HilbertDomain sq = square_domain();
        CHECK(cauchy_perimeter_hilbert(sq, seg, 1e-10) ==
              doctest::Approx(2 * hilbert_distance(sq, P, Q)).epsilon(1e-12));
    }
    SUBCASE("body touching the domain is rejected") {
        ConvexBody big = validate(ConvexBody::circle({0, 0}, 0.9999999999), kFlat);
        CHECK_THROWS_AS(cauchy_perimeter_hilbert(disk, big, 1e-8), Error);
    }
    SUBCASE("direct quadrature of the psi integrand matches 2h in a polygon domain") {
        HilbertDomain sq = square_domain();
        const ChartPoint P{-0.25, 0.15}, Q{0.4, -0.2};
        ConvexBody seg = degenerate_segment(P, Q);
        double total = 0.0;
        const auto& normals = sq.boundary.edge_normals;
        for (std::size_t i = 0; i < normals.size(); ++i) {
            const double start = normals[(i + normals.size() - 1) % normals.size()];
            const double width = wrap_2pi(normals[i] - start);
            auto f = [&](double off) {
                double phi = start + off;
                PsiAngles pa = psi_angles(sq, seg, phi);
                if (pa.nonunique_r) pa = psi_angles(sq, seg, phi + 1e-12);
                return std::cos(pa.psi1) / std::sin(pa.psi1) -
                       std::cos(pa.psi2) / std::sin(pa.psi2);
            };
            total += integrate_adaptive(f, 1e-9, width - 1e-9, 1e-10).value;
        }
        CHECK(0.5 * total ==
              doctest::Approx(2 * hilbert_distance(sq, P, Q)).epsilon(1e-8));
    }
}

TEST_CASE("hilbert specializes to the Klein metric on the unit disk") {
    HilbertDomain disk = disk_domain();
    SeededRng rng(41);
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
        auto pt = [&] {
            const double r = std::sqrt(rng.uniform()) * 0.95;
            const double a = rng.uniform(0.0, 2 * kPi);
            return ChartPoint{r * std::cos(a), r * std::sin(a)};
        };
        const ChartPoint p = pt(), q = pt();
        worst = std::max(worst,
                         std::abs(hilbert_distance(disk, p, q) - hyperbolic_distance_klein(p, q)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("hilbert distance is invariant under a joint affine map") {
    SeededRng rng(43);
    HilbertDomain D = make_hilbert_domain(random_convex_polygon(rng, kFlat, 7, 1.0));
    auto map = [](ChartPoint p) {
        return ChartPoint{1.2 * p.x + 0.3 * p.y + 0.05, -0.1 * p.x + 0.8 * p.y - 0.1};
    };
    std::vector<ChartPoint> mapped;
    for (const auto& v : D.boundary.vertices) mapped.push_back(map(v));
    HilbertDomain DM = make_hilbert_domain(validate(ConvexBody::polygon(mapped), kFlat));
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const ChartPoint p = random_interior_point(rng, D.boundary, 1e-5);
        const ChartPoint q = random_interior_point(rng, D.boundary, 1e-5);
        worst = std::max(worst, std::abs(hilbert_distance(D, p, q) -
                                         hilbert_distance(DM, map(p), map(q))));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("crofton density") {
    HilbertDomain disk = disk_domain();
    CHECK(crofton_density(disk, 0.37, kPi / 2) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(crofton_density(disk, 2.0, kPi / 4) == doctest::Approx(1.0).epsilon(1e-12));
    // curvature is linear in the density: a circle of radius 1/2 has kappa 2
    HilbertDomain half = make_hilbert_domain(validate(ConvexBody::circle({0, 0}, 0.5), kFlat));
    CHECK(crofton_density(half, 0.1, kPi / 2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(crofton_density(disk, 0.0, 0.0), Error);
    HilbertDomain sq = square_domain();
    CHECK_THROWS_AS(crofton_density(sq, 0.1, 1.0), Error);
}

TEST_CASE("crofton Monte Carlo") {
    HilbertDomain disk = disk_domain();
    SUBCASE("segment estimate brackets the Hilbert distance") {
        const McResult mc = crofton_length_mc(disk, {{0, 0}, {0.5, 0}}, 200000, 2026);
        CHECK(std::abs(mc.estimate - 0.5 * std::log(3.0)) < 3.0 * mc.std_error);
        CHECK(mc.std_error > 0.0);
        CHECK(mc.n == 200000);
    }
    SUBCASE("doubling the curve doubles the estimate exactly under one seed") {
        const McResult once = crofton_length_mc(disk, {{0, 0}, {0.5, 0}}, 50000, 5);
        const McResult twice =
            crofton_length_mc(disk, {{0, 0}, {0.5, 0}, {0, 0}}, 50000, 5);
        CHECK(twice.estimate == doctest::Approx(2.0 * once.estimate).epsilon(1e-15));
    }
    SUBCASE("zero-length curve") {
        const McResult mc = crofton_length_mc(disk, {{0.1, 0.1}}, 1000, 1);
        CHECK(mc.estimate == 0.0);
        CHECK(mc.std_error == 0.0);
    }
    SUBCASE("replay is deterministic") {
        const McResult a = crofton_length_mc(disk, {{0, 0}, {0.5, 0}}, 30000, 9);
        const McResult b = crofton_length_mc(disk, {{0, 0}, {0.5, 0}}, 30000, 9);
        CHECK(a.estimate == b.estimate);
        CHECK(a.std_error == b.std_error);
    }
    SUBCASE("oriented distance is symmetric within noise") {
        const ChartPoint P{-0.2, 0.3}, Q{0.4, -0.1};
        const McResult ab = crofton_oriented_distance_mc(disk, P, Q, 200000, 11);
        const McResult ba = crofton_oriented_distance_mc(disk, Q, P, 200000, 12);
        const double sigma = std::hypot(ab.std_error, ba.std_error);
        CHECK(std::abs(ab.estimate - ba.estimate) < 3.0 * sigma);
    }
}

TEST_CASE("hilbert_perimeter_oracle") {
    HilbertDomain disk = disk_domain();
    SUBCASE("segment body: any refinement returns the two-gon value") {
        const ChartPoint P{-0.2, 0.1}, Q{0.5, 0.3};
        ConvexBody seg = degenerate_segment(P, Q);
        const double expect = 2 * hilbert_distance(disk, P, Q);
        CHECK(hilbert_perimeter_oracle(disk, seg, 8) == doctest::Approx(expect).epsilon(1e-14));
        CHECK(hilbert_perimeter_oracle(disk, seg, 64) == doctest::Approx(expect).epsilon(1e-14));
    }
    SUBCASE("disk-domain circle approaches the hyperbolic circumference") {
        ConvexBody K = validate(ConvexBody::circle({0, 0}, std::tanh(1.0)), kFlat);
        const double oracle = hilbert_perimeter_oracle(disk, K, 4096);
        CHECK(std::abs(oracle - 2 * kPi * std::sinh(1.0)) < 1e-5);
    }
    SUBCASE("doubling never decreases the value") {
        SeededRng rng(3);
        ConvexBody K = validate(ConvexBody::circle({0.1, -0.05}, 0.4), kFlat);
        double prev = hilbert_perimeter_oracle(disk, K, 16);
        for (int n = 32; n <= 512; n *= 2) {
            const double cur = hilbert_perimeter_oracle(disk, K, n);
            CHECK(cur >= prev - 1e-12);
            prev = cur;
        }
    }
}
