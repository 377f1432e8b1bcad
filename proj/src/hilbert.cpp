#include "croftonlab/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "croftonlab/quadrature.hpp"
#include "croftonlab/rng.hpp"

namespace croftonlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.283185307179586476925286766559;
const Curvature kFlat{0.0};

// 5-point Gauss-Legendre on [0, 1]
constexpr double kGaussX[5] = {0.046910077030668, 0.230765344947158, 0.5,
                               0.769234655052841, 0.953089922969332};
constexpr double kGaussW[5] = {0.118463442528095, 0.239314335249683, 0.284444444444444,
                               0.239314335249683, 0.118463442528095};

void require_interior(const HilbertDomain& domain, ChartPoint p, const char* who) {
    if (!point_strictly_inside(domain.boundary, p, 1e-12))
        fail(ErrorCode::domain, std::string(who) + ": point not strictly interior");
}

void require_body_inside(const HilbertDomain& domain, const ConvexBody& K) {
    const double margin = 1e-9;
    if (K.kind == ConvexBody::Kind::polygon) {
        for (const auto& v : K.vertices)
            if (!point_strictly_inside(domain.boundary, v, margin))
                fail(ErrorCode::domain, "body touches the Hilbert domain boundary");
    } else {
        for (const auto& p : K.grid_points)
            if (!point_strictly_inside(domain.boundary, p, margin))
                fail(ErrorCode::domain, "body touches the Hilbert domain boundary");
    }
}

} // namespace

HilbertDomain make_hilbert_domain(ConvexBody boundary) {
    if (!boundary.validated || boundary.valid_k.k != 0.0)
        fail(ErrorCode::bad_input, "Hilbert domain boundary must be validated with k = 0");
    if (!boundary.convex) fail(ErrorCode::non_convex, "Hilbert domain must be convex");
    if (boundary.degenerate) fail(ErrorCode::bad_input, "Hilbert domain must have interior");

    HilbertDomain d;
    d.boundary = std::move(boundary);
    d.smooth = d.boundary.kind == ConvexBody::Kind::smooth;
    if (d.smooth) {
        const std::size_t N = d.boundary.grid_points.size();
        d.arclength_table.assign(N + 1, 0.0);
        double acc = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double t0 = kTwoPi * double(i) / double(N);
            const double dt = kTwoPi / double(N);
            double seg = 0.0;
            for (int g = 0; g < 5; ++g)
                seg += kGaussW[g] * norm(d.boundary.velocity_at(t0 + kGaussX[g] * dt));
            acc += seg * dt;
            d.arclength_table[i + 1] = acc;
        }
        d.total_length = acc;
    } else {
        d.total_length = arclength_perimeter(d.boundary, kFlat);
    }
    return d;
}

double hilbert_distance(const HilbertDomain& domain, ChartPoint P, ChartPoint Q) {
    // canonical argument order keeps the value bit-exactly symmetric
    if (Q.x < P.x || (Q.x == P.x && Q.y < P.y)) std::swap(P, Q);
    const double L = norm(Q - P);
    if (L == 0.0) {
        require_interior(domain, P, "hilbert_distance");
        return 0.0;
    }
    require_interior(domain, P, "hilbert_distance");
    require_interior(domain, Q, "hilbert_distance");
    const auto [ta, tb] = line_body_intersections(domain.boundary, P, Q - P);
    if (!(ta < 0.0 && tb > L))
        fail(ErrorCode::domain, "hilbert_distance: chord does not bracket the points");
    const double AP = -ta, AQ = L - ta, BP = tb, BQ = tb - L;
    return 0.5 * std::log((AQ * BP) / (AP * BQ));
}

double vertex_pseudometric(ChartPoint C, const ChartLine& side_V, const ChartLine& side_W,
                           ChartPoint P, ChartPoint Q) {
    // collinear with the vertex: pseudometric vanishes (covers A or B being C)
    const double scale = norm(P - C) * norm(Q - C);
    if (std::abs(cross(P - C, Q - C)) <= 1e-14 * scale) return 0.0;

    const double vp = line_eval(side_V, P), vq = line_eval(side_V, Q);
    const double wp = line_eval(side_W, P), wq = line_eval(side_W, Q);
    if (vp == 0.0 || vq == 0.0 || wp == 0.0 || wq == 0.0)
        fail(ErrorCode::domain, "vertex_pseudometric: point on a side line");
    return 0.5 * std::abs(std::log((vp * wq) / (vq * wp)));
}

DiscreteCauchyDetail discrete_cauchy_detail(const HilbertDomain& domain, ChartPoint P,
                                            ChartPoint Q) {
    if (domain.smooth)
        fail(ErrorCode::bad_input, "discrete Cauchy sum needs a polygon domain");
    require_interior(domain, P, "discrete_cauchy_distance");
    require_interior(domain, Q, "discrete_cauchy_distance");

    const auto& vs = domain.boundary.vertices;
    const std::size_t n = vs.size();
    DiscreteCauchyDetail out;
    out.per_vertex.resize(n);
    out.side.resize(n);
    const Vec2 pq = Q - P;
    for (std::size_t i = 0; i < n; ++i) {
        const ChartPoint C = vs[i];
        const ChartPoint prev = vs[(i + n - 1) % n];
        const ChartPoint next = vs[(i + 1) % n];
        const ChartLine V = line_through(prev, C - prev);
        const ChartLine W = line_through(C, next - C);
        out.per_vertex[i] = vertex_pseudometric(C, V, W, P, Q);
        const double c = cross(pq, C - P);
        out.side[i] = c > 1e-14 ? 1 : (c < -1e-14 ? -1 : 0);
        out.total += out.per_vertex[i];
    }
    out.total *= 0.5;
    return out;
}

double discrete_cauchy_distance(const HilbertDomain& domain, ChartPoint P, ChartPoint Q) {
    return discrete_cauchy_detail(domain, P, Q).total;
}

double angle_arc_integral(double alpha, double beta, double gamma) {
    if (gamma == 0.0 || alpha == beta) return 0.0;
    const double sa = std::sin(alpha), sb = std::sin(beta);
    const double sag = std::sin(alpha - gamma), sbg = std::sin(beta - gamma);
    if (sa <= 0.0 || sb <= 0.0 || sag <= 0.0 || sbg <= 0.0)
        fail(ErrorCode::domain, "angle_arc_integral: angles outside the valid wedge");
    return std::log((sa * sbg) / (sb * sag));
}

PsiAngles psi_angles(const HilbertDomain& domain, const ConvexBody& K, double phi) {
    require_body_inside(domain, K);
    const SupportLineResult sup = support_line_at_omega(domain.boundary, kFlat, phi);
    PsiAngles out;
    out.r_point = sup.contact;
    out.nonunique_r = sup.edge_contact;
    const Vec2 ref = perp(from_angle(phi)); // support-line direction, positive side
    const ExtremeRays er = extreme_ray_angles(K, sup.contact, ref);
    out.psi1 = er.psi1;
    out.psi2 = er.psi2;
    return out;
}

double cauchy_perimeter_hilbert(const HilbertDomain& domain, const ConvexBody& K, double tol) {
    require_body_inside(domain, K);
    if (!domain.smooth) {
        // exact vertex fans: psi decreases affinely in phi while R sits at a vertex
        const auto& vs = domain.boundary.vertices;
        const auto& normals = domain.boundary.edge_normals;
        const std::size_t n = vs.size();
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double prev = normals[(i + n - 1) % n];
            const double gamma = wrap_2pi(normals[i] - prev);
            if (gamma <= 0.0) continue;
            const Vec2 ref = perp(from_angle(prev));
            const ExtremeRays er = extreme_ray_angles(K, vs[i], ref);
            total += angle_arc_integral(er.psi1, er.psi2, gamma);
        }
        return 0.5 * total;
    }
    auto integrand = [&](double phi) {
        const PsiAngles pa = psi_angles(domain, K, phi);
        return 0.5 * (std::cos(pa.psi1) / std::sin(pa.psi1) -
                      std::cos(pa.psi2) / std::sin(pa.psi2));
    };
    const QuadResult q = integrate_periodic(integrand, tol);
    if (!q.converged) fail(ErrorCode::nonconverged, "cauchy_perimeter_hilbert did not converge");
    return q.value;
}

double domain_param_of_arclength(const HilbertDomain& domain, double s) {
    if (!domain.smooth) fail(ErrorCode::bad_input, "arclength lookup needs a smooth domain");
    const auto& S = domain.arclength_table;
    const std::size_t N = S.size() - 1;
    double ss = std::fmod(s, domain.total_length);
    if (ss < 0) ss += domain.total_length;
    const auto it = std::upper_bound(S.begin(), S.end(), ss);
    std::size_t i = it == S.begin() ? 0 : std::size_t(it - S.begin()) - 1;
    if (i >= N) i = N - 1;
    double t = kTwoPi * (double(i) + (ss - S[i]) / (S[i + 1] - S[i])) / double(N);
    for (int iter = 0; iter < 3; ++iter) {
        // Newton on s(t) - ss with one Gauss panel from the table node
        const double t0 = kTwoPi * double(i) / double(N);
        double seg = 0.0;
        for (int g = 0; g < 5; ++g)
            seg += kGaussW[g] * norm(domain.boundary.velocity_at(t0 + kGaussX[g] * (t - t0)));
        const double st = S[i] + seg * (t - t0);
        t -= (st - ss) / norm(domain.boundary.velocity_at(t));
    }
    return t;
}

double crofton_density(const HilbertDomain& domain, double s, double psi) {
    if (!domain.smooth)
        fail(ErrorCode::bad_input, "crofton_density needs a smooth positive-curvature domain");
    if (!(psi > 0.0 && psi < kPi)) fail(ErrorCode::domain, "crofton_density: psi outside (0, pi)");
    const double t = domain_param_of_arclength(domain, s);
    const double kappa = chart_geodesic_curvature(kFlat, domain.boundary.point_at(t),
                                                  domain.boundary.velocity_at(t),
                                                  domain.boundary.acceleration_at(t));
    const double cs = std::sin(psi);
    return 0.5 * kappa / (cs * cs);
}

namespace {

int worker_count() {
    if (const char* env = std::getenv("CROFTONLAB_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(std::min(hw, 8u));
}

// shared Monte Carlo core: per-sample weight times a crossing count
template <typename CountFn>
McResult run_line_mc(const HilbertDomain& domain, long long n_samples, std::uint64_t seed,
                     CountFn&& count) {
    if (!domain.smooth)
        fail(ErrorCode::bad_input, "line sampling needs a smooth positive-curvature domain");
    if (n_samples < 1) fail(ErrorCode::domain, "need at least one sample");

    const double L = domain.total_length;
    const long long chunk = 1 << 14;
    const long long n_chunks = (n_samples + chunk - 1) / chunk;
    std::vector<double> sum_w(std::size_t(n_chunks), 0.0);
    std::vector<double> sum_w2(std::size_t(n_chunks), 0.0);

    auto run_chunk = [&](long long c) {
        const long long lo = c * chunk;
        const long long hi = std::min(n_samples, lo + chunk);
        double s1 = 0.0, s2 = 0.0;
        for (long long i = lo; i < hi; ++i) {
            const double u1 = counter_uniform(seed, std::uint64_t(2 * i));
            const double u2 = counter_uniform(seed, std::uint64_t(2 * i + 1));
            const double s = u1 * L;
            const double psi = std::min(kPi - 1e-12, std::max(1e-12, u2 * kPi));
            const double t = domain_param_of_arclength(domain, s);
            const ChartPoint R = domain.boundary.point_at(t);
            const Vec2 vel = domain.boundary.velocity_at(t);
            const Vec2 dT = vel / norm(vel);
            const Vec2 u = std::cos(psi) * dT + std::sin(psi) * perp(dT);
            const double kappa = chart_geodesic_curvature(
                kFlat, R, vel, domain.boundary.acceleration_at(t));
            const double sp = std::sin(psi);
            const int m = count(R, u);
            if (m != 0) {
                const double w = 0.5 * L * kPi * (0.5 * kappa / (sp * sp)) * double(m);
                s1 += w;
                s2 += w * w;
            }
        }
        sum_w[std::size_t(c)] = s1;
        sum_w2[std::size_t(c)] = s2;
    };

    const int workers = std::min<long long>(worker_count(), n_chunks);
    if (workers <= 1) {
        for (long long c = 0; c < n_chunks; ++c) run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(std::size_t(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (long long c = w; c < n_chunks; c += workers) run_chunk(c);
            });
        for (auto& th : pool) th.join();
    }

    double s1 = 0.0, s2 = 0.0;
    for (long long c = 0; c < n_chunks; ++c) {
        s1 += sum_w[std::size_t(c)];
        s2 += sum_w2[std::size_t(c)];
    }
    McResult out;
    out.n = n_samples;
    out.seed = seed;
    out.estimate = s1 / double(n_samples);
    if (n_samples > 1) {
        const double var = std::max(0.0, (s2 - s1 * s1 / double(n_samples)) /
                                             double(n_samples - 1));
        out.std_error = std::sqrt(var / double(n_samples));
    }
    return out;
}

bool line_meets_segment(ChartPoint R, Vec2 u, ChartPoint A, ChartPoint B) {
    const double ca = cross(u, A - R);
    const double cb = cross(u, B - R);
    return (ca > 0.0 && cb < 0.0) || (ca < 0.0 && cb > 0.0);
}

} // namespace

McResult crofton_length_mc(const HilbertDomain& domain, const std::vector<ChartPoint>& polyline,
                           long long n_samples, std::uint64_t seed) {
    for (const auto& p : polyline) require_interior(domain, p, "crofton_length_mc");
    if (polyline.size() < 2) {
        McResult out;
        out.n = n_samples;
        out.seed = seed;
        return out; // zero-length curve
    }
    return run_line_mc(domain, n_samples, seed, [&](ChartPoint R, Vec2 u) {
        int m = 0;
        for (std::size_t i = 0; i + 1 < polyline.size(); ++i)
            if (line_meets_segment(R, u, polyline[i], polyline[i + 1])) ++m;
        return m;
    });
}

McResult crofton_oriented_distance_mc(const HilbertDomain& domain, ChartPoint P, ChartPoint Q,
                                      long long n_samples, std::uint64_t seed) {
    require_interior(domain, P, "crofton_oriented_distance_mc");
    require_interior(domain, Q, "crofton_oriented_distance_mc");
    const Vec2 pq = Q - P;
    McResult res = run_line_mc(domain, n_samples, seed, [&](ChartPoint R, Vec2 u) {
        if (!line_meets_segment(R, u, P, Q)) return 0;
        return cross(pq, u) > 0.0 ? 1 : 0;
    });
    res.estimate *= 0.5;
    res.std_error *= 0.5;
    return res;
}

double hilbert_perimeter_oracle(const HilbertDomain& domain, const ConvexBody& K, int n) {
    if (n < 3) fail(ErrorCode::domain, "hilbert_perimeter_oracle: need n >= 3");
    require_body_inside(domain, K);
    if (K.degenerate) {
        if (K.vertices.size() < 2) return 0.0;
        return 2.0 * hilbert_distance(domain, K.vertices[0], K.vertices[1]);
    }
    const double T = K.period();
    double total = 0.0;
    ChartPoint prev = K.point_at(0.0);
    for (int j = 1; j <= n; ++j) {
        const ChartPoint cur = K.point_at(T * double(j % n) / double(n));
        total += hilbert_distance(domain, prev, cur);
        prev = cur;
    }
    return total;
}

} // namespace croftonlab
