#include "croftonlab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace croftonlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

double to_unit(std::uint64_t v) { return double(v >> 11) * 0x1.0p-53; }

} // namespace

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t counter) {
    return splitmix64(splitmix64(seed ^ 0x6A09E667F3BCC909ull) + counter);
}

double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
    return to_unit(counter_hash(seed, counter));
}

std::uint64_t SeededRng::next_u64() {
    state_ = splitmix64(state_ + 0x1D8AF066u);
    return state_;
}

double SeededRng::uniform() { return to_unit(next_u64()); }

double SeededRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

ConvexBody random_smooth_body(SeededRng& rng, Curvature k, bool origin_interior) {
    const double chart_cap = k.k < 0 ? 0.85 : 1.4;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const double base = rng.uniform(0.25, 0.55) * chart_cap;
        double cx = 0.0, cy = 0.0;
        if (!origin_interior || rng.uniform() < 0.7) {
            const double shift = origin_interior ? 0.35 * base : 1.5 * base;
            const double dir = rng.uniform(0.0, 6.283185307179586);
            cx = shift * std::cos(dir) * rng.uniform();
            cy = shift * std::sin(dir) * rng.uniform();
        }
        TrigPoly px, py;
        px.coeffs = {cx, base * rng.uniform(0.85, 1.15), 0.0};
        py.coeffs = {cy, 0.0, base * rng.uniform(0.85, 1.15)};
        const int harmonics = 2 + int(rng.uniform() * 3.0);
        for (int m = 2; m <= harmonics; ++m) {
            const double amp = 0.06 * base / double(m * m);
            px.coeffs.push_back(rng.uniform(-amp, amp));
            px.coeffs.push_back(rng.uniform(-amp, amp));
            py.coeffs.push_back(rng.uniform(-amp, amp));
            py.coeffs.push_back(rng.uniform(-amp, amp));
        }
        ConvexBody candidate = ConvexBody::smooth(px, py);
        try {
            candidate = validate(std::move(candidate), k);
        } catch (const Error&) {
            continue;
        }
        if (candidate.max_chart_radius > chart_cap) continue;
        if (origin_interior && !point_strictly_inside(candidate, {0.0, 0.0}, 0.05 * base))
            continue;
        return candidate;
    }
    fail(ErrorCode::nonconverged, "random_smooth_body: rejection sampling failed");
}

ConvexBody random_convex_polygon(SeededRng& rng, Curvature k, int n, double scale) {
    const double two_pi = 6.283185307179586;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        // jittered fan angles keep the spacing positive; mild radial variation
        // keeps strict convexity likely
        const double base = rng.uniform(0.0, two_pi);
        auto verts = std::vector<ChartPoint>(std::size_t(n));
        for (int i = 0; i < n; ++i) {
            const double a =
                base + two_pi * (double(i) + 0.6 * (rng.uniform() - 0.5)) / double(n);
            const double r = scale * rng.uniform(0.82, 1.0);
            verts[std::size_t(i)] = {r * std::cos(a), r * std::sin(a)};
        }
        ConvexBody candidate = ConvexBody::polygon(std::move(verts));
        try {
            return validate(std::move(candidate), k);
        } catch (const Error&) {
            continue;
        }
    }
    fail(ErrorCode::nonconverged, "random_convex_polygon: rejection sampling failed");
}

ChartPoint random_interior_point(SeededRng& rng, const ConvexBody& body, double margin) {
    double lox = 1e300, hix = -1e300, loy = 1e300, hiy = -1e300;
    auto absorb = [&](ChartPoint p) {
        lox = std::min(lox, p.x);
        hix = std::max(hix, p.x);
        loy = std::min(loy, p.y);
        hiy = std::max(hiy, p.y);
    };
    if (body.kind == ConvexBody::Kind::polygon)
        for (const auto& v : body.vertices) absorb(v);
    else
        for (const auto& p : body.grid_points) absorb(p);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const ChartPoint p{rng.uniform(lox, hix), rng.uniform(loy, hiy)};
        if (point_strictly_inside(body, p, margin)) return p;
    }
    fail(ErrorCode::nonconverged, "random_interior_point: rejection sampling failed");
}

} // namespace croftonlab
