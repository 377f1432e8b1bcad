#pragma once

#include <cstdint>

#include "croftonlab/body.hpp"

namespace croftonlab {

// Stateless counter-based stream: the value at (seed, counter) never depends
// on evaluation order, so parallel consumers replay identically.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t counter);
double counter_uniform(std::uint64_t seed, std::uint64_t counter); // [0, 1)

// Small sequential generator for body/polygon synthesis.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    double uniform();                       // [0, 1)
    double uniform(double lo, double hi);   // [lo, hi)

private:
    std::uint64_t state_;
};

// Random smooth strictly convex body for the given regime; rejection-sampled
// until validation passes. Bodies fit the chart (|p| <= ~0.85 for k < 0) and
// optionally contain the chart origin with a distance margin.
ConvexBody random_smooth_body(SeededRng& rng, Curvature k, bool origin_interior = true);

// Random strictly convex counterclockwise polygon with n vertices on a
// jittered circle of the given scale.
ConvexBody random_convex_polygon(SeededRng& rng, Curvature k, int n, double scale);

// Uniform point inside the body (rejection in the bounding box), at least
// `margin` away from the boundary in the chart metric sense.
ChartPoint random_interior_point(SeededRng& rng, const ConvexBody& body, double margin);

} // namespace croftonlab
