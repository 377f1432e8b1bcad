#pragma once

#include <cstdint>
#include <vector>

#include "croftonlab/body.hpp"

namespace croftonlab {

// Bounded convex region K carrying the Hilbert metric on its interior.
// The boundary lives in the Euclidean chart (k = 0). Smooth domains carry an
// arclength table for the Crofton line density.
struct HilbertDomain {
    ConvexBody boundary;
    bool smooth = false;
    double total_length = 0.0;
    std::vector<double> arclength_table; // cumulative s at the boundary grid params
};

HilbertDomain make_hilbert_domain(ConvexBody validated_boundary);

// Hilbert distance h(P, Q) = 1/2 log((AQ/AP)(BP/BQ)) with A, B the chord ends.
double hilbert_distance(const HilbertDomain& domain, ChartPoint P, ChartPoint Q);

// Projectively invariant pseudometric of the angle at C with sides V and W,
// evaluated through the dual line cross ratio (VP/VQ)(WQ/WP).
double vertex_pseudometric(ChartPoint C, const ChartLine& side_V, const ChartLine& side_W,
                           ChartPoint P, ChartPoint Q);

// Discrete Cauchy sum (1/2) sum_i d_i(P, Q) over the polygon vertices.
struct DiscreteCauchyDetail {
    double total = 0.0;
    std::vector<double> per_vertex;
    std::vector<int> side; // sign of the vertex against the PQ line (0 = on it)
};
double discrete_cauchy_distance(const HilbertDomain& domain, ChartPoint P, ChartPoint Q);
DiscreteCauchyDetail discrete_cauchy_detail(const HilbertDomain& domain, ChartPoint P,
                                            ChartPoint Q);

// Closed form of int_0^gamma (cot(alpha - t) - cot(beta - t)) dt.
double angle_arc_integral(double alpha, double beta, double gamma);

// Extreme angles subtended by K against the domain support line at R(phi).
struct PsiAngles {
    double psi1 = 0.0;
    double psi2 = 0.0;
    ChartPoint r_point{};
    bool nonunique_r = false; // phi hit a flat edge; angles taken at the edge midpoint
};
PsiAngles psi_angles(const HilbertDomain& domain, const ConvexBody& K, double phi);

// Hilbert perimeter of K: (1/2) int (cot psi1 - cot psi2) dphi. Polygon
// domains collapse to the exact per-vertex closed form.
double cauchy_perimeter_hilbert(const HilbertDomain& domain, const ConvexBody& K, double tol);

// Oriented-line density (1/2) kappa(s) csc^2(psi) of the Crofton measure.
double crofton_density(const HilbertDomain& domain, double s, double psi);

// Euclidean curvature and boundary point of a smooth domain at arclength s.
double domain_param_of_arclength(const HilbertDomain& domain, double s);

struct McResult {
    double estimate = 0.0;
    double std_error = 0.0;
    long long n = 0;
    std::uint64_t seed = 0;
};

// Monte Carlo Crofton length of an interior polyline: samples oriented lines
// (s, psi) uniformly, weights by the density, counts crossings. Deterministic
// for a fixed seed regardless of worker count.
McResult crofton_length_mc(const HilbertDomain& domain, const std::vector<ChartPoint>& polyline,
                           long long n_samples, std::uint64_t seed);

// Oriented Crofton distance: half the measure of oriented lines cutting the
// oriented segment PQ (cut = meets the segment, counterclockwise angle from
// PQ to the line direction below pi).
McResult crofton_oriented_distance_mc(const HilbertDomain& domain, ChartPoint P, ChartPoint Q,
                                      long long n_samples, std::uint64_t seed);

// Inscribed n-gon lower bound for the Hilbert perimeter of K.
double hilbert_perimeter_oracle(const HilbertDomain& domain, const ConvexBody& K, int n);

} // namespace croftonlab
