#pragma once

#include <random>
#include <vector>

#include "essmod/modulus.hpp"

namespace essmod {

// Shared example instances used by the test suites and the built-in
// verification command. Everything here is deterministic given the seed.

// Three vertices a - b - c joined by unit edges.
Space unit_path_graph();

// n vertices on a cycle, every edge of the given length.
Space cycle_graph(std::size_t n, double edge_length = 1.0);

// Planar embedding with two routes between x and y: a straight route of
// length `direct_length` passing through a strip of weight-zero points,
// and an arch of length `detour_length` through positive-weight points.
// The strip certificate covers the straight route, so the essential
// distance between x and y is the detour length while the base distance
// stays the direct length.
struct TwoRouteInstance {
    Space space;
    std::vector<Curve> curves;
    std::vector<NullSetCertificate> certs;
    std::size_t x = 0;
    std::size_t y = 0;
    double direct_length = 0.0;
    double detour_length = 0.0;
};
TwoRouteInstance two_route_instance();
TwoRouteInstance random_two_route_instance(std::mt19937& rng);

// Piecewise-linear approximation of t -> (t, C(t)) with C the Cantor
// step-function, at the given construction level. Each rising piece is
// subdivided into `interior` + 1 segments; every sample is a point of the
// space. `dyadic_height` lists the samples whose second coordinate is a
// dyadic rational (the flat region and the junctions); `steep_interior`
// is the complement.
struct StaircaseInstance {
    Space space;
    Curve curve;
    std::vector<std::size_t> dyadic_height;
    std::vector<std::size_t> steep_interior;
    double flat_total = 0.0;   // sum of the flat-piece widths
    double steep_total = 0.0;  // sum of the rising-piece chord lengths
};
StaircaseInstance cantor_staircase(std::size_t level, std::size_t interior);

// Triangle-subdivision gasket graph at the given level: unit side length,
// every small edge 2^-level, all weights positive. Points 0, 1, 2 are the
// corners.
Space sierpinski_gasket(std::size_t level);

// Closed polyline through `segments` evenly spaced samples of the unit
// circle, as raw positions over a one-point embedding space.
struct CirclePolyline {
    Space space;
    Curve curve;
};
CirclePolyline circle_polyline(std::size_t segments);

// Random connected graph: a random spanning tree plus up to `extra_edges`
// additional random edges. Unit lengths or lengths in [0.3, 3].
Space random_connected_graph(std::mt19937& rng, std::size_t n, bool unit_lengths,
                             std::size_t extra_edges);

// Random junction graph where a subset of edges (all of them when
// `strip_all`) is replaced by three-segment strips through two fresh
// weight-zero points; one certificate per strip. x and y are junctions.
struct StripGraphInstance {
    Space space;
    std::size_t x = 0;
    std::size_t y = 0;
    std::vector<NullSetCertificate> certs;
};
StripGraphInstance random_strip_graph(std::mt19937& rng, bool strip_all = false);

// Two-vertex graph joined by two strip routes of different lengths; every
// connecting curve has positive length in a certificate, so the connecting
// family is exceptional and the essential distance is infinite.
struct CoveredPairInstance {
    Space space;
    std::size_t x = 0;
    std::size_t y = 0;
    std::vector<NullSetCertificate> certs;
};
CoveredPairInstance covered_pair_graph();

// Edge lists of every connected graph on n labeled vertices with unit
// edges, n <= 6, in deterministic order.
std::vector<std::vector<GraphEdge>> connected_unit_edge_sets(std::size_t n);

// Random contiguous slice of a curve whose cut samples avoid the given
// point set (so strips are never cut open). The curve must start and end
// outside the set.
Curve junction_slice(std::mt19937& rng, const Space& space, const Curve& curve,
                     const NullSetCertificate& avoid);

}  // namespace essmod
