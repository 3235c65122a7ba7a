#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "essmod/space.hpp"

namespace essmod {

// How positions between consecutive samples are understood:
//   GeodesicSegment  straight segments in an embedding
//   EdgeWalk         constant-speed traversal between graph vertices
//   DiscreteChain    hops between points of a distance-matrix space
enum class Interpolation { GeodesicSegment, EdgeWalk, DiscreteChain };

// One curve sample: either a reference to a space point, or (on embedded
// spaces only) a raw position.
struct CurveNode {
    std::ptrdiff_t point = -1;
    std::vector<double> position;

    static CurveNode at_point(std::size_t index);
    static CurveNode at_position(std::vector<double> coords);
    bool is_point() const { return point >= 0; }
};

bool same_node(const CurveNode& a, const CurveNode& b);

// A sampled curve: strictly increasing parameter values with one node per
// parameter, at least two samples. Repeated consecutive positions encode
// pauses; the curve as a whole must be non-constant (checked against the
// space on first use, since chords need the metric).
class Curve {
public:
    Curve() = default;  // empty placeholder, rejected on first use
    Curve(Interpolation interpolation, std::vector<double> params,
          std::vector<CurveNode> nodes, std::string name = "");

    Interpolation interpolation() const { return interpolation_; }
    const std::vector<double>& params() const { return params_; }
    const std::vector<CurveNode>& nodes() const { return nodes_; }
    std::size_t sample_count() const { return params_.size(); }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

private:
    Interpolation interpolation_ = Interpolation::GeodesicSegment;
    std::vector<double> params_;
    std::vector<CurveNode> nodes_;
    std::string name_;
};

bool same_curve(const Curve& a, const Curve& b);

// Cumulative length along a curve: s_gamma(t) is piecewise linear between
// breakpoints. cumulative.front() == 0, cumulative.back() == total.
struct LengthProfile {
    std::vector<double> breakpoints;
    std::vector<double> cumulative;
    double total = 0.0;

    // s_gamma(t); t must lie in [breakpoints.front(), breakpoints.back()].
    double value_at(double t) const;
};

struct LengthComputation {
    double length = 0.0;
    LengthProfile profile;
    // Length estimate after each dyadic refinement round, starting with
    // the raw sample partition. Never decreasing.
    std::vector<double> refinement_history;
};

// Length as the supremum of chord sums over partitions, estimated by dyadic
// refinement of the sample partition until the relative increase per round
// drops below tol. For the interpolations above refinement is exact (adds
// nothing); this is asserted for geodesic segments. Exceeding segment_cap
// raises NonRectifiableError carrying the best lower bound so far.
LengthComputation compute_length(const Space& space, const Curve& curve,
                                 double tol = 1e-9,
                                 std::size_t segment_cap = std::size_t{1} << 20);

// Rightmost s with s_gamma(s) = t; the right-continuous inverse. For t on a
// flat run (a pause) this is the run's right endpoint. t outside [0, total]
// throws std::out_of_range.
double length_inverse(const LengthProfile& profile, double t);

// Arc-length reparametrization: new parameters are cumulative lengths,
// pauses collapse to their rightmost sample. The result traverses the same
// positions at unit speed and is idempotent under re-application.
Curve arc_length_parametrize(const Space& space, const Curve& curve, double tol = 1e-9);

// Trapezoidal quadrature in arc length: each segment contributes its length
// times the average of rho at the two endpoint samples, where raw positions
// evaluate rho at their nearest space point. Linear in rho and additive
// over concatenation; constant rho integrates to rho * length exactly.
double line_integral(const Space& space, const Curve& curve, const Density& rho,
                     double tol = 1e-9);

// Conservative sampled preimage measures: a segment counts toward the
// preimage of F only when BOTH endpoint samples land in F, so isolated
// crossings and pauses at a single point contribute zero length.
//   positive_length_in: arc-length measure of the preimage  > tol * length
//   positive_time_in:   parameter measure of the preimage   > tol * (b - a)
// On an arc-length parametrized curve the two predicates agree for every F.
bool positive_length_in(const Space& space, const Curve& curve,
                        std::span<const std::size_t> f, double tol = 1e-9);
bool positive_time_in(const Space& space, const Curve& curve,
                      std::span<const std::size_t> f, double tol = 1e-9);

// Structure helpers. Concatenation requires matching junction positions and
// makes length add exactly; reversal preserves length.
Curve reverse(const Curve& curve);
Curve concatenate(const Space& space, const Curve& first, const Curve& second);
Curve subcurve(const Curve& curve, std::size_t first_sample, std::size_t last_sample);

// The space point a node evaluates at: itself for point references, the
// nearest space point for raw positions.
std::size_t assigned_point(const Space& space, const CurveNode& node);

// Chord distance between two nodes under the space's metric.
double node_distance(const Space& space, const Curve& curve, const CurveNode& a,
                     const CurveNode& b);

}  // namespace essmod
