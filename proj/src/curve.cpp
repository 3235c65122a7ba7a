#include "essmod/curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "essmod/extended_real.hpp"

namespace essmod {

namespace {

void check_curve_against_space(const Space& space, const Curve& curve) {
    if (curve.sample_count() < 2) throw Error("curve has no samples");
    const bool embedded = space.geometry() == GeometryKind::Embedding;
    switch (curve.interpolation()) {
        case Interpolation::GeodesicSegment:
            if (!embedded) throw Error("geodesic-segment curves require an embedded space");
            break;
        case Interpolation::EdgeWalk:
            if (space.geometry() != GeometryKind::Graph)
                throw Error("edge-walk curves require a graph space");
            break;
        case Interpolation::DiscreteChain:
            if (space.geometry() != GeometryKind::DistanceMatrix)
                throw Error("discrete-chain curves require a distance-matrix space");
            break;
    }
    for (const CurveNode& node : curve.nodes()) {
        if (node.is_point()) {
            if (static_cast<std::size_t>(node.point) >= space.point_count())
                throw IdentifierError("curve references a point outside the space");
        } else {
            if (!embedded) throw Error("raw-position nodes require an embedded space");
            if (node.position.size() != space.dimension())
                throw Error("curve node dimension does not match the space");
        }
    }
}

std::span<const double> node_position(const Space& space, const CurveNode& node) {
    if (node.is_point()) return space.coordinates(static_cast<std::size_t>(node.point));
    return node.position;
}

double euclidean(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        sum += d * d;
    }
    return std::sqrt(sum);
}

struct RefinedPartition {
    std::vector<double> params;
    std::vector<CurveNode> nodes;
    std::vector<double> cumulative;
    double length = 0.0;
    std::vector<double> history;
};

double chord_sum(const Space& space, const Curve& curve, const std::vector<CurveNode>& nodes,
                 std::vector<double>* cumulative) {
    double total = 0.0;
    if (cumulative) {
        cumulative->clear();
        cumulative->reserve(nodes.size());
        cumulative->push_back(0.0);
    }
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        total += node_distance(space, curve, nodes[i], nodes[i + 1]);
        if (cumulative) cumulative->push_back(total);
    }
    return total;
}

// One dyadic refinement round. Geodesic segments get their true midpoint;
// the discrete interpolations are constant until the next sample, so the
// inserted evaluation repeats the left node.
void refine_once(const Space& space, Interpolation interp, std::vector<double>& params,
                 std::vector<CurveNode>& nodes) {
    std::vector<double> new_params;
    std::vector<CurveNode> new_nodes;
    new_params.reserve(params.size() * 2 - 1);
    new_nodes.reserve(params.size() * 2 - 1);
    for (std::size_t i = 0; i + 1 < params.size(); ++i) {
        new_params.push_back(params[i]);
        new_nodes.push_back(nodes[i]);
        new_params.push_back(params[i] + 0.5 * (params[i + 1] - params[i]));
        if (interp == Interpolation::GeodesicSegment) {
            auto a = node_position(space, nodes[i]);
            auto b = node_position(space, nodes[i + 1]);
            std::vector<double> mid(a.size());
            for (std::size_t k = 0; k < a.size(); ++k) mid[k] = a[k] + 0.5 * (b[k] - a[k]);
            new_nodes.push_back(CurveNode::at_position(std::move(mid)));
        } else {
            new_nodes.push_back(nodes[i]);
        }
    }
    new_params.push_back(params.back());
    new_nodes.push_back(nodes.back());
    params = std::move(new_params);
    nodes = std::move(new_nodes);
}

RefinedPartition refine_to_tolerance(const Space& space, const Curve& curve, double tol,
                                     std::size_t segment_cap) {
    if (!(tol > 0.0)) throw Error("tolerance must be positive");
    check_curve_against_space(space, curve);

    RefinedPartition out;
    out.params = curve.params();
    out.nodes = curve.nodes();
    double estimate = chord_sum(space, curve, out.nodes, &out.cumulative);
    out.history.push_back(estimate);
    if (!(estimate > 0.0))
        throw Error("curve is constant: no two samples are a positive distance apart");

    std::vector<double> probe_params = out.params;
    std::vector<CurveNode> probe_nodes = out.nodes;
    while (true) {
        if ((probe_params.size() - 1) * 2 > segment_cap)
            throw NonRectifiableError(
                "refinement exceeded the segment cap; curve is possibly non-rectifiable "
                "(best lower bound " + format_extended(estimate) + ")",
                estimate);
        refine_once(space, curve.interpolation(), probe_params, probe_nodes);
        std::vector<double> probe_cumulative;
        const double raw = chord_sum(space, curve, probe_nodes, &probe_cumulative);
        if (raw < estimate - 1e-12 * std::max(1.0, estimate))
            throw ConsistencyError("refinement decreased the length estimate");
        // Splitting a segment at its computed midpoint can round the sum a
        // few ulps below the coarser value; clamp so history stays monotone.
        const double refined = std::max(raw, estimate);
        out.history.push_back(refined);
        if (curve.interpolation() == Interpolation::GeodesicSegment &&
            refined - estimate > 1e-12 * std::max(1.0, refined))
            throw ConsistencyError("geodesic refinement must not change the chord sum");
        if (refined - estimate <= 1e-15 * std::max(1.0, refined)) {
            // Refinement added nothing: keep the coarser partition.
            break;
        }
        if (refined - estimate <= tol * std::max(refined, 1e-300)) {
            out.params = std::move(probe_params);
            out.nodes = std::move(probe_nodes);
            out.cumulative = std::move(probe_cumulative);
            estimate = refined;
            break;
        }
        out.params = probe_params;
        out.nodes = probe_nodes;
        out.cumulative = std::move(probe_cumulative);
        estimate = refined;
    }
    out.length = estimate;
    return out;
}

std::vector<bool> membership_flags(const Space& space, const Curve& curve,
                                   std::span<const std::size_t> f) {
    std::vector<bool> in_f(space.point_count(), false);
    for (std::size_t p : f) {
        if (p >= space.point_count()) throw IdentifierError("set point outside the space");
        in_f[p] = true;
    }
    std::vector<bool> member(curve.sample_count());
    for (std::size_t i = 0; i < curve.sample_count(); ++i)
        member[i] = in_f[assigned_point(space, curve.nodes()[i])];
    return member;
}

}  // namespace

CurveNode CurveNode::at_point(std::size_t index) {
    CurveNode n;
    n.point = static_cast<std::ptrdiff_t>(index);
    return n;
}

CurveNode CurveNode::at_position(std::vector<double> coords) {
    CurveNode n;
    n.position = std::move(coords);
    return n;
}

bool same_node(const CurveNode& a, const CurveNode& b) {
    if (a.is_point() != b.is_point()) return false;
    if (a.is_point()) return a.point == b.point;
    return a.position == b.position;
}

Curve::Curve(Interpolation interpolation, std::vector<double> params,
             std::vector<CurveNode> nodes, std::string name)
    : interpolation_(interpolation),
      params_(std::move(params)),
      nodes_(std::move(nodes)),
      name_(std::move(name)) {
    if (params_.size() < 2) throw Error("a curve needs at least two samples");
    if (params_.size() != nodes_.size())
        throw Error("curve parameters and nodes must have equal length");
    for (std::size_t i = 0; i + 1 < params_.size(); ++i)
        if (!(params_[i] < params_[i + 1]))
            throw Error("curve parameters must be strictly increasing");
    for (double t : params_)
        if (!std::isfinite(t)) throw Error("curve parameters must be finite");
}

bool same_curve(const Curve& a, const Curve& b) {
    if (a.interpolation() != b.interpolation()) return false;
    if (a.params() != b.params()) return false;
    if (a.nodes().size() != b.nodes().size()) return false;
    for (std::size_t i = 0; i < a.nodes().size(); ++i)
        if (!same_node(a.nodes()[i], b.nodes()[i])) return false;
    return true;
}

double LengthProfile::value_at(double t) const {
    if (breakpoints.empty()) throw std::out_of_range("empty profile");
    if (t < breakpoints.front() || t > breakpoints.back())
        throw std::out_of_range("parameter outside the curve's interval");
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), t);
    if (it == breakpoints.begin()) return cumulative.front();
    const std::size_t j = static_cast<std::size_t>(it - breakpoints.begin()) - 1;
    if (j + 1 >= breakpoints.size()) return cumulative.back();
    const double span = breakpoints[j + 1] - breakpoints[j];
    const double frac = span > 0.0 ? (t - breakpoints[j]) / span : 0.0;
    return cumulative[j] + frac * (cumulative[j + 1] - cumulative[j]);
}

std::size_t assigned_point(const Space& space, const CurveNode& node) {
    if (node.is_point()) {
        const auto p = static_cast<std::size_t>(node.point);
        if (p >= space.point_count())
            throw IdentifierError("curve references a point outside the space");
        return p;
    }
    return space.nearest_point(node.position);
}

double node_distance(const Space& space, const Curve& curve, const CurveNode& a,
                     const CurveNode& b) {
    if (curve.interpolation() == Interpolation::GeodesicSegment)
        return euclidean(node_position(space, a), node_position(space, b));
    return space.distance(static_cast<std::size_t>(a.point), static_cast<std::size_t>(b.point));
}

LengthComputation compute_length(const Space& space, const Curve& curve, double tol,
                                 std::size_t segment_cap) {
    RefinedPartition refined = refine_to_tolerance(space, curve, tol, segment_cap);
    LengthComputation out;
    out.length = refined.length;
    out.profile.breakpoints = std::move(refined.params);
    out.profile.cumulative = std::move(refined.cumulative);
    out.profile.total = refined.length;
    out.refinement_history = std::move(refined.history);
    return out;
}

double length_inverse(const LengthProfile& profile, double t) {
    if (t < 0.0 || t > profile.total || std::isnan(t))
        throw std::out_of_range("arc-length value outside [0, total]");
    const auto& cum = profile.cumulative;
    // Last index with cumulative <= t; for a flat run at value t this is
    // already the run's right end.
    auto it = std::upper_bound(cum.begin(), cum.end(), t);
    std::size_t j = static_cast<std::size_t>(it - cum.begin());
    if (j > 0) --j;
    if (cum[j] == t) return profile.breakpoints[j];
    // Strictly inside an increasing segment.
    const double rise = cum[j + 1] - cum[j];
    const double frac = (t - cum[j]) / rise;
    return profile.breakpoints[j] + frac * (profile.breakpoints[j + 1] - profile.breakpoints[j]);
}

Curve arc_length_parametrize(const Space& space, const Curve& curve, double tol) {
    RefinedPartition refined = refine_to_tolerance(space, curve, tol,
                                                   std::size_t{1} << 20);
    // Collapse flat runs (pauses) to their rightmost sample; positions
    // within a run coincide because the chords are zero.
    std::vector<double> params;
    std::vector<CurveNode> nodes;
    params.reserve(refined.cumulative.size());
    nodes.reserve(refined.cumulative.size());
    for (std::size_t i = 0; i < refined.cumulative.size(); ++i) {
        if (!params.empty() && refined.cumulative[i] == params.back()) {
            nodes.back() = refined.nodes[i];  // keep the rightmost node of the run
        } else {
            params.push_back(refined.cumulative[i]);
            nodes.push_back(refined.nodes[i]);
        }
    }
    return Curve(curve.interpolation(), std::move(params), std::move(nodes), curve.name());
}

double line_integral(const Space& space, const Curve& curve, const Density& rho,
                     double tol) {
    (void)tol;
    check_curve_against_space(space, curve);
    require_compatible(space, rho);
    double total = 0.0;
    std::vector<double> at(curve.sample_count());
    for (std::size_t i = 0; i < curve.sample_count(); ++i)
        at[i] = rho.value(assigned_point(space, curve.nodes()[i]));
    for (std::size_t i = 0; i + 1 < curve.sample_count(); ++i) {
        const double seg = node_distance(space, curve, curve.nodes()[i], curve.nodes()[i + 1]);
        total += seg * 0.5 * (at[i] + at[i + 1]);
    }
    return total;
}

bool positive_length_in(const Space& space, const Curve& curve,
                        std::span<const std::size_t> f, double tol) {
    if (!(tol > 0.0)) throw Error("tolerance must be positive");
    check_curve_against_space(space, curve);
    const std::vector<bool> member = membership_flags(space, curve, f);
    double mass = 0.0, length = 0.0;
    for (std::size_t i = 0; i + 1 < curve.sample_count(); ++i) {
        const double seg = node_distance(space, curve, curve.nodes()[i], curve.nodes()[i + 1]);
        length += seg;
        if (member[i] && member[i + 1]) mass += seg;
    }
    return mass > tol * length;
}

bool positive_time_in(const Space& space, const Curve& curve,
                      std::span<const std::size_t> f, double tol) {
    if (!(tol > 0.0)) throw Error("tolerance must be positive");
    check_curve_against_space(space, curve);
    const std::vector<bool> member = membership_flags(space, curve, f);
    double mass = 0.0;
    for (std::size_t i = 0; i + 1 < curve.sample_count(); ++i)
        if (member[i] && member[i + 1])
            mass += curve.params()[i + 1] - curve.params()[i];
    const double duration = curve.params().back() - curve.params().front();
    return mass > tol * duration;
}

Curve reverse(const Curve& curve) {
    const double a = curve.params().front();
    const double b = curve.params().back();
    const std::size_t m = curve.sample_count();
    std::vector<double> params(m);
    std::vector<CurveNode> nodes(m);
    for (std::size_t i = 0; i < m; ++i) {
        params[i] = a + (b - curve.params()[m - 1 - i]);
        nodes[i] = curve.nodes()[m - 1 - i];
    }
    return Curve(curve.interpolation(), std::move(params), std::move(nodes),
                 curve.name().empty() ? "" : curve.name() + "~rev");
}

Curve concatenate(const Space& space, const Curve& first, const Curve& second) {
    if (first.interpolation() != second.interpolation())
        throw Error("concatenation requires matching interpolation");
    const double junction =
        node_distance(space, first, first.nodes().back(), second.nodes().front());
    if (junction != 0.0)
        throw Error("concatenation requires the junction positions to coincide");
    std::vector<double> params = first.params();
    std::vector<CurveNode> nodes = first.nodes();
    const double shift = first.params().back() - second.params().front();
    for (std::size_t i = 1; i < second.sample_count(); ++i) {
        params.push_back(second.params()[i] + shift);
        nodes.push_back(second.nodes()[i]);
    }
    return Curve(first.interpolation(), std::move(params), std::move(nodes),
                 first.name() + "+" + second.name());
}

Curve subcurve(const Curve& curve, std::size_t first_sample, std::size_t last_sample) {
    if (first_sample >= last_sample || last_sample >= curve.sample_count())
        throw Error("subcurve needs a valid sample range with at least two samples");
    std::vector<double> params(curve.params().begin() + first_sample,
                               curve.params().begin() + last_sample + 1);
    std::vector<CurveNode> nodes(curve.nodes().begin() + first_sample,
                                 curve.nodes().begin() + last_sample + 1);
    return Curve(curve.interpolation(), std::move(params), std::move(nodes),
                 curve.name().empty() ? "" : curve.name() + "~sub");
}

}  // namespace essmod
