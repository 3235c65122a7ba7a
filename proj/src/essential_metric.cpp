#include "essmod/essential_metric.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "essmod/extended_real.hpp"

namespace essmod {

namespace {

constexpr std::size_t kPathEnumerationCap = std::size_t{1} << 20;
constexpr std::size_t kAxiomPointLimit = 64;

// Undirected adjacency, one entry per neighbor. Parallel edges collapse to
// the shortest one; walk lengths use the metric, which never exceeds it.
std::vector<std::vector<std::size_t>> build_adjacency(const Space& space) {
    std::vector<std::vector<std::size_t>> adj(space.point_count());
    for (const GraphEdge& e : space.edges()) {
        adj[e.from].push_back(e.to);
        adj[e.to].push_back(e.from);
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return adj;
}

Curve path_curve(const Space& space, const std::vector<std::size_t>& path) {
    std::vector<double> params(path.size());
    std::vector<CurveNode> nodes;
    nodes.reserve(path.size());
    std::string name;
    for (std::size_t i = 0; i < path.size(); ++i) {
        params[i] = static_cast<double>(i);
        nodes.push_back(CurveNode::at_point(path[i]));
        if (i) name += "-";
        name += space.point_id(path[i]);
    }
    return Curve(Interpolation::EdgeWalk, std::move(params), std::move(nodes),
                 std::move(name));
}

// Depth-first enumeration of every simple path from x to y with at most
// max_hops edges. Neighbors are visited in index order, so the output
// order is deterministic.
void enumerate_paths(const Space& space,
                     const std::vector<std::vector<std::size_t>>& adj, std::size_t y,
                     std::size_t max_hops, std::vector<char>& visited,
                     std::vector<std::size_t>& path, std::vector<Curve>& out) {
    const std::size_t u = path.back();
    if (u == y) {
        if (out.size() >= kPathEnumerationCap)
            throw Error("connecting-path enumeration exceeded " +
                        std::to_string(kPathEnumerationCap) + " paths");
        out.push_back(path_curve(space, path));
        return;
    }
    if (path.size() - 1 >= max_hops) return;
    for (std::size_t v : adj[u]) {
        if (visited[v]) continue;
        visited[v] = 1;
        path.push_back(v);
        enumerate_paths(space, adj, y, max_hops, visited, path, out);
        path.pop_back();
        visited[v] = 0;
    }
}

std::string pair_name(const Space& space, std::size_t x, std::size_t y) {
    return "connect(" + space.point_id(x) + "," + space.point_id(y) + ")";
}

void require_indices(const Space& space, std::size_t x, std::size_t y) {
    if (x >= space.point_count() || y >= space.point_count())
        throw IdentifierError("point index out of range");
}

// True when the essential distance provably equals the base metric without
// enumerating connections: on a graph whose measure charges every point and
// with no certificates in play, no connection is ever covered, so the
// essential length of the connecting family is the shortest-path distance.
bool base_metric_suffices(const Space& space, std::span<const NullSetCertificate> certs,
                          const ConnectOptions& options) {
    if (space.geometry() != GeometryKind::Graph) return false;
    if (!space.zero_measure_points().empty()) return false;
    if (options.pool != nullptr || options.max_hops != 0) return false;
    for (const auto& c : certs)
        if (!c.empty()) return false;
    return true;
}

// Shortest uncovered member; +inf when every rectifiable member is covered.
// Returns the index of the minimizer through `witness` when one exists.
double min_uncovered_length(const Space& space, const CurveFamily& fam,
                            const NullSetCertificate& cover, double tol,
                            std::size_t* witness = nullptr) {
    double best = kInfinity;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        const FamilyMember& m = fam.members()[i];
        if (!m.rectifiable) continue;
        if (positive_length_in(space, m.curve, cover.points(), tol)) continue;
        if (m.length < best) {
            best = m.length;
            if (witness) *witness = i;
        }
    }
    return best;
}

std::vector<NullSetCertificate> with_maximal_null_set(
    const Space& space, std::span<const NullSetCertificate> certs) {
    std::vector<NullSetCertificate> all(certs.begin(), certs.end());
    all.emplace_back(space, space.zero_measure_points(), "weight-zero points");
    return all;
}

}  // namespace

CurveFamily connecting_family(const Space& space, std::size_t x, std::size_t y,
                              const ConnectOptions& options) {
    require_indices(space, x, y);
    if (x == y) throw Error("connecting family requires distinct endpoints");

    if (options.pool != nullptr) {
        std::vector<Curve> curves;
        std::vector<bool> flags;
        for (const FamilyMember& m : options.pool->members()) {
            const std::size_t a = assigned_point(space, m.curve.nodes().front());
            const std::size_t b = assigned_point(space, m.curve.nodes().back());
            if (a == x && b == y) {
                curves.push_back(m.curve);
                flags.push_back(!m.rectifiable);
            } else if (a == y && b == x) {
                curves.push_back(reverse(m.curve));
                flags.push_back(!m.rectifiable);
            }
        }
        return CurveFamily::with_flags(space, std::move(curves), flags,
                                       pair_name(space, x, y), options.tol);
    }

    if (space.geometry() != GeometryKind::Graph)
        throw Error("connecting curves for non-graph spaces must be supplied as a pool");

    const std::vector<std::vector<std::size_t>> adj = build_adjacency(space);
    const std::size_t max_hops =
        options.max_hops == 0 ? space.point_count() : options.max_hops;
    std::vector<char> visited(space.point_count(), 0);
    std::vector<std::size_t> path{x};
    visited[x] = 1;
    std::vector<Curve> out;
    enumerate_paths(space, adj, y, max_hops, visited, path, out);
    return CurveFamily(space, std::move(out), pair_name(space, x, y), options.tol);
}

double essential_distance(const Space& space, std::size_t x, std::size_t y,
                          std::span<const NullSetCertificate> certs,
                          const ConnectOptions& options) {
    require_indices(space, x, y);
    if (x == y) return 0.0;
    if (y < x) std::swap(x, y);  // canonical order: exact symmetry
    if (base_metric_suffices(space, certs, options)) return space.distance(x, y);

    const CurveFamily fam = connecting_family(space, x, y, options);
    const std::vector<NullSetCertificate> all = with_maximal_null_set(space, certs);
    return ess_length(space, fam, all, options.tol);
}

double distance_avoiding(const Space& space, std::size_t x, std::size_t y,
                         const NullSetCertificate& n, const ConnectOptions& options) {
    require_indices(space, x, y);
    if (!validate_null_set(space, n))
        throw Error("set '" + n.name() + "' is not a null set");
    if (x == y) return 0.0;
    if (y < x) std::swap(x, y);
    if (space.geometry() == GeometryKind::Graph && n.empty() &&
        options.pool == nullptr && options.max_hops == 0)
        return space.distance(x, y);

    const CurveFamily fam = connecting_family(space, x, y, options);
    return min_uncovered_length(space, fam, n, options.tol);
}

EssentialDistanceResult essential_distance_pair(const Space& space, std::size_t x,
                                                std::size_t y,
                                                std::span<const NullSetCertificate> certs,
                                                const ConnectOptions& options) {
    require_indices(space, x, y);
    EssentialDistanceResult result;
    result.x = x;
    result.y = y;
    if (x == y) {
        result.witnessing_null_set = NullSetCertificate();
        return result;
    }

    std::size_t cx = std::min(x, y);
    std::size_t cy = std::max(x, y);
    result.base_distance = space.distance(cx, cy);
    if (base_metric_suffices(space, certs, options)) {
        result.essential = result.base_distance;
        result.null_set_supremum = result.base_distance;
        result.witnessing_null_set = NullSetCertificate();
        return result;
    }

    const CurveFamily fam = connecting_family(space, cx, cy, options);
    const std::vector<NullSetCertificate> all = with_maximal_null_set(space, certs);

    // Route one: essential length of the connecting family.
    const NullSetCertificate cover = NullSetCertificate::united(space, all);
    std::size_t witness_index = fam.size();
    result.essential = min_uncovered_length(space, fam, cover, options.tol, &witness_index);
    if (witness_index < fam.size())
        result.witnessing_curve = fam.members()[witness_index].curve;

    // Route two: supremum of the shortest avoiding connection over the
    // empty set, each certificate, their union, and the maximal null set.
    std::vector<NullSetCertificate> candidates;
    candidates.emplace_back();
    for (const auto& c : certs) candidates.push_back(c);
    if (certs.size() > 1) candidates.push_back(NullSetCertificate::united(space, certs));
    candidates.emplace_back(space, space.zero_measure_points(), "weight-zero points");

    double supremum = 0.0;
    bool first = true;
    for (const auto& n : candidates) {
        const double d = min_uncovered_length(space, fam, n, options.tol);
        if (first || d > supremum) {
            supremum = d;
            result.witnessing_null_set = n;
            first = false;
        }
    }
    result.null_set_supremum = supremum;

    if (!nearly_equal_extended(result.essential, result.null_set_supremum, 1e-9))
        throw ConsistencyError(
            "essential distance and null-set supremum disagree between " +
            space.point_id(cx) + " and " + space.point_id(cy) + ": " +
            format_extended(result.essential) + " vs " +
            format_extended(result.null_set_supremum));
    return result;
}

MetricAxiomReport check_metric_axioms(const Space& space,
                                      std::span<const NullSetCertificate> certs,
                                      const ConnectOptions& options) {
    const std::size_t n = space.point_count();
    if (n > kAxiomPointLimit)
        throw Error("axiom verification is exhaustive and limited to " +
                    std::to_string(kAxiomPointLimit) + " points");

    MetricAxiomReport report;
    auto fail = [&](std::string text) { report.violations.push_back(std::move(text)); };

    std::vector<std::vector<double>> dess(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            dess[i][j] = essential_distance(space, i, j, certs, options);

    for (std::size_t i = 0; i < n; ++i) {
        ++report.checks_run;
        if (dess[i][i] != 0.0)
            fail("nonzero diagonal at " + space.point_id(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            ++report.checks_run;
            if (dess[i][j] != dess[j][i])  // bitwise: symmetry must be exact
                fail("asymmetry between " + space.point_id(i) + " and " +
                     space.point_id(j));
            ++report.checks_run;
            if (!(dess[i][j] > 0.0))
                fail("vanishing distance between distinct points " +
                     space.point_id(i) + " and " + space.point_id(j));
            ++report.checks_run;
            const double base = space.distance(i, j);
            if (is_infinite(base)) {
                if (!is_infinite(dess[i][j]))
                    fail("finite essential distance across disconnection at " +
                         space.point_id(i) + "," + space.point_id(j));
            } else if (!is_infinite(dess[i][j]) &&
                       dess[i][j] < base - 1e-9 * std::max(1.0, base)) {
                fail("essential distance below base metric at " + space.point_id(i) +
                     "," + space.point_id(j));
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                ++report.checks_run;
                const double lhs = dess[i][k];
                if (is_infinite(dess[i][j]) || is_infinite(dess[j][k])) continue;
                const double rhs = dess[i][j] + dess[j][k];
                if (is_infinite(lhs)) {
                    fail("triangle gap through " + space.point_id(j) + ": " +
                         space.point_id(i) + "-" + space.point_id(k) +
                         " infinite, detour finite");
                } else if (lhs > rhs + 1e-9 * std::max(1.0, rhs)) {
                    fail("triangle violation " + space.point_id(i) + "-" +
                         space.point_id(k) + " via " + space.point_id(j));
                }
            }
        }
    }
    return report;
}

}  // namespace essmod
