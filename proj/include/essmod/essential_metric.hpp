#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "essmod/modulus.hpp"

namespace essmod {

struct ConnectOptions {
    // Maximum number of hops for enumerated graph paths; 0 means the
    // default of one hop per vertex (enough for every simple path).
    std::size_t max_hops = 0;
    // Candidate curves for non-graph spaces; filtered by endpoints,
    // orientation-insensitively (reversed copies are oriented x -> y).
    const CurveFamily* pool = nullptr;
    double tol = 1e-9;
};

// The family of curves connecting two distinct points. Graph spaces
// enumerate every simple path between them up to max_hops; other spaces
// filter the supplied pool by endpoints. Enumeration order is
// deterministic.
CurveFamily connecting_family(const Space& space, std::size_t x, std::size_t y,
                              const ConnectOptions& options = {});

// Essential distance: the essential length of the connecting family, with
// the canonical maximal null set (all weight-zero points) joined to the
// supplied certificates so the value matches the null-set supremum route
// regardless of how certificates were curated. Symmetric by construction;
// +inf when no admissible connection remains; 0 on the diagonal.
double essential_distance(const Space& space, std::size_t x, std::size_t y,
                          std::span<const NullSetCertificate> certs = {},
                          const ConnectOptions& options = {});

// Shortest connection avoiding a set: the infimum of length over connecting
// curves without positive length in n; +inf when every connection is covered.
double distance_avoiding(const Space& space, std::size_t x, std::size_t y,
                         const NullSetCertificate& n, const ConnectOptions& options = {});

struct EssentialDistanceResult {
    std::size_t x = 0;
    std::size_t y = 0;
    double base_distance = 0.0;
    double essential = 0.0;
    double null_set_supremum = 0.0;
    std::optional<NullSetCertificate> witnessing_null_set;
    std::optional<Curve> witnessing_curve;
};

// Computes the base distance, the essential distance, and the supremum of
// distance_avoiding over the certificates, the empty set, and the maximal
// null set (which dominates every other null set of an atomic measure, so
// the supremum is exact). The two routes must agree within 1e-9 relative;
// disagreement throws ConsistencyError, there is no fallback.
EssentialDistanceResult essential_distance_pair(const Space& space, std::size_t x,
                                                std::size_t y,
                                                std::span<const NullSetCertificate> certs = {},
                                                const ConnectOptions& options = {});

struct MetricAxiomReport {
    std::vector<std::string> violations;
    std::size_t checks_run = 0;
    bool passed() const { return violations.empty(); }
};

// Exhaustive metric-axiom verification of the essential distance on spaces
// of at most 64 points: zero diagonal, exact symmetry, positivity off the
// diagonal, essential >= base pointwise, and every ordered triangle with
// +inf handled by the usual conventions. Violations beyond 1e-9 relative
// are reported.
MetricAxiomReport check_metric_axioms(const Space& space,
                                      std::span<const NullSetCertificate> certs = {},
                                      const ConnectOptions& options = {});

}  // namespace essmod
