#pragma once

#include <optional>
#include <string>
#include <vector>

#include "essmod/modulus.hpp"

namespace essmod {

// Generator stanza of a space file: the space was produced procedurally
// rather than listed point by point.
struct SpaceGenerator {
    std::string kind;          // "sierpinski" or "staircase"
    std::size_t level = 0;
    std::size_t interior = 0;  // staircase only
};

struct LoadedSpace {
    Space space;
    std::optional<SpaceGenerator> generator;
};

struct LoadedCurves {
    std::vector<Curve> curves;
    std::vector<bool> non_rectifiable;
    std::string name;
};

// Space file (versioned, schema 1): {"schema":1, "label":…, "points":[ids],
// exactly one of "coordinates" | "edges" | "distances", "measure":{id:w}
// with missing ids defaulting to weight 1} — or {"schema":1, "generator":
// {"kind":"sierpinski","level":k} | {"kind":"staircase","level":k,
// "interior":m}}. Malformed content raises SchemaError; unknown ids raise
// IdentifierError.
LoadedSpace load_space(const std::string& path);

// Curve-family file (schema 1): {"schema":1, "name":…, "curves":[{"name":…,
// "interpolation":"geodesic-segment"|"edge-walk"|"discrete-chain",
// "params":[…], "nodes":[id or [coords]…], "rectifiable":bool?}],
// "generators":[{"kind":"all_paths","from":id,"to":id,"max_hops":h?} |
// {"kind":"staircase","level":k,"interior":m}]}. all_paths expands to every
// simple path on a graph space (stanza max_hops, else `default_max_hops`,
// else unrestricted); the staircase stanza requires the space to come from
// the matching staircase generator.
LoadedCurves load_curves(const std::string& path, const LoadedSpace& loaded,
                         std::size_t default_max_hops = 0);

// Null-set file (schema 1): {"schema":1, "sets":[{"name":…, "points":[ids]}]}.
// Membership of the ids is checked here; whether each set is actually null
// is decided by validate_null_set at point of use.
std::vector<NullSetCertificate> load_null_sets(const std::string& path,
                                               const Space& space);

}  // namespace essmod
