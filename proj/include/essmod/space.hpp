#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "essmod/errors.hpp"

namespace essmod {

enum class GeometryKind { Embedding, DistanceMatrix, Graph };

struct GraphEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    double length = 0.0;
};

// A finite metric measure space: named points, one of three geometry
// forms, and an atomic measure (one nonnegative weight per point).
//
// Geometry forms and their metric:
//   Embedding       d = Euclidean distance between coordinates
//   DistanceMatrix  d = explicit lookup (validated as a metric)
//   Graph           d = shortest-path length, computed lazily per source
//
// +inf distances are allowed (disconnected graphs, unreachable matrix
// entries); they propagate through comparisons, never through products.
// Instances are immutable after construction and safe to read from
// multiple threads (the lazy shortest-path cache is internally locked).
class Space {
public:
    static Space make_embedding(std::vector<std::string> ids,
                                std::vector<std::vector<double>> coordinates,
                                std::vector<double> measure,
                                std::string label = "");
    static Space make_distance_matrix(std::vector<std::string> ids,
                                      std::vector<std::vector<double>> distances,
                                      std::vector<double> measure,
                                      std::string label = "");
    static Space make_graph(std::vector<std::string> ids,
                            std::vector<GraphEdge> edges,
                            std::vector<double> measure,
                            std::string label = "");

    Space();  // empty placeholder; every accessor treats it as 0 points
    ~Space();
    Space(Space&&) noexcept;
    Space& operator=(Space&&) noexcept;
    Space(const Space&) = delete;
    Space& operator=(const Space&) = delete;

    GeometryKind geometry() const { return geometry_; }
    const std::string& label() const { return label_; }
    std::size_t point_count() const { return ids_.size(); }

    const std::string& point_id(std::size_t i) const;
    std::size_t index_of(std::string_view id) const;  // IdentifierError if unknown
    bool has_point(std::string_view id) const;

    double measure_weight(std::size_t i) const;
    double total_measure() const { return total_measure_; }
    // Indices of all weight-zero points: the canonical maximal null set.
    const std::vector<std::size_t>& zero_measure_points() const { return zero_measure_; }

    double distance(std::size_t x, std::size_t y) const;
    double distance_by_id(std::string_view x, std::string_view y) const;

    // Embedding-only accessors.
    std::size_t dimension() const;
    std::span<const double> coordinates(std::size_t i) const;
    // Nearest point to an arbitrary position; ties resolve to the lowest index.
    std::size_t nearest_point(std::span<const double> position) const;

    // Graph-only accessor.
    const std::vector<GraphEdge>& edges() const;

private:
    void index_ids();
    void validate_measure() const;
    void validate_matrix() const;
    void validate_embedding() const;
    void validate_graph() const;
    const std::vector<double>& shortest_paths_from(std::size_t source) const;

    GeometryKind geometry_ = GeometryKind::Embedding;
    std::string label_;
    std::vector<std::string> ids_;
    std::unordered_map<std::string, std::size_t> id_index_;
    std::vector<double> measure_;
    std::vector<std::size_t> zero_measure_;
    double total_measure_ = 0.0;

    // Embedding state.
    std::size_t dimension_ = 0;
    std::vector<double> coords_;  // row-major, point_count x dimension

    // Matrix state.
    std::vector<double> matrix_;  // row-major square

    // Graph state.
    std::vector<GraphEdge> edges_;
    std::vector<std::vector<std::pair<std::size_t, double>>> adjacency_;
    struct SsspCache;
    std::unique_ptr<SsspCache> sssp_;
};

// A finite-valued density: one value >= 0 per point of the owning space.
// Infinite admissible densities never appear as values; exceptional
// behaviour is expressed through (density, certificate) pairs instead.
class Density {
public:
    Density(const Space& space, std::vector<double> values);

    static Density constant(const Space& space, double value);
    static Density indicator(const Space& space,
                             std::span<const std::size_t> points,
                             double scale = 1.0);

    std::size_t size() const { return values_.size(); }
    double value(std::size_t i) const { return values_[i]; }
    std::span<const double> values() const { return values_; }
    double min_value() const;
    const std::string& space_label() const { return space_label_; }

private:
    std::vector<double> values_;
    std::string space_label_;
};

// A set of points proposed as measure-zero. Construction checks only
// that the points belong to the space; validate_null_set decides whether
// the set really is null.
class NullSetCertificate {
public:
    NullSetCertificate() = default;  // the empty set
    NullSetCertificate(const Space& space, std::vector<std::size_t> points,
                       std::string name = "");

    static NullSetCertificate united(const Space& space,
                                     std::span<const NullSetCertificate> certs,
                                     std::string name = "union");

    std::span<const std::size_t> points() const { return points_; }
    bool contains(std::size_t i) const;
    bool empty() const { return points_.empty(); }
    std::size_t size() const { return points_.size(); }
    const std::string& name() const { return name_; }

private:
    std::vector<std::size_t> points_;  // sorted, unique
    std::string name_;
};

// Essential supremum of a density: the largest value attained on a point
// of positive weight, and 0 when the density is supported only on
// weight-zero points. Changing values on weight-zero points never
// changes the result.
double ess_sup(const Space& space, const Density& rho);

// True iff every point of the certificate has measure weight zero.
bool validate_null_set(const Space& space, const NullSetCertificate& cert);

// Throws Error when the density does not match the space (size or label).
void require_compatible(const Space& space, const Density& rho);

}  // namespace essmod
