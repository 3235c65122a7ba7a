#include "essmod/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <queue>
#include <random>

#include "essmod/extended_real.hpp"

namespace essmod {

namespace {

// Exhaustive metric validation is affordable up to this many points;
// larger spaces are validated on a deterministic sample.
constexpr std::size_t kExhaustiveLimit = 200;
constexpr std::size_t kSampleTriples = 200000;

double euclidean(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        sum += d * d;
    }
    return std::sqrt(sum);
}

}  // namespace

struct Space::SsspCache {
    std::mutex mutex;
    std::vector<std::shared_ptr<const std::vector<double>>> rows;
};

Space::Space() = default;
Space::~Space() = default;
Space::Space(Space&&) noexcept = default;
Space& Space::operator=(Space&&) noexcept = default;

void Space::index_ids() {
    id_index_.reserve(ids_.size());
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (ids_[i].empty()) throw SchemaError("point id must not be empty");
        auto [it, inserted] = id_index_.emplace(ids_[i], i);
        (void)it;
        if (!inserted) throw SchemaError("duplicate point id: " + ids_[i]);
    }
}

void Space::validate_measure() const {
    if (measure_.size() != ids_.size())
        throw SchemaError("measure must assign a weight to every point");
    bool any_positive = false;
    for (double w : measure_) {
        if (!(w >= 0.0) || std::isinf(w))
            throw SchemaError("measure weights must be finite and >= 0");
        if (w > 0.0) any_positive = true;
    }
    if (!any_positive) throw SchemaError("at least one point must have positive weight");
}

void Space::validate_matrix() const {
    const std::size_t n = ids_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = matrix_[i * n + j];
            if (std::isnan(v)) throw SchemaError("distance matrix contains NaN");
            if (i == j) {
                if (v != 0.0) throw SchemaError("distance matrix diagonal must be zero");
            } else {
                if (!(v > 0.0)) throw SchemaError("off-diagonal distances must be positive");
                if (v != matrix_[j * n + i]) throw SchemaError("distance matrix must be symmetric");
            }
        }
    }
    auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
        const double ij = matrix_[i * n + j];
        const double ik = matrix_[i * n + k];
        const double kj = matrix_[k * n + j];
        // +inf on the right always passes; +inf on the left requires it.
        if (ij > ik + kj)
            throw SchemaError("distance matrix violates the triangle inequality at (" +
                              ids_[i] + "," + ids_[j] + "," + ids_[k] + ")");
    };
    if (n <= kExhaustiveLimit) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (i != j && j != k && i != k) check_triple(i, j, k);
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t t = 0; t < kSampleTriples; ++t) {
            const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
            if (i != j && j != k && i != k) check_triple(i, j, k);
        }
    }
}

void Space::validate_embedding() const {
    const std::size_t n = ids_.size();
    for (double c : coords_)
        if (!std::isfinite(c)) throw SchemaError("coordinates must be finite");
    auto distinct = [&](std::size_t i, std::size_t j) {
        if (euclidean(coordinates(i), coordinates(j)) == 0.0)
            throw SchemaError("points " + ids_[i] + " and " + ids_[j] +
                              " share the same coordinates");
    };
    if (n <= kExhaustiveLimit) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) distinct(i, j);
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t t = 0; t < kSampleTriples; ++t) {
            const std::size_t i = pick(rng), j = pick(rng);
            if (i != j) distinct(i, j);
        }
    }
}

void Space::validate_graph() const {
    const std::size_t n = ids_.size();
    for (const GraphEdge& e : edges_) {
        if (e.from >= n || e.to >= n) throw IdentifierError("edge endpoint outside the space");
        if (e.from == e.to) throw SchemaError("self-loop edges are not allowed");
        if (!(e.length > 0.0) || std::isinf(e.length))
            throw SchemaError("edge lengths must be finite and positive");
    }
}

Space Space::make_embedding(std::vector<std::string> ids,
                            std::vector<std::vector<double>> coordinates,
                            std::vector<double> measure, std::string label) {
    Space s;
    s.geometry_ = GeometryKind::Embedding;
    s.label_ = std::move(label);
    s.ids_ = std::move(ids);
    s.measure_ = std::move(measure);
    if (coordinates.size() != s.ids_.size())
        throw SchemaError("every point needs coordinates");
    if (s.ids_.empty()) throw SchemaError("space must contain at least one point");
    s.dimension_ = coordinates.front().size();
    if (s.dimension_ == 0) throw SchemaError("embedding dimension must be positive");
    s.coords_.reserve(s.ids_.size() * s.dimension_);
    for (const auto& row : coordinates) {
        if (row.size() != s.dimension_)
            throw SchemaError("all coordinates must share one dimension");
        s.coords_.insert(s.coords_.end(), row.begin(), row.end());
    }
    s.index_ids();
    s.validate_measure();
    s.validate_embedding();
    for (std::size_t i = 0; i < s.measure_.size(); ++i) {
        s.total_measure_ += s.measure_[i];
        if (s.measure_[i] == 0.0) s.zero_measure_.push_back(i);
    }
    return s;
}

Space Space::make_distance_matrix(std::vector<std::string> ids,
                                  std::vector<std::vector<double>> distances,
                                  std::vector<double> measure, std::string label) {
    Space s;
    s.geometry_ = GeometryKind::DistanceMatrix;
    s.label_ = std::move(label);
    s.ids_ = std::move(ids);
    s.measure_ = std::move(measure);
    if (s.ids_.empty()) throw SchemaError("space must contain at least one point");
    const std::size_t n = s.ids_.size();
    if (distances.size() != n) throw SchemaError("distance matrix must be square");
    s.matrix_.reserve(n * n);
    for (const auto& row : distances) {
        if (row.size() != n) throw SchemaError("distance matrix must be square");
        s.matrix_.insert(s.matrix_.end(), row.begin(), row.end());
    }
    s.index_ids();
    s.validate_measure();
    s.validate_matrix();
    for (std::size_t i = 0; i < s.measure_.size(); ++i) {
        s.total_measure_ += s.measure_[i];
        if (s.measure_[i] == 0.0) s.zero_measure_.push_back(i);
    }
    return s;
}

Space Space::make_graph(std::vector<std::string> ids, std::vector<GraphEdge> edges,
                        std::vector<double> measure, std::string label) {
    Space s;
    s.geometry_ = GeometryKind::Graph;
    s.label_ = std::move(label);
    s.ids_ = std::move(ids);
    s.measure_ = std::move(measure);
    s.edges_ = std::move(edges);
    if (s.ids_.empty()) throw SchemaError("space must contain at least one point");
    s.index_ids();
    s.validate_measure();
    s.validate_graph();
    s.adjacency_.assign(s.ids_.size(), {});
    for (const GraphEdge& e : s.edges_) {
        s.adjacency_[e.from].emplace_back(e.to, e.length);
        s.adjacency_[e.to].emplace_back(e.from, e.length);
    }
    for (auto& nbrs : s.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    s.sssp_ = std::make_unique<SsspCache>();
    s.sssp_->rows.resize(s.ids_.size());
    for (std::size_t i = 0; i < s.measure_.size(); ++i) {
        s.total_measure_ += s.measure_[i];
        if (s.measure_[i] == 0.0) s.zero_measure_.push_back(i);
    }
    return s;
}

const std::string& Space::point_id(std::size_t i) const {
    if (i >= ids_.size()) throw IdentifierError("point index out of range");
    return ids_[i];
}

std::size_t Space::index_of(std::string_view id) const {
    auto it = id_index_.find(std::string(id));
    if (it == id_index_.end()) throw IdentifierError("unknown point id: " + std::string(id));
    return it->second;
}

bool Space::has_point(std::string_view id) const {
    return id_index_.count(std::string(id)) != 0;
}

double Space::measure_weight(std::size_t i) const {
    if (i >= measure_.size()) throw IdentifierError("point index out of range");
    return measure_[i];
}

const std::vector<double>& Space::shortest_paths_from(std::size_t source) const {
    {
        std::lock_guard<std::mutex> lock(sssp_->mutex);
        if (sssp_->rows[source]) return *sssp_->rows[source];
    }
    auto dist = std::make_shared<std::vector<double>>(ids_.size(), kInfinity);
    (*dist)[source] = 0.0;
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > (*dist)[u]) continue;
        for (auto [v, w] : adjacency_[u]) {
            const double nd = d + w;
            if (nd < (*dist)[v]) {
                (*dist)[v] = nd;
                heap.emplace(nd, v);
            }
        }
    }
    std::lock_guard<std::mutex> lock(sssp_->mutex);
    if (!sssp_->rows[source]) sssp_->rows[source] = std::move(dist);
    return *sssp_->rows[source];
}

double Space::distance(std::size_t x, std::size_t y) const {
    if (x >= ids_.size() || y >= ids_.size())
        throw IdentifierError("point index out of range");
    if (x == y) return 0.0;
    switch (geometry_) {
        case GeometryKind::Embedding:
            return euclidean(coordinates(x), coordinates(y));
        case GeometryKind::DistanceMatrix:
            return matrix_[x * ids_.size() + y];
        case GeometryKind::Graph: {
            // Always expand from the lower index so lookups are exactly
            // symmetric regardless of floating-point summation order.
            const std::size_t s = std::min(x, y), t = std::max(x, y);
            return shortest_paths_from(s)[t];
        }
    }
    return kInfinity;
}

double Space::distance_by_id(std::string_view x, std::string_view y) const {
    return distance(index_of(x), index_of(y));
}

std::size_t Space::dimension() const {
    if (geometry_ != GeometryKind::Embedding)
        throw Error("dimension() requires an embedded space");
    return dimension_;
}

std::span<const double> Space::coordinates(std::size_t i) const {
    if (geometry_ != GeometryKind::Embedding)
        throw Error("coordinates() requires an embedded space");
    if (i >= ids_.size()) throw IdentifierError("point index out of range");
    return {coords_.data() + i * dimension_, dimension_};
}

std::size_t Space::nearest_point(std::span<const double> position) const {
    if (geometry_ != GeometryKind::Embedding)
        throw Error("nearest_point() requires an embedded space");
    if (position.size() != dimension_)
        throw Error("position dimension does not match the space");
    std::size_t best = 0;
    double best_d = euclidean(position, coordinates(0));
    for (std::size_t i = 1; i < ids_.size(); ++i) {
        const double d = euclidean(position, coordinates(i));
        if (d < best_d) {
            best_d = d;
            best = i;  // ties keep the lowest index
        }
    }
    return best;
}

const std::vector<GraphEdge>& Space::edges() const {
    if (geometry_ != GeometryKind::Graph) throw Error("edges() requires a graph space");
    return edges_;
}

Density::Density(const Space& space, std::vector<double> values)
    : values_(std::move(values)), space_label_(space.label()) {
    if (values_.size() != space.point_count())
        throw Error("density must assign a value to every point");
    for (double v : values_)
        if (!(v >= 0.0) || std::isinf(v) || std::isnan(v))
            throw Error("density values must be finite and >= 0");
}

Density Density::constant(const Space& space, double value) {
    return Density(space, std::vector<double>(space.point_count(), value));
}

Density Density::indicator(const Space& space, std::span<const std::size_t> points,
                           double scale) {
    std::vector<double> values(space.point_count(), 0.0);
    for (std::size_t p : points) {
        if (p >= space.point_count()) throw IdentifierError("indicator point outside the space");
        values[p] = scale;
    }
    return Density(space, std::move(values));
}

double Density::min_value() const {
    double m = kInfinity;
    for (double v : values_) m = std::min(m, v);
    return m;
}

NullSetCertificate::NullSetCertificate(const Space& space, std::vector<std::size_t> points,
                                       std::string name)
    : points_(std::move(points)), name_(std::move(name)) {
    for (std::size_t p : points_)
        if (p >= space.point_count())
            throw IdentifierError("certificate point outside the space");
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

NullSetCertificate NullSetCertificate::united(const Space& space,
                                              std::span<const NullSetCertificate> certs,
                                              std::string name) {
    std::vector<std::size_t> all;
    for (const auto& c : certs) all.insert(all.end(), c.points().begin(), c.points().end());
    return NullSetCertificate(space, std::move(all), std::move(name));
}

bool NullSetCertificate::contains(std::size_t i) const {
    return std::binary_search(points_.begin(), points_.end(), i);
}

double ess_sup(const Space& space, const Density& rho) {
    require_compatible(space, rho);
    double best = 0.0;
    for (std::size_t i = 0; i < space.point_count(); ++i)
        if (space.measure_weight(i) > 0.0) best = std::max(best, rho.value(i));
    return best;
}

bool validate_null_set(const Space& space, const NullSetCertificate& cert) {
    for (std::size_t p : cert.points()) {
        if (p >= space.point_count())
            throw IdentifierError("certificate point outside the space");
        if (space.measure_weight(p) != 0.0) return false;
    }
    return true;
}

void require_compatible(const Space& space, const Density& rho) {
    if (rho.size() != space.point_count())
        throw Error("density size does not match the space");
    if (!rho.space_label().empty() && !space.label().empty() &&
        rho.space_label() != space.label())
        throw Error("density belongs to space '" + rho.space_label() + "', not '" +
                    space.label() + "'");
}

}  // namespace essmod
