#include "essmod/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <utility>

namespace essmod {

namespace {

std::vector<std::string> numbered_ids(const std::string& prefix, std::size_t n) {
    std::vector<std::string> ids;
    ids.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ids.push_back(prefix + std::to_string(i));
    return ids;
}

Curve point_chain(Interpolation interp, const std::vector<double>& params,
                  const std::vector<std::size_t>& points, std::string name) {
    std::vector<CurveNode> nodes;
    nodes.reserve(points.size());
    for (std::size_t p : points) nodes.push_back(CurveNode::at_point(p));
    return Curve(interp, params, std::move(nodes), std::move(name));
}

TwoRouteInstance make_two_route(double direct, double arch_height,
                                std::size_t strip_points) {
    TwoRouteInstance inst;
    const std::size_t n = 4 + strip_points;
    std::vector<std::string> ids{"x"};
    std::vector<std::vector<double>> coords{{0.0, 0.0}};
    std::vector<double> measure{1.0};
    std::vector<std::size_t> strip;
    for (std::size_t i = 0; i < strip_points; ++i) {
        ids.push_back("s" + std::to_string(i + 1));
        const double f = static_cast<double>(i + 1) / static_cast<double>(strip_points + 1);
        coords.push_back({f * direct, 0.0});
        measure.push_back(0.0);
        strip.push_back(ids.size() - 1);
    }
    ids.insert(ids.end(), {"y", "a1", "a2"});
    coords.push_back({direct, 0.0});
    coords.push_back({0.0, arch_height});
    coords.push_back({direct, arch_height});
    measure.insert(measure.end(), {1.0, 1.0, 1.0});

    inst.space = Space::make_embedding(std::move(ids), std::move(coords),
                                       std::move(measure), "two-route");
    inst.x = 0;
    inst.y = strip_points + 1;
    inst.direct_length = direct;
    inst.detour_length = direct + 2.0 * arch_height;

    std::vector<double> direct_params{0.0};
    std::vector<std::size_t> direct_points{inst.x};
    for (std::size_t i = 0; i < strip_points; ++i) {
        direct_params.push_back(inst.space.coordinates(strip[i])[0]);
        direct_points.push_back(strip[i]);
    }
    direct_params.push_back(direct);
    direct_points.push_back(inst.y);
    inst.curves.push_back(point_chain(Interpolation::GeodesicSegment, direct_params,
                                      direct_points, "direct"));
    inst.curves.push_back(point_chain(Interpolation::GeodesicSegment, {0.0, 1.0, 2.0, 3.0},
                                      {inst.x, n - 2, n - 1, inst.y}, "arch"));
    inst.certs.emplace_back(inst.space, strip, "strip");
    return inst;
}

}  // namespace

Space unit_path_graph() {
    return Space::make_graph({"a", "b", "c"}, {{0, 1, 1.0}, {1, 2, 1.0}},
                             {1.0, 1.0, 1.0}, "unit-path");
}

Space cycle_graph(std::size_t n, double edge_length) {
    std::vector<GraphEdge> edges;
    for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, edge_length});
    return Space::make_graph(numbered_ids("c", n), std::move(edges),
                             std::vector<double>(n, 1.0), "cycle");
}

TwoRouteInstance two_route_instance() { return make_two_route(1.0, 1.0, 2); }

TwoRouteInstance random_two_route_instance(std::mt19937& rng) {
    std::uniform_real_distribution<double> span(0.5, 2.0);
    std::uniform_int_distribution<std::size_t> pts(2, 3);
    return make_two_route(span(rng), span(rng), pts(rng));
}

StaircaseInstance cantor_staircase(std::size_t level, std::size_t interior) {
    if (level == 0 || level > 16) throw Error("staircase level must be in [1, 16]");
    const std::size_t pieces = std::size_t{1} << level;
    const double width = std::pow(3.0, -static_cast<double>(level));
    const double rise = std::ldexp(1.0, -static_cast<int>(level));

    StaircaseInstance inst;
    std::vector<double> params;
    std::vector<std::vector<double>> coords;

    auto push = [&](double x, double y, bool dyadic) {
        params.push_back(x);
        coords.push_back({x, y});
        (dyadic ? inst.dyadic_height : inst.steep_interior).push_back(coords.size() - 1);
    };
    // Left endpoint of rising piece i: binary digits of i become the 0/2
    // ternary digits selecting the construction interval.
    auto left_end = [&](std::size_t i) {
        double a = 0.0, scale = 1.0 / 3.0;
        for (std::size_t b = level; b-- > 0;) {
            if ((i >> b) & 1U) a += 2.0 * scale;
            scale /= 3.0;
        }
        return a;
    };

    push(0.0, 0.0, true);
    for (std::size_t i = 0; i < pieces; ++i) {
        const double a = left_end(i);
        const double y0 = static_cast<double>(i) * rise;
        for (std::size_t j = 1; j <= interior; ++j) {
            const double f = static_cast<double>(j) / static_cast<double>(interior + 1);
            push(a + f * width, y0 + f * rise, false);
        }
        push(a + width, y0 + rise, true);
        if (i + 1 < pieces) push(left_end(i + 1), y0 + rise, true);
        inst.steep_total += std::hypot(width, rise);
    }
    inst.flat_total = 1.0 - static_cast<double>(pieces) * width;

    const std::size_t n = coords.size();
    inst.space = Space::make_embedding(numbered_ids("p", n), std::move(coords),
                                       std::vector<double>(n, 1.0), "staircase");
    std::vector<CurveNode> nodes;
    nodes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) nodes.push_back(CurveNode::at_point(i));
    inst.curve = Curve(Interpolation::GeodesicSegment, std::move(params),
                       std::move(nodes), "staircase");
    return inst;
}

Space sierpinski_gasket(std::size_t level) {
    if (level > 10) throw Error("gasket level must be at most 10");
    const std::size_t rows = std::size_t{1} << level;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    std::vector<std::string> ids;
    auto vertex = [&](std::size_t r, std::size_t c) {
        auto [it, fresh] = index.try_emplace({r, c}, ids.size());
        if (fresh) ids.push_back("g" + std::to_string(r) + "_" + std::to_string(c));
        return it->second;
    };
    vertex(0, 0);        // top corner
    vertex(rows, 0);     // bottom-left corner
    vertex(rows, rows);  // bottom-right corner

    const double len = std::ldexp(1.0, -static_cast<int>(level));
    std::vector<GraphEdge> edges;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c <= r; ++c) {
            if ((c & (r - c)) != 0) continue;  // upward cells of the gasket
            const std::size_t top = vertex(r, c);
            const std::size_t bl = vertex(r + 1, c);
            const std::size_t br = vertex(r + 1, c + 1);
            edges.push_back({top, bl, len});
            edges.push_back({top, br, len});
            edges.push_back({bl, br, len});
        }
    }
    const std::size_t n = ids.size();
    return Space::make_graph(std::move(ids), std::move(edges),
                             std::vector<double>(n, 1.0),
                             "gasket-" + std::to_string(level));
}

CirclePolyline circle_polyline(std::size_t segments) {
    if (segments < 3) throw Error("a circle polyline needs at least 3 segments");
    CirclePolyline out;
    out.space = Space::make_embedding({"o"}, {{0.0, 0.0}}, {1.0}, "circle");
    std::vector<double> params;
    std::vector<CurveNode> nodes;
    for (std::size_t j = 0; j <= segments; ++j) {
        const double theta =
            2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(segments);
        params.push_back(theta);
        nodes.push_back(CurveNode::at_position({std::cos(theta), std::sin(theta)}));
    }
    out.curve = Curve(Interpolation::GeodesicSegment, std::move(params), std::move(nodes),
                      "circle");
    return out;
}

Space random_connected_graph(std::mt19937& rng, std::size_t n, bool unit_lengths,
                             std::size_t extra_edges) {
    if (n < 2) throw Error("a connected graph needs at least 2 vertices");
    std::uniform_real_distribution<double> len_dist(0.3, 3.0);
    auto edge_len = [&] { return unit_lengths ? 1.0 : len_dist(rng); };

    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::vector<GraphEdge> edges;
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        const std::size_t j = pick(rng);
        seen.insert({j, i});
        edges.push_back({j, i, edge_len()});
    }
    std::uniform_int_distribution<std::size_t> any(0, n - 1);
    for (std::size_t e = 0; e < extra_edges; ++e) {
        for (int attempt = 0; attempt < 10; ++attempt) {
            std::size_t a = any(rng), b = any(rng);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            if (!seen.insert({a, b}).second) continue;
            edges.push_back({a, b, edge_len()});
            break;
        }
    }
    return Space::make_graph(numbered_ids("v", n), std::move(edges),
                             std::vector<double>(n, 1.0), "random-graph");
}

StripGraphInstance random_strip_graph(std::mt19937& rng, bool strip_all) {
    std::uniform_int_distribution<std::size_t> size_dist(3, 6);
    std::uniform_int_distribution<std::size_t> extra_dist(0, 2);
    std::uniform_real_distribution<double> len_dist(0.4, 2.0);
    std::bernoulli_distribution make_strip(0.45);

    const std::size_t junctions = size_dist(rng);
    // Spanning tree plus extras over the junctions, then strip conversion.
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, double>> base;
    for (std::size_t i = 1; i < junctions; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        const std::size_t j = pick(rng);
        seen.insert({j, i});
        base.push_back({{j, i}, len_dist(rng)});
    }
    std::uniform_int_distribution<std::size_t> any(0, junctions - 1);
    const std::size_t extras = extra_dist(rng);
    for (std::size_t e = 0; e < extras; ++e) {
        for (int attempt = 0; attempt < 10; ++attempt) {
            std::size_t a = any(rng), b = any(rng);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            if (!seen.insert({a, b}).second) continue;
            base.push_back({{a, b}, len_dist(rng)});
            break;
        }
    }

    std::vector<bool> to_strip(base.size());
    bool got_one = false;
    for (std::size_t i = 0; i < base.size(); ++i) {
        to_strip[i] = strip_all || make_strip(rng);
        got_one = got_one || to_strip[i];
    }
    if (!got_one) to_strip[0] = true;

    StripGraphInstance inst;
    std::vector<std::string> ids = numbered_ids("j", junctions);
    std::vector<double> measure(junctions, 1.0);
    std::vector<GraphEdge> edges;
    std::vector<std::vector<std::size_t>> strips;
    for (std::size_t i = 0; i < base.size(); ++i) {
        const auto [uv, len] = base[i];
        if (!to_strip[i]) {
            edges.push_back({uv.first, uv.second, len});
            continue;
        }
        const std::size_t sa = ids.size(), sb = ids.size() + 1;
        ids.push_back("n" + std::to_string(strips.size()) + "a");
        ids.push_back("n" + std::to_string(strips.size()) + "b");
        measure.insert(measure.end(), {0.0, 0.0});
        edges.push_back({uv.first, sa, len / 3.0});
        edges.push_back({sa, sb, len / 3.0});
        edges.push_back({sb, uv.second, len / 3.0});
        strips.push_back({sa, sb});
    }
    inst.space = Space::make_graph(std::move(ids), std::move(edges), std::move(measure),
                                   "strip-graph");
    for (std::size_t s = 0; s < strips.size(); ++s)
        inst.certs.emplace_back(inst.space, strips[s], "strip" + std::to_string(s));
    inst.x = 0;
    inst.y = junctions - 1;
    return inst;
}

CoveredPairInstance covered_pair_graph() {
    CoveredPairInstance inst;
    inst.space = Space::make_graph(
        {"x", "s1", "s2", "t1", "t2", "y"},
        {{0, 1, 1.0}, {1, 2, 1.0}, {2, 5, 1.0}, {0, 3, 0.7}, {3, 4, 0.7}, {4, 5, 0.7}},
        {1.0, 0.0, 0.0, 0.0, 0.0, 1.0}, "covered-pair");
    inst.x = 0;
    inst.y = 5;
    inst.certs.emplace_back(inst.space, std::vector<std::size_t>{1, 2}, "left-strip");
    inst.certs.emplace_back(inst.space, std::vector<std::size_t>{3, 4}, "right-strip");
    return inst;
}

std::vector<std::vector<GraphEdge>> connected_unit_edge_sets(std::size_t n) {
    if (n < 2 || n > 6) throw Error("exhaustive graph listing supports 2..6 vertices");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.push_back({i, j});

    std::vector<std::vector<GraphEdge>> out;
    std::vector<std::size_t> parent(n);
    for (std::size_t mask = 1; mask < (std::size_t{1} << pairs.size()); ++mask) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](std::size_t v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        std::vector<GraphEdge> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            if (!((mask >> b) & 1U)) continue;
            edges.push_back({pairs[b].first, pairs[b].second, 1.0});
            parent[find(pairs[b].first)] = find(pairs[b].second);
        }
        bool connected = true;
        for (std::size_t i = 1; i < n && connected; ++i)
            connected = find(i) == find(0);
        if (connected) out.push_back(std::move(edges));
    }
    return out;
}

Curve junction_slice(std::mt19937& rng, const Space& space, const Curve& curve,
                     const NullSetCertificate& avoid) {
    std::vector<std::size_t> cuts;
    for (std::size_t i = 0; i < curve.sample_count(); ++i)
        if (!avoid.contains(assigned_point(space, curve.nodes()[i]))) cuts.push_back(i);
    if (cuts.size() < 2) throw Error("curve has no two cut samples outside the set");
    std::uniform_int_distribution<std::size_t> pick(0, cuts.size() - 1);
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) b = (b + 1) % cuts.size();
    if (a > b) std::swap(a, b);
    return subcurve(curve, cuts[a], cuts[b]);
}

}  // namespace essmod
