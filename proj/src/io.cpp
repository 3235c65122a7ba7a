#include "essmod/io.hpp"

#include <algorithm>
#include <fstream>
#include <utility>

#include "json.hpp"

#include "essmod/essential_metric.hpp"
#include "essmod/extended_real.hpp"
#include "essmod/fixtures.hpp"

namespace essmod {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError(path + ": cannot open file");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw SchemaError(path + ": " + e.what());
    }
    if (!doc.is_object()) throw SchemaError(path + ": top level must be an object");
    if (!doc.contains("schema") || !doc["schema"].is_number_integer() ||
        doc["schema"].get<int>() != 1)
        throw SchemaError(path + ": missing or unsupported schema (expected 1)");
    return doc;
}

[[noreturn]] void bad(const std::string& path, const std::string& what) {
    throw SchemaError(path + ": " + what);
}

double finite_number(const json& v, const std::string& path, const std::string& what) {
    if (!v.is_number()) bad(path, what + " must be a number");
    return v.get<double>();
}

std::vector<std::string> read_ids(const json& v, const std::string& path) {
    if (!v.is_array() || v.empty()) bad(path, "points must be a non-empty array of ids");
    std::vector<std::string> ids;
    for (const auto& p : v) {
        if (!p.is_string()) bad(path, "point ids must be strings");
        ids.push_back(p.get<std::string>());
    }
    return ids;
}

std::vector<double> read_measure(const json& doc, const std::string& path,
                                 const std::vector<std::string>& ids) {
    std::vector<double> measure(ids.size(), 1.0);
    if (!doc.contains("measure")) return measure;
    const json& m = doc["measure"];
    if (!m.is_object()) bad(path, "measure must map point ids to weights");
    for (const auto& [id, w] : m.items()) {
        const auto it = std::find(ids.begin(), ids.end(), id);
        if (it == ids.end()) throw IdentifierError(path + ": measure id '" + id + "' unknown");
        measure[static_cast<std::size_t>(it - ids.begin())] =
            finite_number(w, path, "measure weight");
    }
    return measure;
}

LoadedSpace generated_space(const json& g, const std::string& path) {
    if (!g.is_object() || !g.contains("kind") || !g["kind"].is_string())
        bad(path, "generator must be an object with a string kind");
    SpaceGenerator gen;
    gen.kind = g["kind"].get<std::string>();
    if (!g.contains("level") || !g["level"].is_number_unsigned())
        bad(path, "generator needs an unsigned level");
    gen.level = g["level"].get<std::size_t>();
    LoadedSpace out;
    if (gen.kind == "sierpinski") {
        out.space = sierpinski_gasket(gen.level);
    } else if (gen.kind == "staircase") {
        if (!g.contains("interior") || !g["interior"].is_number_unsigned())
            bad(path, "staircase generator needs an unsigned interior count");
        gen.interior = g["interior"].get<std::size_t>();
        out.space = cantor_staircase(gen.level, gen.interior).space;
    } else {
        bad(path, "unknown space generator '" + gen.kind + "'");
    }
    out.generator = std::move(gen);
    return out;
}

}  // namespace

LoadedSpace load_space(const std::string& path) {
    const json doc = parse_file(path);
    if (doc.contains("generator")) {
        for (const char* key : {"points", "coordinates", "edges", "distances"})
            if (doc.contains(key))
                bad(path, std::string("generator excludes '") + key + "'");
        return generated_space(doc["generator"], path);
    }

    if (!doc.contains("points")) bad(path, "missing points");
    std::vector<std::string> ids = read_ids(doc["points"], path);
    std::vector<double> measure = read_measure(doc, path, ids);
    const std::string label =
        doc.contains("label") && doc["label"].is_string() ? doc["label"].get<std::string>() : "";

    const int forms = int(doc.contains("coordinates")) + int(doc.contains("edges")) +
                      int(doc.contains("distances"));
    if (forms != 1)
        bad(path, "exactly one of coordinates, edges, distances must be present");

    LoadedSpace out;
    if (doc.contains("coordinates")) {
        const json& c = doc["coordinates"];
        if (!c.is_array() || c.size() != ids.size())
            bad(path, "coordinates must list one row per point");
        std::vector<std::vector<double>> coords;
        for (const auto& row : c) {
            if (!row.is_array() || row.empty()) bad(path, "coordinate rows must be non-empty arrays");
            std::vector<double> r;
            for (const auto& v : row) r.push_back(finite_number(v, path, "coordinate"));
            coords.push_back(std::move(r));
        }
        out.space = Space::make_embedding(std::move(ids), std::move(coords),
                                          std::move(measure), label);
    } else if (doc.contains("edges")) {
        const json& e = doc["edges"];
        if (!e.is_array()) bad(path, "edges must be an array");
        // Index ids before constructing the space so edge endpoints resolve.
        auto index_of = [&](const json& v) -> std::size_t {
            if (!v.is_string()) bad(path, "edge endpoints must be point ids");
            const auto it = std::find(ids.begin(), ids.end(), v.get<std::string>());
            if (it == ids.end())
                throw IdentifierError(path + ": edge endpoint '" + v.get<std::string>() +
                                      "' unknown");
            return static_cast<std::size_t>(it - ids.begin());
        };
        std::vector<GraphEdge> edges;
        for (const auto& row : e) {
            if (!row.is_object() || !row.contains("from") || !row.contains("to") ||
                !row.contains("length"))
                bad(path, "each edge needs from, to, length");
            edges.push_back({index_of(row["from"]), index_of(row["to"]),
                             finite_number(row["length"], path, "edge length")});
        }
        out.space = Space::make_graph(std::move(ids), std::move(edges), std::move(measure),
                                      label);
    } else {
        const json& d = doc["distances"];
        if (!d.is_array() || d.size() != ids.size())
            bad(path, "distances must list one row per point");
        std::vector<std::vector<double>> rows;
        for (const auto& row : d) {
            if (!row.is_array() || row.size() != ids.size())
                bad(path, "distance rows must be square");
            std::vector<double> r;
            for (const auto& v : row) {
                if (v.is_string() && v.get<std::string>() == "inf")
                    r.push_back(kInfinity);
                else
                    r.push_back(finite_number(v, path, "distance"));
            }
            rows.push_back(std::move(r));
        }
        out.space = Space::make_distance_matrix(std::move(ids), std::move(rows),
                                                std::move(measure), label);
    }
    return out;
}

LoadedCurves load_curves(const std::string& path, const LoadedSpace& loaded,
                         std::size_t default_max_hops) {
    const json doc = parse_file(path);
    const Space& space = loaded.space;
    LoadedCurves out;
    if (doc.contains("name") && doc["name"].is_string())
        out.name = doc["name"].get<std::string>();

    if (doc.contains("curves")) {
        const json& list = doc["curves"];
        if (!list.is_array()) bad(path, "curves must be an array");
        for (const auto& c : list) {
            if (!c.is_object()) bad(path, "each curve must be an object");
            if (!c.contains("interpolation") || !c["interpolation"].is_string())
                bad(path, "each curve needs an interpolation tag");
            const std::string tag = c["interpolation"].get<std::string>();
            Interpolation interp;
            if (tag == "geodesic-segment")
                interp = Interpolation::GeodesicSegment;
            else if (tag == "edge-walk")
                interp = Interpolation::EdgeWalk;
            else if (tag == "discrete-chain")
                interp = Interpolation::DiscreteChain;
            else
                bad(path, "unknown interpolation '" + tag + "'");

            if (!c.contains("params") || !c["params"].is_array())
                bad(path, "each curve needs a params array");
            std::vector<double> params;
            for (const auto& v : c["params"])
                params.push_back(finite_number(v, path, "param"));

            if (!c.contains("nodes") || !c["nodes"].is_array())
                bad(path, "each curve needs a nodes array");
            std::vector<CurveNode> nodes;
            for (const auto& v : c["nodes"]) {
                if (v.is_string()) {
                    nodes.push_back(CurveNode::at_point(space.index_of(v.get<std::string>())));
                } else if (v.is_array()) {
                    std::vector<double> pos;
                    for (const auto& x : v) pos.push_back(finite_number(x, path, "node coordinate"));
                    nodes.push_back(CurveNode::at_position(std::move(pos)));
                } else {
                    bad(path, "nodes must be point ids or coordinate arrays");
                }
            }
            const std::string name =
                c.contains("name") && c["name"].is_string() ? c["name"].get<std::string>() : "";
            try {
                out.curves.emplace_back(interp, std::move(params), std::move(nodes), name);
            } catch (const Error& e) {
                bad(path, std::string("curve '") + name + "': " + e.what());
            }
            out.non_rectifiable.push_back(
                c.contains("rectifiable") && c["rectifiable"].is_boolean() &&
                !c["rectifiable"].get<bool>());
        }
    }

    if (doc.contains("generators")) {
        const json& list = doc["generators"];
        if (!list.is_array()) bad(path, "generators must be an array");
        for (const auto& g : list) {
            if (!g.is_object() || !g.contains("kind") || !g["kind"].is_string())
                bad(path, "each generator needs a string kind");
            const std::string kind = g["kind"].get<std::string>();
            if (kind == "all_paths") {
                if (!g.contains("from") || !g.contains("to") || !g["from"].is_string() ||
                    !g["to"].is_string())
                    bad(path, "all_paths needs from and to ids");
                ConnectOptions opts;
                opts.max_hops = default_max_hops;
                if (g.contains("max_hops")) {
                    if (!g["max_hops"].is_number_unsigned())
                        bad(path, "max_hops must be unsigned");
                    opts.max_hops = g["max_hops"].get<std::size_t>();
                }
                const CurveFamily fam =
                    connecting_family(space, space.index_of(g["from"].get<std::string>()),
                                      space.index_of(g["to"].get<std::string>()), opts);
                for (const auto& m : fam.members()) {
                    out.curves.push_back(m.curve);
                    out.non_rectifiable.push_back(!m.rectifiable);
                }
            } else if (kind == "staircase") {
                if (!g.contains("level") || !g["level"].is_number_unsigned() ||
                    !g.contains("interior") || !g["interior"].is_number_unsigned())
                    bad(path, "staircase generator needs unsigned level and interior");
                const std::size_t level = g["level"].get<std::size_t>();
                const std::size_t interior = g["interior"].get<std::size_t>();
                if (!loaded.generator || loaded.generator->kind != "staircase" ||
                    loaded.generator->level != level ||
                    loaded.generator->interior != interior)
                    bad(path,
                        "staircase curve generator requires the space file's staircase "
                        "generator with identical level and interior");
                out.curves.push_back(cantor_staircase(level, interior).curve);
                out.non_rectifiable.push_back(false);
            } else {
                bad(path, "unknown curve generator '" + kind + "'");
            }
        }
    }

    if (out.curves.empty()) bad(path, "no curves defined by the file");
    return out;
}

std::vector<NullSetCertificate> load_null_sets(const std::string& path,
                                               const Space& space) {
    const json doc = parse_file(path);
    if (!doc.contains("sets") || !doc["sets"].is_array())
        bad(path, "missing sets array");
    std::vector<NullSetCertificate> certs;
    for (const auto& s : doc["sets"]) {
        if (!s.is_object() || !s.contains("points") || !s["points"].is_array())
            bad(path, "each set needs a points array");
        std::vector<std::size_t> points;
        for (const auto& p : s["points"]) {
            if (!p.is_string()) bad(path, "set points must be ids");
            points.push_back(space.index_of(p.get<std::string>()));
        }
        const std::string name =
            s.contains("name") && s["name"].is_string() ? s["name"].get<std::string>() : "";
        certs.emplace_back(space, std::move(points), name);
    }
    return certs;
}

}  // namespace essmod
