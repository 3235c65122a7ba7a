#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "essmod/errors.hpp"
#include "essmod/essential_metric.hpp"
#include "essmod/extended_real.hpp"
#include "essmod/fixtures.hpp"

using namespace essmod;

TEST_CASE("connecting family enumerates every simple path") {
    auto g = unit_path_graph();
    auto fam = connecting_family(g, 0, 2);
    REQUIRE(fam.size() == 1);
    CHECK(fam.members()[0].length == doctest::Approx(2.0));

    // Complete graph on four vertices: 5 simple paths between a fixed pair.
    std::vector<GraphEdge> edges;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) edges.push_back({i, j, 1.0});
    auto k4 = Space::make_graph({"a", "b", "c", "d"}, edges, {1, 1, 1, 1});
    CHECK(connecting_family(k4, 0, 3).size() == 5);

    // Hop limit 1 keeps only the direct edge.
    ConnectOptions one_hop;
    one_hop.max_hops = 1;
    auto direct = connecting_family(k4, 0, 3, one_hop);
    REQUIRE(direct.size() == 1);
    CHECK(direct.members()[0].length == doctest::Approx(1.0));
}

TEST_CASE("connecting family filters a curve pool by endpoints") {
    auto inst = two_route_instance();
    CurveFamily pool(inst.space, inst.curves, "pool");
    ConnectOptions opts;
    opts.pool = &pool;
    auto fam = connecting_family(inst.space, inst.x, inst.y, opts);
    CHECK(fam.size() == 2);

    // Reversed orientation: members are re-oriented, not dropped.
    auto rev_fam = connecting_family(inst.space, inst.y, inst.x, opts);
    CHECK(rev_fam.size() == 2);

    // Unrelated endpoints select nothing.
    auto none = connecting_family(inst.space, inst.x, inst.space.index_of("a1"), opts);
    CHECK(none.empty());
}

TEST_CASE("connecting family requires a pool off graphs") {
    auto s = Space::make_embedding({"a", "b"}, {{0, 0}, {1, 0}}, {1, 1});
    CHECK_THROWS_AS((void)connecting_family(s, 0, 1), Error);
}

TEST_CASE("identical endpoints are rejected") {
    auto g = unit_path_graph();
    CHECK_THROWS_AS((void)connecting_family(g, 1, 1), Error);
}

TEST_CASE("essential distance on plain graphs equals the base distance") {
    auto g = unit_path_graph();
    CHECK(essential_distance(g, 0, 2) == doctest::Approx(2.0));
    CHECK(essential_distance(g, 0, 0) == 0.0);

    auto cyc = cycle_graph(6);
    CHECK(essential_distance(cyc, 0, 3) == doctest::Approx(3.0));
    CHECK(essential_distance(cyc, 0, 1) == doctest::Approx(1.0));

    auto gasket = sierpinski_gasket(3);
    CHECK(essential_distance(gasket, 0, 1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("disconnected points have infinite essential distance") {
    auto g = Space::make_graph({"a", "b", "c", "d"}, {{0, 1, 1.0}, {2, 3, 1.0}},
                               {1, 1, 1, 1});
    CHECK(essential_distance(g, 0, 2) == kInfinity);
    auto pair = essential_distance_pair(g, 0, 2);
    CHECK(pair.base_distance == kInfinity);
    CHECK(pair.essential == kInfinity);
    CHECK(pair.null_set_supremum == kInfinity);
}

TEST_CASE("two-route instance: essential distance takes the arch") {
    auto inst = two_route_instance();
    CurveFamily pool(inst.space, inst.curves, "pool");
    ConnectOptions opts;
    opts.pool = &pool;

    CHECK(inst.space.distance(inst.x, inst.y) == doctest::Approx(inst.direct_length));
    double dess = essential_distance(inst.space, inst.x, inst.y, inst.certs, opts);
    CHECK(dess == doctest::Approx(inst.detour_length).epsilon(1e-12));

    auto pair = essential_distance_pair(inst.space, inst.x, inst.y, inst.certs, opts);
    CHECK(pair.base_distance == doctest::Approx(inst.direct_length));
    CHECK(pair.essential == doctest::Approx(inst.detour_length));
    CHECK(pair.null_set_supremum == doctest::Approx(pair.essential));
    CHECK(pair.essential > pair.base_distance + 0.5);
    REQUIRE(pair.witnessing_curve.has_value());
    CHECK(pair.witnessing_curve->name() == "arch");
    REQUIRE(pair.witnessing_null_set.has_value());
    CHECK(validate_null_set(inst.space, *pair.witnessing_null_set));
}

TEST_CASE("weight-zero points alone already force the detour") {
    // The maximal null set is joined to the supplied certificates, so even
    // an empty certificate list yields the essential value.
    auto inst = two_route_instance();
    CurveFamily pool(inst.space, inst.curves, "pool");
    ConnectOptions opts;
    opts.pool = &pool;
    CHECK(essential_distance(inst.space, inst.x, inst.y, {}, opts) ==
          doctest::Approx(inst.detour_length).epsilon(1e-12));
}

TEST_CASE("distance avoiding a null set") {
    auto inst = two_route_instance();
    CurveFamily pool(inst.space, inst.curves, "pool");
    ConnectOptions opts;
    opts.pool = &pool;

    NullSetCertificate empty;
    CHECK(distance_avoiding(inst.space, inst.x, inst.y, empty, opts) ==
          doctest::Approx(inst.direct_length));
    CHECK(distance_avoiding(inst.space, inst.x, inst.y, inst.certs[0], opts) ==
          doctest::Approx(inst.detour_length));

    // A positive-measure set is not a null set and is rejected.
    NullSetCertificate bad(inst.space, {inst.x}, "bad");
    CHECK_THROWS_AS(
        (void)distance_avoiding(inst.space, inst.x, inst.y, bad, opts), Error);
}

TEST_CASE("covered pair: both routes report infinity") {
    auto inst = covered_pair_graph();
    CHECK(essential_distance(inst.space, inst.x, inst.y, inst.certs) == kInfinity);
    auto pair = essential_distance_pair(inst.space, inst.x, inst.y, inst.certs);
    CHECK(pair.essential == kInfinity);
    CHECK(pair.null_set_supremum == kInfinity);
    CHECK(std::isfinite(pair.base_distance));
    // The base metric still sees the strips.
    CHECK(pair.base_distance == doctest::Approx(2.1).epsilon(1e-12));
}

TEST_CASE("essential distance is exactly symmetric") {
    std::mt19937 rng(21);
    for (int iter = 0; iter < 5; ++iter) {
        auto inst = random_strip_graph(rng);
        const std::size_t n = inst.space.point_count();
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x + 1; y < n; ++y) {
                double a = essential_distance(inst.space, x, y, inst.certs);
                double b = essential_distance(inst.space, y, x, inst.certs);
                CHECK(a == b);  // bitwise
            }
    }
}

TEST_CASE("the two distance routes agree on random strip graphs") {
    std::mt19937 rng(22);
    for (int iter = 0; iter < 10; ++iter) {
        auto inst = random_strip_graph(rng);
        const std::size_t n = inst.space.point_count();
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x + 1; y < n; ++y) {
                auto pair = essential_distance_pair(inst.space, x, y, inst.certs);
                CHECK(nearly_equal_extended(pair.essential, pair.null_set_supremum, 1e-9));
                if (std::isfinite(pair.base_distance) && std::isfinite(pair.essential))
                    CHECK(pair.essential >= pair.base_distance - 1e-9);
            }
    }
}

TEST_CASE("metric axioms hold on the standard instances") {
    auto report = check_metric_axioms(unit_path_graph());
    CHECK(report.passed());
    CHECK(report.checks_run > 0);

    CHECK(check_metric_axioms(cycle_graph(5)).passed());
    CHECK(check_metric_axioms(sierpinski_gasket(2)).passed());

    auto inst = two_route_instance();
    CurveFamily pool(inst.space, inst.curves, "pool");
    ConnectOptions opts;
    opts.pool = &pool;
    CHECK(check_metric_axioms(inst.space, inst.certs, opts).passed());

    auto covered = covered_pair_graph();
    CHECK(check_metric_axioms(covered.space, covered.certs).passed());

    auto split = Space::make_graph({"a", "b", "c", "d"}, {{0, 1, 1.0}, {2, 3, 1.0}},
                                   {1, 1, 1, 1});
    CHECK(check_metric_axioms(split).passed());
}

TEST_CASE("metric axioms on random strip graphs") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 5; ++iter) {
        auto inst = random_strip_graph(rng);
        auto report = check_metric_axioms(inst.space, inst.certs);
        CHECK(report.passed());
        if (!report.passed())
            for (const auto& v : report.violations) MESSAGE(v);
    }
}

TEST_CASE("axiom checker rejects oversized spaces") {
    auto big = sierpinski_gasket(4);  // 123 points
    REQUIRE(big.point_count() > 64);
    CHECK_THROWS_AS((void)check_metric_axioms(big), Error);
}

TEST_CASE("gasket corner distance is scale invariant") {
    for (std::size_t level = 0; level <= 4; ++level) {
        auto g = sierpinski_gasket(level);
        CHECK(g.distance(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(essential_distance(g, 0, 1) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("random two-route instances keep the pair consistent") {
    std::mt19937 rng(29);
    for (int iter = 0; iter < 10; ++iter) {
        auto inst = random_two_route_instance(rng);
        CurveFamily pool(inst.space, inst.curves, "pool");
        ConnectOptions opts;
        opts.pool = &pool;
        auto pair = essential_distance_pair(inst.space, inst.x, inst.y, inst.certs, opts);
        CHECK(pair.essential == doctest::Approx(inst.detour_length).epsilon(1e-9));
        CHECK(pair.base_distance ==
              doctest::Approx(inst.direct_length).epsilon(1e-9));
        CHECK(pair.essential > pair.base_distance);
    }
}
