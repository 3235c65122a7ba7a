#include "essmod/verify.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "essmod/essential_metric.hpp"
#include "essmod/extended_real.hpp"
#include "essmod/fixtures.hpp"

namespace essmod {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(what);
}

std::string check_staircase() {
    const StaircaseInstance inst = cantor_staircase(12, 63);
    const LengthComputation len = compute_length(inst.space, inst.curve, 1e-6);
    require(len.length >= std::sqrt(2.0) - 1e-9 && len.length <= 2.0,
            "staircase length outside [sqrt(2), 2]: " + format_extended(len.length));

    const Density flat_region = Density::indicator(inst.space, inst.dyadic_height);
    const double integral = line_integral(inst.space, inst.curve, flat_region);
    require(std::abs(integral - 1.0) <= 2e-2,
            "flat-region line integral " + format_extended(integral) + " not within 2e-2 of 1");

    require(positive_length_in(inst.space, inst.curve, inst.steep_interior, 0.01),
            "curve must have positive length in the steep region");
    require(!positive_time_in(inst.space, inst.curve, inst.steep_interior, 0.01),
            "curve must spend no positive time in the steep region");

    const Curve unit = arc_length_parametrize(inst.space, inst.curve);
    for (std::size_t i = 0; i + 1 < unit.sample_count(); ++i) {
        const double dt = unit.params()[i + 1] - unit.params()[i];
        const double chord = node_distance(inst.space, unit, unit.nodes()[i], unit.nodes()[i + 1]);
        require(chord <= dt * (1.0 + 1e-9),
                "arc-length parametrization exceeds unit speed");
    }
    return "length=" + format_extended(len.length, 12) +
           " flat_integral=" + format_extended(integral, 12);
}

std::string check_graph_duality() {
    std::size_t graphs = 0;
    auto check_one = [&](const Space& g) {
        const std::size_t y = g.point_count() - 1;
        const CurveFamily fam = connecting_family(g, 0, y);
        const double d = g.distance(0, y);
        const ModulusResult lp = mod_infinity_via_lp(g, fam, {});
        require(nearly_equal_extended(lp.value, reciprocal_extended(d), 1e-6),
                "program value " + format_extended(lp.value) + " vs 1/distance " +
                    format_extended(reciprocal_extended(d)));
        const ModulusResult formula = mod_infinity(g, fam, {});  // cross-checks internally
        require(nearly_equal_extended(formula.value, lp.value, 1e-6),
                "formula and program disagree");
        ++graphs;
    };
    for (std::size_t n = 2; n <= 5; ++n) {
        std::vector<std::string> ids;
        for (std::size_t i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
        for (auto& edges : connected_unit_edge_sets(n))
            check_one(Space::make_graph(ids, std::move(edges),
                                        std::vector<double>(n, 1.0), "unit"));
    }
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> size_dist(4, 7);
    for (int i = 0; i < 20; ++i)
        check_one(random_connected_graph(rng, size_dist(rng), false, 2));
    return "graphs=" + std::to_string(graphs);
}

std::string check_modulus_law_suite() {
    std::mt19937 rng(11);
    std::size_t checks = 0;
    for (int iter = 0; iter < 40; ++iter) {
        const StripGraphInstance inst = random_strip_graph(rng);
        const CurveFamily full = connecting_family(inst.space, inst.x, inst.y);
        if (full.empty()) continue;

        std::vector<Curve> some, one, slices;
        one.push_back(full.members()[0].curve);
        const NullSetCertificate avoid =
            NullSetCertificate::united(inst.space, inst.certs);
        for (std::size_t i = 0; i < full.size(); ++i) {
            if (i == 0 || i % 2 == 0) some.push_back(full.members()[i].curve);
            slices.push_back(junction_slice(rng, inst.space, full.members()[i].curve, avoid));
        }
        std::vector<Curve> all;
        for (const auto& m : full.members()) all.push_back(m.curve);

        std::vector<CurveFamily> chain;
        chain.emplace_back(inst.space, one, "one");
        chain.emplace_back(inst.space, some, "some");
        chain.emplace_back(inst.space, all, "all");
        LawReport rep = check_modulus_laws(inst.space, chain, inst.certs);
        checks += rep.checks_run;
        require(rep.passed(), rep.passed() ? "" : rep.violations[0].law + ": " +
                                                      rep.violations[0].detail);

        std::vector<CurveFamily> refined;
        refined.emplace_back(inst.space, all, "all");
        refined.emplace_back(inst.space, slices, "slices");
        rep = check_modulus_laws(inst.space, refined, inst.certs);
        checks += rep.checks_run;
        require(rep.passed(), rep.passed() ? "" : rep.violations[0].law + ": " +
                                                      rep.violations[0].detail);
    }
    return "checks=" + std::to_string(checks);
}

std::string check_metric_axiom_suite() {
    std::size_t checks = 0;
    auto run = [&](const Space& space, std::span<const NullSetCertificate> certs,
                   const ConnectOptions& options) {
        const MetricAxiomReport rep = check_metric_axioms(space, certs, options);
        checks += rep.checks_run;
        require(rep.passed(), rep.passed() ? "" : rep.violations[0]);
    };

    const TwoRouteInstance two = two_route_instance();
    const CurveFamily pool(two.space, two.curves, "routes");
    ConnectOptions pooled;
    pooled.pool = &pool;
    run(two.space, two.certs, pooled);

    const CoveredPairInstance covered = covered_pair_graph();
    run(covered.space, covered.certs, {});

    const Space split = Space::make_graph({"a", "b", "c", "d"},
                                          {{0, 1, 1.0}, {2, 3, 1.0}},
                                          {1.0, 1.0, 1.0, 1.0}, "split");
    run(split, {}, {});

    run(cycle_graph(6), {}, {});
    run(unit_path_graph(), {}, {});
    run(sierpinski_gasket(2), {}, {});

    std::mt19937 rng(13);
    for (int i = 0; i < 5; ++i) {
        const StripGraphInstance inst = random_strip_graph(rng);
        run(inst.space, inst.certs, {});
    }
    return "checks=" + std::to_string(checks);
}

std::string check_distance_routes() {
    std::size_t pairs = 0;
    auto agree = [&](const EssentialDistanceResult& r) {
        require(nearly_equal_extended(r.essential, r.null_set_supremum, 1e-9),
                "distance routes disagree");
        ++pairs;
    };

    const TwoRouteInstance two = two_route_instance();
    const CurveFamily pool(two.space, two.curves, "routes");
    ConnectOptions pooled;
    pooled.pool = &pool;
    const EssentialDistanceResult r =
        essential_distance_pair(two.space, two.x, two.y, two.certs, pooled);
    require(r.essential > r.base_distance + 0.5 &&
                r.null_set_supremum > r.base_distance + 0.5,
            "both essential routes must exceed the direct distance");
    agree(r);

    std::mt19937 rng(17);
    for (int i = 0; i < 10; ++i) {
        const TwoRouteInstance t = random_two_route_instance(rng);
        const CurveFamily p(t.space, t.curves, "routes");
        ConnectOptions opts;
        opts.pool = &p;
        agree(essential_distance_pair(t.space, t.x, t.y, t.certs, opts));
    }
    for (int i = 0; i < 20; ++i) {
        const StripGraphInstance inst = random_strip_graph(rng);
        for (std::size_t a = 0; a < inst.space.point_count(); ++a)
            for (std::size_t b = a + 1; b < inst.space.point_count(); ++b)
                agree(essential_distance_pair(inst.space, a, b, inst.certs, {}));
    }

    const CoveredPairInstance covered = covered_pair_graph();
    const EssentialDistanceResult c =
        essential_distance_pair(covered.space, covered.x, covered.y, covered.certs, {});
    require(is_infinite(c.essential) && is_infinite(c.null_set_supremum),
            "fully covered pair must be at infinite essential distance");
    agree(c);
    return "pairs=" + std::to_string(pairs);
}

}  // namespace

VerifyReport run_verification() {
    VerifyReport report;
    auto add = [&](const std::string& name, const std::function<std::string()>& body) {
        VerifyCheck check;
        check.name = name;
        try {
            check.detail = body();
            check.passed = true;
        } catch (const std::exception& e) {
            check.passed = false;
            check.detail = e.what();
        }
        report.checks.push_back(std::move(check));
    };
    add("cantor-staircase", check_staircase);
    add("graph-duality", check_graph_duality);
    add("modulus-laws", check_modulus_law_suite);
    add("metric-axioms", check_metric_axiom_suite);
    add("dhat-equals-dess", check_distance_routes);
    return report;
}

}  // namespace essmod
