// Acceptance suite: nine executable criteria covering the library's core
// guarantees. Each criterion prints one [PASS]/[FAIL] line; the process
// exits with the number of failed criteria. Tolerances are pinned here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "essmod/curve.hpp"
#include "essmod/errors.hpp"
#include "essmod/essential_metric.hpp"
#include "essmod/extended_real.hpp"
#include "essmod/fixtures.hpp"
#include "essmod/modulus.hpp"

using namespace essmod;

namespace {

int failures = 0;

struct Criterion {
    std::string label;
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const Criterion& c) {
    if (c.ok) {
        std::printf("[PASS] %s%s%s\n", c.label.c_str(), c.detail.empty() ? "" : " -- ",
                    c.detail.c_str());
    } else {
        ++failures;
        std::printf("[FAIL] %s -- %s\n", c.label.c_str(), c.detail.c_str());
    }
    std::fflush(stdout);
}

template <typename Fn>
void run(const std::string& label, Fn&& body) {
    Criterion c;
    c.label = label;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.detail = std::string("exception: ") + e.what();
    }
    report(c);
}

// ---------------------------------------------------------------- criterion 1

void criterion_reciprocity(Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(101);
    std::size_t instances = 0, finite_cases = 0, infinite_cases = 0;
    double worst = 0.0;

    auto check_instance = [&](const Space& space, const CurveFamily& fam,
                              std::span<const NullSetCertificate> certs) {
        ++instances;
        const double el = ess_length(space, fam, certs);
        const auto r = mod_infinity(space, fam, certs);
        if (std::isfinite(el) && el > 0.0) {
            ++finite_cases;
            const double err = std::fabs(r.value * el - 1.0);
            worst = std::max(worst, err);
            c.require(err <= 1e-9, "reciprocity error " + format_extended(err));
        } else if (el == kInfinity) {
            ++infinite_cases;
            c.require(r.value == 0.0, "covered family must have modulus zero");
        } else {
            c.require(r.value == kInfinity, "zero critical length must invert to infinity");
        }
    };

    // Strip graphs kept at ten points or fewer.
    std::size_t accepted = 0;
    while (accepted < 50) {
        auto inst = random_strip_graph(rng);
        if (inst.space.point_count() > 10) continue;
        ++accepted;
        auto fam = connecting_family(inst.space, inst.x, inst.y);
        check_instance(inst.space, fam, inst.certs);
    }
    // Fully certified variants: every route covered.
    for (int i = 0; i < 10; ++i) {
        auto inst = random_strip_graph(rng, true);
        auto fam = connecting_family(inst.space, inst.x, inst.y);
        check_instance(inst.space, fam, inst.certs);
    }
    // Embedded two-route instances with null strips.
    for (int i = 0; i < 50; ++i) {
        auto inst = random_two_route_instance(rng);
        CurveFamily pool(inst.space, inst.curves, "pool");
        ConnectOptions opts;
        opts.pool = &pool;
        auto fam = connecting_family(inst.space, inst.x, inst.y, opts);
        check_instance(inst.space, fam, inst.certs);
    }

    const double secs = elapsed_seconds(start);
    c.require(instances >= 100, "need at least 100 instances");
    c.require(finite_cases >= 50, "need a substantial finite-length cohort");
    c.require(infinite_cases >= 5, "need covered instances in the mix");
    c.require(secs < 10.0, "runtime " + std::to_string(secs) + "s exceeds 10s");
    c.detail = "instances=" + std::to_string(instances) +
               " finite=" + std::to_string(finite_cases) +
               " covered=" + std::to_string(infinite_cases) +
               " worst=" + format_extended(worst, 3) +
               " time=" + std::to_string(secs).substr(0, 4) + "s";
}

// ---------------------------------------------------------------- criterion 2

void criterion_sup_formula_vs_program(Criterion& c) {
    std::mt19937 rng(202);
    std::size_t families = 0;
    double worst = 0.0;

    auto check_family = [&](const Space& space, const CurveFamily& fam) {
        if (fam.empty() || fam.size() > 64) return;
        ++families;
        const auto direct = mod_sup(space, fam);
        const auto lp = mod_sup_via_lp(space, fam);
        const bool agree = nearly_equal_extended(direct.value, lp.value, 1e-6);
        if (std::isfinite(direct.value) && std::isfinite(lp.value))
            worst = std::max(worst, std::fabs(direct.value - lp.value) /
                                        std::max(1.0, direct.value));
        c.require(agree, "formula " + format_extended(direct.value) + " vs program " +
                             format_extended(lp.value));
    };

    for (int i = 0; i < 40; ++i) {
        const std::size_t n = 4 + static_cast<std::size_t>(i % 4);
        auto g = random_connected_graph(rng, n, i % 2 == 0, 2);
        check_family(g, connecting_family(g, 0, n - 1));
    }
    for (int i = 0; i < 10; ++i) {
        auto inst = random_two_route_instance(rng);
        check_family(inst.space, CurveFamily(inst.space, inst.curves, "routes"));
    }
    auto stair = cantor_staircase(4, 1);
    check_family(stair.space, CurveFamily(stair.space, {stair.curve}, "staircase"));

    c.require(families >= 40, "need at least 40 families in range");
    c.detail = "families=" + std::to_string(families) + " worst=" + format_extended(worst, 3);
}

// ---------------------------------------------------------------- criterion 3

void criterion_graph_duality(Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    std::size_t graphs = 0;
    double worst = 0.0;
    ModulusOptions no_cross;
    no_cross.lp_cross_check = false;

    auto check_graph = [&](const Space& g) {
        const std::size_t n = g.point_count();
        auto fam = connecting_family(g, 0, n - 1);
        const double expected = reciprocal_extended(g.distance(0, n - 1));
        const auto formula = mod_infinity(g, fam, {}, no_cross);
        const auto lp = mod_infinity_via_lp(g, fam);
        ++graphs;
        const bool f_ok = nearly_equal_extended(formula.value, expected, 1e-6);
        const bool l_ok = nearly_equal_extended(lp.value, expected, 1e-6);
        if (std::isfinite(lp.value))
            worst = std::max(worst, std::fabs(lp.value - expected) / std::max(1.0, expected));
        c.require(f_ok, "formula " + format_extended(formula.value) + " vs 1/distance " +
                            format_extended(expected));
        c.require(l_ok, "program " + format_extended(lp.value) + " vs 1/distance " +
                            format_extended(expected));
    };

    // Every connected graph on up to six labeled vertices, unit lengths.
    const std::size_t expected_counts[] = {0, 0, 1, 4, 38, 728, 26704};
    for (std::size_t n = 2; n <= 6; ++n) {
        auto sets = connected_unit_edge_sets(n);
        c.require(sets.size() == expected_counts[n],
                  "edge-set enumeration count off at n=" + std::to_string(n));
        std::vector<std::string> ids;
        for (std::size_t i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
        for (auto& edges : sets) {
            auto g = Space::make_graph(ids, edges, std::vector<double>(n, 1.0));
            check_graph(g);
            if (!c.ok) return;
        }
    }
    // Fifty random weighted graphs.
    std::mt19937 rng(303);
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = 4 + static_cast<std::size_t>(i % 4);
        check_graph(random_connected_graph(rng, n, false, 3));
    }

    const double secs = elapsed_seconds(start);
    c.require(secs < 30.0, "runtime " + std::to_string(secs) + "s exceeds 30s");
    c.detail = "graphs=" + std::to_string(graphs) + " worst=" + format_extended(worst, 3) +
               " time=" + std::to_string(secs).substr(0, 4) + "s";
}

// ---------------------------------------------------------------- criterion 4

void criterion_staircase(Criterion& c) {
    auto inst = cantor_staircase(12, 63);
    const auto lc = compute_length(inst.space, inst.curve, 1e-6);

    const double sqrt2 = std::sqrt(2.0);
    c.require(lc.length >= sqrt2 - 1e-9, "length below the diagonal chord");
    c.require(lc.length <= 2.0, "length above the taxicab bound");
    // Closed form: 1 - (2/3)^12 + 2^12 * hypot(3^-12, 2^-12).
    c.require(std::fabs(lc.length - 1.9923223545256934) <= 1e-9 * lc.length,
              "length " + format_extended(lc.length) + " off the closed form");

    // Flat-region indicator integrates to ~1: the curve spends its arc
    // length on the flat runs except for one interpolation segment per
    // rising piece. Closed form 1 - (2/3)^12 + 2^12*hypot(3^-12,2^-12)/64.
    Density flat_ind = Density::indicator(inst.space, inst.dyadic_height);
    const double flat_integral = line_integral(inst.space, inst.curve, flat_ind);
    c.require(std::fabs(flat_integral - 1.0) <= 2e-2,
              "flat integral " + format_extended(flat_integral) + " not within 2e-2 of 1");
    c.require(std::fabs(flat_integral - 1.0079181174512872) <= 1e-9,
              "flat integral off its closed form");

    // The steep interior carries arc length but vanishing parameter time.
    c.require(positive_length_in(inst.space, inst.curve, inst.steep_interior, 0.01),
              "steep region must carry positive arc length");
    c.require(!positive_time_in(inst.space, inst.curve, inst.steep_interior, 0.01),
              "steep region must carry no parameter time at this depth");

    c.detail = "length=" + format_extended(lc.length, 12) +
               " flat_integral=" + format_extended(flat_integral, 12);
}

// ---------------------------------------------------------------- criterion 5

void criterion_law_suite(Criterion& c) {
    std::mt19937 rng(505);
    std::size_t reports = 0, checks = 0, violations = 0;
    ModulusOptions options;  // lp_agreement_rel = 1e-6

    int iter = 0;
    while (reports < 200 && iter++ < 400) {
        auto inst = random_strip_graph(rng);
        auto all = connecting_family(inst.space, inst.x, inst.y);
        if (all.empty()) continue;

        // Nested chain: first member, first half, full family.
        std::vector<Curve> first_curve{all.members()[0].curve};
        std::vector<Curve> half;
        for (std::size_t i = 0; i < (all.size() + 1) / 2; ++i)
            half.push_back(all.members()[i].curve);
        std::vector<Curve> full;
        for (const auto& m : all.members()) full.push_back(m.curve);

        std::vector<CurveFamily> chain;
        chain.emplace_back(inst.space, first_curve, "one");
        chain.emplace_back(inst.space, half, "half");
        chain.emplace_back(inst.space, full, "all");
        auto r1 = check_modulus_laws(inst.space, chain, inst.certs, options);
        ++reports;
        checks += r1.checks_run;
        violations += r1.violations.size();
        if (!r1.violations.empty()) c.require(false, r1.violations.front().law + ": " +
                                                         r1.violations.front().detail);

        // Slice pairing: every member of the slice family is a subcurve of
        // a full member, cut only at uncertified samples.
        const auto avoid = NullSetCertificate::united(inst.space, inst.certs);
        std::vector<Curve> sliced;
        for (const auto& m : all.members()) {
            if (m.curve.sample_count() < 3) continue;
            sliced.push_back(junction_slice(rng, inst.space, m.curve, avoid));
        }
        if (!sliced.empty()) {
            std::vector<CurveFamily> pair;
            pair.emplace_back(inst.space, full, "all");
            pair.emplace_back(inst.space, sliced, "slices");
            auto r2 = check_modulus_laws(inst.space, pair, inst.certs, options);
            ++reports;
            checks += r2.checks_run;
            violations += r2.violations.size();
            if (!r2.violations.empty()) c.require(false, r2.violations.front().law + ": " +
                                                             r2.violations.front().detail);
        }
        if (!c.ok) return;
    }

    c.require(reports >= 200, "need at least 200 law reports, got " + std::to_string(reports));
    c.require(violations == 0, "law violations found");
    c.detail = "reports=" + std::to_string(reports) + " checks=" + std::to_string(checks);
}

// ---------------------------------------------------------------- criterion 6

void criterion_certified_exceptional(Criterion& c) {
    std::mt19937 rng(606);
    std::size_t families = 0, admissible_checks = 0;

    auto check_instance = [&](const Space& space, const CurveFamily& fam,
                              std::span<const NullSetCertificate> certs) {
        if (fam.empty()) return;
        ++families;
        auto exc = is_exceptional(space, fam, certs);
        c.require(exc.exceptional, "family must be exceptional under its certificates");
        auto r = mod_infinity(space, fam, certs);
        c.require(r.value == 0.0, "exceptional family must have modulus zero");
        c.require(r.certificate.has_value(), "zero modulus must carry a certificate");

        // Admissible densities with arbitrarily small essential supremum:
        // scale the certificate-union indicator to mass >= 1 on every member.
        const auto cover = NullSetCertificate::united(space, certs);
        std::vector<std::size_t> pts(cover.points().begin(), cover.points().end());
        double min_mass = kInfinity;
        Density unit = Density::indicator(space, pts);
        for (const auto& m : fam.members()) {
            if (!m.rectifiable) continue;
            min_mass = std::min(min_mass, line_integral(space, m.curve, unit));
        }
        c.require(std::isfinite(min_mass) && min_mass > 0.0,
                  "covered members must meet the certificate union");
        for (int k = 1; k <= 10; ++k) {
            Density rho_k = Density::indicator(space, pts, static_cast<double>(k) / min_mass);
            ++admissible_checks;
            c.require(is_admissible(space, rho_k, fam),
                      "scaled indicator must stay admissible (k=" + std::to_string(k) + ")");
            c.require(ess_sup(space, rho_k) <= 1.0 / k,
                      "essential supremum must drop below 1/k");
        }
    };

    {
        auto inst = covered_pair_graph();
        check_instance(inst.space, connecting_family(inst.space, inst.x, inst.y), inst.certs);
    }
    for (int i = 0; i < 10 && c.ok; ++i) {
        auto inst = random_strip_graph(rng, true);
        check_instance(inst.space, connecting_family(inst.space, inst.x, inst.y), inst.certs);
    }

    c.require(families >= 11, "need the covered pair plus ten randomized instances");
    c.detail = "families=" + std::to_string(families) +
               " admissibility_checks=" + std::to_string(admissible_checks);
}

// ---------------------------------------------------------------- criterion 7

void criterion_metric_axioms(Criterion& c) {
    std::size_t spaces = 0, checks = 0, infinite_instances = 0;

    auto check_space = [&](const Space& space, std::span<const NullSetCertificate> certs,
                           const ConnectOptions& opts, bool expect_infinite) {
        auto report = check_metric_axioms(space, certs, opts);
        ++spaces;
        checks += report.checks_run;
        if (expect_infinite) ++infinite_instances;
        c.require(report.passed(),
                  report.violations.empty() ? "" : report.violations.front());
    };

    ConnectOptions plain;
    check_space(unit_path_graph(), {}, plain, false);
    check_space(cycle_graph(6), {}, plain, false);
    check_space(sierpinski_gasket(2), {}, plain, false);
    check_space(sierpinski_gasket(3), {}, plain, false);

    {
        auto inst = two_route_instance();
        CurveFamily pool(inst.space, inst.curves, "pool");
        ConnectOptions opts;
        opts.pool = &pool;
        check_space(inst.space, inst.certs, opts, true);  // off-pool pairs are +inf
    }
    {
        auto inst = covered_pair_graph();
        check_space(inst.space, inst.certs, plain, true);
    }
    {
        auto split = Space::make_graph({"a", "b", "c", "d"},
                                       {{0, 1, 1.0}, {2, 3, 1.0}}, {1, 1, 1, 1});
        check_space(split, {}, plain, true);
    }
    std::mt19937 rng(707);
    for (int i = 0; i < 10 && c.ok; ++i) {
        auto inst = random_strip_graph(rng);
        check_space(inst.space, inst.certs, plain, false);
    }
    // Exhaustive unit graphs on up to four vertices.
    for (std::size_t n = 2; n <= 4 && c.ok; ++n) {
        std::vector<std::string> ids;
        for (std::size_t i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
        for (auto& edges : connected_unit_edge_sets(n)) {
            auto g = Space::make_graph(ids, edges, std::vector<double>(n, 1.0));
            check_space(g, {}, plain, false);
            if (!c.ok) break;
        }
    }

    c.require(infinite_instances >= 3, "need instances with infinite essential distances");
    c.detail = "spaces=" + std::to_string(spaces) + " checks=" + std::to_string(checks);
}

// ---------------------------------------------------------------- criterion 8

void criterion_two_routes_agree(Criterion& c) {
    std::size_t pairs = 0;
    double worst = 0.0;

    auto check_pair = [&](const Space& space, std::size_t x, std::size_t y,
                          std::span<const NullSetCertificate> certs,
                          const ConnectOptions& opts) {
        auto pair = essential_distance_pair(space, x, y, certs, opts);
        ++pairs;
        c.require(nearly_equal_extended(pair.essential, pair.null_set_supremum, 1e-9),
                  "route disagreement at (" + space.point_id(x) + ", " + space.point_id(y) +
                      "): " + format_extended(pair.essential) + " vs " +
                      format_extended(pair.null_set_supremum));
        if (std::isfinite(pair.essential) && std::isfinite(pair.null_set_supremum))
            worst = std::max(worst, std::fabs(pair.essential - pair.null_set_supremum) /
                                        std::max(1.0, pair.essential));
    };

    auto check_all_pairs = [&](const Space& space,
                               std::span<const NullSetCertificate> certs,
                               const ConnectOptions& opts) {
        for (std::size_t x = 0; x < space.point_count() && c.ok; ++x)
            for (std::size_t y = x + 1; y < space.point_count() && c.ok; ++y)
                check_pair(space, x, y, certs, opts);
    };

    // The flagship case: both routes exceed the base shortest-path distance.
    {
        auto inst = two_route_instance();
        CurveFamily pool(inst.space, inst.curves, "pool");
        ConnectOptions opts;
        opts.pool = &pool;
        auto pair = essential_distance_pair(inst.space, inst.x, inst.y, inst.certs, opts);
        ++pairs;
        c.require(pair.essential > pair.base_distance + 0.5 &&
                      pair.null_set_supremum > pair.base_distance + 0.5,
                  "both routes must exceed the base distance here");
        c.require(nearly_equal_extended(pair.essential, pair.null_set_supremum, 1e-9),
                  "two-route values must agree");
        c.require(pair.witnessing_null_set.has_value() && pair.witnessing_curve.has_value(),
                  "finite sup must carry witnesses");
    }
    std::mt19937 rng(808);
    for (int i = 0; i < 10 && c.ok; ++i) {
        auto inst = random_two_route_instance(rng);
        CurveFamily pool(inst.space, inst.curves, "pool");
        ConnectOptions opts;
        opts.pool = &pool;
        check_pair(inst.space, inst.x, inst.y, inst.certs, opts);
    }
    ConnectOptions plain;
    for (int i = 0; i < 15 && c.ok; ++i) {
        auto inst = random_strip_graph(rng);
        std::vector<NullSetCertificate> certs = inst.certs;
        check_all_pairs(inst.space, certs, plain);
    }
    {
        auto inst = covered_pair_graph();
        check_all_pairs(inst.space, inst.certs, plain);
    }
    {
        auto split = Space::make_graph({"a", "b", "c", "d"},
                                       {{0, 1, 1.0}, {2, 3, 1.0}}, {1, 1, 1, 1});
        check_all_pairs(split, {}, plain);
    }
    check_all_pairs(cycle_graph(6), {}, plain);
    check_all_pairs(sierpinski_gasket(2), {}, plain);

    c.detail = "pairs=" + std::to_string(pairs) + " worst=" + format_extended(worst, 3);
}

// ---------------------------------------------------------------- criterion 9

void criterion_curve_properties(Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(909);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::size_t curves_checked = 0;

    auto check_curve = [&](const Space& space, const Curve& curve) {
        LengthComputation lc;
        try {
            lc = compute_length(space, curve);
        } catch (const Error&) {
            return;  // constant draw; not a counted curve
        }
        ++curves_checked;

        for (std::size_t i = 1; i < lc.refinement_history.size(); ++i)
            c.require(lc.refinement_history[i] >= lc.refinement_history[i - 1],
                      "refinement history must never decrease");
        for (std::size_t i = 1; i < lc.profile.cumulative.size(); ++i)
            c.require(lc.profile.cumulative[i] >= lc.profile.cumulative[i - 1],
                      "cumulative length must be monotone");

        auto unit = arc_length_parametrize(space, curve);
        const auto& p = unit.params();
        const auto& nodes = unit.nodes();
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            const double chord = node_distance(space, unit, nodes[i], nodes[i + 1]);
            c.require(chord <= (p[i + 1] - p[i]) * (1.0 + 1e-9),
                      "arc-length parametrization must be 1-Lipschitz");
        }
        c.require(same_curve(unit, arc_length_parametrize(space, unit)),
                  "arc-length parametrization must be idempotent");

        if (curve.sample_count() >= 3) {
            std::uniform_int_distribution<std::size_t> cut(1, curve.sample_count() - 2);
            const std::size_t k = cut(rng);
            try {
                const double lh = compute_length(space, subcurve(curve, 0, k)).length;
                const double lt =
                    compute_length(space, subcurve(curve, k, curve.sample_count() - 1)).length;
                c.require(std::fabs(lh + lt - lc.length) <= 1e-9 * std::max(1.0, lc.length),
                          "length must add over a split");
                auto joined = concatenate(space, subcurve(curve, 0, k),
                                          subcurve(curve, k, curve.sample_count() - 1));
                const double lj = compute_length(space, joined).length;
                c.require(std::fabs(lj - lc.length) <= 1e-9 * std::max(1.0, lc.length),
                          "length must add over concatenation");
            } catch (const Error&) {
                // The cut isolated a pause: one half is constant and carries
                // no length; additivity is vacuous for this draw.
            }
        }
        const double lr = compute_length(space, reverse(curve)).length;
        c.require(std::fabs(lr - lc.length) <= 1e-9 * std::max(1.0, lc.length),
                  "reversal must preserve length");
    };

    // Random planar polylines, with occasional pauses.
    auto plane = Space::make_embedding({"o"}, {{0, 0}}, {1});
    for (int iter = 0; iter < 300 && c.ok; ++iter) {
        std::uniform_int_distribution<std::size_t> count(3, 12);
        const std::size_t k = count(rng);
        std::vector<double> params;
        std::vector<CurveNode> nodes;
        for (std::size_t i = 0; i < k; ++i) {
            params.push_back(static_cast<double>(i));
            if (i > 0 && (rng() & 7U) == 0)
                nodes.push_back(nodes.back());  // pause
            else
                nodes.push_back(CurveNode::at_position({coord(rng), coord(rng)}));
        }
        check_curve(plane, Curve(Interpolation::GeodesicSegment, params, nodes));
    }
    // Random walks on random graphs.
    for (int iter = 0; iter < 150 && c.ok; ++iter) {
        const std::size_t n = 4 + static_cast<std::size_t>(iter % 4);
        auto g = random_connected_graph(rng, n, iter % 2 == 0, 2);
        std::vector<std::vector<std::size_t>> adj(n);
        for (const auto& e : g.edges()) {
            adj[e.from].push_back(e.to);
            adj[e.to].push_back(e.from);
        }
        std::uniform_int_distribution<std::size_t> startv(0, n - 1);
        std::size_t v = startv(rng);
        std::vector<double> params{0.0};
        std::vector<CurveNode> nodes{CurveNode::at_point(v)};
        std::uniform_int_distribution<std::size_t> hops(2, 8);
        const std::size_t m = hops(rng);
        for (std::size_t h = 0; h < m; ++h) {
            std::uniform_int_distribution<std::size_t> pick(0, adj[v].size() - 1);
            v = adj[v][pick(rng)];
            params.push_back(static_cast<double>(h + 1));
            nodes.push_back(CurveNode::at_point(v));
        }
        check_curve(g, Curve(Interpolation::EdgeWalk, params, nodes));
    }
    // Chains through random metric matrices (Euclidean-induced, so valid).
    for (int iter = 0; iter < 60 && c.ok; ++iter) {
        const std::size_t n = 4 + static_cast<std::size_t>(iter % 3);
        std::vector<std::vector<double>> pts(n);
        for (auto& p : pts) p = {coord(rng), coord(rng)};
        std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = std::hypot(pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]);
        std::vector<std::string> ids;
        for (std::size_t i = 0; i < n; ++i) ids.push_back("m" + std::to_string(i));
        Space ms;
        try {
            ms = Space::make_distance_matrix(ids, m, std::vector<double>(n, 1.0));
        } catch (const SchemaError&) {
            continue;  // coincident points drew a degenerate matrix
        }
        std::vector<double> params;
        std::vector<CurveNode> nodes;
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        const std::size_t hops = 3 + (iter % 4);
        for (std::size_t h = 0; h <= hops; ++h) {
            params.push_back(static_cast<double>(h));
            nodes.push_back(CurveNode::at_point(pick(rng)));
        }
        check_curve(ms, Curve(Interpolation::DiscreteChain, params, nodes));
    }

    const double secs = elapsed_seconds(start);
    c.require(curves_checked >= 500,
              "need at least 500 curves, got " + std::to_string(curves_checked));
    c.require(secs < 20.0, "runtime " + std::to_string(secs) + "s exceeds 20s");
    c.detail = "curves=" + std::to_string(curves_checked) +
               " time=" + std::to_string(secs).substr(0, 4) + "s";
}

}  // namespace

int main() {
    run("1 modulus and essential length are reciprocal on randomized instances",
        criterion_reciprocity);
    run("2 supremum modulus: formula agrees with the minimax program",
        criterion_sup_formula_vs_program);
    run("3 graph duality: modulus equals reciprocal shortest-path distance",
        criterion_graph_duality);
    run("4 staircase approximant: length and preimage masses", criterion_staircase);
    run("5 modulus laws hold across randomized family pairs and chains",
        criterion_law_suite);
    run("6 certified exceptional families: zero modulus with small admissible densities",
        criterion_certified_exceptional);
    run("7 essential distance satisfies the metric axioms exhaustively",
        criterion_metric_axioms);
    run("8 null-set supremum equals the essential distance everywhere",
        criterion_two_routes_agree);
    run("9 curve engine properties on five hundred generated curves",
        criterion_curve_properties);

    if (failures == 0) std::printf("acceptance: all 9 criteria passed\n");
    else std::printf("acceptance: %d criterion(s) failed\n", failures);
    return failures;
}
