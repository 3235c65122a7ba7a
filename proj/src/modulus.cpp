#include "essmod/modulus.hpp"

#include <algorithm>
#include <cmath>

#include "essmod/extended_real.hpp"
#include "essmod/simplex.hpp"

namespace essmod {

namespace {

void require_certs_valid(const Space& space, std::span<const NullSetCertificate> certs) {
    for (const auto& c : certs)
        if (!validate_null_set(space, c))
            throw Error("certificate '" + c.name() + "' is not a null set");
}

// Per-member coverage by a point set: positive length in it.
std::vector<bool> coverage_flags(const Space& space, const CurveFamily& fam,
                                 const NullSetCertificate& f, double tol) {
    std::vector<bool> covered(fam.size(), false);
    for (std::size_t i = 0; i < fam.size(); ++i) {
        const FamilyMember& m = fam.members()[i];
        if (!m.rectifiable) continue;
        covered[i] = positive_length_in(space, m.curve, f.points(), tol);
    }
    return covered;
}

// Trapezoidal integral coefficients of a curve: integral(rho) = sum_i c_i rho_i.
std::vector<double> integral_coefficients(const Space& space, const Curve& curve) {
    std::vector<double> coeff(space.point_count(), 0.0);
    std::vector<std::size_t> assigned(curve.sample_count());
    for (std::size_t i = 0; i < curve.sample_count(); ++i)
        assigned[i] = assigned_point(space, curve.nodes()[i]);
    for (std::size_t i = 0; i + 1 < curve.sample_count(); ++i) {
        const double seg = node_distance(space, curve, curve.nodes()[i], curve.nodes()[i + 1]);
        coeff[assigned[i]] += 0.5 * seg;
        coeff[assigned[i + 1]] += 0.5 * seg;
    }
    return coeff;
}

// Shared LP assembly: minimize t subject to rho_i <= t for every point not
// in `free_points`, rho >= 0, and integral(rho) >= 1 for every constrained
// curve. Returns the optimal t and the density.
ModulusResult solve_minimax(const Space& space, const CurveFamily& fam,
                            const std::vector<bool>& constrained,
                            const std::vector<bool>& free_points) {
    const std::size_t n = space.point_count();
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    // Variables: rho_0..rho_{n-1}, then t.
    for (std::size_t i = 0; i < n; ++i) {
        if (free_points[i]) continue;
        std::vector<double> row(n + 1, 0.0);
        row[i] = 1.0;
        row[n] = -1.0;
        a.push_back(std::move(row));
        b.push_back(0.0);
    }
    for (std::size_t k = 0; k < fam.size(); ++k) {
        if (!constrained[k]) continue;
        std::vector<double> coeff = integral_coefficients(space, fam.members()[k].curve);
        std::vector<double> row(n + 1, 0.0);
        for (std::size_t i = 0; i < n; ++i) row[i] = -coeff[i];
        a.push_back(std::move(row));
        b.push_back(-1.0);
    }
    std::vector<double> c(n + 1, 0.0);
    c[n] = -1.0;

    const LpResult lp = solve_lp_max(a, b, c);
    if (lp.status == LpStatus::Infeasible)
        throw ConsistencyError("minimax program infeasible on a finite family");
    if (lp.status == LpStatus::Unbounded)
        throw ConsistencyError("minimax program unbounded");

    ModulusResult result;
    result.method = ModulusMethod::MinimaxLp;
    result.value = -lp.objective;
    if (result.value < 0.0 && result.value > -1e-12) result.value = 0.0;
    result.critical_length = reciprocal_extended(result.value);
    std::vector<double> rho(lp.x.begin(), lp.x.begin() + n);
    for (double& v : rho) v = std::max(v, 0.0);
    result.extremal_density = Density(space, std::move(rho));
    return result;
}

}  // namespace

CurveFamily::CurveFamily(const Space& space, std::vector<Curve> curves, std::string name,
                         double tol)
    : CurveFamily(with_flags(space, std::move(curves),
                             std::vector<bool>(), std::move(name), tol)) {}

CurveFamily CurveFamily::with_flags(const Space& space, std::vector<Curve> curves,
                                    const std::vector<bool>& non_rectifiable,
                                    std::string name, double tol) {
    if (!non_rectifiable.empty() && non_rectifiable.size() != curves.size())
        throw Error("one flag per curve required");
    CurveFamily fam;
    fam.name_ = std::move(name);
    fam.space_label_ = space.label();
    fam.members_.reserve(curves.size());
    for (std::size_t i = 0; i < curves.size(); ++i) {
        FamilyMember m{std::move(curves[i]), true, 0.0, 0.0};
        if (!non_rectifiable.empty() && non_rectifiable[i]) {
            m.rectifiable = false;
            m.length = kInfinity;
            // The raw sample partition still bounds the length from below.
            const auto& nodes = m.curve.nodes();
            for (std::size_t j = 0; j + 1 < nodes.size(); ++j)
                m.lower_bound += node_distance(space, m.curve, nodes[j], nodes[j + 1]);
        } else {
            try {
                m.length = compute_length(space, m.curve, tol).length;
            } catch (const NonRectifiableError& e) {
                m.rectifiable = false;
                m.length = kInfinity;
                m.lower_bound = e.best_lower_bound();
            }
        }
        if (m.rectifiable) ++fam.rectifiable_count_;
        fam.members_.push_back(std::move(m));
    }
    return fam;
}

CurveFamily family_union(const Space& space, const CurveFamily& a, const CurveFamily& b,
                         std::string name) {
    std::vector<Curve> curves;
    std::vector<bool> flags;
    for (const auto& m : a.members()) {
        curves.push_back(m.curve);
        flags.push_back(!m.rectifiable);
    }
    for (const auto& m : b.members()) {
        bool duplicate = false;
        for (const auto& existing : curves)
            if (same_curve(existing, m.curve)) {
                duplicate = true;
                break;
            }
        if (!duplicate) {
            curves.push_back(m.curve);
            flags.push_back(!m.rectifiable);
        }
    }
    if (name.empty()) name = a.name() + "|" + b.name();
    return CurveFamily::with_flags(space, std::move(curves), flags, std::move(name));
}

bool is_admissible(const Space& space, const Density& rho, const CurveFamily& fam,
                   double tol) {
    require_compatible(space, rho);
    if (fam.rectifiable_count() < fam.size() && !(rho.min_value() > 0.0)) return false;
    for (const auto& m : fam.members()) {
        if (!m.rectifiable) continue;
        if (line_integral(space, m.curve, rho) < 1.0 - tol) return false;
    }
    return true;
}

double inf_length(const CurveFamily& fam) {
    double best = kInfinity;
    for (const auto& m : fam.members())
        if (m.rectifiable) best = std::min(best, m.length);
    return best;
}

ModulusResult mod_sup(const Space& space, const CurveFamily& fam,
                      const ModulusOptions& options) {
    (void)options;
    ModulusResult result;
    result.method = ModulusMethod::Formula;
    const double len = inf_length(fam);
    result.critical_length = len;
    result.value = reciprocal_extended(len);
    if (len > 0.0 && !is_infinite(len))
        result.extremal_density = Density::constant(space, 1.0 / len);
    return result;
}

ModulusResult mod_sup_via_lp(const Space& space, const CurveFamily& fam,
                             const ModulusOptions& options) {
    (void)options;
    std::vector<bool> constrained(fam.size(), false);
    for (std::size_t i = 0; i < fam.size(); ++i)
        constrained[i] = fam.members()[i].rectifiable;
    std::vector<bool> free_points(space.point_count(), false);
    return solve_minimax(space, fam, constrained, free_points);
}

ExceptionalityResult is_exceptional(const Space& space, const CurveFamily& fam,
                                    std::span<const NullSetCertificate> certs,
                                    double tol) {
    require_certs_valid(space, certs);
    if (fam.empty()) return {true, NullSetCertificate()};
    if (fam.rectifiable_count() == 0) return {true, std::nullopt};

    auto covers_all = [&](const NullSetCertificate& c) {
        const std::vector<bool> covered = coverage_flags(space, fam, c, tol);
        for (std::size_t i = 0; i < fam.size(); ++i)
            if (fam.members()[i].rectifiable && !covered[i]) return false;
        return true;
    };
    for (const auto& c : certs)
        if (covers_all(c)) return {true, c};
    if (certs.size() > 1) {
        // A finite union of null sets is again null, so it is a legitimate
        // synthesized witness when no single certificate suffices.
        NullSetCertificate u = NullSetCertificate::united(space, certs);
        if (covers_all(u)) return {true, u};
    }
    return {false, std::nullopt};
}

double ess_length(const Space& space, const CurveFamily& fam,
                  std::span<const NullSetCertificate> certs, double tol) {
    require_certs_valid(space, certs);
    const NullSetCertificate cover = NullSetCertificate::united(space, certs);
    std::vector<bool> covered = coverage_flags(space, fam, cover, tol);
    // The subfamily of curves shorter than a is exceptional for every a up
    // to the shortest uncovered length, and for no larger a.
    double threshold = kInfinity;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        const FamilyMember& m = fam.members()[i];
        if (m.rectifiable && !covered[i]) threshold = std::min(threshold, m.length);
    }
    return threshold;
}

ModulusResult mod_infinity(const Space& space, const CurveFamily& fam,
                           std::span<const NullSetCertificate> certs,
                           const ModulusOptions& options) {
    require_certs_valid(space, certs);
    ModulusResult result;
    result.method = ModulusMethod::Formula;
    const double essl = ess_length(space, fam, certs, options.tol);
    result.critical_length = essl;
    result.value = reciprocal_extended(essl);
    if (essl > 0.0 && !is_infinite(essl))
        result.extremal_density = Density::constant(space, 1.0 / essl);

    // Witness reporting: the certificate covering the exceptional subfamily.
    const ExceptionalityResult exc = is_exceptional(space, fam, certs, options.tol);
    if (exc.exceptional) {
        result.certificate = exc.witness;
    } else if (!certs.empty()) {
        const NullSetCertificate cover = NullSetCertificate::united(space, certs);
        const std::vector<bool> covered = coverage_flags(space, fam, cover, options.tol);
        if (std::find(covered.begin(), covered.end(), true) != covered.end())
            result.certificate = cover;
    }

    if (options.lp_cross_check && fam.rectifiable_count() <= options.lp_max_curves) {
        const ModulusResult lp = mod_infinity_via_lp(space, fam, certs, options);
        result.cross_check_value = lp.value;
        if (!nearly_equal_extended(result.value, lp.value, options.lp_agreement_rel))
            throw ConsistencyError(
                "formula and minimax LP disagree: " + format_extended(result.value) +
                " vs " + format_extended(lp.value));
    }
    return result;
}

ModulusResult mod_infinity_via_lp(const Space& space, const CurveFamily& fam,
                                  std::span<const NullSetCertificate> certs,
                                  const ModulusOptions& options) {
    require_certs_valid(space, certs);
    const NullSetCertificate cover = NullSetCertificate::united(space, certs);
    const std::vector<bool> covered = coverage_flags(space, fam, cover, options.tol);
    std::vector<bool> constrained(fam.size(), false);
    for (std::size_t i = 0; i < fam.size(); ++i)
        constrained[i] = fam.members()[i].rectifiable && !covered[i];
    // Certified points cost nothing: the essential supremum ignores them,
    // so the program may use them freely. Uncertified points stay capped.
    std::vector<bool> free_points(space.point_count(), false);
    for (std::size_t p : cover.points()) free_points[p] = true;
    ModulusResult result = solve_minimax(space, fam, constrained, free_points);
    if (!cover.empty()) result.certificate = cover;
    return result;
}

LawReport check_modulus_laws(const Space& space, std::span<const CurveFamily> families,
                             std::span<const NullSetCertificate> certs,
                             const ModulusOptions& options) {
    LawReport report;
    const double tol = options.lp_agreement_rel;

    std::vector<double> values;
    values.reserve(families.size());
    for (const auto& fam : families)
        values.push_back(mod_infinity(space, fam, certs, options).value);

    auto is_subfamily = [&](const CurveFamily& inner, const CurveFamily& outer) {
        for (const auto& mi : inner.members()) {
            bool found = false;
            for (const auto& mo : outer.members())
                if (same_curve(mi.curve, mo.curve)) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
        return true;
    };
    auto is_contiguous_subsample = [&](const Curve& small, const Curve& big) {
        const std::size_t m = small.sample_count(), n = big.sample_count();
        if (m > n) return false;
        for (std::size_t start = 0; start + m <= n; ++start) {
            bool match = true;
            for (std::size_t i = 0; i < m && match; ++i) {
                if (big.params()[start + i] != small.params()[i] ||
                    !same_node(big.nodes()[start + i], small.nodes()[i]))
                    match = false;
            }
            if (match) return true;
        }
        return false;
    };
    auto dominated_by_subcurves = [&](const CurveFamily& fam1, const CurveFamily& fam2) {
        for (const auto& m1 : fam1.members()) {
            bool found = false;
            for (const auto& m2 : fam2.members())
                if (is_contiguous_subsample(m2.curve, m1.curve)) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
        return true;
    };

    const std::size_t k = families.size();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            if (is_subfamily(families[i], families[j])) {
                ++report.checks_run;
                if (values[i] > values[j] + tol * std::max(1.0, values[j]) &&
                    !(is_infinite(values[i]) && is_infinite(values[j])))
                    report.violations.push_back({"monotonicity",
                                                 families[i].name() + " within " +
                                                     families[j].name(),
                                                 values[i], values[j]});
            }
            if (dominated_by_subcurves(families[i], families[j])) {
                ++report.checks_run;
                if (values[i] > values[j] + tol * std::max(1.0, values[j]) &&
                    !(is_infinite(values[i]) && is_infinite(values[j])))
                    report.violations.push_back({"shorter-subcurves",
                                                 families[j].name() + " refines " +
                                                     families[i].name(),
                                                 values[i], values[j]});
            }
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const CurveFamily u = family_union(space, families[i], families[j]);
            const double vu = mod_infinity(space, u, certs, options).value;
            ++report.checks_run;
            const double bound = values[i] + values[j];
            if (vu > bound + tol * std::max(1.0, bound) &&
                !(is_infinite(vu) && is_infinite(bound)))
                report.violations.push_back({"subadditivity",
                                             families[i].name() + " with " +
                                                 families[j].name(),
                                             vu, bound});
        }
    }
    // Continuity from below along the presented order, when it forms a chain.
    bool chain = k >= 2;
    for (std::size_t i = 0; i + 1 < k && chain; ++i)
        chain = is_subfamily(families[i], families[i + 1]);
    if (chain) {
        ++report.checks_run;
        for (std::size_t i = 0; i + 1 < k; ++i) {
            if (values[i] > values[i + 1] + tol * std::max(1.0, values[i + 1]) &&
                !(is_infinite(values[i]) && is_infinite(values[i + 1]))) {
                report.violations.push_back({"continuity-from-below",
                                             "chain values must be nondecreasing",
                                             values[i], values[i + 1]});
                break;
            }
        }
        CurveFamily u = families[0];
        for (std::size_t i = 1; i < k; ++i) u = family_union(space, u, families[i]);
        const double vu = mod_infinity(space, u, certs, options).value;
        if (!nearly_equal_extended(vu, values[k - 1], tol))
            report.violations.push_back({"continuity-from-below",
                                         "limit value must equal the union's",
                                         values[k - 1], vu});
    }
    return report;
}

}  // namespace essmod
