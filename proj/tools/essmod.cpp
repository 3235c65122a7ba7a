#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "essmod/essential_metric.hpp"
#include "essmod/extended_real.hpp"
#include "essmod/fixtures.hpp"
#include "essmod/io.hpp"
#include "essmod/modulus.hpp"
#include "essmod/verify.hpp"

namespace {

using namespace essmod;

struct RunConfig {
    std::string space_path;
    std::string curves_path;
    std::string nullsets_path;
    double tol = 1e-9;
    std::size_t max_hops = 0;
    std::string format = "text";
    std::string out_path;
};

// Line-oriented report writer. Structured mode is strict key=value with a
// leading schema line; text mode uses the same lines plus comment headers.
class Report {
public:
    Report(std::ostream& os, bool structured) : os_(os), structured_(structured) {
        if (structured_) os_ << "schema=1\n";
    }
    void kv(const std::string& key, const std::string& value) {
        os_ << key << '=' << value << '\n';
    }
    void kv(const std::string& key, double value) { kv(key, format_extended(value)); }
    void kv(const std::string& key, std::size_t value) { kv(key, std::to_string(value)); }
    void comment(const std::string& text) {
        if (!structured_) os_ << "# " << text << '\n';
    }
    void column_row(const std::string& a, const std::string& b) {
        if (!structured_) os_ << a << ' ' << b << '\n';
    }
    bool structured() const { return structured_; }

private:
    std::ostream& os_;
    bool structured_;
};

ModulusOptions modulus_options(const RunConfig& cfg) {
    ModulusOptions opt;
    opt.tol = cfg.tol;
    return opt;
}

std::vector<NullSetCertificate> maybe_null_sets(const RunConfig& cfg, const Space& space) {
    if (cfg.nullsets_path.empty()) return {};
    return load_null_sets(cfg.nullsets_path, space);
}

CurveFamily family_from_files(const RunConfig& cfg, const LoadedSpace& loaded) {
    LoadedCurves lc = load_curves(cfg.curves_path, loaded, cfg.max_hops);
    std::string name = lc.name.empty() ? "curves" : lc.name;
    return CurveFamily::with_flags(loaded.space, std::move(lc.curves), lc.non_rectifiable,
                                   std::move(name), cfg.tol);
}

void emit_certificate(Report& report, const std::string& prefix, const Space& space,
                      const NullSetCertificate& cert) {
    report.kv(prefix + ".name", cert.name());
    report.kv(prefix + ".size", cert.size());
    std::string points;
    for (std::size_t p : cert.points()) {
        if (!points.empty()) points += ',';
        points += space.point_id(p);
    }
    report.kv(prefix + ".points", points);
}

void emit_modulus_result(Report& report, const Space& space, const ModulusResult& r) {
    report.kv("modulus", r.value);
    report.kv("critical_length", r.critical_length);
    report.kv("method", r.method == ModulusMethod::Formula ? "formula" : "program");
    if (r.cross_check_value) report.kv("cross_check", *r.cross_check_value);
    if (r.extremal_density) {
        double lo = kInfinity, hi = 0.0;
        for (double v : r.extremal_density->values()) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        report.kv("extremal_density.min", lo);
        report.kv("extremal_density.max", hi);
    }
    if (r.certificate) emit_certificate(report, "certificate", space, *r.certificate);
}

int run_length(const RunConfig& cfg, Report& report) {
    const LoadedSpace loaded = load_space(cfg.space_path);
    const LoadedCurves lc = load_curves(cfg.curves_path, loaded, cfg.max_hops);
    report.kv("command", "length");
    report.kv("space", loaded.space.label());
    report.kv("curve_count", lc.curves.size());
    for (std::size_t i = 0; i < lc.curves.size(); ++i) {
        const std::string prefix = "curve." + std::to_string(i);
        const Curve& curve = lc.curves[i];
        report.kv(prefix + ".name", curve.name());
        report.kv(prefix + ".samples", curve.sample_count());
        if (lc.non_rectifiable[i]) {
            report.kv(prefix + ".rectifiable", "false");
            continue;
        }
        const LengthComputation r = compute_length(loaded.space, curve, cfg.tol);
        report.kv(prefix + ".length", r.length);
        for (std::size_t j = 0; j < r.refinement_history.size(); ++j)
            report.kv(prefix + ".refinement." + std::to_string(j), r.refinement_history[j]);
        // Length profile, summarized to at most 33 evenly spaced samples.
        const std::size_t m = r.profile.breakpoints.size();
        const std::size_t samples = std::min<std::size_t>(m, 33);
        report.kv(prefix + ".profile.samples", samples);
        for (std::size_t j = 0; j < samples; ++j) {
            const std::size_t k = samples == 1 ? 0 : j * (m - 1) / (samples - 1);
            report.kv(prefix + ".profile." + std::to_string(j) + ".t",
                      r.profile.breakpoints[k]);
            report.kv(prefix + ".profile." + std::to_string(j) + ".s",
                      r.profile.cumulative[k]);
        }
        report.comment("refinement history for " + curve.name() + " (round length)");
        for (std::size_t j = 0; j < r.refinement_history.size(); ++j)
            report.column_row(std::to_string(j), format_extended(r.refinement_history[j]));
    }
    return 0;
}

int run_modsup(const RunConfig& cfg, Report& report) {
    const LoadedSpace loaded = load_space(cfg.space_path);
    const CurveFamily fam = family_from_files(cfg, loaded);
    report.kv("command", "modsup");
    report.kv("space", loaded.space.label());
    report.kv("curve_count", fam.size());
    ModulusResult r = mod_sup(loaded.space, fam, modulus_options(cfg));
    if (fam.size() <= 64 && fam.rectifiable_count() == fam.size()) {
        const ModulusResult lp = mod_sup_via_lp(loaded.space, fam, modulus_options(cfg));
        if (!nearly_equal_extended(r.value, lp.value, 1e-6))
            throw ConsistencyError("supremum modulus formula and program disagree: " +
                                   format_extended(r.value) + " vs " +
                                   format_extended(lp.value));
        r.cross_check_value = lp.value;
    }
    emit_modulus_result(report, loaded.space, r);
    return 0;
}

int run_modinf(const RunConfig& cfg, Report& report) {
    const LoadedSpace loaded = load_space(cfg.space_path);
    const CurveFamily fam = family_from_files(cfg, loaded);
    const std::vector<NullSetCertificate> certs = maybe_null_sets(cfg, loaded.space);
    report.kv("command", "modinf");
    report.kv("space", loaded.space.label());
    report.kv("curve_count", fam.size());
    const ModulusResult r = mod_infinity(loaded.space, fam, certs, modulus_options(cfg));
    emit_modulus_result(report, loaded.space, r);
    return 0;
}

int run_essl(const RunConfig& cfg, Report& report) {
    const LoadedSpace loaded = load_space(cfg.space_path);
    const CurveFamily fam = family_from_files(cfg, loaded);
    const std::vector<NullSetCertificate> certs = maybe_null_sets(cfg, loaded.space);
    report.kv("command", "essl");
    report.kv("space", loaded.space.label());
    report.kv("curve_count", fam.size());
    report.kv("certificate_count", certs.size());
    for (std::size_t i = 0; i < certs.size(); ++i)
        emit_certificate(report, "certificate." + std::to_string(i), loaded.space, certs[i]);
    report.kv("essential_length", ess_length(loaded.space, fam, certs, cfg.tol));
    report.kv("infimum_length", inf_length(fam));
    return 0;
}

int run_essmetric(const RunConfig& cfg, Report& report) {
    const LoadedSpace loaded = load_space(cfg.space_path);
    const Space& space = loaded.space;
    if (space.point_count() > 128)
        throw Error("pairwise matrix output is limited to 128 points");
    const std::vector<NullSetCertificate> certs = maybe_null_sets(cfg, space);

    std::optional<CurveFamily> pool;
    if (!cfg.curves_path.empty()) {
        LoadedCurves lc = load_curves(cfg.curves_path, loaded, cfg.max_hops);
        pool.emplace(CurveFamily::with_flags(space, std::move(lc.curves), lc.non_rectifiable,
                                             lc.name.empty() ? "pool" : lc.name, cfg.tol));
    }
    ConnectOptions opts;
    opts.max_hops = cfg.max_hops;
    opts.tol = cfg.tol;
    if (pool) opts.pool = &*pool;

    report.kv("command", "essmetric");
    report.kv("space", space.label());
    const std::size_t n = space.point_count();
    report.kv("point_count", n);
    for (std::size_t i = 0; i < n; ++i)
        report.kv("point." + std::to_string(i), space.point_id(i));
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            d[i][j] = d[j][i] = essential_distance(space, i, j, certs, opts);
    for (std::size_t i = 0; i < n; ++i) {
        if (report.structured()) {
            for (std::size_t j = 0; j < n; ++j)
                report.kv("dess." + std::to_string(i) + "." + std::to_string(j), d[i][j]);
        } else {
            std::string row = space.point_id(i) + ":";
            for (std::size_t j = 0; j < n; ++j) row += " " + format_extended(d[i][j], 9);
            report.kv("row." + std::to_string(i), row);
        }
    }

    if (loaded.generator && loaded.generator->kind == "sierpinski") {
        report.comment("gasket level versus corner-to-corner essential distance");
        for (std::size_t lvl = 0; lvl <= loaded.generator->level; ++lvl) {
            const Space g = sierpinski_gasket(lvl);
            const double v = essential_distance(g, 0, 1, {}, {});
            report.kv("gasket." + std::to_string(lvl), v);
            report.column_row(std::to_string(lvl), format_extended(v));
        }
    }
    return 0;
}

int run_verify(Report& report) {
    const VerifyReport result = run_verification();
    report.kv("command", "verify");
    for (const auto& check : result.checks) {
        report.kv("check." + check.name, check.passed ? "PASS" : "FAIL");
        if (!check.detail.empty()) report.kv("check." + check.name + ".detail", check.detail);
    }
    report.kv("verify", result.passed() ? "PASS" : "FAIL");
    return result.passed() ? 0 : 1;
}

int dispatch(const std::string& command, const RunConfig& cfg) {
    std::ofstream file;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file) throw Error("cannot open output file " + cfg.out_path);
    }
    Report report(cfg.out_path.empty() ? std::cout : file, cfg.format == "structured");
    if (command == "length") return run_length(cfg, report);
    if (command == "modsup") return run_modsup(cfg, report);
    if (command == "modinf") return run_modinf(cfg, report);
    if (command == "essl") return run_essl(cfg, report);
    if (command == "essmetric") return run_essmetric(cfg, report);
    return run_verify(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"curve length, modulus, and essential-metric toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub, bool space_required, bool curves_required) {
        auto* space = sub->add_option("--space", cfg.space_path, "space file (json)");
        if (space_required) space->required();
        auto* curves = sub->add_option("--curves", cfg.curves_path, "curve-family file (json)");
        if (curves_required) curves->required();
        sub->add_option("--nullsets", cfg.nullsets_path, "null-set certificate file (json)");
        sub->add_option("--tol", cfg.tol, "relative tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-hops", cfg.max_hops,
                        "edge cap for generated connecting paths (0 = simple paths only)");
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "structured"}));
        sub->add_option("--out", cfg.out_path, "write the report to a file");
    };
    add_common(app.add_subcommand("length", "curve lengths, profiles, refinement history"),
               true, true);
    add_common(app.add_subcommand("modsup", "supremum-based modulus of a curve family"),
               true, true);
    add_common(app.add_subcommand("modinf", "essential-supremum modulus of a curve family"),
               true, true);
    add_common(app.add_subcommand("essl", "essential length of a curve family"), true, true);
    add_common(app.add_subcommand("essmetric", "pairwise essential-distance matrix"), true,
               false);
    add_common(app.add_subcommand("verify", "run the built-in verification suite"), false,
               false);

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        return dispatch(command, cfg);
    } catch (const SchemaError& e) {
        std::cerr << "error (input): " << e.what() << '\n';
        return 2;
    } catch (const IdentifierError& e) {
        std::cerr << "error (input): " << e.what() << '\n';
        return 2;
    } catch (const ConsistencyError& e) {
        std::cerr << "error (consistency): " << e.what() << '\n';
        return 3;
    } catch (const NonRectifiableError& e) {
        std::cerr << "error (numerical cap): " << e.what()
                  << " best_lower_bound=" << format_extended(e.best_lower_bound()) << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
