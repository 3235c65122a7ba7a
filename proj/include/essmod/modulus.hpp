#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "essmod/curve.hpp"
#include "essmod/space.hpp"

namespace essmod {

struct FamilyMember {
    Curve curve;
    bool rectifiable = true;
    double length = 0.0;       // +inf for non-rectifiable members
    double lower_bound = 0.0;  // best length bound when non-rectifiable
};

// A finite family of curves over one space. Lengths are computed at
// construction; curves whose refinement exceeds the segment cap are caught
// and flagged non-rectifiable, as are curves flagged up front.
class CurveFamily {
public:
    CurveFamily(const Space& space, std::vector<Curve> curves, std::string name = "",
                double tol = 1e-9);
    static CurveFamily with_flags(const Space& space, std::vector<Curve> curves,
                                  const std::vector<bool>& non_rectifiable,
                                  std::string name = "", double tol = 1e-9);

    const std::vector<FamilyMember>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    std::size_t rectifiable_count() const { return rectifiable_count_; }
    const std::string& name() const { return name_; }
    const std::string& space_label() const { return space_label_; }

private:
    CurveFamily() = default;
    std::vector<FamilyMember> members_;
    std::size_t rectifiable_count_ = 0;
    std::string name_;
    std::string space_label_;
};

// Union with value-level deduplication (same interpolation, parameters, nodes).
CurveFamily family_union(const Space& space, const CurveFamily& a, const CurveFamily& b,
                         std::string name = "");

enum class ModulusMethod { Formula, MinimaxLp, BruteForce };

struct ModulusResult {
    double value = 0.0;
    std::optional<Density> extremal_density;
    std::optional<NullSetCertificate> certificate;
    ModulusMethod method = ModulusMethod::Formula;
    // The critical length scale behind the value (reciprocal pair).
    double critical_length = 0.0;
    // Independent cross-check value, when one was run.
    std::optional<double> cross_check_value;
};

struct ExceptionalityResult {
    bool exceptional = false;
    std::optional<NullSetCertificate> witness;
};

struct ModulusOptions {
    double tol = 1e-9;
    bool lp_cross_check = true;
    std::size_t lp_max_curves = 64;
    double lp_agreement_rel = 1e-6;
};

// True iff line_integral(curve, rho) >= 1 - tol for every rectifiable member;
// non-rectifiable members are satisfied automatically exactly when rho has a
// positive lower bound on the whole space.
bool is_admissible(const Space& space, const Density& rho, const CurveFamily& fam,
                   double tol = 1e-9);

// Infimum of length over rectifiable members; +inf when there are none.
double inf_length(const CurveFamily& fam);

// Supremum-based modulus: 1 / inf_length with the conventions 1/0 = +inf
// and 1/inf = 0. The extremal density is the constant 1/inf_length whenever
// the infimum is finite and positive. Finite families sample the regime of
// interest: a family containing arbitrarily short curves is represented by
// its finite truncation, whose value 1/min-length grows without bound.
ModulusResult mod_sup(const Space& space, const CurveFamily& fam,
                      const ModulusOptions& options = {});

// Same value computed by the direct minimax linear program (all points
// capped by the auxiliary bound, every rectifiable member constrained).
ModulusResult mod_sup_via_lp(const Space& space, const CurveFamily& fam,
                             const ModulusOptions& options = {});

// Family-level exceptionality under the provided certificates: true when a
// single certificate (or, failing that, the union of all of them, which is
// again a null set) gives every rectifiable member positive length in it.
// Empty families and families of non-rectifiable curves are exceptional.
ExceptionalityResult is_exceptional(const Space& space, const CurveFamily& fam,
                                    std::span<const NullSetCertificate> certs,
                                    double tol = 1e-9);

// Essential length: the supremum of thresholds a such that the subfamily of
// curves shorter than a is exceptional under the certificates. For finite
// families this is the minimum length over members NOT covered by the
// certificate union, and +inf when every member is covered. Always at least
// inf_length.
double ess_length(const Space& space, const CurveFamily& fam,
                  std::span<const NullSetCertificate> certs, double tol = 1e-9);

// Essential-supremum modulus: 1 / ess_length, certificates validated by
// validate_null_set. The extremal density is the constant reciprocal when
// the essential length is finite; the certificate reports the null set that
// covers the exceptional subfamily. Families small enough per the options
// are independently cross-checked against the minimax LP and the two values
// must agree to lp_agreement_rel.
ModulusResult mod_infinity(const Space& space, const CurveFamily& fam,
                           std::span<const NullSetCertificate> certs = {},
                           const ModulusOptions& options = {});

// The LP route alone: minimize the bound t subject to ρ_i <= t on every
// point outside the certificate union, ρ free (>= 0) on certified points,
// and line_integral(curve, ρ) >= 1 for every rectifiable member not covered
// by the union.
ModulusResult mod_infinity_via_lp(const Space& space, const CurveFamily& fam,
                                  std::span<const NullSetCertificate> certs = {},
                                  const ModulusOptions& options = {});

struct LawViolation {
    std::string law;
    std::string detail;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct LawReport {
    std::vector<LawViolation> violations;
    std::size_t checks_run = 0;
    bool passed() const { return violations.empty(); }
};

// Verifies, on the given families, every law instance whose premise holds:
//   monotonicity        Mod(F1) <= Mod(F2) whenever F1 is a subfamily of F2
//   subadditivity       Mod(F1 u F2) <= Mod(F1) + Mod(F2) for every pair
//   continuity below    along a detected nested chain the values are
//                       nondecreasing and the last equals Mod of the union
//   shorter subcurves   Mod(F1) <= Mod(F2) whenever every member of F1 has
//                       a subcurve in F2
// Premises are detected by value (curve equality / contiguous subsampling).
LawReport check_modulus_laws(const Space& space, std::span<const CurveFamily> families,
                             std::span<const NullSetCertificate> certs = {},
                             const ModulusOptions& options = {});

}  // namespace essmod
