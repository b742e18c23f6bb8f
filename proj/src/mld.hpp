#pragma once

#include "multideg.hpp"
#include "symspace.hpp"

namespace gmld {

// Likelihood problem: critical points of log F(x) - u(x) on the cone over X.
struct MLProblem {
    VarietySpec X;
    RatFn F;
    RingP dual;
};

MLProblem make_ml_problem(VarietySpec X, RatFn F, RingP dual, Budget* budget = nullptr);

struct MLDReport {
    long value = 0;
    std::string method;  // "direct" or "polar-formula"
    std::vector<uint64_t> seeds;
    uint64_t prime = 0;
    int trials = 0;
    std::string f_general = "unchecked";  // "empty" | "not-empty" | "unchecked"
    std::string status = "ok";            // "ok" | "positive-dimensional"
    std::vector<long> polar, mu;          // filled by the polar-formula route
};

// Symbolic ideal in (x, u) of the closure of the affine ML correspondence.
std::vector<QPoly> critical_ideal_affine(const MLProblem& P, const BiRing& b, Budget* budget);

// Unsaturated projective ML correspondence system: I(X) + (c+2)-minors of
// [paired u-row; g grad f - f grad g; J_X].
std::vector<QPoly> ml_correspondence_raw(const MLProblem& P, const BiRing& b, Budget* budget);
// Saturated by the (c+1)-minors of [g grad f - f grad g; J_X].
std::vector<QPoly> ml_correspondence_projective(const MLProblem& P, const BiRing& b, Budget* budget);

enum class Dehomog { trace_slice, chart };

// Random-data specialization count over Z/p.
MLDReport mld_compute(const MLProblem& P, const CountOptions& opt,
                      Dehomog mode = Dehomog::trace_slice);

// Counts of the specialized affine critical system without and with the
// u(x) = deg(F) generator; the two agree because every critical point
// satisfies that equation already.
std::pair<long, long> affine_slice_counts(const MLProblem& P, const CountOptions& opt);

// Polar-class formula: sum of delta_i(X) * mu_i(F).
MLDReport mld_polar_formula(const MLProblem& P, const CountOptions& opt,
                            bool probe_generality = true);

struct GaussPlaneResult {
    RingP image_ring;
    std::vector<QPoly> image_ideal;
    long image_degree = 0;
    long map_degree = 0;
    std::vector<uint64_t> seeds;
};

// F-adjoined Gauss map of a plane curve: x -> cross(grad g, grad F).
GaussPlaneResult gauss_adjoined_plane(const MLProblem& P, const CountOptions& opt);

struct ProductCheck {
    bool holds = false;
    long product = 0;
    long mld = 0;
    GaussPlaneResult gauss;
};
ProductCheck product_formula_check(const MLProblem& P, const CountOptions& opt);

struct ClassifyResult {
    bool verdict = false;
    std::string reason;
    QPoly alpha;       // ambient coordinates (zero when verdict is false)
    RatFn phi;         // solution over the ambient dual ring
    QPoly dual_gen;    // generator of the span dual hypersurface
    long dual_degree = 0;
    long multiplicity = 0;
};

// Decides rational-MLE for a curve of degree > 1 against a homogeneous
// polynomial F; verifies a supplied linear form or searches for one.
ClassifyResult classify_curve_mld1(const VarietySpec& X, const QPoly& F,
                                   const std::optional<QPoly>& alpha_opt, const RingP& dual,
                                   const CountOptions& opt);

struct S2Family {
    SymSpace space;
    VarietySpec X;
    QPoly F;    // det on the primal grid
    RatFn phi;  // closed-form solution on the dual grid
};
S2Family s2_family(const std::vector<std::vector<Rat>>& A);

}  // namespace gmld
