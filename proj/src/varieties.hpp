#pragma once

#include <optional>

#include "ideal_ops.hpp"
#include "ratfn.hpp"

namespace gmld {

// Projective variety given by homogeneous generators; irreducibility is the
// caller's assertion and never verified here.
struct VarietySpec {
    RingP ring;
    std::vector<QPoly> gens;

    mutable int codim_cache = -1;
    mutable std::optional<std::vector<QPoly>> sing_cache;

    int nproj() const { return ring->nvars() - 1; }  // dim of the ambient projective space
    int codim(Budget* budget = nullptr) const;
};

VarietySpec make_variety(RingP ring, std::vector<QPoly> gens);

// Rows are the plain coordinate gradients of the generators.
std::vector<std::vector<QPoly>> jacobian(const VarietySpec& X);

// All k x k minors over row and column subsets, deterministic order.
std::vector<QPoly> minors(const std::vector<std::vector<QPoly>>& mat, int k);

// c x c minors of the Jacobian plus I(X).
std::vector<QPoly> singular_locus(const VarietySpec& X, Budget* budget = nullptr);

// Product of a primal ring and its dual; x-block first.
struct BiRing {
    RingP ring;
    RingP xr, yr;
    int nx = 0, ny = 0;

    QPoly embed_x(const QPoly& p) const { return embed(p, ring, 0); }
    QPoly embed_y(const QPoly& p) const { return embed(p, ring, nx); }
    // Dual coordinate paired through the trace form: (2-delta) * y_i.
    QPoly pair_row_entry(int i) const {
        return QPoly::var(ring, nx + i).scaled(Rat(yr->pairw[i]));
    }
    std::vector<int> x_indices() const;
    std::vector<int> y_indices() const;
};

BiRing make_biring(const RingP& primal, const RingP& dual);

// Unsaturated conormal system: I(X) + (c+1)-minors of [paired y-row; J_X].
std::vector<QPoly> conormal_raw(const VarietySpec& X, const BiRing& b, Budget* budget = nullptr);
// Saturated by the c-minors of J_X.
std::vector<QPoly> conormal_ideal(const VarietySpec& X, const BiRing& b, Budget* budget = nullptr);

// Numerator row of the gradient map, denominators cleared: g*grad(f) - f*grad(g).
std::vector<QPoly> gradient_row(const RatFn& F);

// Unsaturated graph system of grad F : P(L) --> P(L*): 2x2 minors of
// [paired y-row; gradient_row(F)].
std::vector<QPoly> gradient_graph_raw(const RatFn& F, const BiRing& b);
// Saturated by the entries of the gradient row.
std::vector<QPoly> gradient_graph_ideal(const RatFn& F, const BiRing& b, Budget* budget = nullptr);

// Ideal of the dual variety in the dual ring (x-block eliminated).
std::vector<QPoly> dual_variety(const VarietySpec& X, const RingP& dual, Budget* budget = nullptr);

// Multiplicity of the point [l] on V(g): deg g minus the t-degree of g(u + t*l).
long multiplicity_at_point(const QPoly& g, const std::vector<Rat>& point);

// Emptiness half of F-generality: conormal + gradient graph, saturated by both
// irrelevant ideals, is the unit ideal. Exact, over QQ.
bool f_general_emptiness(const VarietySpec& X, const RatFn& F, const RingP& dual,
                         Budget* budget = nullptr);

// Seeded random invertible linear change of coordinates; seed 0 is the identity.
VarietySpec perturb(const VarietySpec& X, uint64_t seed);

}  // namespace gmld
