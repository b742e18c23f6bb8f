#pragma once

#include "varieties.hpp"

namespace gmld {

// A verified solution Phi of Phi = F(-grad log Phi), with its likelihood F.
struct HomaloidalSolution {
    RatFn phi;  // over the dual ring
    RatFn F;    // over the primal ring
    std::string provenance;  // "from-alpha" | "join" | "user-supplied"
};

// Validates the degree law deg(phi) == -deg(F) and the PDE itself.
HomaloidalSolution make_homaloidal(RatFn phi, RatFn F, std::string provenance,
                                   Budget* budget = nullptr);

// Exact check of F(-grad log phi) == phi by cross-multiplied polynomial
// identity over QQ. Fills `diag` when the composition is degenerate.
bool pde_check(const RatFn& F, const RatFn& phi, std::string* diag = nullptr);

// The MLE map -grad log phi with denominators cleared: component i is
// (2-delta_i)^{-1} (Q dP_i - P dQ_i) over the common denominator P*Q.
std::vector<QPoly> mle_numerators(const RatFn& phi);

// alpha a tangent line of multiplicity deg(g)-1 on the dual hypersurface V(g)
// gives Phi = alpha(grad log g).
HomaloidalSolution phi_from_alpha(const VarietySpec& X, const QPoly& alpha, const RingP& dual,
                                  Budget* budget = nullptr);

// Product solution on concatenated rings.
HomaloidalSolution phi_join(const HomaloidalSolution& a, const HomaloidalSolution& b,
                            Budget* budget = nullptr);

// Implicitization of u -> -grad log phi; generators in the primal ring.
std::vector<QPoly> associated_variety(const RatFn& phi, const RingP& primal,
                                      Budget* budget = nullptr);

// Equality of the saturations by the irrelevant ideal.
bool ideal_equal_saturated(const std::vector<QPoly>& a, const std::vector<QPoly>& b,
                           const RingP& ring, Budget* budget = nullptr);

}  // namespace gmld
