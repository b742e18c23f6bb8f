#include "homaloidal.hpp"

namespace gmld {

std::vector<QPoly> mle_numerators(const RatFn& phi) {
    const RingP& d = phi.ring();
    std::vector<QPoly> out;
    for (int i = 0; i < d->nvars(); ++i) {
        QPoly n = phi.den * deriv(phi.num, i) - phi.num * deriv(phi.den, i);
        out.push_back((-n).scaled(Rat(1, d->pairw[i])));
    }
    return out;
}

bool pde_check(const RatFn& F, const RatFn& phi, std::string* diag) {
    if (F.degree() == 0) input_error("F must have nonzero degree");
    if (phi.is_zero()) input_error("Phi must be nonzero");
    const RingP& d = phi.ring();
    if (F.ring()->nvars() != d->nvars()) input_error("F and Phi live over different spaces");

    std::vector<QPoly> c = mle_numerators(phi);
    bool all_zero = true;
    for (auto& ci : c) all_zero &= ci.is_zero();
    if (all_zero) {
        if (diag) *diag = "the MLE map is identically zero";
        return false;
    }
    QPoly fc = substitute(F.num, d, c);
    QPoly gc = substitute(F.den, d, c);
    if (gc.is_zero()) {
        if (diag) *diag = "composition hits a zero denominator identically";
        return false;
    }
    QPoly d0 = phi.num * phi.den;
    int e = F.degree();
    QPoly lhs, rhs;
    if (e >= 0) {
        lhs = fc * phi.den;
        rhs = phi.num * gc * poly_pow(d0, e);
    } else {
        lhs = fc * phi.den * poly_pow(d0, -e);
        rhs = phi.num * gc;
    }
    return lhs == rhs;
}

HomaloidalSolution make_homaloidal(RatFn phi, RatFn F, std::string provenance, Budget* budget) {
    (void)budget;
    if (phi.degree() != -F.degree())
        input_error("degree law violated: deg(Phi) = " + std::to_string(phi.degree()) +
                    " but -deg(F) = " + std::to_string(-F.degree()));
    std::string diag;
    if (!pde_check(F, phi, &diag))
        input_error("Phi does not solve the homaloidal PDE" + (diag.empty() ? "" : ": " + diag));
    return HomaloidalSolution{std::move(phi), std::move(F), std::move(provenance)};
}

HomaloidalSolution phi_from_alpha(const VarietySpec& X, const QPoly& alpha, const RingP& dual,
                                  Budget* budget) {
    if (alpha.deg() != 1 || !alpha.is_homogeneous()) input_error("alpha must be a linear form");
    auto dv = dual_variety(X, dual, budget);
    if (dv.size() != 1) input_error("dual variety is not a hypersurface");
    QPoly g = primitive_part(dv[0]);
    long d = g.deg();

    std::vector<Rat> a(X.ring->nvars(), Rat(0));
    for (auto& [m, c] : alpha.t)
        for (int i = 0; i < X.ring->nvars(); ++i)
            if (m.e[i]) a[i] = c;
    std::vector<Rat> point;  // [alpha] in dual coordinates, trace-paired
    for (int i = 0; i < dual->nvars(); ++i) point.push_back(a[i] / Rat(dual->pairw[i]));
    long mult = multiplicity_at_point(g, point);
    if (mult != d - 1)
        input_error("multiplicity of [alpha] on the dual hypersurface is " + std::to_string(mult) +
                    ", need " + std::to_string(d - 1));

    QPoly num = QPoly::zero(dual);
    for (int i = 0; i < dual->nvars(); ++i)
        if (!a[i].is_zero()) num = num + deriv(g, i).scaled(a[i] * Rat(1, dual->pairw[i]));
    RatFn phi = make_ratfn(num, g);
    return make_homaloidal(phi, ratfn_of(alpha), "from-alpha", budget);
}

HomaloidalSolution phi_join(const HomaloidalSolution& a, const HomaloidalSolution& b,
                            Budget* budget) {
    RingP primal = concat_rings(a.F.ring(), b.F.ring());
    RingP dual = concat_rings(a.phi.ring(), b.phi.ring());
    int offp = a.F.ring()->nvars();
    int offd = a.phi.ring()->nvars();
    RatFn F{embed(a.F.num, primal, 0) * embed(b.F.num, primal, offp),
            embed(a.F.den, primal, 0) * embed(b.F.den, primal, offp)};
    RatFn phi{embed(a.phi.num, dual, 0) * embed(b.phi.num, dual, offd),
              embed(a.phi.den, dual, 0) * embed(b.phi.den, dual, offd)};
    return make_homaloidal(phi, F, "join", budget);
}

std::vector<QPoly> associated_variety(const RatFn& phi, const RingP& primal, Budget* budget) {
    const RingP& d = phi.ring();
    if (primal->nvars() != d->nvars()) input_error("primal ring arity mismatch");
    std::vector<QPoly> c = mle_numerators(phi);
    bool all_zero = true;
    for (auto& ci : c) all_zero &= ci.is_zero();
    if (all_zero) input_error("the MLE map is not generically defined");

    RingP big = concat_rings(primal, d);
    auto ext = with_aux(big, "scale");
    int n = primal->nvars();
    std::vector<QPoly> gens;
    for (int i = 0; i < n; ++i)
        gens.push_back(QPoly::var(ext.ring, i) -
                       QPoly::var(ext.ring, ext.aux) * embed(c[i], ext.ring, n));
    std::vector<int> drop;
    for (int i = 0; i < n; ++i) drop.push_back(n + i);
    drop.push_back(ext.aux);
    auto elim = eliminate(gens, ext.ring, drop, budget);
    std::vector<int> back(ext.ring->nvars(), -1);
    for (int i = 0; i < n; ++i) back[i] = i;
    std::vector<QPoly> out;
    for (auto& h : elim) out.push_back(primitive_part(map_vars(h, primal, back)));
    return out;
}

bool ideal_equal_saturated(const std::vector<QPoly>& a, const std::vector<QPoly>& b,
                           const RingP& ring, Budget* budget) {
    std::vector<QPoly> irr;
    for (int i = 0; i < ring->nvars(); ++i) irr.push_back(QPoly::var(ring, i));
    auto sa = a.empty() ? a : saturate(a, ring, irr, budget);
    auto sb = b.empty() ? b : saturate(b, ring, irr, budget);
    if (sa.empty() || sb.empty()) return sa.empty() && sb.empty();
    return ideal_equal(sa, sb, ring, budget);
}

}  // namespace gmld
