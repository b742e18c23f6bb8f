#pragma once

#include <functional>

#include "groebner.hpp"

namespace gmld {

// Fresh internal variable names use '~' which the session grammar rejects,
// so they can never collide with user variables.
struct ExtendedRing {
    RingP ring;
    int aux;  // index of the added variable
};

inline ExtendedRing with_aux(const RingP& r, const std::string& tag) {
    RingP e = extend_ring(r, {"~" + tag});
    return {e, e->nvars() - 1};
}

template <class K>
std::vector<Poly<K>> embed_all(const std::vector<Poly<K>>& gens, const RingP& tgt) {
    std::vector<Poly<K>> out;
    out.reserve(gens.size());
    for (auto& g : gens) out.push_back(embed(g, tgt, 0));
    return out;
}

// Generators of GB(I, block order eliminating `drop`) that avoid `drop`.
template <class K>
std::vector<Poly<K>> eliminate(const std::vector<Poly<K>>& gens, const RingP& ring,
                               const std::vector<int>& drop, Budget* budget) {
    if (drop.empty()) return gens;
    OrdP ord = block_order(drop);
    auto gb = buchberger(gens, ord, budget);
    std::vector<Poly<K>> out;
    for (auto& g : gb.basis) {
        bool uses = false;
        for (int v : drop)
            if (g.uses_var(v)) {
                uses = true;
                break;
            }
        if (!uses) out.push_back(normalized_gen(g.reorder(grevlex_order())));
    }
    return out;
}

template <class K>
std::vector<Poly<K>> saturate_single(const std::vector<Poly<K>>& gens, const RingP& ring,
                                     const Poly<K>& g, Budget* budget) {
    auto ext = with_aux(ring, "sat");
    auto egens = embed_all(gens, ext.ring);
    Poly<K> t = Poly<K>::var(ext.ring, ext.aux);
    egens.push_back(t * embed(g, ext.ring, 0) - Poly<K>::constant(ext.ring, 1));
    auto elim = eliminate(egens, ext.ring, {ext.aux}, budget);
    std::vector<int> back(ext.ring->nvars(), -1);
    for (int i = 0; i < ring->nvars(); ++i) back[i] = i;
    std::vector<Poly<K>> out;
    for (auto& h : elim) out.push_back(map_vars(h, ring, back));
    return out;
}

template <class K>
std::vector<Poly<K>> intersect(const std::vector<Poly<K>>& a, const std::vector<Poly<K>>& b,
                               const RingP& ring, Budget* budget) {
    auto ext = with_aux(ring, "mix");
    Poly<K> t = Poly<K>::var(ext.ring, ext.aux);
    Poly<K> omt = Poly<K>::constant(ext.ring, 1) - t;
    std::vector<Poly<K>> gens;
    for (auto& f : a) gens.push_back(t * embed(f, ext.ring, 0));
    for (auto& g : b) gens.push_back(omt * embed(g, ext.ring, 0));
    auto elim = eliminate(gens, ext.ring, {ext.aux}, budget);
    std::vector<int> back(ext.ring->nvars(), -1);
    for (int i = 0; i < ring->nvars(); ++i) back[i] = i;
    std::vector<Poly<K>> out;
    for (auto& h : elim) out.push_back(map_vars(h, ring, back));
    return out;
}

// I : J^infty as the intersection of the single-generator saturations.
template <class K>
std::vector<Poly<K>> saturate(const std::vector<Poly<K>>& gens, const RingP& ring,
                              const std::vector<Poly<K>>& by, Budget* budget) {
    std::vector<Poly<K>> acc;
    bool first = true;
    for (auto& g : by) {
        if (g.is_zero()) continue;
        auto s = saturate_single(gens, ring, g, budget);
        acc = first ? s : intersect(acc, s, ring, budget);
        first = false;
    }
    if (first) input_error("saturation by the zero ideal");
    return acc;
}

// I : J (ordinary ideal quotient).
template <class K>
std::vector<Poly<K>> ideal_quotient(const std::vector<Poly<K>>& gens, const RingP& ring,
                                    const std::vector<Poly<K>>& by, Budget* budget) {
    std::vector<Poly<K>> acc;
    bool first = true;
    for (auto& g : by) {
        if (g.is_zero()) continue;
        auto cap = intersect(gens, {g}, ring, budget);
        std::vector<Poly<K>> q;
        if constexpr (std::is_same_v<K, Rat>) {
            for (auto& h : cap) q.push_back(poly_divexact(h, g));
        } else {
            for (auto& h : cap) {
                Poly<K> r = h;
                Poly<K> quo(ring, r.ord);
                while (!r.is_zero()) {
                    K c = r.lc() / g.lc();
                    Expvec m = r.lm().div(g.lm());
                    quo.t.push_back({m, c});
                    r.axpy(-c, m, g);
                }
                quo.normalize();
                q.push_back(quo);
            }
        }
        acc = first ? q : intersect(acc, q, ring, budget);
        first = false;
    }
    if (first) input_error("quotient by the zero ideal");
    return acc;
}

template <class K>
bool radical_membership(const Poly<K>& p, const std::vector<Poly<K>>& gens, const RingP& ring,
                        Budget* budget) {
    auto ext = with_aux(ring, "rab");
    auto egens = embed_all(gens, ext.ring);
    Poly<K> t = Poly<K>::var(ext.ring, ext.aux);
    egens.push_back(t * embed(p, ext.ring, 0) - Poly<K>::constant(ext.ring, 1));
    return buchberger(egens, grevlex_order(), budget).is_unit();
}

// Krull dimension of the affine quotient via independent sets of LT(I); -1 for <1>.
template <class K>
int ideal_dimension(const std::vector<Poly<K>>& gens, const RingP& ring, Budget* budget) {
    auto gb = buchberger(gens, grevlex_order(), budget);
    if (gb.is_unit()) return -1;
    int n = ring->nvars();
    if (gb.basis.empty()) return n;
    std::vector<Expvec> lts;
    for (auto& g : gb.basis) lts.push_back(g.lm());
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (auto& m : lts) {
            bool inside = true;
            for (int i = 0; i < n && inside; ++i)
                if (m.e[i] && !(mask & (1u << i))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

// Vector-space dimension of the quotient ring of a zero-dimensional ideal.
template <class K>
long degree_zero_dim(const std::vector<Poly<K>>& gens, const RingP& ring, Budget* budget) {
    auto gb = buchberger(gens, grevlex_order(), budget);
    if (!is_zero_dimensional(gb, ring->nvars()))
        input_error("degree requested for a positive-dimensional ideal");
    return count_standard_monomials(gb, ring->nvars());
}

template <class K>
bool ideal_contains(const std::vector<Poly<K>>& gens, const RingP& ring,
                    const std::vector<Poly<K>>& sub, Budget* budget) {
    auto gb = buchberger(gens, grevlex_order(), budget);
    for (auto& f : sub)
        if (!normal_form(f, gb, budget).is_zero()) return false;
    return true;
}

template <class K>
bool ideal_equal(const std::vector<Poly<K>>& a, const std::vector<Poly<K>>& b, const RingP& ring,
                 Budget* budget) {
    return ideal_contains(a, ring, b, budget) && ideal_contains(b, ring, a, budget);
}

}  // namespace gmld
