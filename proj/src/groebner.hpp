#pragma once

#include <functional>
#include <optional>

#include "poly.hpp"

namespace gmld {

template <class K>
struct GroebnerBasis {
    OrdP ord;
    std::vector<Poly<K>> basis;  // sorted ascending by leading monomial
    bool reduced = false;

    bool is_unit() const {
        return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
    }
};

template <class K>
Poly<K> normalized_gen(const Poly<K>& p) {
    if constexpr (std::is_same_v<K, Rat>)
        return primitive_part(p);
    else
        return monic(p);
}

// Full multivariate division remainder; deterministic for a fixed basis order.
// With strip_content the result is only correct up to a nonzero scalar (the
// rescaling is applied to the parked remainder too, so zero-ness and ideal
// membership are preserved).
template <class K>
Poly<K> normal_form(const Poly<K>& p, const std::vector<Poly<K>>& G, const OrdP& ord, Budget* budget,
                    bool strip_content = false) {
    Poly<K> h = p.ord == ord ? p : p.reorder(ord);
    Poly<K> r(h.ring, ord);
    int steps = 0;
    while (!h.is_zero()) {
        const Poly<K>* best = nullptr;
        for (auto& g : G) {
            if (g.is_zero()) continue;
            if (g.lm().divides(h.lm())) {
                best = &g;
                break;
            }
        }
        if (best) {
            K c = h.lc() / best->lc();
            h.axpy(-c, h.lm().div(best->lm()), *best);
            if (budget) budget->charge();
            if constexpr (std::is_same_v<K, Rat>) {
                if (strip_content && (++steps & 7) == 0 && !h.is_zero()) {
                    Poly<K> prim = primitive_part(h);
                    K s = prim.lc() / h.lc();
                    h = prim;
                    r = r.scaled(s);
                }
            }
        } else {
            r.t.push_back(h.t.front());
            h.t.erase(h.t.begin());
        }
    }
    return r;
}

template <class K>
Poly<K> spoly(const Poly<K>& f, const Poly<K>& g) {
    Expvec l = f.lm().lcm(g.lm());
    Poly<K> a(f.ring, f.ord), b(f.ring, f.ord);
    a.axpy(g.lc(), l.div(f.lm()), f);
    b.axpy(f.lc(), l.div(g.lm()), g);
    return a - b;
}

template <class K>
GroebnerBasis<K> buchberger(const std::vector<Poly<K>>& gens, OrdP ord, Budget* budget) {
    GroebnerBasis<K> out;
    out.ord = ord;

    std::vector<Poly<K>> G;
    RingP ring;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        ring = g.ring;
        G.push_back(normalized_gen(g.reorder(ord)));
    }
    if (G.empty()) {
        out.reduced = true;
        return out;
    }
    int n = ring->nvars();

    struct Pair {
        int i, j;
        Expvec lcm;
        long sugar;
        bool alive;
    };
    std::vector<Pair> pairs;
    std::vector<long> sugar(G.size());
    for (size_t i = 0; i < G.size(); ++i) sugar[i] = G[i].deg();
    std::vector<std::vector<char>> treated;  // treated[j][i], i<j
    auto mark_treated = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        treated[j][i] = 1;
    };
    auto is_treated = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        return treated[j][i] != 0;
    };
    auto push_pairs = [&](int j) {
        treated.push_back(std::vector<char>(j, 0));
        for (int i = 0; i < j; ++i) {
            Pair p;
            p.i = i;
            p.j = j;
            p.lcm = G[i].lm().lcm(G[j].lm());
            p.sugar = std::max(sugar[i] + (long)(p.lcm.deg - G[i].lm().deg),
                               sugar[j] + (long)(p.lcm.deg - G[j].lm().deg));
            p.alive = true;
            pairs.push_back(p);
        }
    };
    for (size_t j = 0; j < G.size(); ++j) push_pairs((int)j);

    while (true) {
        // sugar strategy: least sugar, then least lcm, then lowest indices
        int best = -1;
        for (int k = 0; k < (int)pairs.size(); ++k) {
            if (!pairs[k].alive) continue;
            if (best < 0) {
                best = k;
                continue;
            }
            auto& a = pairs[k];
            auto& b = pairs[best];
            int c;
            if (a.sugar != b.sugar)
                c = a.sugar < b.sugar ? 1 : -1;
            else if ((c = -ord->cmp(a.lcm, b.lcm, n)) == 0)
                c = (a.j < b.j || (a.j == b.j && a.i < b.i)) ? 1 : -1;
            if (c > 0) best = k;
        }
        if (best < 0) break;
        if (budget) budget->charge();
        Pair pr = pairs[best];
        pairs[best].alive = false;
        mark_treated(pr.i, pr.j);

        // Buchberger's product criterion
        if (pr.lcm == G[pr.i].lm() * G[pr.j].lm()) continue;
        // chain criterion
        bool skip = false;
        for (int k = 0; k < (int)G.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (G[k].lm().divides(pr.lcm) && is_treated(pr.i, k) && is_treated(pr.j, k)) skip = true;
        }
        if (skip) continue;

        Poly<K> r = normal_form(spoly(G[pr.i], G[pr.j]), G, ord, budget, true);
        if (r.is_zero()) continue;
        r = normalized_gen(r);
        sugar.push_back(r.deg());
        G.push_back(r);
        push_pairs((int)G.size() - 1);
        if (r.is_constant()) break;  // unit ideal, nothing more to learn
    }

    // minimalize
    std::vector<int> keep;
    for (int i = 0; i < (int)G.size(); ++i) {
        bool redundant = false;
        for (int j = 0; j < (int)G.size() && !redundant; ++j) {
            if (i == j) continue;
            if (G[j].lm().divides(G[i].lm())) {
                if (!(G[i].lm() == G[j].lm()))
                    redundant = true;
                else if (j < i)
                    redundant = true;  // equal leading monomials: keep the first
            }
        }
        if (!redundant) keep.push_back(i);
    }
    std::vector<Poly<K>> M;
    for (int i : keep) M.push_back(G[i]);
    // tail-reduce each against the others
    for (size_t i = 0; i < M.size(); ++i) {
        std::vector<Poly<K>> others;
        for (size_t j = 0; j < M.size(); ++j)
            if (j != i) others.push_back(M[j]);
        M[i] = normal_form(M[i], others, ord, budget, true);
        M[i] = monic(M[i]);
    }
    std::sort(M.begin(), M.end(),
              [&](const Poly<K>& a, const Poly<K>& b) { return ord->cmp(a.lm(), b.lm(), n) < 0; });
    out.basis = std::move(M);
    out.reduced = true;
    return out;
}

template <class K>
Poly<K> normal_form(const Poly<K>& p, const GroebnerBasis<K>& gb, Budget* budget = nullptr) {
    return normal_form(p, gb.basis, gb.ord, budget);
}

// Zero-dimensionality over the *whole* variable list: every variable has a
// pure-power leading monomial.
template <class K>
bool is_zero_dimensional(const GroebnerBasis<K>& gb, int nvars) {
    if (gb.is_unit()) return true;  // empty variety
    std::vector<char> seen(nvars, 0);
    for (auto& g : gb.basis) {
        const Expvec& m = g.lm();
        int support = -1;
        bool pure = true;
        for (int i = 0; i < nvars; ++i)
            if (m.e[i]) {
                if (support >= 0) pure = false;
                support = i;
            }
        if (pure && support >= 0) seen[support] = 1;
        if (pure && support < 0) return true;  // constant: unit ideal
    }
    for (int i = 0; i < nvars; ++i)
        if (!seen[i]) return false;
    return true;
}

// Count of standard monomials (finite iff zero-dimensional).
template <class K>
long count_standard_monomials(const GroebnerBasis<K>& gb, int nvars) {
    if (gb.is_unit()) return 0;
    std::vector<int> bound(nvars, -1);
    for (auto& g : gb.basis) {
        const Expvec& m = g.lm();
        int support = -1;
        bool pure = true;
        for (int i = 0; i < nvars; ++i)
            if (m.e[i]) {
                if (support >= 0) pure = false;
                support = i;
            }
        if (pure && support >= 0 && (bound[support] < 0 || m.e[support] < bound[support]))
            bound[support] = m.e[support];
    }
    for (int i = 0; i < nvars; ++i)
        if (bound[i] < 0) input_error("ideal is not zero-dimensional");

    long count = 0;
    Expvec cur;
    auto divisible = [&](const Expvec& m) {
        for (auto& g : gb.basis)
            if (g.lm().divides(m)) return true;
        return false;
    };
    std::function<void(int)> rec = [&](int v) {
        if (divisible(cur)) return;
        if (v == nvars) {
            ++count;
            return;
        }
        for (int e = 0; e < bound[v]; ++e) {
            cur.e[v] = e;
            cur.deg += e;
            rec(v + 1);
            cur.deg -= e;
        }
        cur.e[v] = 0;
    };
    rec(0);
    return count;
}

}  // namespace gmld
