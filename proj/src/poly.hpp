#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "coeffs.hpp"
#include "ring.hpp"

namespace gmld {

inline Rat field_one(const Ring&, const Rat*) { return Rat(1); }
inline Zp field_one(const Ring& r, const Zp*) { return Zp(1, r.p); }
inline Rat field_of_long(const Ring&, long n, const Rat*) { return Rat(n); }
inline Zp field_of_long(const Ring& r, long n, const Zp*) { return Zp::of_long(n, r.p); }

// Sparse multivariate polynomial; terms kept sorted descending in `ord`,
// no zero coefficients stored.
template <class K>
struct Poly {
    RingP ring;
    OrdP ord;
    std::vector<std::pair<Expvec, K>> t;

    Poly() = default;
    Poly(RingP r, OrdP o) : ring(std::move(r)), ord(std::move(o)) {}

    static Poly zero(RingP r, OrdP o = grevlex_order()) { return Poly(std::move(r), std::move(o)); }
    static Poly konst(RingP r, K c, OrdP o = grevlex_order()) {
        Poly p(std::move(r), std::move(o));
        if (!c.is_zero()) p.t.push_back({Expvec::one(), c});
        return p;
    }
    static Poly constant(RingP r, long n, OrdP o = grevlex_order()) {
        K c = field_of_long(*r, n, (K*)nullptr);
        return konst(std::move(r), c, std::move(o));
    }
    static Poly var(RingP r, int i, OrdP o = grevlex_order()) {
        Poly p(std::move(r), std::move(o));
        p.t.push_back({Expvec::var(i), field_one(*p.ring, (K*)nullptr)});
        return p;
    }
    static Poly term(RingP r, Expvec m, K c, OrdP o = grevlex_order()) {
        Poly p(std::move(r), std::move(o));
        if (!c.is_zero()) p.t.push_back({m, c});
        return p;
    }

    bool is_zero() const { return t.empty(); }
    bool is_constant() const { return t.empty() || (t.size() == 1 && t[0].first.is_one()); }
    const Expvec& lm() const { return t.front().first; }
    const K& lc() const { return t.front().second; }
    int deg() const {  // total degree; -1 for 0
        int d = -1;
        for (auto& [m, c] : t) d = std::max(d, (int)m.deg);
        return d;
    }
    bool is_homogeneous() const {
        for (auto& [m, c] : t)
            if (m.deg != t[0].first.deg) return false;
        return true;
    }
    bool uses_var(int i) const {
        for (auto& [m, c] : t)
            if (m.e[i]) return true;
        return false;
    }

    void normalize() {  // sort desc, combine equal monomials, drop zeros
        std::sort(t.begin(), t.end(), [&](const auto& a, const auto& b) {
            return ord->cmp(a.first, b.first, ring->nvars()) > 0;
        });
        size_t w = 0;
        for (size_t i = 0; i < t.size();) {
            size_t j = i + 1;
            K acc = t[i].second;
            while (j < t.size() && t[j].first == t[i].first) {
                acc = acc + t[j].second;
                ++j;
            }
            if (!acc.is_zero()) t[w++] = {t[i].first, acc};
            i = j;
        }
        t.resize(w);
    }

    Poly reorder(OrdP o) const {
        Poly r = *this;
        r.ord = std::move(o);
        r.normalize();
        return r;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.t) c = -c;
        return r;
    }

    Poly operator+(const Poly& o) const {
        Poly r(ring, ord);
        r.t.reserve(t.size() + o.t.size());
        size_t i = 0, j = 0;
        int n = ring->nvars();
        while (i < t.size() && j < o.t.size()) {
            int c = ord->cmp(t[i].first, o.t[j].first, n);
            if (c > 0)
                r.t.push_back(t[i++]);
            else if (c < 0)
                r.t.push_back(o.t[j++]);
            else {
                K s = t[i].second + o.t[j].second;
                if (!s.is_zero()) r.t.push_back({t[i].first, s});
                ++i;
                ++j;
            }
        }
        while (i < t.size()) r.t.push_back(t[i++]);
        while (j < o.t.size()) r.t.push_back(o.t[j++]);
        return r;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }

    // *this += c * x^m * g
    void axpy(const K& c, const Expvec& m, const Poly& g) {
        Poly scaled(ring, ord);
        scaled.t.reserve(g.t.size());
        for (auto& [gm, gc] : g.t) {
            K nc = gc * c;
            if (!nc.is_zero()) scaled.t.push_back({gm * m, nc});
        }
        *this = *this + scaled;
    }

    Poly operator*(const Poly& o) const {
        Poly r(ring, ord);
        r.t.reserve(t.size() * o.t.size());
        for (auto& [am, ac] : t)
            for (auto& [bm, bc] : o.t) {
                K c = ac * bc;
                if (!c.is_zero()) r.t.push_back({am * bm, c});
            }
        r.normalize();
        return r;
    }

    Poly scaled(const K& c) const {
        Poly r(ring, ord);
        if (c.is_zero()) return r;
        r.t = t;
        for (auto& [m, cc] : r.t) cc = cc * c;
        return r;
    }

    bool operator==(const Poly& o) const {
        if (t.size() != o.t.size()) return false;
        Poly a = reorder(grevlex_order()), b = o.reorder(grevlex_order());
        return a.t == b.t;
    }
};

using QPoly = Poly<Rat>;
using ZpPoly = Poly<Zp>;

template <class K>
Poly<K> poly_pow(const Poly<K>& p, long n) {
    if (n < 0) input_error("negative polynomial power");
    Poly<K> r = Poly<K>::constant(p.ring, 1, p.ord);
    Poly<K> base = p;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

template <class K>
Poly<K> deriv(const Poly<K>& p, int var) {
    Poly<K> r(p.ring, p.ord);
    for (auto& [m, c] : p.t) {
        if (!m.e[var]) continue;
        K nc = c * field_of_long(*p.ring, (long)m.e[var], (K*)nullptr);
        Expvec nm = m;
        nm.e[var] -= 1;
        nm.deg -= 1;
        if (!nc.is_zero()) r.t.push_back({nm, nc});
    }
    r.normalize();
    return r;
}

template <class K>
K poly_eval(const Poly<K>& p, const std::vector<K>& point) {
    if ((int)point.size() != p.ring->nvars()) input_error("point arity mismatch");
    K acc = field_of_long(*p.ring, 0, (K*)nullptr);
    for (auto& [m, c] : p.t) {
        K v = c;
        for (int i = 0; i < p.ring->nvars(); ++i)
            for (int k = 0; k < m.e[i]; ++k) v = v * point[i];
        acc = acc + v;
    }
    return acc;
}

// Substitute variable i of p by images[i] (polynomials in a target ring).
template <class K>
Poly<K> substitute(const Poly<K>& p, RingP tgt, const std::vector<Poly<K>>& images, OrdP o = grevlex_order()) {
    if ((int)images.size() != p.ring->nvars()) input_error("substitution arity mismatch");
    Poly<K> acc = Poly<K>::zero(tgt, o);
    for (auto& [m, c] : p.t) {
        Poly<K> v = Poly<K>::konst(tgt, c, o);
        for (int i = 0; i < p.ring->nvars(); ++i)
            if (m.e[i]) v = v * poly_pow(images[i], m.e[i]);
        acc = acc + v;
    }
    return acc;
}

// Map variable i of src-ring to variable varmap[i] of target ring (exponents copied).
template <class K>
Poly<K> map_vars(const Poly<K>& p, RingP tgt, const std::vector<int>& varmap, OrdP o = grevlex_order()) {
    Poly<K> r(tgt, o);
    for (auto& [m, c] : p.t) {
        Expvec nm;
        for (int i = 0; i < p.ring->nvars(); ++i)
            if (m.e[i]) {
                if (varmap[i] < 0) input_error("variable not present in target ring");
                nm.e[varmap[i]] += m.e[i];
            }
        nm.deg = m.deg;
        r.t.push_back({nm, c});
    }
    r.normalize();
    return r;
}

template <class K>
Poly<K> embed(const Poly<K>& p, RingP tgt, int offset, OrdP o = grevlex_order()) {
    std::vector<int> vm(p.ring->nvars());
    for (int i = 0; i < p.ring->nvars(); ++i) vm[i] = i + offset;
    return map_vars(p, std::move(tgt), vm, std::move(o));
}

ZpPoly reduce_poly(const QPoly& p, const RingP& zp_ring);

// Integer-primitive normalization: clears denominators, strips integer
// content, makes the leading (grevlex) coefficient positive.
QPoly primitive_part(const QPoly& p);
QPoly monic(const QPoly& p);
ZpPoly monic(const ZpPoly& p);

// Multivariate gcd over QQ (primitive PRS).
QPoly poly_gcd(const QPoly& a, const QPoly& b);
// Exact division; errors if not divisible.
QPoly poly_divexact(const QPoly& a, const QPoly& b);

std::string poly_str(const QPoly& p);
std::string poly_str(const ZpPoly& p);

}  // namespace gmld
