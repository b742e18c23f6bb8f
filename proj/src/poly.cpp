#include "poly.hpp"

namespace gmld {

ZpPoly reduce_poly(const QPoly& p, const RingP& zp_ring) {
    ZpPoly r(zp_ring, p.ord);
    for (auto& [m, c] : p.t) {
        Zp z = reduce_mod(c, zp_ring->p);
        if (!z.is_zero()) r.t.push_back({m, z});
    }
    r.normalize();
    return r;
}

QPoly primitive_part(const QPoly& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (auto& [m, c] : p.t) {
        mpz_class d = c.den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), mpz_class(c.num()).get_mpz_t());
    }
    QPoly g = p.reorder(grevlex_order());
    Rat scale(den_lcm, num_gcd);
    if ((g.lc() * scale).v < 0) scale = -scale;
    QPoly r = p.scaled(scale);
    return r;
}

QPoly monic(const QPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.lc().inv());
}

ZpPoly monic(const ZpPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.lc().inv());
}

static int deg_in(const QPoly& p, int var) {
    int d = 0;
    for (auto& [m, c] : p.t) d = std::max(d, (int)m.e[var]);
    return d;
}

static QPoly coeff_of(const QPoly& p, int var, int k) {
    QPoly r(p.ring, p.ord);
    for (auto& [m, c] : p.t)
        if ((int)m.e[var] == k) {
            Expvec nm = m;
            nm.deg -= nm.e[var];
            nm.e[var] = 0;
            r.t.push_back({nm, c});
        }
    r.normalize();
    return r;
}

QPoly poly_divexact(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) input_error("division by zero polynomial");
    QPoly q(a.ring, a.ord);
    QPoly h = a;
    while (!h.is_zero()) {
        if (!b.lm().divides(h.lm())) input_error("inexact polynomial division");
        Expvec m = h.lm().div(b.lm());
        Rat c = h.lc() / b.lc();
        q.t.push_back({m, c});
        h.axpy(-c, m, b);
    }
    q.normalize();
    return q;
}

// pseudo-remainder of f by g in variable x
static QPoly prem(const QPoly& f, const QPoly& g, int x) {
    int df = deg_in(f, x), dg = deg_in(g, x);
    QPoly lg = coeff_of(g, x, dg);
    QPoly r = f;
    while (!r.is_zero()) {
        int dr = deg_in(r, x);
        if (dr < dg) break;
        QPoly lr = coeff_of(r, x, dr);
        // r = lg*r - lr*x^(dr-dg)*g
        QPoly shift = QPoly::term(r.ring, Expvec::var(x, dr - dg), Rat(1), r.ord);
        r = lg * r - lr * shift * g;
    }
    (void)df;
    return r;
}

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    // main variable: last variable occurring in either
    int x = -1;
    for (int i = a.ring->nvars() - 1; i >= 0; --i)
        if (a.uses_var(i) || b.uses_var(i)) {
            x = i;
            break;
        }
    if (x < 0) return QPoly::constant(a.ring, 1, a.ord);

    auto content = [&](const QPoly& p) {
        int d = deg_in(p, x);
        QPoly c = coeff_of(p, x, d);
        for (int k = d - 1; k >= 0 && !c.is_constant(); --k) {
            QPoly ck = coeff_of(p, x, k);
            if (!ck.is_zero()) c = poly_gcd(c, ck);
        }
        if (c.is_constant()) return QPoly::constant(p.ring, 1, p.ord);
        return c;
    };

    QPoly ca = content(a), cb = content(b);
    QPoly f = poly_divexact(a, ca), g = poly_divexact(b, cb);
    QPoly cg = poly_gcd(ca, cb);
    if (deg_in(f, x) < deg_in(g, x)) std::swap(f, g);
    while (true) {
        QPoly r = prem(f, g, x);
        if (r.is_zero()) break;
        if (deg_in(r, x) == 0) return primitive_part(cg);
        f = g;
        QPoly cr = content(r);
        g = poly_divexact(r, cr);
        g = primitive_part(g);
    }
    QPoly cgp = content(g);
    g = primitive_part(poly_divexact(g, cgp));
    return primitive_part(cg * g);
}

template <class K>
static std::string poly_str_impl(const Poly<K>& p, bool neg_ok) {
    if (p.is_zero()) return "0";
    Poly<K> q = p.reorder(grevlex_order());
    std::string out;
    bool first = true;
    for (auto& [m, c] : q.t) {
        std::string cs = c.str();
        bool neg = neg_ok && !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) out += "-", cs = cs.substr(1);
        } else {
            if (neg) {
                out += " - ";
                cs = cs.substr(1);
            } else
                out += " + ";
        }
        first = false;
        std::string mono;
        for (int i = 0; i < p.ring->nvars(); ++i) {
            if (!m.e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += p.ring->names[i];
            if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
        }
        if (mono.empty())
            out += cs;
        else if (cs == "1")
            out += mono;
        else
            out += cs + "*" + mono;
    }
    return out;
}

std::string poly_str(const QPoly& p) { return poly_str_impl(p, true); }
std::string poly_str(const ZpPoly& p) { return poly_str_impl(p, false); }

}  // namespace gmld
