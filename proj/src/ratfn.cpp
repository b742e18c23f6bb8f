#include "ratfn.hpp"

namespace gmld {

RatFn make_ratfn(QPoly num, QPoly den) {
    if (den.is_zero()) input_error("rational function with zero denominator");
    if (num.is_zero()) return RatFn{QPoly::zero(num.ring), QPoly::constant(den.ring, 1)};
    QPoly g = poly_gcd(num, den);
    if (!g.is_constant() || (!g.is_zero() && !g.lc().is_one())) {
        num = poly_divexact(num, g);
        den = poly_divexact(den, g);
    }
    QPoly dprim = primitive_part(den);
    Rat s = dprim.reorder(grevlex_order()).lc() / den.reorder(grevlex_order()).lc();
    return RatFn{num.scaled(s), dprim};
}

RatFn ratfn_of(QPoly p) {
    RingP r = p.ring;
    return RatFn{std::move(p), QPoly::constant(r, 1)};
}

std::string ratfn_str(const RatFn& f) {
    if (f.den.is_constant() && !f.den.is_zero() && f.den.lc().is_one()) return poly_str(f.num);
    return "(" + poly_str(f.num) + ") / (" + poly_str(f.den) + ")";
}

RatFn RatFn::operator+(const RatFn& o) const { return make_ratfn(num * o.den + o.num * den, den * o.den); }
RatFn RatFn::operator-(const RatFn& o) const { return make_ratfn(num * o.den - o.num * den, den * o.den); }
RatFn RatFn::operator*(const RatFn& o) const { return make_ratfn(num * o.num, den * o.den); }
RatFn RatFn::operator/(const RatFn& o) const {
    if (o.is_zero()) input_error("division by zero rational function");
    return make_ratfn(num * o.den, den * o.num);
}
RatFn RatFn::operator-() const { return RatFn{-num, den}; }
bool RatFn::operator==(const RatFn& o) const { return (num * o.den) == (o.num * den); }

RatFn ratfn_pow(const RatFn& f, long e) {
    if (e < 0) return ratfn_pow(RatFn{f.den, f.num}, -e);
    return RatFn{poly_pow(f.num, e), poly_pow(f.den, e)};
}

std::vector<QPoly> plain_gradient(const QPoly& p) {
    std::vector<QPoly> out;
    for (int i = 0; i < p.ring->nvars(); ++i) out.push_back(deriv(p, i));
    return out;
}

std::vector<RatFn> gradient(const RatFn& F) {
    const RingP& r = F.ring();
    std::vector<RatFn> out;
    QPoly den2 = F.den * F.den;
    for (int i = 0; i < r->nvars(); ++i) {
        QPoly n = F.den * deriv(F.num, i) - F.num * deriv(F.den, i);
        n = n.scaled(Rat(1, r->pairw[i]));
        out.push_back(make_ratfn(n, den2));
    }
    return out;
}

bool euler_check(const RatFn& F) {
    const RingP& r = F.ring();
    if (!F.is_homogeneous()) return false;
    // sum x_i (g df_i - f dg_i) == deg(F) f g, all plain partials
    QPoly lhs = QPoly::zero(r);
    for (int i = 0; i < r->nvars(); ++i) {
        QPoly xi = QPoly::var(r, i);
        lhs = lhs + xi * (F.den * deriv(F.num, i) - F.num * deriv(F.den, i));
    }
    QPoly rhs = (F.num * F.den).scaled(Rat(F.degree()));
    return lhs == rhs;
}

std::vector<RatFn> grad_log(const RatFn& phi) {
    if (phi.is_zero()) input_error("log gradient of zero");
    const RingP& r = phi.ring();
    std::vector<RatFn> out;
    QPoly pq = phi.num * phi.den;
    for (int i = 0; i < r->nvars(); ++i) {
        QPoly n = phi.den * deriv(phi.num, i) - phi.num * deriv(phi.den, i);
        n = n.scaled(Rat(1, r->pairw[i]));
        out.push_back(make_ratfn(n, pq));
    }
    return out;
}

QPoly substitute_linear(const QPoly& p, const RingP& tgt, const std::vector<QPoly>& images) {
    if ((int)images.size() != p.ring->nvars()) input_error("substitution arity mismatch");
    for (auto& im : images)
        if (im.deg() > 1) input_error("substitute_linear requires degree <= 1 images");
    return substitute(p, tgt, images);
}

}  // namespace gmld
