#pragma once

#include "poly.hpp"

namespace gmld {

// Quotient of polynomials over QQ, gcd-reduced on construction, denominator
// normalized integer-primitive with positive leading coefficient.
struct RatFn {
    QPoly num, den;

    int degree() const { return num.is_zero() ? 0 : num.deg() - den.deg(); }
    bool is_zero() const { return num.is_zero(); }
    bool is_homogeneous() const { return num.is_homogeneous() && den.is_homogeneous(); }
    RingP ring() const { return num.ring; }

    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;
    RatFn operator-() const;
    bool operator==(const RatFn& o) const;  // cross-multiplied
};

RatFn make_ratfn(QPoly num, QPoly den);
RatFn ratfn_of(QPoly p);
std::string ratfn_str(const RatFn& f);
RatFn ratfn_pow(const RatFn& f, long e);

// Gradient with the quotient rule; component i carries the ring's pairing
// weight 1/(2 - delta) so symmetric-matrix rings follow the trace convention.
std::vector<RatFn> gradient(const RatFn& F);
// Plain partial derivatives of a polynomial (no pairing weight).
std::vector<QPoly> plain_gradient(const QPoly& p);

// sum_i x_i dF/dx_i == deg(F) * F as an exact identity.
bool euler_check(const RatFn& F);

// Componentwise grad(Phi)/Phi.
std::vector<RatFn> grad_log(const RatFn& phi);

// Composition with degree-<=1 images (exact).
QPoly substitute_linear(const QPoly& p, const RingP& tgt, const std::vector<QPoly>& images);

}  // namespace gmld
