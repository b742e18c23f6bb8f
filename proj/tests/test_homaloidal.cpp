#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homaloidal.hpp"
#include "mld.hpp"

using namespace gmld;

namespace {

// Phi of the rank-one quadric curve: 4 (s22 / (s11 s22 - s12^2 + s22^2))^2
RatFn phi_quadric_curve(const SymSpace& s2) {
    QPoly s11 = QPoly::var(s2.dual, 0), s12 = QPoly::var(s2.dual, 1), s22 = QPoly::var(s2.dual, 2);
    QPoly gd = s11 * s22 - s12 * s12 + s22 * s22;
    return make_ratfn((s22 * s22).scaled(Rat(4)), gd * gd);
}

}  // namespace

TEST_CASE("grad_log basics") {
    RingP r = make_ring({"u"});
    RatFn phi = make_ratfn(QPoly::constant(r, 1), QPoly::var(r, 0));
    auto g = grad_log(phi);
    REQUIRE(g.size() == 1);
    CHECK(g[0] == make_ratfn(QPoly::constant(r, -1), QPoly::var(r, 0)));
    // scaling drops out of the logarithmic derivative
    RatFn phi2 = phi;
    phi2.num = phi2.num.scaled(Rat(7));
    CHECK(grad_log(phi2)[0] == g[0]);
}

TEST_CASE("MLE of the quadric-curve solution is proportional to the known matrix") {
    SymSpace s2 = make_symspace(2);
    RatFn phi = phi_quadric_curve(s2);
    auto c = mle_numerators(phi);
    QPoly s12 = QPoly::var(s2.dual, 1), s22 = QPoly::var(s2.dual, 2);
    // expected direction (s22^2, -s12 s22, s12^2 + s22^2)
    QPoly e0 = s22 * s22, e1 = -(s12 * s22), e2 = s12 * s12 + s22 * s22;
    CHECK(c[0] * e1 == c[1] * e0);
    CHECK(c[0] * e2 == c[2] * e0);
    CHECK(c[1] * e2 == c[2] * e1);
}

TEST_CASE("pde_check worked examples") {
    // one variable: F = x, Phi = 1/u
    RingP rx = make_ring({"x"});
    RingP ru = make_ring({"u"});
    RatFn phi1 = make_ratfn(QPoly::constant(ru, 1), QPoly::var(ru, 0));
    CHECK(pde_check(ratfn_of(QPoly::var(rx, 0)), phi1));

    // the quadric curve solution against det
    SymSpace s2 = make_symspace(2);
    RatFn phi = phi_quadric_curve(s2);
    CHECK(pde_check(ratfn_of(sym_det(s2.primal)), phi));

    // the PDE pins the normalization: 2*Phi fails
    RatFn twice = phi;
    twice.num = twice.num.scaled(Rat(2));
    CHECK(!pde_check(ratfn_of(sym_det(s2.primal)), twice));
}

TEST_CASE("pde_check for the dual surface of the space cubic curve") {
    RingP r = make_ring({"x0", "x1", "x2", "x3"});
    RingP d = make_ring({"u0", "u1", "u2", "u3"});
    QPoly u0 = QPoly::var(d, 0), u1 = QPoly::var(d, 1), u2 = QPoly::var(d, 2), u3 = QPoly::var(d, 3);
    RatFn phi = make_ratfn(u1 * u2, (u1 * u3 - u2 * u2) * (u0 * u2 - u1 * u1));
    RatFn F = ratfn_of(QPoly::var(r, 0) * QPoly::var(r, 3));
    CHECK(pde_check(F, phi));
    CHECK(phi.degree() == -2);
    auto sol = make_homaloidal(phi, F, "user-supplied");
    CHECK(sol.provenance == "user-supplied");
}

TEST_CASE("degree law is enforced") {
    RingP rx = make_ring({"x"});
    RingP ru = make_ring({"u"});
    RatFn phi = make_ratfn(QPoly::constant(ru, 1), QPoly::var(ru, 0));
    RatFn F = ratfn_of(QPoly::var(rx, 0) * QPoly::var(rx, 0));  // degree 2, but deg(phi) = -1
    CHECK_THROWS_AS(make_homaloidal(phi, F, "user-supplied"), Error);
}

TEST_CASE("phi_from_alpha on the cuspidal dual") {
    RingP r = make_ring({"x", "y", "z"});
    RingP d = make_ring({"u", "v", "w"});
    QPoly x = QPoly::var(r, 0), y = QPoly::var(r, 1), z = QPoly::var(r, 2);
    VarietySpec X = make_variety(r, {y * y * z - poly_pow(x + z.scaled(Rat(2)), 3)});

    auto sol = phi_from_alpha(X, z.scaled(Rat(8)), d);
    QPoly u = QPoly::var(d, 0), v = QPoly::var(d, 1), w = QPoly::var(d, 2);
    QPoly gd = poly_pow(u, 3).scaled(Rat(4)) - (u * v * v).scaled(Rat(54)) +
               (v * v * w).scaled(Rat(27));
    CHECK(sol.phi == make_ratfn((v * v).scaled(Rat(216)), gd));
    CHECK(sol.provenance == "from-alpha");

    // a generic tangent line has multiplicity 1 < deg - 1 = 2: rejected
    CHECK_THROWS_AS(phi_from_alpha(X, x + y + z, d), Error);
}

TEST_CASE("phi_from_alpha on the quadric curve matches the classifier base") {
    SymSpace s2 = make_symspace(2);
    QPoly det = sym_det(s2.primal);
    QPoly k11 = QPoly::var(s2.primal, 0);
    VarietySpec X = make_variety(s2.primal, {det - k11 * k11});
    auto sol = phi_from_alpha(X, k11, s2.dual);
    QPoly s11 = QPoly::var(s2.dual, 0), s12 = QPoly::var(s2.dual, 1), s22 = QPoly::var(s2.dual, 2);
    QPoly gd = s11 * s22 - s12 * s12 + s22 * s22;
    CHECK(sol.phi == make_ratfn(s22, gd));
    // deg(F)^deg(F) * phi^deg(F) recovers the full solution
    RatFn full = ratfn_pow(sol.phi, 2);
    full.num = full.num.scaled(Rat(4));
    CHECK(pde_check(ratfn_of(det), full));
}

TEST_CASE("join multiplies solutions on disjoint rings") {
    SymSpace s2 = make_symspace(2);
    QPoly det2 = sym_det(s2.primal);
    HomaloidalSolution a = make_homaloidal(phi_quadric_curve(s2), ratfn_of(det2), "user-supplied");

    RingP rp = make_ring({"k33"});
    RingP rd = make_ring({"u_k33"});
    HomaloidalSolution b = make_homaloidal(
        make_ratfn(QPoly::constant(rd, 1), QPoly::var(rd, 0)), ratfn_of(QPoly::var(rp, 0)),
        "user-supplied");

    auto joined = phi_join(a, b);
    CHECK(joined.provenance == "join");
    // Phiternary = Phi * (1 / s33); F = det2 * k33 is det3 restricted to the block space
    RingP jd = joined.phi.ring();
    CHECK(jd->nvars() == 4);
    RatFn expect{embed(a.phi.num, jd, 0), embed(a.phi.den, jd, 0) * QPoly::var(jd, 3)};
    CHECK(joined.phi == expect);
    CHECK(pde_check(joined.F, joined.phi));

    // joining rings with clashing names is refused
    CHECK_THROWS_AS(phi_join(a, a), Error);
}

TEST_CASE("associated variety recovers the model") {
    SymSpace s2 = make_symspace(2);
    QPoly det = sym_det(s2.primal);
    QPoly k11 = QPoly::var(s2.primal, 0);
    auto assoc = associated_variety(phi_quadric_curve(s2), s2.primal);
    CHECK(ideal_equal_saturated(assoc, {det - k11 * k11}, s2.primal));
}

TEST_CASE("associated variety of the surface solution is the quartic") {
    RingP r = make_ring({"x0", "x1", "x2", "x3"});
    RingP d = make_ring({"u0", "u1", "u2", "u3"});
    QPoly u1 = QPoly::var(d, 1), u2 = QPoly::var(d, 2);
    RatFn phi = make_ratfn(u1 * u2, (u1 * QPoly::var(d, 3) - u2 * u2) *
                                        (QPoly::var(d, 0) * u2 - u1 * u1));
    auto assoc = associated_variety(phi, r);
    QPoly x0 = QPoly::var(r, 0), x1 = QPoly::var(r, 1), x2 = QPoly::var(r, 2), x3 = QPoly::var(r, 3);
    QPoly quartic = x1 * x1 * x2 * x2 - (x0 * poly_pow(x2, 3)).scaled(Rat(4)) -
                    (poly_pow(x1, 3) * x3).scaled(Rat(4)) + (x0 * x1 * x2 * x3).scaled(Rat(18)) -
                    (x0 * x0 * x3 * x3).scaled(Rat(27));
    CHECK(ideal_equal_saturated(assoc, {quartic}, r));
}

TEST_CASE("the surface solution factors into two linear-likelihood solutions") {
    RingP r = make_ring({"x0", "x1", "x2", "x3"});
    RingP d = make_ring({"u0", "u1", "u2", "u3"});
    QPoly u0 = QPoly::var(d, 0), u1 = QPoly::var(d, 1), u2 = QPoly::var(d, 2), u3 = QPoly::var(d, 3);
    RatFn f1 = make_ratfn(u2, u0 * u2 - u1 * u1);
    RatFn f2 = make_ratfn(u1, u1 * u3 - u2 * u2);
    CHECK(pde_check(ratfn_of(QPoly::var(r, 0)), f1));
    CHECK(pde_check(ratfn_of(QPoly::var(r, 3)), f2));
    RatFn prod = f1 * f2;
    CHECK(pde_check(ratfn_of(QPoly::var(r, 0) * QPoly::var(r, 3)), prod));
}

TEST_CASE("associated variety of the one-variable solution is the whole space") {
    RingP rp = make_ring({"x"});
    RingP rd = make_ring({"u"});
    RatFn phi = make_ratfn(QPoly::constant(rd, 1), QPoly::var(rd, 0));
    auto assoc = associated_variety(phi, rp);
    CHECK(assoc.empty());
}
