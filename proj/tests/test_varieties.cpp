#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multideg.hpp"
#include "symspace.hpp"

using namespace gmld;

namespace {

RingP dual_of_plain(const RingP& r) {
    std::vector<std::string> names;
    for (auto& n : r->names) names.push_back("u_" + n);
    return make_ring_weighted(names, r->pairw);
}

VarietySpec cuspidal_cubic() {
    RingP r = make_ring({"x", "y", "z"});
    QPoly x = QPoly::var(r, 0), y = QPoly::var(r, 1), z = QPoly::var(r, 2);
    return make_variety(r, {y * y * z - poly_pow(x + z.scaled(Rat(2)), 3)});
}

}  // namespace

TEST_CASE("jacobian rows are plain gradients") {
    RingP r = make_ring({"x0", "x1", "x2"});
    QPoly x0 = QPoly::var(r, 0), x1 = QPoly::var(r, 1), x2 = QPoly::var(r, 2);
    VarietySpec X = make_variety(r, {x0 * x1 - x2 * x2 - x0 * x0});
    auto J = jacobian(X);
    REQUIRE(J.size() == 1);
    CHECK(J[0][0] == x1 - x0.scaled(Rat(2)));
    CHECK(J[0][1] == x0);
    CHECK(J[0][2] == x2.scaled(Rat(-2)));

    VarietySpec L = make_variety(r, {x0 + x1});
    CHECK(jacobian(L)[0][0].is_constant());
    VarietySpec two = make_variety(r, {x0 * x1 - x2 * x2, x0 * x0 - x1 * x2});
    CHECK(jacobian(two).size() == 2);
}

TEST_CASE("singular locus") {
    RingP r = make_ring({"x", "y", "z"});
    QPoly x = QPoly::var(r, 0), y = QPoly::var(r, 1), z = QPoly::var(r, 2);

    // smooth conic: no singular points at all
    VarietySpec conic = make_variety(r, {x * z - y * y});
    auto s = singular_locus(conic);
    std::vector<QPoly> irr = {x, y, z};
    CHECK(buchberger(saturate(s, r, irr, nullptr), grevlex_order(), nullptr).is_unit());

    // cuspidal cubic y^2 z = x^3: the cusp (0:0:1)
    VarietySpec cusp = make_variety(r, {y * y * z - poly_pow(x, 3)});
    auto sc = singular_locus(cusp);
    CHECK(radical_membership(x, sc, r, nullptr));
    CHECK(radical_membership(y, sc, r, nullptr));
    CHECK(!radical_membership(z, sc, r, nullptr));

    // hyperplane: empty singular locus
    VarietySpec hyp = make_variety(r, {x});
    auto sh = singular_locus(hyp);
    CHECK(buchberger(sh, grevlex_order(), nullptr).is_unit());
}

TEST_CASE("dual of a smooth conic") {
    RingP r = make_ring({"x0", "x1", "x2"});
    RingP d = dual_of_plain(r);
    QPoly x0 = QPoly::var(r, 0), x1 = QPoly::var(r, 1), x2 = QPoly::var(r, 2);
    VarietySpec X = make_variety(r, {x0 * x2 - x1 * x1});
    auto dv = dual_variety(X, d);
    REQUIRE(dv.size() == 1);
    // oracle: the gradient parametrization (x2, -2 x1, x0) satisfies u1^2 - 4 u0 u2 = 0
    QPoly u0 = QPoly::var(d, 0), u1 = QPoly::var(d, 1), u2 = QPoly::var(d, 2);
    QPoly expect = u1 * u1 - (u0 * u2).scaled(Rat(4));
    CHECK(primitive_part(dv[0]) == primitive_part(expect));
}

TEST_CASE("dual of the shifted cuspidal cubic") {
    VarietySpec X = cuspidal_cubic();
    RingP d = dual_of_plain(X.ring);
    auto dv = dual_variety(X, d);
    REQUIRE(dv.size() == 1);
    QPoly u = QPoly::var(d, 0), v = QPoly::var(d, 1), w = QPoly::var(d, 2);
    QPoly expect = poly_pow(u, 3).scaled(Rat(4)) - (u * v * v).scaled(Rat(54)) + (v * v * w).scaled(Rat(27));
    CHECK(primitive_part(dv[0]) == primitive_part(expect));
}

TEST_CASE("dual of a symmetric-space conic in trace coordinates") {
    SymSpace s2 = make_symspace(2);
    QPoly det = sym_det(s2.primal);
    QPoly k11 = QPoly::var(s2.primal, 0);
    VarietySpec X = make_variety(s2.primal, {det - k11 * k11});
    auto dv = dual_variety(X, s2.dual);
    REQUIRE(dv.size() == 1);
    QPoly s11 = QPoly::var(s2.dual, 0), s12 = QPoly::var(s2.dual, 1), s22 = QPoly::var(s2.dual, 2);
    CHECK(primitive_part(dv[0]) == primitive_part(s11 * s22 - s12 * s12 + s22 * s22));
}

TEST_CASE("dual of the rational normal space cubic is the quartic surface") {
    RingP d = make_ring({"u0", "u1", "u2", "u3"});
    RingP r = make_ring({"x0", "x1", "x2", "x3"});
    QPoly u0 = QPoly::var(d, 0), u1 = QPoly::var(d, 1), u2 = QPoly::var(d, 2), u3 = QPoly::var(d, 3);
    VarietySpec C = make_variety(d, {u2 * u2 - u1 * u3, u1 * u2 - u0 * u3, u1 * u1 - u0 * u2});
    auto dv = dual_variety(C, r);
    REQUIRE(dv.size() == 1);
    QPoly x0 = QPoly::var(r, 0), x1 = QPoly::var(r, 1), x2 = QPoly::var(r, 2), x3 = QPoly::var(r, 3);
    QPoly quartic = x1 * x1 * x2 * x2 - (x0 * poly_pow(x2, 3)).scaled(Rat(4)) -
                    (poly_pow(x1, 3) * x3).scaled(Rat(4)) + (x0 * x1 * x2 * x3).scaled(Rat(18)) -
                    (x0 * x0 * x3 * x3).scaled(Rat(27));
    CHECK(primitive_part(dv[0]) == primitive_part(quartic));
}

TEST_CASE("gradient graph of det2 is the adjugate correspondence") {
    SymSpace s2 = make_symspace(2);
    BiRing b = make_biring(s2.primal, s2.dual);
    auto graph = gradient_graph_ideal(ratfn_of(sym_det(s2.primal)), b);
    // a point (K, adj K) lies on the graph; an unrelated pair does not
    std::vector<Rat> on = {Rat(2), Rat(3), Rat(5), /* adj: */ Rat(5), Rat(-3), Rat(2)};
    std::vector<Rat> off = {Rat(2), Rat(3), Rat(5), Rat(1), Rat(0), Rat(0)};
    bool on_ok = true, off_ok = true;
    for (auto& g : graph) {
        on_ok &= poly_eval(g, on).is_zero();
        off_ok &= poly_eval(g, off).is_zero();
    }
    CHECK(on_ok);
    CHECK(!off_ok);
}

TEST_CASE("dual of a hyperplane is a point") {
    RingP r = make_ring({"x0", "x1", "x2"});
    RingP d = dual_of_plain(r);
    VarietySpec X = make_variety(r, {QPoly::var(r, 0)});
    auto dv = dual_variety(X, d);
    auto gb = buchberger(dv, grevlex_order(), nullptr);
    CHECK(normal_form(QPoly::var(d, 1), gb).is_zero());
    CHECK(normal_form(QPoly::var(d, 2), gb).is_zero());
    CHECK(!normal_form(QPoly::var(d, 0), gb).is_zero());
}

TEST_CASE("bi-duality round trip") {
    RingP r = make_ring({"x", "y", "z"});
    RingP d = dual_of_plain(r);
    QPoly x = QPoly::var(r, 0), y = QPoly::var(r, 1), z = QPoly::var(r, 2);
    for (auto& g : {x * z - y * y, y * y * z - poly_pow(x + z.scaled(Rat(2)), 3)}) {
        VarietySpec X = make_variety(r, {g});
        auto dv = dual_variety(X, d);
        VarietySpec Xd = make_variety(d, dv);
        auto back = dual_variety(Xd, r);
        CHECK(ideal_equal(back, X.gens, r, nullptr));
    }
}

TEST_CASE("multiplicity at a point") {
    RingP d = make_ring({"u", "v", "w"});
    QPoly u = QPoly::var(d, 0), v = QPoly::var(d, 1), w = QPoly::var(d, 2);
    QPoly g = poly_pow(u, 3).scaled(Rat(4)) - (u * v * v).scaled(Rat(54)) + (v * v * w).scaled(Rat(27));
    CHECK(multiplicity_at_point(g, {Rat(0), Rat(0), Rat(1)}) == 2);  // the cusp
    QPoly conic = u * w - v * v;
    CHECK(multiplicity_at_point(conic, {Rat(0), Rat(0), Rat(1)}) == 1);
    CHECK(multiplicity_at_point(conic, {Rat(1), Rat(1), Rat(0)}) == 0);
    // mult >= 1 iff the point lies on the curve
    CHECK((multiplicity_at_point(g, {Rat(1), Rat(1), Rat(1)}) >= 1) ==
          poly_eval(g, {Rat(1), Rat(1), Rat(1)}).is_zero());
}

TEST_CASE("polar degrees of plane curves") {
    RingP r = make_ring({"x", "y", "z"});
    RingP d = dual_of_plain(r);
    QPoly x = QPoly::var(r, 0), y = QPoly::var(r, 1), z = QPoly::var(r, 2);
    CountOptions opt;
    opt.seed = 5;

    VarietySpec conic = make_variety(r, {x * z - y * y});
    auto pd = polar_degrees(conic, d, opt);
    CHECK(pd.entries == std::vector<long>{2, 2});

    // smooth cubic: dual degree 6 first, curve degree 3 second
    VarietySpec cubic = make_variety(r, {poly_pow(x, 3) + poly_pow(y, 3) + poly_pow(z, 3) + x * y * z});
    auto pc = polar_degrees(cubic, d, opt);
    CHECK(pc.entries == std::vector<long>{6, 3});

    // cuspidal cubic: both polar degrees are 3
    auto pk = polar_degrees(cuspidal_cubic(), dual_of_plain(r), opt);
    CHECK(pk.entries == std::vector<long>{3, 3});
}

TEST_CASE("polar degrees of a hyperplane concentrate in the top index") {
    RingP r = make_ring({"x0", "x1", "x2", "x3"});
    RingP d = dual_of_plain(r);
    VarietySpec X = make_variety(r, {QPoly::var(r, 0) + QPoly::var(r, 2)});
    CountOptions opt;
    opt.seed = 11;
    auto pd = polar_degrees(X, d, opt);
    CHECK(pd.entries == std::vector<long>{0, 0, 1});
}

TEST_CASE("gradient multidegrees of small cases") {
    RingP r = make_ring({"x0", "x1", "x2"});
    RingP d = dual_of_plain(r);
    QPoly x0 = QPoly::var(r, 0), x1 = QPoly::var(r, 1), x2 = QPoly::var(r, 2);
    CountOptions opt;
    opt.seed = 23;

    // nondegenerate quadric: the gradient is a linear isomorphism
    RatFn Q = ratfn_of(x0 * x0 + x1 * x1 + x2 * x2 + x0 * x1);
    auto mu = gradient_multidegrees(Q, d, opt);
    CHECK(mu.entries == std::vector<long>{1, 1, 1});

    // linear form: graph is P^2 x {point}
    RatFn alpha = ratfn_of(x0 + x1);
    auto ml = gradient_multidegrees(alpha, d, opt);
    CHECK(ml.entries == std::vector<long>{1, 0, 0});

    // det on S^2 through the trace pairing is also a linear isomorphism
    SymSpace s2 = make_symspace(2);
    auto md = gradient_multidegrees(ratfn_of(sym_det(s2.primal)), s2.dual, opt);
    CHECK(md.entries == std::vector<long>{1, 1, 1});
}

TEST_CASE("F-generality emptiness half") {
    SymSpace s2 = make_symspace(2);
    QPoly det = sym_det(s2.primal);
    QPoly k11 = QPoly::var(s2.primal, 0);
    RatFn F = ratfn_of(det);

    // tangency with V(det) at [[0,0],[0,1]] breaks F-generality
    VarietySpec X = make_variety(s2.primal, {det - k11 * k11});
    CHECK(!f_general_emptiness(X, F, s2.dual));

    // scaling F by a constant changes nothing
    CHECK(!f_general_emptiness(X, ratfn_of(det.scaled(Rat(5))), s2.dual));

    // a random coordinate change restores it
    VarietySpec Xg = perturb(X, 42);
    CHECK(f_general_emptiness(Xg, F, s2.dual));

    // generic conic against a generic quadric F
    RingP r = make_ring({"x", "y", "z"});
    QPoly x = QPoly::var(r, 0), y = QPoly::var(r, 1), z = QPoly::var(r, 2);
    VarietySpec C = make_variety(r, {x * x + (y * y).scaled(Rat(2)) + (z * z).scaled(Rat(3)) + x * y});
    RatFn G = ratfn_of(x * x + y * y + z * z + (x * z).scaled(Rat(2)) + y * z);
    CHECK(f_general_emptiness(C, G, dual_of_plain(r)));
}

TEST_CASE("perturbation basics") {
    SymSpace s2 = make_symspace(2);
    QPoly det = sym_det(s2.primal);
    QPoly k11 = QPoly::var(s2.primal, 0);
    VarietySpec X = make_variety(s2.primal, {det - k11 * k11});
    VarietySpec same = perturb(X, 0);
    CHECK(ideal_equal(same.gens, X.gens, X.ring, nullptr));
    VarietySpec moved = perturb(X, 9);
    REQUIRE(moved.gens.size() == 1);
    CHECK(moved.gens[0].deg() == 2);
}

TEST_CASE("perturbation preserves polar degrees") {
    RingP r = make_ring({"x", "y", "z"});
    RingP d = dual_of_plain(r);
    QPoly x = QPoly::var(r, 0), y = QPoly::var(r, 1), z = QPoly::var(r, 2);
    VarietySpec X = make_variety(r, {x * z - y * y});
    CountOptions opt;
    opt.seed = 31;
    auto base = polar_degrees(X, d, opt).entries;
    for (uint64_t seed : {(uint64_t)3, (uint64_t)14}) {
        auto moved = polar_degrees(perturb(X, seed), d, opt).entries;
        CHECK(moved == base);
    }
}
