#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ideal_ops.hpp"
#include "ratfn.hpp"
#include "symspace.hpp"

using namespace gmld;

static QPoly parse_mono(RingP r, std::initializer_list<std::pair<int, int>> exps, long c = 1) {
    Expvec m;
    for (auto [v, e] : exps) {
        m.e[v] = e;
        m.deg += e;
    }
    return QPoly::term(r, m, Rat(c));
}

TEST_CASE("rational arithmetic stays canonical") {
    Rat a(6, 4);
    CHECK(a.str() == "3/2");
    CHECK((a * Rat(2, 3)).str() == "1");
    CHECK((Rat(1, 3) + Rat(1, 6)).str() == "1/2");
    CHECK_THROWS_AS(Rat(1, 0), Error);
}

TEST_CASE("prime field arithmetic") {
    Zp a(5, 7), b(4, 7);
    CHECK((a + b).v == 2);
    CHECK((a * b).v == 6);
    CHECK((a / b).v == 3);  // 5 * 4^{-1} = 5*2 = 10 = 3
    CHECK((a - a).is_zero());
    CHECK(is_prime_u64(32003));
    CHECK(!is_prime_u64(4));
}

TEST_CASE("monomial order comparisons") {
    // grevlex: x^2 > xy > y^2 > x > y (x=0, y=1)
    auto g = grevlex_order();
    Expvec x2 = Expvec::var(0, 2), xy = Expvec::var(0) * Expvec::var(1), y2 = Expvec::var(1, 2);
    CHECK(g->cmp(x2, xy, 2) > 0);
    CHECK(g->cmp(xy, y2, 2) > 0);
    CHECK(g->cmp(y2, Expvec::var(0), 2) > 0);
    auto l = lex_order();
    // lex: x > y^5
    CHECK(l->cmp(Expvec::var(0), Expvec::var(1, 5), 2) > 0);
    // block eliminating var 0: any power of x beats pure-y monomials
    auto b = block_order({0});
    CHECK(b->cmp(Expvec::var(0), Expvec::var(1, 9), 2) > 0);
    auto w = weighted_order({3, 1});
    CHECK(w->cmp(Expvec::var(0), Expvec::var(1, 2), 2) > 0);
}

TEST_CASE("polynomial ring axioms on random triples") {
    RingP r = make_ring({"a", "b", "c", "d"});
    Rng rng(12345);
    auto random_poly = [&]() {
        QPoly p = QPoly::zero(r);
        int terms = 1 + rng.below(5);
        for (int t = 0; t < terms; ++t) {
            Expvec m;
            for (int v = 0; v < 4; ++v) {
                int e = rng.below(3);
                m.e[v] = e;
                m.deg += e;
            }
            long c = (long)rng.below(19) - 9;
            p = p + QPoly::term(r, m, Rat(c));
        }
        return p;
    };
    for (int it = 0; it < 1000; ++it) {
        QPoly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("rational identities survive reduction mod p") {
    RingP r = make_ring({"a", "b", "c"});
    RingP rp = to_zp(r, 32003);
    Rng rng(99);
    for (int it = 0; it < 200; ++it) {
        QPoly a = parse_mono(r, {{0, (int)rng.below(3)}, {1, (int)rng.below(2)}}, (long)rng.below(9) + 1);
        QPoly b = parse_mono(r, {{1, (int)rng.below(3)}, {2, (int)rng.below(2)}}, (long)rng.below(9) - 4);
        QPoly lhs = (a + b) * (a - b);
        QPoly rhs = a * a - b * b;
        CHECK(reduce_poly(lhs, rp) == reduce_poly(rhs, rp));
    }
}

TEST_CASE("poly_eval worked cases") {
    RingP r = make_ring({"x0", "x1", "x2"});
    QPoly q = QPoly::var(r, 0) * QPoly::var(r, 1) - QPoly::var(r, 2) * QPoly::var(r, 2);
    CHECK(poly_eval(q, {Rat(1), Rat(1), Rat(1)}).is_zero());
    QPoly cube = poly_pow(QPoly::var(r, 0), 3);
    CHECK(poly_eval(cube, {Rat(2), Rat(0), Rat(0)}) == Rat(8));

    SymSpace s2 = make_symspace(2);
    QPoly det = sym_det(s2.primal);
    CHECK(poly_eval(det, {Rat(1), Rat(0), Rat(1)}) == Rat(1));  // identity matrix
}

TEST_CASE("gradient follows the trace-pairing convention") {
    SymSpace s2 = make_symspace(2);
    QPoly det = sym_det(s2.primal);
    QPoly k11 = QPoly::var(s2.primal, 0), k12 = QPoly::var(s2.primal, 1), k22 = QPoly::var(s2.primal, 2);
    RatFn F = ratfn_of(det - k11 * k11);
    auto g = gradient(F);
    CHECK(g[0].num == k22 - k11.scaled(Rat(2)));
    CHECK(g[1].num == -k12);
    CHECK(g[2].num == k11);
    // gradient(det) = adjugate positions
    auto gd = gradient(ratfn_of(det));
    CHECK(gd[0].num == k22);
    CHECK(gd[1].num == -k12);
    CHECK(gd[2].num == k11);
}

TEST_CASE("plain gradient example") {
    RingP r = make_ring({"x0", "x1", "x2"});
    QPoly F = QPoly::var(r, 0) * QPoly::var(r, 1) - QPoly::var(r, 2) * QPoly::var(r, 2);
    auto g = gradient(ratfn_of(F));
    CHECK(g[0].num == QPoly::var(r, 1));
    CHECK(g[1].num == QPoly::var(r, 0));
    CHECK(g[2].num == QPoly::var(r, 2).scaled(Rat(-2)));
}

TEST_CASE("quotient rule") {
    RingP r = make_ring({"x0", "x1"});
    RatFn F = make_ratfn(QPoly::var(r, 0), QPoly::var(r, 1));
    auto g = gradient(F);
    CHECK(g[0] == make_ratfn(QPoly::constant(r, 1), QPoly::var(r, 1)));
    CHECK(g[1] == make_ratfn(-QPoly::var(r, 0), QPoly::var(r, 1) * QPoly::var(r, 1)));
}

TEST_CASE("euler identity") {
    SymSpace s2 = make_symspace(2);
    RatFn det = ratfn_of(sym_det(s2.primal));
    CHECK(euler_check(det));
    CHECK(det.degree() == 2);

    RingP r = make_ring({"x0", "x1"});
    QPoly inhom = QPoly::var(r, 0) * QPoly::var(r, 0) + QPoly::var(r, 1);
    CHECK(!euler_check(ratfn_of(inhom)));

    RatFn deg0 = make_ratfn(QPoly::var(r, 0), QPoly::var(r, 1));
    CHECK(euler_check(deg0));
    CHECK(deg0.degree() == 0);
}

TEST_CASE("euler identity across the homogeneous corpus") {
    SymSpace s3 = make_symspace(3);
    QPoly det3 = sym_det(s3.primal);
    QPoly k11 = QPoly::var(s3.primal, 0), k23 = QPoly::var(s3.primal, 4);
    std::vector<RatFn> corpus = {
        ratfn_of(det3),
        ratfn_of(poly_pow(k11, 3) - det3),
        make_ratfn(det3, k11 * k23),
        make_ratfn(poly_pow(k11, 2), k23),
        ratfn_of(k11.scaled(Rat(5, 3)) + k23),
    };
    for (auto& F : corpus) {
        CHECK(euler_check(F));
        CHECK(F.is_homogeneous());
    }
}

TEST_CASE("substitute_linear composes exactly") {
    RingP uvw = make_ring({"u", "v", "w"});
    RingP uvwt = make_ring({"u", "v", "w", "t"});
    QPoly u = QPoly::var(uvw, 0), v = QPoly::var(uvw, 1), w = QPoly::var(uvw, 2);
    QPoly g = poly_pow(u, 3).scaled(Rat(4)) - (u * v * v).scaled(Rat(54)) + (v * v * w).scaled(Rat(27));
    std::vector<QPoly> images = {QPoly::var(uvwt, 0), QPoly::var(uvwt, 1),
                                 QPoly::var(uvwt, 2) + QPoly::var(uvwt, 3)};
    QPoly got = substitute_linear(g, uvwt, images);
    QPoly ut = QPoly::var(uvwt, 0), vt = QPoly::var(uvwt, 1), wt = QPoly::var(uvwt, 2),
          tt = QPoly::var(uvwt, 3);
    QPoly want = poly_pow(ut, 3).scaled(Rat(4)) - (ut * vt * vt).scaled(Rat(54)) +
                 (vt * vt * wt).scaled(Rat(27)) + (vt * vt * tt).scaled(Rat(27));
    CHECK(got == want);

    // identity substitution
    std::vector<QPoly> id = {u, v, w};
    CHECK(substitute_linear(g, uvw, id) == g);
    // collapse to zero
    RingP one = make_ring({"z"});
    QPoly x2 = poly_pow(QPoly::var(uvw, 0), 2);
    std::vector<QPoly> zero3 = {QPoly::zero(one), QPoly::zero(one), QPoly::zero(one)};
    CHECK(substitute_linear(x2, one, zero3).is_zero());
}

TEST_CASE("multivariate gcd") {
    RingP r = make_ring({"x", "y"});
    QPoly x = QPoly::var(r, 0), y = QPoly::var(r, 1);
    CHECK(poly_gcd(x * y, x * x) == x);
    QPoly s = x + y, d = x - y;
    CHECK(poly_gcd(s * s, s * d) == s);
    QPoly g = poly_gcd(s * d.scaled(Rat(3)), s.scaled(Rat(5)));
    CHECK(g == s);
    // reduction happens at construction
    RatFn f = make_ratfn(-x, x * x);
    CHECK(f.num == QPoly::constant(r, -1));
    CHECK(f.den == x);
}

TEST_CASE("canonical printing") {
    RingP r = make_ring({"u", "v", "w"});
    QPoly u = QPoly::var(r, 0), v = QPoly::var(r, 1), w = QPoly::var(r, 2);
    QPoly g = poly_pow(u, 3).scaled(Rat(4)) - (u * v * v).scaled(Rat(54)) + (v * v * w).scaled(Rat(27));
    CHECK(poly_str(g) == "4*u^3 - 54*u*v^2 + 27*v^2*w");
    CHECK(poly_str(QPoly::zero(r)) == "0");
    CHECK(poly_str(QPoly::constant(r, -3).scaled(Rat(1, 2))) == "-3/2");
    CHECK(poly_str(u - v) == "u - v");
}
