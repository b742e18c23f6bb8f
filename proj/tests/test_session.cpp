#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "commands.hpp"
#include "symspace.hpp"

using namespace gmld;

TEST_CASE("symmetric session transcribes the worked curve") {
    Session s = parse_session("ring sym 2; F = det; X = ideal(det - k11^2);");
    CHECK(s.sym_m == 2);
    CHECK(s.ring->names == std::vector<std::string>{"k11", "k12", "k22"});
    CHECK(s.dual->names == std::vector<std::string>{"s11", "s12", "s22"});
    RatFn F = s.require_F();
    CHECK(F.num == sym_det(s.ring));
    auto X = s.require_X();
    REQUIRE(X.gens.size() == 1);
    QPoly k11 = QPoly::var(s.ring, 0);
    CHECK(X.gens[0] == sym_det(s.ring) - k11 * k11);
}

TEST_CASE("minimal plain session") {
    Session s = parse_session("ring x; F = x;");
    CHECK(s.ring->names == std::vector<std::string>{"x"});
    CHECK(s.dual->names == std::vector<std::string>{"u_x"});
    CHECK(s.require_F().num == QPoly::var(s.ring, 0));
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse_session("ring x; F = x +;");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        std::string msg = e.what();
        CHECK(msg.find("line 1") != std::string::npos);
        CHECK(msg.find("col 16") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_session("ring x; F = y;"), Error);           // unbound name
    CHECK_THROWS_AS(parse_session("F = 1;"), Error);                   // no ring yet
    CHECK_THROWS_AS(parse_session("ring x; ring y;"), Error);          // double ring
    CHECK_THROWS_AS(parse_session("ring det;"), Error);                // reserved word
    CHECK_THROWS_AS(parse_session("ring x; X = ideal(u_x);"), Error);  // dual var in ideal
    CHECK_THROWS_AS(parse_session("ring x; F = x; F = x;"), Error);    // rebinding
    CHECK_THROWS_AS(parse_session("ring x; F = x + u_x;"), Error);     // mixed rings
}

TEST_CASE("expressions bind exactly like the displayed formulas") {
    Session s = parse_session(
        "ring sym 2;\n"
        "A = matrix[[1, -2], [-2, 4]];\n"
        "F = trace(A*K)^2 - 1/2*det;\n"
        "Phi = trace(adj(A)*S) / s11^2;\n"
        "point = [0, 1/3, -2];\n");
    QPoly k11 = QPoly::var(s.ring, 0), k12 = QPoly::var(s.ring, 1), k22 = QPoly::var(s.ring, 2);
    QPoly tr = k11 - k12.scaled(Rat(4)) + k22.scaled(Rat(4));
    QPoly expect = tr * tr - sym_det(s.ring).scaled(Rat(1, 2));
    CHECK(s.require_F() == make_ratfn(expect, QPoly::constant(s.ring, 1)));
    // adj([[1,-2],[-2,4]]) = [[4,2],[2,1]]: trace pairing gives 4 s11 + 4 s12 + s22
    QPoly s11 = QPoly::var(s.dual, 0), s12 = QPoly::var(s.dual, 1), s22 = QPoly::var(s.dual, 2);
    RatFn phi = s.require_phi();
    CHECK(phi == make_ratfn(s11.scaled(Rat(4)) + s12.scaled(Rat(4)) + s22, s11 * s11));
    auto pt = s.vec("point");
    CHECK(pt[1] == Rat(1, 3));
    CHECK(pt[2] == Rat(-2));
    auto A = s.matrix("A");
    CHECK(A[0][1] == Rat(-2));
}

TEST_CASE("inhomogeneous F is rejected with its terms") {
    Session s = parse_session("ring x y; F = x^2 + y;");
    try {
        s.require_F();
        FAIL("expected rejection");
    } catch (const Error& e) {
        std::string msg = e.what();
        CHECK(msg.find("x^2") != std::string::npos);
        CHECK(msg.find("y") != std::string::npos);
    }
}

TEST_CASE("round trip through canonical printing") {
    Session s = parse_session(
        "ring u v w;\n"
        "g = 4*u^3 - 54*u*v^2 + 27*v^2*w;\n"
        "h = -u + 1/2*v - 7;\n");
    for (auto name : {"g", "h"}) {
        QPoly p = s.fn(name).value.num;
        std::string printed = poly_str(p);
        Session back = parse_session("ring u v w; e = " + printed + ";");
        CHECK(back.fn("e").value.num == p);
    }
}

TEST_CASE("fuzzed byte strings never crash the parser") {
    Rng rng(20240917);
    int parsed = 0, rejected = 0;
    for (int it = 0; it < 10000; ++it) {
        size_t len = rng.below(60);
        std::string text;
        for (size_t i = 0; i < len; ++i) text += (char)(1 + rng.below(127));
        try {
            parse_session(text);
            ++parsed;
        } catch (const Error&) {
            ++rejected;
        } catch (const std::exception&) {
            ++rejected;  // numeric overflow in literals surfaces as std::out_of_range
        }
    }
    CHECK(parsed + rejected == 10000);
    CHECK(rejected > 9000);  // almost nothing random is a valid session
}

TEST_CASE("reports are deterministic given seed and prime") {
    Session s = parse_session("ring sym 2; F = det; X = ideal(det - k11^2);");
    RunOptions opt;
    opt.seed = 99;
    opt.seed_given = true;
    auto a = run_command(s, "mld", opt);
    auto b = run_command(s, "mld", opt);
    CHECK(render_report(a.report, false) == render_report(b.report, false));
    CHECK(a.report["value"] == 1);
    // text rendering is also stable
    CHECK(render_report(a.report, true) == render_report(b.report, true));
}

TEST_CASE("gb command reports a reduced monic basis") {
    Session s = parse_session("ring x y; X = ideal(x^2 + y^2, x*y);");
    RunOptions opt;
    auto r = run_command(s, "gb", opt);
    std::vector<std::string> got;
    for (auto& g : r.report["ideal"]) got.push_back(g.get<std::string>());
    CHECK(got == std::vector<std::string>{"x*y", "x^2 + y^2", "y^3"});
}

TEST_CASE("mult command accepts an explicit hypersurface") {
    Session s = parse_session(
        "ring u v w;\n"
        "g = 4*u^3 - 54*u*v^2 + 27*v^2*w;\n"
        "point = [0, 0, 1];\n");
    RunOptions opt;
    auto r = run_command(s, "mult", opt);
    CHECK(r.report["value"] == 2);
}

TEST_CASE("conormal command emits the saturated conormal system") {
    Session s = parse_session("ring x y z; X = ideal(x*z - y^2);");
    RunOptions opt;
    auto r = run_command(s, "conormal", opt);
    BiRing b = make_biring(s.ring, s.dual);
    Budget budget;
    auto gens = conormal_ideal(s.require_X(), b, &budget);
    REQUIRE(r.report["ideal"].size() == gens.size());
    for (size_t i = 0; i < gens.size(); ++i)
        CHECK(r.report["ideal"][i] == poly_str(primitive_part(gens[i])));
    // vanishes on a (point, tangent) pair: (1,1,1) with gradient (1,-2,1)
    std::vector<Rat> pair = {Rat(1), Rat(1), Rat(1), Rat(1), Rat(-2), Rat(1)};
    for (auto& g : gens) CHECK(poly_eval(g, pair).is_zero());
}
