#include "golden.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "homaloidal.hpp"
#include "mld.hpp"

namespace gmld {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) input_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

std::string vec_str(const std::vector<long>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string json_vec_str(const Json& arr) {
    std::vector<long> v;
    for (auto& e : arr) v.push_back(e.get<long>());
    return vec_str(v);
}

// expected strings are transcribed formulas, canonicalized by the parser
std::string canon_fn(const std::string& session_text) {
    Session s = parse_session(session_text);
    return ratfn_str(s.fn("e").value);
}

std::string canon_poly(const std::string& session_text) {
    Session s = parse_session(session_text);
    return "[\"" + poly_str(primitive_part(s.fn("e").value.num)) + "\"]";
}

}  // namespace

GoldenOutcome run_golden(const std::string& dir, const RunOptions& opt, int corrupt_row,
                         int max_rows) {
    auto load = [&](const std::string& name) { return parse_session(read_text_file(dir + "/" + name)); };
    Session mld1 = load("mld1_s2.txt");
    Session cusp = load("cuspidal.txt");
    Session cubic = load("cubic_s2.txt");
    Session cubic_lin = load("cubic_s2_linear.txt");
    Session conic = load("conic_s2.txt");
    Session quadric = load("quadric_s3.txt");
    Session curve = load("curve_s3.txt");
    Session mu2 = load("mu_s2.txt");
    Session mu3 = load("mu_s3.txt");
    Session twisted = load("twisted_dual.txt");
    Session pointl = load("point_line.txt");
    Session fam = load("s2_family.txt");
    Session fam2 = load("s2_family_rank2.txt");
    Session mld1s3 = load("mld1_s3.txt");

    using RowFn = std::function<std::pair<std::string, std::string>()>;
    struct Row {
        std::string name;
        RowFn run;
    };

    auto cmd = [&](const Session& s, const std::string& c) { return run_command(s, c, opt); };

    std::vector<Row> rows;
    rows.push_back({"gradient multidegrees of det3", [&] {
        auto r = cmd(mu3, "grad-mdeg");
        return std::make_pair(std::string("(1,2,4,4,2,1)"), json_vec_str(r.report["vector"]));
    }});
    rows.push_back({"gradient multidegrees of det2", [&] {
        auto r = cmd(mu2, "grad-mdeg");
        return std::make_pair(std::string("(1,1,1)"), json_vec_str(r.report["vector"]));
    }});
    rows.push_back({"ML degree of the quadric hypersurface", [&] {
        auto r = cmd(quadric, "mld");
        return std::make_pair(std::string("26"), r.report["value"].dump());
    }});
    rows.push_back({"polar formula for the quadric hypersurface", [&] {
        auto r = cmd(quadric, "polar");
        return std::make_pair(std::string("26 (2,2,2,2,2)"),
                              r.report["value"].dump() + " " + json_vec_str(r.report["vector"]));
    }});
    rows.push_back({"ML degree of the space curve", [&] {
        auto r = cmd(curve, "mld");
        return std::make_pair(std::string("16"), r.report["value"].dump());
    }});
    rows.push_back({"polar formula for the space curve", [&] {
        auto r = cmd(curve, "polar");
        return std::make_pair(std::string("16 (8,4,0,0,0)"),
                              r.report["value"].dump() + " " + json_vec_str(r.report["vector"]));
    }});
    rows.push_back({"ML degree of the plane cubic", [&] {
        auto r = cmd(cubic, "mld");
        return std::make_pair(std::string("9"), r.report["value"].dump());
    }});
    rows.push_back({"polar formula for the plane cubic", [&] {
        auto r = cmd(cubic, "polar");
        return std::make_pair(std::string("9 (6,3)"),
                              r.report["value"].dump() + " " + json_vec_str(r.report["vector"]));
    }});
    rows.push_back({"product formula for the plane cubic", [&] {
        Budget budget(opt.step_budget);
        CountOptions copt{opt.seed, opt.prime, opt.trials, &budget};
        MLProblem P = make_ml_problem(cubic.require_X(), cubic.require_F(), cubic.dual, &budget);
        auto pc = product_formula_check(P, copt);
        return std::make_pair(std::string("image*map = 9 = mld = 9"),
                              "image*map = " + std::to_string(pc.product) +
                                  (pc.holds ? " = mld = " : " != mld = ") + std::to_string(pc.mld));
    }});
    rows.push_back({"linear likelihood realizes the dual degree", [&] {
        auto r = cmd(cubic_lin, "mld");
        return std::make_pair(std::string("6"), r.report["value"].dump());
    }});
    rows.push_back({"dual of the rank-one quadric curve", [&] {
        auto r = cmd(mld1, "dual");
        std::string expect = canon_poly("ring sym 2; e = s11*s22 - s12^2 + s22^2;");
        return std::make_pair(expect, r.report["ideal"].dump());
    }});
    rows.push_back({"classification of the rank-one quadric curve", [&] {
        auto r = cmd(mld1, "classify-curve");
        std::string expect =
            "true " + canon_fn("ring sym 2; e = 4*s22^2 / (s11*s22 - s12^2 + s22^2)^2;");
        return std::make_pair(expect,
                              r.report["value"].dump() + " " + r.report["phi"].get<std::string>());
    }});
    rows.push_back({"PDE check for the rank-one quadric curve", [&] {
        auto r = cmd(mld1, "pde-check");
        return std::make_pair(std::string("true"), r.report["value"].dump());
    }});
    rows.push_back({"associated variety recovers the curve", [&] {
        auto r = cmd(mld1, "assoc-variety");
        std::vector<QPoly> got;
        for (auto& s : r.report["ideal"]) {
            Session tmp = parse_session("ring sym 2; e = " + s.get<std::string>() + ";");
            got.push_back(map_vars(tmp.fn("e").value.num, mld1.ring,
                                   {0, 1, 2}));
        }
        Budget budget(opt.step_budget);
        bool same = ideal_equal_saturated(got, mld1.require_X().gens, mld1.ring, &budget);
        return std::make_pair(std::string("ideal of X"),
                              same ? "ideal of X" : "different ideal: " + r.report["ideal"].dump());
    }});
    rows.push_back({"tangency to V(det) breaks F-generality", [&] {
        auto r = cmd(mld1, "f-general");
        return std::make_pair(std::string("empty: false"),
                              "empty: " + r.report["f_general"]["empty"].dump());
    }});
    rows.push_back({"ML degree of the rank-one quadric curve", [&] {
        auto r = cmd(mld1, "mld");
        return std::make_pair(std::string("1"), r.report["value"].dump());
    }});
    rows.push_back({"tangent-line solution for the rank-one curve", [&] {
        auto r = cmd(mld1, "phi-from-alpha");
        std::string expect = canon_fn("ring sym 2; e = s22 / (s11*s22 - s12^2 + s22^2);");
        return std::make_pair(expect, r.report["phi"].get<std::string>());
    }});
    rows.push_back({"dual of the cuspidal cubic", [&] {
        auto r = cmd(cusp, "dual");
        std::string expect = canon_poly("ring x y z; e = 4*u_x^3 - 54*u_x*u_y^2 + 27*u_y^2*u_z;");
        return std::make_pair(expect, r.report["ideal"].dump());
    }});
    rows.push_back({"cusp multiplicity on the dual cubic", [&] {
        auto r = cmd(cusp, "mult");
        return std::make_pair(std::string("2"), r.report["value"].dump());
    }});
    rows.push_back({"tangent-line solution at the cusp", [&] {
        auto r = cmd(cusp, "phi-from-alpha");
        std::string expect =
            canon_fn("ring x y z; e = 216*u_y^2 / (4*u_x^3 - 54*u_x*u_y^2 + 27*u_y^2*u_z);");
        return std::make_pair(expect, r.report["phi"].get<std::string>());
    }});
    rows.push_back({"classification of the cuspidal curve", [&] {
        auto r = cmd(cusp, "classify-curve");
        return std::make_pair(std::string("true"), r.report["value"].dump());
    }});
    rows.push_back({"PDE check for the dual-surface solution", [&] {
        auto r = cmd(twisted, "pde-check");
        return std::make_pair(std::string("true"), r.report["value"].dump());
    }});
    rows.push_back({"associated variety of the dual-surface solution", [&] {
        auto r = cmd(twisted, "assoc-variety");
        std::vector<QPoly> got;
        for (auto& s : r.report["ideal"]) {
            Session tmp = parse_session("ring x0 x1 x2 x3; e = " + s.get<std::string>() + ";");
            got.push_back(map_vars(tmp.fn("e").value.num, twisted.ring, {0, 1, 2, 3}));
        }
        Budget budget(opt.step_budget);
        bool same = ideal_equal_saturated(got, twisted.require_X().gens, twisted.ring, &budget);
        return std::make_pair(std::string("ideal of X"),
                              same ? "ideal of X" : "different ideal: " + r.report["ideal"].dump());
    }});
    rows.push_back({"join with the one-dimensional factor", [&] {
        auto r = run_join(mld1, pointl, opt);
        std::string expect = canon_fn(
            "ring sym 2; e = 4*s22^2 / (s11*s22 - s12^2 + s22^2)^2;");
        // the joined solution is Phi * (1/u_k33): check shape and the PDE flag
        std::string phi = r.report["phi"].get<std::string>();
        bool has_factor = phi.find("u_k33") != std::string::npos;
        bool pde = r.report["pde"].get<bool>();
        return std::make_pair(std::string("product with 1/u_k33, PDE holds"),
                              std::string(has_factor && pde
                                              ? "product with 1/u_k33, PDE holds"
                                              : "unexpected: " + phi));
    }});
    rows.push_back({"rank-one family closed form", [&] {
        auto r = cmd(fam, "s2-family");
        std::string expect =
            canon_poly("ring sym 2; e = k11*k22 - k12^2 - k11^2;") + " " +
            canon_fn("ring sym 2; e = 4*s22^2 / (s11*s22 - s12^2 + s22^2)^2;") + " pde true";
        return std::make_pair(expect, r.report["ideal"].dump() + " " +
                                          r.report["phi"].get<std::string>() + " pde " +
                                          r.report["pde"].dump());
    }});
    rows.push_back({"rational MLE inside 3x3 matrices", [&] {
        auto m = cmd(mld1s3, "mld");
        auto r = cmd(mld1s3, "classify-curve");
        return std::make_pair(std::string("mld 1, classify true, multiplicity 2"),
                              "mld " + m.report["value"].dump() + ", classify " +
                                  r.report["value"].dump() + ", multiplicity " +
                                  (r.report.contains("multiplicity")
                                       ? r.report["multiplicity"].dump()
                                       : "-"));
    }});
    rows.push_back({"rank-two matrix is rejected", [&] {
        std::string got = "accepted";
        try {
            cmd(fam2, "s2-family");
        } catch (const Error& e) {
            got = e.kind == ErrKind::input ? "rejected" : "other error";
        }
        return std::make_pair(std::string("rejected"), got);
    }});
    rows.push_back({"perturbed curve becomes F-general", [&] {
        Budget budget(opt.step_budget);
        VarietySpec Xg = perturb(mld1.require_X(), 42);
        bool empty = f_general_emptiness(Xg, mld1.require_F(), mld1.dual, &budget);
        return std::make_pair(std::string("empty: true"),
                              std::string("empty: ") + (empty ? "true" : "false"));
    }});
    rows.push_back({"generic conic has no rational MLE", [&] {
        auto r = cmd(conic, "classify-curve");
        auto m = cmd(conic, "mld");
        return std::make_pair(std::string("false, ML degree 4"),
                              r.report["value"].dump() == "false"
                                  ? "false, ML degree " + m.report["value"].dump()
                                  : "true");
    }});

    GoldenOutcome out;
    out.pass = true;
    Json jrows = Json::array();
    std::string table;
    int limit = max_rows < 0 ? (int)rows.size() : std::min<int>(max_rows, (int)rows.size());
    for (int i = 0; i < limit; ++i) {
        std::string expected, got, status;
        try {
            auto [e, g] = rows[i].run();
            expected = e;
            got = g;
        } catch (const Error& e) {
            if (e.kind == ErrKind::resource) throw;  // budget exhaustion aborts the suite
            expected = "(no error)";
            got = std::string("error: ") + e.what();
        }
        if (i == corrupt_row) expected += " [corrupted]";
        bool pass = expected == got;
        out.pass &= pass;
        table += (pass ? "PASS  " : "FAIL  ") + rows[i].name + "  expected: " + expected +
                 "  computed: " + got + "\n";
        jrows.push_back(Json{{"name", rows[i].name},
                             {"expected", expected},
                             {"computed", got},
                             {"pass", pass}});
    }
    out.summary = Json{{"command", "paper-examples"},
                       {"rows", jrows},
                       {"pass", out.pass},
                       {"seed", opt.seed},
                       {"prime", opt.prime},
                       {"trials", opt.trials}};
    out.table = table;
    return out;
}

}  // namespace gmld
