#include "commands.hpp"

#include "homaloidal.hpp"
#include "mld.hpp"

namespace gmld {

namespace {

CountOptions count_options(const RunOptions& opt, Budget* budget) {
    CountOptions c;
    c.seed = opt.seed;
    c.prime = opt.prime;
    c.trials = opt.trials;
    c.budget = budget;
    return c;
}

Json base_report(const Session& ses, const std::string& command, const RunOptions& opt) {
    Json j;
    j["command"] = command;
    j["inputs"] = Json{{"hash", ses.hash()}};
    j["status"] = "ok";
    (void)opt;
    return j;
}

Json ideal_json(const std::vector<QPoly>& gens) {
    Json arr = Json::array();
    for (auto& g : gens) arr.push_back(poly_str(primitive_part(g)));
    return arr;
}

Json seeds_json(const std::vector<uint64_t>& seeds) {
    Json arr = Json::array();
    for (auto s : seeds) arr.push_back(s);
    return arr;
}

void fill_mld(Json& j, const MLDReport& rep) {
    j["value"] = rep.value;
    j["method"] = rep.method;
    j["seeds"] = seeds_json(rep.seeds);
    j["prime"] = rep.prime;
    j["trials"] = rep.trials;
    j["f_general"] = Json{{"empty", rep.f_general == "unchecked" ? Json("unchecked")
                                    : Json(rep.f_general == "empty")},
                          {"irreducible", "unchecked"}};
    j["status"] = rep.status;
    if (!rep.polar.empty()) j["polar"] = rep.polar;
    if (!rep.mu.empty()) j["mu"] = rep.mu;
}

RingP plain_dual(const Session& ses) { return ses.dual; }

}  // namespace

CommandResult run_command(const Session& ses, const std::string& command, const RunOptions& opt) {
    Budget budget(opt.step_budget);
    CountOptions copt = count_options(opt, &budget);
    CommandResult out;
    out.report = base_report(ses, command, opt);
    Json& j = out.report;
    j["seed"] = opt.seed;
    j["prime"] = opt.prime;

    if (command == "gb") {
        auto gb = buchberger(ses.ideal("X"), grevlex_order(), &budget);
        Json arr = Json::array();
        for (auto& g : gb.basis) arr.push_back(poly_str(g));
        j["ideal"] = arr;
        j["order"] = "grevlex";
        j["reduced"] = gb.reduced;
    } else if (command == "mld") {
        MLProblem P = make_ml_problem(ses.require_X(), ses.require_F(), plain_dual(ses), &budget);
        auto rep = mld_compute(P, copt);
        fill_mld(j, rep);
    } else if (command == "polar") {
        MLProblem P = make_ml_problem(ses.require_X(), ses.require_F(), plain_dual(ses), &budget);
        auto rep = mld_polar_formula(P, copt);
        fill_mld(j, rep);
        j["vector"] = rep.polar;
    } else if (command == "grad-mdeg") {
        RatFn F = ses.require_F();
        if (F.degree() == 0) input_error("F must have nonzero degree");
        auto mu = gradient_multidegrees(F, plain_dual(ses), copt);
        j["vector"] = mu.entries;
        j["seeds"] = seeds_json(mu.seeds);
        j["trials"] = opt.trials;
    } else if (command == "dual") {
        auto dv = dual_variety(ses.require_X(), plain_dual(ses), &budget);
        j["ideal"] = ideal_json(dv);
    } else if (command == "conormal") {
        BiRing b = make_biring(ses.ring, plain_dual(ses));
        auto con = conormal_ideal(ses.require_X(), b, &budget);
        j["ideal"] = ideal_json(con);
    } else if (command == "mult") {
        QPoly g(nullptr, nullptr);
        if (ses.has_fn("g")) {
            const auto& f = ses.fn("g");
            if (!f.value.den.is_constant()) input_error("g must be a polynomial");
            g = f.value.num;
        } else {
            auto dv = dual_variety(ses.require_X(), plain_dual(ses), &budget);
            if (dv.size() != 1) input_error("dual variety is not a hypersurface");
            g = dv[0];
        }
        j["value"] = multiplicity_at_point(primitive_part(g), ses.require_point());
    } else if (command == "f-general") {
        bool empty = f_general_emptiness(ses.require_X(), ses.require_F(), plain_dual(ses), &budget);
        j["f_general"] = Json{{"empty", empty}, {"irreducible", "unchecked"}};
        if (!empty) out.exit_code = 1;
    } else if (command == "classify-curve") {
        std::optional<QPoly> alpha;
        if (ses.has_fn("alpha")) alpha = ses.require_alpha();
        RatFn F = ses.require_F();
        if (!F.den.is_constant()) input_error("classification needs a polynomial F");
        QPoly Fp = F.num.scaled(F.den.lc().inv());
        auto res = classify_curve_mld1(ses.require_X(), Fp, alpha, plain_dual(ses), copt);
        j["value"] = res.verdict;
        j["reason"] = res.reason;
        if (res.verdict) {
            j["alpha"] = poly_str(res.alpha);
            j["phi"] = ratfn_str(res.phi);
            j["dual_generator"] = poly_str(res.dual_gen);
            j["dual_degree"] = res.dual_degree;
            j["multiplicity"] = res.multiplicity;
        }
        if (!res.verdict) out.exit_code = 1;
    } else if (command == "pde-check") {
        std::string diag;
        bool okpde = pde_check(ses.require_F(), ses.require_phi(), &diag);
        j["value"] = okpde;
        if (!diag.empty()) j["diagnostic"] = diag;
        if (!okpde) out.exit_code = 1;
    } else if (command == "assoc-variety") {
        auto assoc = associated_variety(ses.require_phi(), ses.ring, &budget);
        j["ideal"] = ideal_json(assoc);
    } else if (command == "phi-from-alpha") {
        auto sol = phi_from_alpha(ses.require_X(), ses.require_alpha(), plain_dual(ses), &budget);
        j["phi"] = ratfn_str(sol.phi);
        j["provenance"] = sol.provenance;
    } else if (command == "s2-family") {
        auto fam = s2_family(ses.matrix("A"));
        j["ideal"] = ideal_json(fam.X.gens);
        j["phi"] = ratfn_str(fam.phi);
        std::string diag;
        j["pde"] = pde_check(ratfn_of(fam.F), fam.phi, &diag);
    } else if (command == "perturb") {
        VarietySpec Xg = perturb(ses.require_X(), opt.seed);
        j["ideal"] = ideal_json(Xg.gens);
    } else {
        input_error("unknown command '" + command + "'");
    }
    return out;
}

CommandResult run_join(const Session& a, const Session& b, const RunOptions& opt) {
    Budget budget(opt.step_budget);
    CommandResult out;
    out.report = base_report(a, "join", opt);
    out.report["inputs"] = Json{{"hash", a.hash()}, {"with", b.hash()}};

    auto factor = [&](const Session& s) {
        return make_homaloidal(s.require_phi(), s.require_F(), "user-supplied", &budget);
    };
    auto joined = phi_join(factor(a), factor(b), &budget);
    out.report["phi"] = ratfn_str(joined.phi);
    out.report["F"] = ratfn_str(joined.F);
    out.report["pde"] = true;  // make_homaloidal verified it
    out.report["provenance"] = joined.provenance;
    return out;
}

static void render_value(std::string& s, const std::string& key, const Json& v, int indent) {
    s += std::string(indent, ' ') + key + ": ";
    if (v.is_object()) {
        s += "\n";
        for (auto& [k2, v2] : v.items()) render_value(s, k2, v2, indent + 2);
        return;
    }
    s += v.is_string() ? v.get<std::string>() : v.dump();
    s += "\n";
}

std::string render_report(const Json& report, bool text_format) {
    if (!text_format) return report.dump();
    std::string s;
    for (auto& [k, v] : report.items()) render_value(s, k, v, 0);
    return s;
}

}  // namespace gmld
