// Command-line front end; talks to the core exclusively through the C API.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <string>

#include "gmld.h"

namespace {

std::string g_out_path;

int finish(gmld_status st, char* report, char* err) {
    if (report) {
        printf("%s\n", report);
        if (!g_out_path.empty()) {
            std::ofstream out(g_out_path);
            if (!out) {
                fprintf(stderr, "error: cannot write %s\n", g_out_path.c_str());
                gmld_str_free(report);
                gmld_str_free(err);
                return (int)GMLD_ERR_INPUT;
            }
            out << report << "\n";
        }
        gmld_str_free(report);
    }
    if (err) {
        fprintf(stderr, "error: %s\n", err);
        gmld_str_free(err);
    }
    return (int)st;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian maximum-likelihood degrees, polar classes, and homaloidal solutions"};
    app.require_subcommand(1);

    gmld_options opt;
    gmld_options_init(&opt);
    std::string session_path, with_path, sessions_dir = "sessions", format = "json", out_path;
    long long prime = opt.prime, trials = opt.trials, budget = opt.step_budget;
    uint64_t seed = 0;
    bool seed_set = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--prime", prime, "prime for specialized counts")->capture_default_str();
        cmd->add_option("--seed", seed, "base seed (echoed in the report)")
            ->each([&](const std::string&) { seed_set = true; });
        cmd->add_option("--trials", trials, "agreement trials")->capture_default_str();
        cmd->add_option("--budget", budget, "reduction-step budget")->capture_default_str();
        cmd->add_option("--format", format, "json or text")->capture_default_str();
        cmd->add_option("--out", out_path, "also write the report to this file");
    };

    static const char* session_cmds[] = {"gb",        "mld",        "polar",
                                         "grad-mdeg", "dual",       "conormal",
                                         "mult",      "f-general",  "classify-curve",
                                         "pde-check", "assoc-variety", "phi-from-alpha",
                                         "s2-family", "perturb"};
    for (const char* name : session_cmds) {
        CLI::App* cmd = app.add_subcommand(name);
        cmd->add_option("session", session_path, "session file")->required();
        add_common(cmd);
    }
    CLI::App* join = app.add_subcommand("join", "product of two one-factor solutions");
    join->add_option("session", session_path, "first factor session")->required();
    join->add_option("--with", with_path, "second factor session")->required();
    add_common(join);

    CLI::App* suite = app.add_subcommand("paper-examples", "reproduce every worked example");
    suite->add_option("--sessions", sessions_dir, "session corpus directory")->capture_default_str();
    add_common(suite);

    CLI11_PARSE(app, argc, argv);

    g_out_path = out_path;
    opt.prime = prime;
    opt.trials = (int)trials;
    opt.step_budget = budget;
    opt.seed = seed;
    opt.has_seed = seed_set ? 1 : 0;
    opt.text_format = format == "text" ? 1 : 0;
    if (format != "text" && format != "json") {
        fprintf(stderr, "error: unknown format '%s'\n", format.c_str());
        return (int)GMLD_ERR_INPUT;
    }

    std::string sub = app.get_subcommands().front()->get_name();
    char* report = nullptr;
    char* err = nullptr;

    if (sub == "paper-examples") {
        gmld_status st = gmld_examples_suite(sessions_dir.c_str(), &opt, &report, &err);
        return finish(st, report, err);
    }

    gmld_session* ses = nullptr;
    gmld_status st = gmld_parse_file(session_path.c_str(), &ses, &err);
    if (st != GMLD_OK) return finish(st, nullptr, err);

    if (sub == "join") {
        gmld_session* other = nullptr;
        st = gmld_parse_file(with_path.c_str(), &other, &err);
        if (st != GMLD_OK) {
            gmld_session_free(ses);
            return finish(st, nullptr, err);
        }
        st = gmld_join(ses, other, &opt, &report, &err);
        gmld_session_free(other);
    } else {
        st = gmld_run(ses, sub.c_str(), &opt, &report, &err);
    }
    gmld_session_free(ses);
    return finish(st, report, err);
}
