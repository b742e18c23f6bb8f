#include "gmld.h"

#include <cstring>
#include <random>

#include "golden.hpp"

using namespace gmld;

struct gmld_session {
    Session ses;
};

namespace {

char* dup_str(const std::string& s) {
    char* out = (char*)malloc(s.size() + 1);
    if (out) memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** err, const std::string& msg) {
    if (err) *err = dup_str(msg);
}

gmld_status status_of(const Error& e) {
    switch (e.kind) {
        case ErrKind::resource: return GMLD_ERR_RESOURCE;
        default: return GMLD_ERR_INPUT;
    }
}

RunOptions to_run_options(const gmld_options* opt) {
    RunOptions r;
    if (!opt) {
        gmld_options def;
        gmld_options_init(&def);
        return to_run_options(&def);
    }
    if (opt->prime < 2) input_error("prime must be at least 2");
    r.prime = (uint64_t)opt->prime;
    if (!is_prime_u64(r.prime)) input_error(std::to_string(opt->prime) + " is not prime");
    if (opt->has_seed) {
        r.seed = opt->seed;
    } else {
        std::random_device rd;
        r.seed = ((uint64_t)rd() << 32) ^ rd();
    }
    r.seed_given = opt->has_seed;
    if (opt->trials < 1) input_error("trials must be positive");
    r.trials = opt->trials;
    if (opt->step_budget < 1) input_error("step budget must be positive");
    r.step_budget = opt->step_budget;
    r.text_format = opt->text_format != 0;
    return r;
}

}  // namespace

extern "C" {

void gmld_options_init(gmld_options* opt) {
    if (!opt) return;
    opt->prime = 32003;
    opt->seed = 0;
    opt->has_seed = 0;
    opt->trials = 3;
    opt->step_budget = 10'000'000;
    opt->text_format = 0;
}

gmld_status gmld_parse(const char* text, gmld_session** out, char** err) {
    if (!text || !out) {
        set_err(err, "null argument");
        return GMLD_ERR_INPUT;
    }
    try {
        auto* s = new gmld_session{parse_session(text)};
        *out = s;
        return GMLD_OK;
    } catch (const Error& e) {
        set_err(err, e.what());
        return status_of(e);
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return GMLD_ERR_INPUT;
    }
}

gmld_status gmld_parse_file(const char* path, gmld_session** out, char** err) {
    if (!path || !out) {
        set_err(err, "null argument");
        return GMLD_ERR_INPUT;
    }
    try {
        auto* s = new gmld_session{parse_session(read_text_file(path))};
        *out = s;
        return GMLD_OK;
    } catch (const Error& e) {
        set_err(err, e.what());
        return status_of(e);
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return GMLD_ERR_INPUT;
    }
}

void gmld_session_free(gmld_session* ses) { delete ses; }

gmld_status gmld_run(const gmld_session* ses, const char* command, const gmld_options* opt,
                     char** report, char** err) {
    if (!ses || !command) {
        set_err(err, "null argument");
        return GMLD_ERR_INPUT;
    }
    try {
        RunOptions ropt = to_run_options(opt);
        CommandResult res = run_command(ses->ses, command, ropt);
        if (report) *report = dup_str(render_report(res.report, ropt.text_format));
        return res.exit_code == 0 ? GMLD_OK : GMLD_FALSE;
    } catch (const Error& e) {
        set_err(err, e.what());
        return status_of(e);
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return GMLD_ERR_INPUT;
    }
}

gmld_status gmld_join(const gmld_session* a, const gmld_session* b, const gmld_options* opt,
                      char** report, char** err) {
    if (!a || !b) {
        set_err(err, "null argument");
        return GMLD_ERR_INPUT;
    }
    try {
        RunOptions ropt = to_run_options(opt);
        CommandResult res = run_join(a->ses, b->ses, ropt);
        if (report) *report = dup_str(render_report(res.report, ropt.text_format));
        return res.exit_code == 0 ? GMLD_OK : GMLD_FALSE;
    } catch (const Error& e) {
        set_err(err, e.what());
        return status_of(e);
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return GMLD_ERR_INPUT;
    }
}

gmld_status gmld_examples_suite(const char* sessions_dir, const gmld_options* opt, char** report,
                                char** err) {
    if (!sessions_dir) {
        set_err(err, "null argument");
        return GMLD_ERR_INPUT;
    }
    try {
        RunOptions ropt = to_run_options(opt);
        GoldenOutcome out = run_golden(sessions_dir, ropt);
        if (report) *report = dup_str(ropt.text_format ? out.table : out.summary.dump());
        return out.pass ? GMLD_OK : GMLD_FALSE;
    } catch (const Error& e) {
        set_err(err, e.what());
        return status_of(e);
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return GMLD_ERR_INPUT;
    }
}

void gmld_str_free(char* s) { free(s); }

const char* gmld_version(void) { return "1.0.0"; }

}  // extern "C"
