#pragma once

#include <json.hpp>

#include "session.hpp"

namespace gmld {

using Json = nlohmann::ordered_json;

struct RunOptions {
    uint64_t prime = 32003;
    uint64_t seed = 1;
    bool seed_given = false;
    int trials = 3;
    long long step_budget = 10'000'000;
    bool text_format = false;
};

struct CommandResult {
    int exit_code = 0;  // 0 ok, 1 mathematical verdict false
    Json report;
};

// Dispatch a subcommand against a parsed session. Input and resource problems
// raise Error; a computed "false" is exit code 1 with a normal report.
CommandResult run_command(const Session& ses, const std::string& command, const RunOptions& opt);

// The join takes its second factor from a separate session.
CommandResult run_join(const Session& a, const Session& b, const RunOptions& opt);

std::string render_report(const Json& report, bool text_format);

}  // namespace gmld
