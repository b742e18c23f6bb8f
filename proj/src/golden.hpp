#pragma once

#include "commands.hpp"

namespace gmld {

struct GoldenOutcome {
    bool pass = false;
    Json summary;
    std::string table;
};

// Runs the whole worked-example suite against the session corpus and compares
// every result with its published value. `corrupt_row` (tests only) falsifies
// one expected entry to prove a mismatch is reported.
GoldenOutcome run_golden(const std::string& sessions_dir, const RunOptions& opt,
                         int corrupt_row = -1, int max_rows = -1);

std::string read_text_file(const std::string& path);

}  // namespace gmld
