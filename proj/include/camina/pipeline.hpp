#pragma once

#include "camina/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace camina {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerificationFailure = 2;

struct RunConfig {
    std::string command;
    /* "builtin:<spec>" or "table:<path>"; unused by synth-class3 */
    std::string input;
    std::optional<std::string> out;
    bool include_matrices = false;
    std::uint64_t seed = kDefaultSeed;
    ClosureMode closure = ClosureMode::Auto;
    unsigned synth_p = 2;
    unsigned synth_n = 2;
    unsigned synth_k = 1;
    bool synth_twisted = false;
};

struct RunResult {
    int exit_code = kExitOk;
    Json report;
    /* human-readable table */
    std::string summary;
};

const std::vector<std::string>& command_names();

/* Throws ValidationError on a malformed input string or table. */
FiniteGroup load_input(const std::string& input, std::uint64_t seed = kDefaultSeed);

/* Never throws for input problems; those become exit code 1 with an "error"
   object in the report. */
RunResult run(const RunConfig& config);

} // namespace camina
