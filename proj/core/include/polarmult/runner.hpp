#pragma once

#include <string>

#include "polarmult/problem.hpp"

namespace polarmult {

// Exit codes: 0 computed, 1 inconclusive/unstable, 2 input error, 3 budget.
struct RunResult {
    int exit_code = 0;
    std::string json_report; // canonical report document
    std::string human;       // short human-readable summary
};

inline constexpr const char* kCommands[] = {"polar",          "polar-ideal",          "relative",
                                            "check-integral", "check-birational",     "check-reduction-ideal",
                                            "br",             "check-reduction-module", "sv",
                                            "selftest"};

RunResult run_command(const std::string& command, const ProblemDescription& problem, bool with_timings);

} // namespace polarmult
