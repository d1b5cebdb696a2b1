#pragma once

#include "qtwist/json_io.hpp"

namespace qtwist {

/**
 * Fully specified batch job: one command, parsed inputs, bounds. No
 * interactive state anywhere.
 */
struct Job {
    std::string command;
    Json input;
    std::optional<int> max_degree_override;
    long size_budget = 2000000;
};

// Validates the command name and the input document's schema for that
// command. Errors: UnknownCommand, SchemaError, ParseError.
Job parse_input(const std::string& command, const Json& input,
                std::optional<int> max_degree = std::nullopt, long size_budget = 2000000);

struct ExecResult {
    Json report;
    int exit_code = 0; // 0 pass, 1 checks failed, 2 error before checking
};

// Runs the job; module errors become report entries with exit code 2.
ExecResult execute(const Job& job);

// All recognized subcommands.
const std::vector<std::string>& command_list();

} // namespace qtwist
