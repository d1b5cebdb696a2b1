// qtwist: exact-arithmetic verifier for multiparameter quantum group
// presentations, bosonizations and 2-cocycle deformations.
//
// Usage: qtwist <command> --input <file.json> [--max-degree N]
//                                             [--output <file.json>]
// Exit codes: 0 all checks passed, 1 some check failed, 2 error before
// checking. QTWIST_SIZE_BUDGET overrides the basis-word budget.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "qtwist/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact kernel for quantum-group presentations and cocycle deformations"};
    app.require_subcommand(1);

    std::string input_path, output_path;
    int max_degree = -1;

    std::vector<CLI::App*> subs;
    for (const auto& name : qtwist::command_list()) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--input", input_path, "input JSON file")->required();
        sub->add_option("--max-degree", max_degree, "filtration/degree bound override");
        sub->add_option("--output", output_path, "write the report here instead of stdout");
        subs.push_back(sub);
    }

    CLI11_PARSE(app, argc, argv);
    std::string command = app.get_subcommands().front()->get_name();

    long budget = 2000000;
    if (const char* env = std::getenv("QTWIST_SIZE_BUDGET")) budget = std::atol(env);

    qtwist::Json report;
    int code = 2;
    try {
        std::ifstream in(input_path);
        if (!in) {
            std::cerr << "cannot open " << input_path << "\n";
            return 2;
        }
        qtwist::Json input;
        try {
            input = qtwist::Json::parse(in);
        } catch (const std::exception& e) {
            throw qtwist::Error("ParseError", e.what());
        }
        std::optional<int> D;
        if (max_degree >= 0) D = max_degree;
        qtwist::Job job = qtwist::parse_input(command, input, D, budget);
        qtwist::ExecResult res = qtwist::execute(job);
        report = std::move(res.report);
        code = res.exit_code;
    } catch (const qtwist::Error& e) {
        report = qtwist::Json{{"command", command},
                              {"error", qtwist::Json{{"code", e.code()}, {"message", e.what()}}},
                              {"pass", false}};
        code = 2;
    }

    if (output_path.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream out(output_path);
        out << report.dump(2) << "\n";
    }
    return code;
}
