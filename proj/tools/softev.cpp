// softev: exact Jeffrey/Pearl soft-evidence updates from the command line.

#include "softev/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace softev::cli;

    CLI::App app{"Exact discrete Bayesian updating with soft evidence (Jeffrey and Pearl rules)"};
    app.require_subcommand(1);

    EvalOptions eval;
    int eval_decimals = -1;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a query or declared value from a .netspec file");
    eval_cmd->add_option("file", eval.file, "netspec file")->required()->check(CLI::ExistingFile);
    eval_cmd->add_option("query", eval.query, "query or value name")->required();
    eval_cmd->add_option("--decimal", eval_decimals, "also print N-digit decimals")->check(CLI::Range(0, 60));
    eval_cmd->add_flag("--explain", eval.explain, "print the intermediate steps of the update");
    eval_cmd->add_flag("--show-zeros", eval.show_zeros, "keep zero-weight terms");
    eval_cmd->add_flag("--csv", eval.csv, "print the value as CSV");

    SweepOptions sweep;
    int sweep_decimals = -1;
    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep the evidence strength r and print Jeffrey/Pearl as CSV");
    sweep_cmd->add_option("file", sweep.file, "netspec file")->required()->check(CLI::ExistingFile);
    sweep_cmd->add_option("--channel", sweep.channel, "channel into the binary evidence space")->required();
    sweep_cmd->add_option("--prior", sweep.prior, "prior state")->required();
    sweep_cmd->add_option("--target", sweep.target, "element whose posterior probability is reported")->required();
    sweep_cmd->add_option("--steps", sweep.steps, "number of intervals; rows r = i/steps")
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--decimal", sweep_decimals, "N-digit decimals instead of fractions")
        ->check(CLI::Range(0, 60));

    ExamplesOptions examples;
    auto* examples_cmd = app.add_subcommand("examples", "Run the shipped worked examples against known values");
    examples_cmd->add_option("--corpus", examples.corpus_dir, "directory with the shipped .netspec files");

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Compare library results with brute-force enumeration");
    check_cmd->add_option("--seed", check.seed, "random seed");
    check_cmd->add_option("--count", check.count, "number of random instances")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (eval_decimals >= 0) {
        eval.decimal_digits = eval_decimals;
    }
    if (sweep_decimals >= 0) {
        sweep.decimal_digits = sweep_decimals;
    }
    if (*eval_cmd) {
        return cmd_eval(eval, std::cout, std::cerr);
    }
    if (*sweep_cmd) {
        return cmd_sweep(sweep, std::cout, std::cerr);
    }
    if (*examples_cmd) {
        return cmd_examples(examples, std::cout, std::cerr);
    }
    return cmd_check(check, std::cout, std::cerr);
}
