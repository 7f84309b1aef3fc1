#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "symcrit/cli.hpp"
#include "symcrit/criteria.hpp"
#include "symcrit/errors.hpp"

namespace cli = symcrit::cli;

int main(int argc, char** argv) {
    CLI::App app{"symcrit: exact reducibility criteria for symmetric powers of 2-dimensional representations"};
    app.require_subcommand(1);

    std::string group;
    int n_max = symcrit::kDefaultNMax;
    std::string format = "text";
    std::uint64_t seed = 0;
    std::string out_path;
    std::string theorem;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--nmax", n_max, "largest symmetric power examined (8..12)");
        sub->add_option("--format", format, "text | json | markdown")
            ->check(CLI::IsMember({"text", "json", "markdown"}));
        sub->add_option("--out", out_path, "write the report to this file");
        sub->add_option("--seed", seed, "seed for randomized validations");
    };

    CLI::App* table = app.add_subcommand("table", "reproduce the classification table");
    add_common(table);

    CLI::App* verify = app.add_subcommand("verify", "run one verifier");
    verify->add_option("theorem", theorem, "sym2 | sym3 | sym4 | sym6 | higher | monotone | cg | sym3root")
        ->required()
        ->check(CLI::IsMember({"sym2", "sym3", "sym4", "sym6", "higher", "monotone", "cg", "sym3root"}));
    verify->add_option("--group", group,
                       "dihedral:<n> | tetrahedral | octahedral | icosahedral | file:<path>");
    add_common(verify);

    CLI::App* selftest = app.add_subcommand("selftest", "run the invariant suite");
    add_common(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cli::kExitOk : cli::kExitUsage;
    }

    cli::RunConfig cfg;
    try {
        if (table->parsed())
            cfg.command = cli::Command::table;
        else if (verify->parsed())
            cfg.command = cli::Command::verify;
        else
            cfg.command = cli::Command::selftest;
        if (!theorem.empty()) cfg.theorem = cli::parse_theorem(theorem);
        cfg.group_spec = group;
        cfg.n_max = n_max;
        cfg.format = cli::parse_format(format);
        cfg.seed = seed;
        if (!out_path.empty()) cfg.output_path = out_path;
        cfg.cap = cli::cap_from_env();
    } catch (const symcrit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitUsage;
    }
    return cli::run(cfg, std::cout, std::cerr);
}
